"""Paper and journal percentile plots for single-researcher evaluation."""

from impactplot.errors import ImpactPlotError, ParseError, SchemaError, PercentileError
from impactplot.records import (
    PublicationRecord,
    RecordSet,
    ReferenceCell,
    parse_publications,
    parse_reference_corpus,
    dump_publications,
    dump_reference_corpus,
)
from impactplot.percentiles import (
    PercentilePoint,
    hazen_percentile,
    cell_percentile,
    paper_percentile,
    rn_journal_percentile,
    journal_percentile,
    resolve_points,
)
from impactplot.metrics import ResearcherMetrics, career_years, summarize
from impactplot.plots import (
    BeamplotModel,
    DamModel,
    ScatterModel,
    SectionStats,
    build_beamplot,
    build_dam,
    build_scatter,
    from_dam,
    to_dam,
)
from impactplot.svg import StyleConfig, render_beamplot, render_dam, render_scatter

__version__ = "0.1.0"

__all__ = [
    "ImpactPlotError",
    "ParseError",
    "SchemaError",
    "PercentileError",
    "PublicationRecord",
    "RecordSet",
    "ReferenceCell",
    "parse_publications",
    "parse_reference_corpus",
    "dump_publications",
    "dump_reference_corpus",
    "PercentilePoint",
    "hazen_percentile",
    "cell_percentile",
    "paper_percentile",
    "rn_journal_percentile",
    "journal_percentile",
    "resolve_points",
    "ResearcherMetrics",
    "career_years",
    "summarize",
    "BeamplotModel",
    "DamModel",
    "ScatterModel",
    "SectionStats",
    "build_beamplot",
    "build_dam",
    "build_scatter",
    "from_dam",
    "to_dam",
    "StyleConfig",
    "render_beamplot",
    "render_dam",
    "render_scatter",
]
