"""Publication records, reference corpora, and their CSV/JSON ingestion.

A publication file describes one researcher's papers. Each row either carries
both percentiles already (``precomputed`` mode, e.g. an InCites export) or the
raw material to compute them (``compute`` mode): a citation count, the subject
categories, and the journal's rank within each category.

CSV columns (header required)::

    id,year,citations,categories,journal_ranks,paper_percentile,journal_percentile

``categories`` is semicolon-joined (``CHEM;PHYS``) and ``journal_ranks`` is a
semicolon-joined list of ``CODE:rank/size`` entries (``CHEM:12/150``). The JSON
form is an array of objects with the same keys.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from impactplot.errors import ParseError, SchemaError

PUBLICATION_COLUMNS = (
    "id",
    "year",
    "citations",
    "categories",
    "journal_ranks",
    "paper_percentile",
    "journal_percentile",
)
CORPUS_COLUMNS = ("category", "year", "citations")

PRECOMPUTED = "precomputed"
COMPUTE = "compute"

MIN_YEAR, MAX_YEAR = 1500, 2200


@dataclass(frozen=True)
class PublicationRecord:
    id: str
    year: int
    citations: int | None = None
    categories: tuple[str, ...] = ()
    journal_ranks: Mapping[str, tuple[int, int]] = field(default_factory=dict)
    paper_percentile: float | None = None
    journal_percentile: float | None = None

    def __post_init__(self):
        rid = self.id
        if not isinstance(rid, str) or not rid.strip():
            raise SchemaError("id must be nonempty text", record_id=rid or None, field="id")
        if isinstance(self.year, bool) or not isinstance(self.year, int):
            raise SchemaError(f"year must be an integer, got {self.year!r}", rid, "year")
        if not MIN_YEAR <= self.year <= MAX_YEAR:
            raise SchemaError(f"year {self.year} outside [{MIN_YEAR}, {MAX_YEAR}]", rid, "year")
        if self.citations is not None:
            if isinstance(self.citations, bool) or not isinstance(self.citations, int):
                raise SchemaError(f"citations must be an integer, got {self.citations!r}", rid, "citations")
            if self.citations < 0:
                raise SchemaError(f"citations must be >= 0, got {self.citations}", rid, "citations")
        object.__setattr__(self, "categories", tuple(self.categories))
        for code in self.categories:
            if not isinstance(code, str) or not code:
                raise SchemaError(f"bad category code {code!r}", rid, "categories")
        ranks = dict(self.journal_ranks or {})
        for code, entry in ranks.items():
            try:
                r_j, k = entry
            except (TypeError, ValueError):
                raise SchemaError(f"rank entry for {code!r} must be (rank, size)", rid, "journal_ranks") from None
            if any(isinstance(v, bool) or not isinstance(v, int) for v in (r_j, k)):
                raise SchemaError(f"rank entry for {code!r} must hold integers", rid, "journal_ranks")
            if not (1 <= r_j <= k):
                raise SchemaError(f"{code}: need 1 <= rank <= size, got {r_j}/{k}", rid, "journal_ranks")
            ranks[code] = (r_j, k)
        object.__setattr__(self, "journal_ranks", ranks)
        for name in ("paper_percentile", "journal_percentile"):
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise SchemaError(f"percentile must be a number, got {value!r}", rid, name)
            value = float(value)
            if not (0.0 <= value <= 100.0):
                raise SchemaError(f"percentile {value} outside [0, 100]", rid, name)
            object.__setattr__(self, name, value)
        # Raises when the record is neither precomputed nor computable.
        self.mode

    @property
    def mode(self) -> str:
        has_paper = self.paper_percentile is not None
        has_journal = self.journal_percentile is not None
        if has_paper and has_journal:
            return PRECOMPUTED
        if has_paper != has_journal:
            missing = "journal_percentile" if has_paper else "paper_percentile"
            raise SchemaError("precomputed mode needs both percentiles", self.id, missing)
        missing = [
            name
            for name, present in (
                ("citations", self.citations is not None),
                ("categories", bool(self.categories)),
                ("journal_ranks", bool(self.journal_ranks)),
            )
            if not present
        ]
        if missing:
            raise SchemaError(
                "neither precomputed percentiles nor enough raw data to compute them "
                f"(missing {', '.join(missing)})",
                self.id,
                missing[0],
            )
        return COMPUTE

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "year": self.year,
            "citations": self.citations,
            "categories": list(self.categories),
            "journal_ranks": {code: [r, k] for code, (r, k) in self.journal_ranks.items()},
            "paper_percentile": self.paper_percentile,
            "journal_percentile": self.journal_percentile,
        }


@dataclass(frozen=True)
class RecordSet:
    records: tuple[PublicationRecord, ...]
    mode: str = field(init=False)

    def __post_init__(self):
        records = tuple(self.records)
        object.__setattr__(self, "records", records)
        if not records:
            raise SchemaError("publication set is empty")
        seen = set()
        for rec in records:
            if rec.id in seen:
                raise SchemaError("duplicate id", rec.id, "id")
            seen.add(rec.id)
        mode = records[0].mode
        for rec in records[1:]:
            if rec.mode != mode:
                raise SchemaError(
                    f"mixed modes: record is {rec.mode} but the set started as {mode}",
                    rec.id,
                    "paper_percentile",
                )
        object.__setattr__(self, "mode", mode)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, i):
        return self.records[i]


@dataclass(frozen=True)
class ReferenceCell:
    """All corpus citation counts for one (category, year) pair, kept sorted."""

    category: str
    year: int
    citation_counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(sorted(self.citation_counts))
        if not counts:
            raise SchemaError(f"reference cell {self.category}/{self.year} is empty", field="citations")
        if counts[0] < 0:
            raise SchemaError(
                f"negative citation count {counts[0]} in cell {self.category}/{self.year}",
                field="citations",
            )
        object.__setattr__(self, "citation_counts", counts)

    @property
    def key(self) -> tuple[str, int]:
        return (self.category, self.year)


# ---------------------------------------------------------------- helpers


def _read_text(source) -> str:
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    elif isinstance(source, str):
        return source.lstrip("\ufeff")
    else:
        data = source.read()
        if isinstance(data, str):
            return data.lstrip("\ufeff")
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc.reason} at byte {exc.start}") from None


def _blank(value) -> bool:
    return value is None or (isinstance(value, str) and not value.strip())


def _int(value, rid, name, optional=False):
    if _blank(value):
        if optional:
            return None
        raise SchemaError("required field is missing", rid, name)
    if isinstance(value, bool):
        raise SchemaError(f"expected an integer, got {value!r}", rid, name)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if value.is_integer():
            return int(value)
        raise SchemaError(f"expected an integer, got {value!r}", rid, name)
    try:
        return int(str(value).strip())
    except ValueError:
        raise SchemaError(f"expected an integer, got {value!r}", rid, name) from None


def _float(value, rid, name):
    if _blank(value):
        return None
    if isinstance(value, bool):
        raise SchemaError(f"expected a number, got {value!r}", rid, name)
    try:
        out = float(value.strip() if isinstance(value, str) else value)
    except (TypeError, ValueError):
        raise SchemaError(f"expected a number, got {value!r}", rid, name) from None
    if not math.isfinite(out):
        raise SchemaError(f"expected a finite number, got {value!r}", rid, name)
    return out


def _categories(value, rid):
    if _blank(value):
        return ()
    if isinstance(value, str):
        parts = value.split(";")
    elif isinstance(value, list):
        parts = value
    else:
        raise SchemaError(f"expected text or a list, got {value!r}", rid, "categories")
    out = []
    for part in parts:
        if not isinstance(part, str):
            raise SchemaError(f"category codes must be text, got {part!r}", rid, "categories")
        part = part.strip()
        if part and part not in out:
            out.append(part)
    return tuple(out)


def _rank_pair(text, rid):
    rank, sep, size = text.partition("/")
    if not sep:
        raise SchemaError(f"rank entry {text!r} is not rank/size", rid, "journal_ranks")
    return (_int(rank, rid, "journal_ranks"), _int(size, rid, "journal_ranks"))


def _journal_ranks(value, rid):
    if _blank(value):
        return {}
    out = {}
    if isinstance(value, str):
        for entry in value.split(";"):
            entry = entry.strip()
            if not entry:
                continue
            code, sep, pair = entry.rpartition(":")
            if not sep or not code.strip():
                raise SchemaError(f"rank entry {entry!r} is not CODE:rank/size", rid, "journal_ranks")
            out[code.strip()] = _rank_pair(pair, rid)
        return out
    if not isinstance(value, dict):
        raise SchemaError(f"expected text or an object, got {value!r}", rid, "journal_ranks")
    for code, pair in value.items():
        if isinstance(pair, str):
            out[code] = _rank_pair(pair, rid)
        elif isinstance(pair, (list, tuple)) and len(pair) == 2:
            out[code] = (_int(pair[0], rid, "journal_ranks"), _int(pair[1], rid, "journal_ranks"))
        else:
            raise SchemaError(f"rank entry for {code!r} must be [rank, size]", rid, "journal_ranks")
    return out


def _record_from_fields(row: Mapping) -> PublicationRecord:
    rid = row.get("id")
    rid = rid.strip() if isinstance(rid, str) else rid
    if _blank(rid) or not isinstance(rid, str):
        raise SchemaError("id must be nonempty text", field="id")
    return PublicationRecord(
        id=rid,
        year=_int(row.get("year"), rid, "year"),
        citations=_int(row.get("citations"), rid, "citations", optional=True),
        categories=_categories(row.get("categories"), rid),
        journal_ranks=_journal_ranks(row.get("journal_ranks"), rid),
        paper_percentile=_float(row.get("paper_percentile"), rid, "paper_percentile"),
        journal_percentile=_float(row.get("journal_percentile"), rid, "journal_percentile"),
    )


def _csv_rows(text, expected):
    """Yield (line number, dict) rows, checking the header against ``expected``."""
    reader = csv.reader(io.StringIO(text, newline=""), strict=True)
    try:
        header = next(reader, None)
        if header is None:
            raise ParseError("missing CSV header", line=1)
        header = [h.strip() for h in header]
        if sorted(header) != sorted(expected):
            raise ParseError(
                f"CSV header must name exactly {','.join(expected)}; got {','.join(header)}",
                line=1,
            )
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, found {len(row)}",
                    line=reader.line_num,
                )
            yield reader.line_num, dict(zip(header, row))
    except csv.Error as exc:
        raise ParseError(f"malformed CSV: {exc}", line=reader.line_num) from None


def _json_rows(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    if not isinstance(data, list):
        raise SchemaError("JSON input must be an array of records")
    for i, item in enumerate(data):
        if not isinstance(item, dict):
            raise SchemaError(f"element {i} is not an object")
        yield i, item


def _check_format(fmt):
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


# ---------------------------------------------------------------- publications


def parse_publications(source, format: str = "csv") -> RecordSet:
    """Parse and validate one researcher's publication list.

    ``source`` may be bytes, text, or an open file. Input order is preserved.
    Raises :class:`ParseError` for syntax problems and :class:`SchemaError`
    for rule violations; both name the offending record/field where known.
    """
    _check_format(format)
    text = _read_text(source)
    records = []
    if format == "csv":
        for _, row in _csv_rows(text, PUBLICATION_COLUMNS):
            records.append(_record_from_fields(row))
    else:
        for _, item in _json_rows(text):
            unknown = set(item) - set(PUBLICATION_COLUMNS)
            if unknown:
                raise SchemaError(
                    f"unknown field(s) {', '.join(sorted(unknown))}",
                    item.get("id") if isinstance(item.get("id"), str) else None,
                    sorted(unknown)[0],
                )
            records.append(_record_from_fields(item))
    return RecordSet(tuple(records))


def _fmt_float(value):
    return "" if value is None else repr(float(value))


def dump_publications(records, format: str = "json") -> str:
    """Serialize records back to text; ``parse_publications`` inverts this."""
    _check_format(format)
    records = list(records)
    if format == "json":
        return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(PUBLICATION_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.id,
                r.year,
                "" if r.citations is None else r.citations,
                ";".join(r.categories),
                ";".join(f"{code}:{rj}/{k}" for code, (rj, k) in r.journal_ranks.items()),
                _fmt_float(r.paper_percentile),
                _fmt_float(r.journal_percentile),
            ]
        )
    return buf.getvalue()


# ---------------------------------------------------------------- reference corpus


def parse_reference_corpus(source, format: str = "csv") -> dict[tuple[str, int], ReferenceCell]:
    """Parse a reference corpus into cells keyed by ``(category, year)``.

    Each CSV row is one corpus paper. In JSON, ``citations`` may also be a list
    of counts. Repeated (category, year) rows are merged into one cell.
    """
    _check_format(format)
    text = _read_text(source)
    if format == "csv":
        rows = _csv_rows(text, CORPUS_COLUMNS)
    else:
        rows = _json_rows(text)

    grouped: dict[tuple[str, int], list[int]] = {}
    for pos, row in rows:
        where = f"line {pos}" if format == "csv" else f"element {pos}"
        category = row.get("category")
        if not isinstance(category, str) or not category.strip():
            raise SchemaError(f"{where}: category must be nonempty text", field="category")
        category = category.strip()
        year = _int(row.get("year"), None, "year")
        if not MIN_YEAR <= year <= MAX_YEAR:
            raise SchemaError(f"{where}: year {year} outside [{MIN_YEAR}, {MAX_YEAR}]", field="year")
        raw = row.get("citations")
        values = raw if isinstance(raw, list) else [raw]
        counts = [_int(v, None, "citations") for v in values]
        for c in counts:
            if c < 0:
                raise SchemaError(f"{where}: negative citation count {c}", field="citations")
        grouped.setdefault((category, year), []).extend(counts)

    if not grouped:
        raise SchemaError("reference corpus is empty")
    return {key: ReferenceCell(key[0], key[1], tuple(counts)) for key, counts in grouped.items()}


def dump_reference_corpus(cells, format: str = "csv") -> str:
    """Write cells as one row per corpus paper (CSV) or one object per cell (JSON)."""
    _check_format(format)
    cells = list(cells.values()) if isinstance(cells, Mapping) else list(cells)
    if format == "json":
        data = [
            {"category": c.category, "year": c.year, "citations": list(c.citation_counts)}
            for c in cells
        ]
        return json.dumps(data, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CORPUS_COLUMNS)
    for c in cells:
        for count in c.citation_counts:
            writer.writerow([c.category, c.year, count])
    return buf.getvalue()
