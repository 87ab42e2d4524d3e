"""``impactplot`` command line: one researcher per invocation.

    impactplot all --input pubs.csv --corpus ref.csv --out out/
    impactplot metrics --input precomputed.csv --out out/

Exit status is 0 on success, 1 when an input file fails to parse or validate,
and 2 on usage errors (argparse's convention). Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from impactplot import __version__
from impactplot.errors import ImpactPlotError
from impactplot.metrics import summarize
from impactplot.percentiles import resolve_points
from impactplot.plots import build_beamplot, build_dam, build_scatter
from impactplot.records import COMPUTE, parse_publications, parse_reference_corpus
from impactplot.svg import StyleConfig, render_beamplot, render_dam, render_scatter

PROG = "impactplot"
SUBCOMMANDS = ("metrics", "beamplot", "scatter", "damplot", "all")


class InputError(Exception):
    """Reported as a one-line diagnostic with exit status 1."""


def _json_bytes(data) -> bytes:
    return (json.dumps(data, indent=2) + "\n").encode("utf-8")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, type=Path, help="publication list (CSV or JSON)")
    common.add_argument("--corpus", type=Path, help="reference corpus; required for compute-mode input")
    common.add_argument("--out", required=True, type=Path, help="output directory")
    common.add_argument(
        "--format",
        choices=("csv", "json"),
        help="input format for --input and --corpus (default: from the file extension)",
    )
    common.add_argument("--style", type=Path, help="JSON file with style overrides")

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Paper and journal percentile plots for a single researcher.",
    )
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "metrics": "write metrics.json",
        "beamplot": "write beamplot_paper.svg and beamplot_journal.svg",
        "scatter": "write scatter.svg and scatter.json",
        "damplot": "write damplot.svg and damplot.json",
        "all": "write every output",
    }
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
    return parser


def _format_for(path: Path, explicit):
    if explicit:
        return explicit
    return "json" if path.suffix.lower() == ".json" else "csv"


def _read(path: Path, what: str) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {what} {str(path)!r}: {exc.strerror}") from None


def _render_outputs(command, points, style) -> dict[str, bytes]:
    outputs = {}
    if command in ("metrics", "all"):
        outputs["metrics.json"] = _json_bytes({"metrics": summarize(points).to_dict()})
    if command in ("beamplot", "all"):
        for kind in ("paper", "journal"):
            model = build_beamplot(points, kind)
            outputs[f"beamplot_{kind}.svg"] = render_beamplot(model, style)
    if command in ("scatter", "all"):
        model = build_scatter(points)
        outputs["scatter.svg"] = render_scatter(model, style)
        outputs["scatter.json"] = _json_bytes(model.to_dict())
    if command in ("damplot", "all"):
        model = build_dam(points)
        outputs["damplot.svg"] = render_dam(model, style)
        outputs["damplot.json"] = _json_bytes(model.to_dict())
    return outputs


def write_outputs(out_dir: Path, outputs: dict[str, bytes]) -> None:
    """Stage every file as a temp file first; rename only once all are written."""
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create output directory {str(out_dir)!r}: {exc.strerror}") from None
    staged = []
    try:
        for name, data in outputs.items():
            fd, tmp = tempfile.mkstemp(prefix=f".{name}.", suffix=".tmp", dir=out_dir)
            staged.append((tmp, out_dir / name))
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
        for tmp, final in staged:
            os.replace(tmp, final)
        staged = []
    except OSError as exc:
        raise InputError(f"cannot write outputs to {str(out_dir)!r}: {exc.strerror}") from None
    finally:
        for tmp, _ in staged:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        style = StyleConfig()
        if args.style is not None:
            try:
                style = StyleConfig.from_json(_read(args.style, "style file").decode("utf-8"))
            except (ValueError, TypeError) as exc:
                raise InputError(f"bad style file {str(args.style)!r}: {exc}") from None

        records = parse_publications(_read(args.input, "input"), _format_for(args.input, args.format))
        cells = None
        if records.mode == COMPUTE:
            if args.corpus is None:
                parser.error("compute-mode input (raw citations and journal ranks) requires --corpus")
            cells = parse_reference_corpus(
                _read(args.corpus, "corpus"), _format_for(args.corpus, args.format)
            )
        points = resolve_points(records, cells)
        outputs = _render_outputs(args.command, points, style)
        write_outputs(args.out, outputs)
    except (InputError, ImpactPlotError) as exc:
        message = " ".join(str(exc).split())
        print(f"{PROG}: error: {message}", file=sys.stderr)
        return 1
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
