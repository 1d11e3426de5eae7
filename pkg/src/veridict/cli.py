"""Command-line entry point: score, derive, sweep, serve.

Exit codes: 0 success, 1 usage error, 2 input/validation error, 3 check
failure. Stable machine output goes to stdout; diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis, derivation, scoring
from .errors import VeridictError
from .scoring import Verdict
from .taxonomy import Taxonomy, builtin_taxonomy, format_percent, load_taxonomy, resolve_selection

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CHECK_FAILED = 3

VERDICT_LABELS_PT = {
    Verdict.LIKELY_FAKE: "notícia falsa",
    Verdict.ALERT: "deve estar atento",
    Verdict.LIKELY_TRUE: "notícia verdadeira",
}

_CHECKS = ("all", "education", "country", "phase")


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="veridict", description="News credibility scorer.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score one selection")
    p_score.add_argument(
        "--select", action="append", default=[], metavar="PARAM=OPTION",
        help="one choice per taxonomy parameter (repeatable)",
    )
    p_score.add_argument("--phase", type=int, default=1, help="employment weight phase (1..4)")
    p_score.add_argument("--taxonomy", default="builtin", help="taxonomy file path or 'builtin'")
    p_score.add_argument("--format", choices=("text", "json"), default="text")

    p_derive = sub.add_parser("derive", help="classify from characteristic ratings")
    p_derive.add_argument("scheme", choices=sorted(derivation.SCHEMES))
    p_derive.add_argument(
        "--ratings", required=True,
        help="comma-separated tokens (country: mp|p|pp, age: vermelho|laranja|verde)",
    )

    p_sweep = sub.add_parser("sweep", help="score combinations exhaustively and run checks")
    p_sweep.add_argument("--countries", nargs="+", default=None, metavar="ID")
    p_sweep.add_argument("--phases", nargs="+", type=int, default=None, metavar="N")
    p_sweep.add_argument("--out", default=None, help="report path (default: stdout)")
    p_sweep.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_sweep.add_argument("--check", choices=_CHECKS, default="all")
    p_sweep.add_argument("--taxonomy", default="builtin", help="taxonomy file path or 'builtin'")

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--port", type=int, default=None, help="default 8080 or $VERIDICT_PORT")
    p_serve.add_argument("--taxonomy", default="builtin", help="taxonomy file path or 'builtin'")
    p_serve.add_argument("--default-phase", type=int, default=1, choices=(1, 2, 3, 4))

    return parser


def _load(source: str) -> Taxonomy:
    if source == "builtin":
        return builtin_taxonomy()
    return load_taxonomy(Path(source).read_bytes())


def _parse_selects(pairs: list[str]) -> dict[str, str]:
    raw: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key or not value:
            raise VeridictError(f"--select expects PARAM=OPTION, got {pair!r}")
        if key in raw:
            raise VeridictError(f"duplicate --select for {key!r}")
        raw[key] = value
    return raw


def _cmd_score(args: argparse.Namespace) -> int:
    taxonomy = _load(args.taxonomy)
    selection = resolve_selection(taxonomy, _parse_selects(args.select), phase=args.phase)
    explanation = scoring.explain(taxonomy, selection)
    if args.format == "json":
        print(json.dumps(
            {"score_percent": explanation.display_percent, "verdict": explanation.verdict.value}
        ))
    else:
        print(f"veredicto: {VERDICT_LABELS_PT[explanation.verdict]}")
        print(f"percentagem: {explanation.display_percent}%")
    return EXIT_OK


def _cmd_derive(args: argparse.Namespace) -> int:
    scheme = derivation.SCHEMES[args.scheme]
    ratings = derivation.parse_ratings(scheme, args.ratings.split(","))
    total = derivation.aggregate(ratings)
    level = derivation.classify_level(total)
    print(f"{format_percent(total)} {level.value}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    taxonomy = _load(args.taxonomy)
    cfg = analysis.SweepConfig(
        countries=tuple(args.countries) if args.countries else analysis.DEFAULT_COUNTRIES,
        phases=tuple(args.phases) if args.phases else scoring.PHASES,
    )
    rows = analysis.sweep(taxonomy, cfg)

    report = analysis.emit_report(taxonomy, rows, format=args.format)
    if args.out:
        Path(args.out).write_bytes(report)
    else:
        sys.stdout.buffer.write(report)
        sys.stdout.buffer.flush()

    checks = []
    if args.check in ("all", "education"):
        checks.append(analysis.check_education_monotonicity(taxonomy, rows))
    if args.check in ("all", "country"):
        checks.append(analysis.check_country_ordering(taxonomy, rows))
    if args.check in ("all", "phase"):
        checks.append(analysis.check_phase_sensitivity(rows))

    failed = False
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"check {check.check_id}: {status}", file=sys.stderr)
        for ce in check.counterexamples:
            print(f"  {ce}", file=sys.stderr)
        failed = failed or not check.passed
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    port = args.port if args.port is not None else int(os.environ.get("VERIDICT_PORT", "8080"))
    app = create_app(_load(args.taxonomy), default_phase=args.default_phase)
    uvicorn.run(app, host="0.0.0.0", port=port)
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    handlers = {
        "score": _cmd_score,
        "derive": _cmd_derive,
        "sweep": _cmd_sweep,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (VeridictError, ValueError, OSError) as exc:
        print(f"veridict: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
