"""Command-line interface.

Subcommands:

  compute   one (family, N, m) point, printed as text or JSON
  table     sweep odd m for one family and N, emitted as CSV or JSON
  figure    preset figure 1..5, emitted as CSV and/or SVG (or JSON)
  verify    run the self-verification suite (fast or full)

Exit codes: 0 success, 1 verification failure, 2 zero wavefunction,
64 usage error.  Options resolve as flags > config file > defaults; the
config file is flat ``key = value`` text with ``#`` comments.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .entangle import modified_measure
from .figures import (
    figure_points,
    figure_spec,
    figure_title,
    render_svg,
    rows_to_csv,
    sweep,
)
from .states import FAMILIES, FAMILY_NAMES, ZeroWavefunctionError
from .verify import all_passed, format_report, run_verification

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_ZERO_WAVEFUNCTION = 2
EXIT_USAGE = 64

_DEFAULTS: dict[str, Any] = {
    "family": "laughlin",
    "n": 2,
    "m": 3,
    "m_max": 13,
    "units": "bits",
    "format": None,
    "out": None,
    "jobs": 1,
}

_INT_KEYS = ("n", "m", "m_max", "jobs")
_CHOICES = {
    "family": FAMILY_NAMES,
    "units": ("bits", "nats"),
}


class UsageError(ValueError):
    """Invalid flag or config value; maps to exit code 64."""


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 64.

    The default argparse exit code 2 would collide with the zero-wavefunction
    exit code.
    """

    def error(self, message: str) -> Any:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_config(path: str) -> dict[str, str]:
    """Parse a flat ``key = value`` config file; ``#`` starts a comment."""
    values: dict[str, str] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _resolve(args: argparse.Namespace, keys: Sequence[str]) -> dict[str, Any]:
    """Merge flag values, config-file values, and defaults, in that order."""
    config = load_config(args.config) if getattr(args, "config", None) else {}
    resolved: dict[str, Any] = {}
    for key in keys:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            resolved[key] = flag_value
        elif key in config:
            resolved[key] = _convert(key, config[key])
        else:
            resolved[key] = _DEFAULTS[key]
    return resolved


def _convert(key: str, raw: str) -> Any:
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError as exc:
            raise UsageError(f"config value for {key} must be an integer, got {raw!r}") from exc
    if key in _CHOICES and raw not in _CHOICES[key]:
        raise UsageError(
            f"config value for {key} must be one of {_CHOICES[key]}, got {raw!r}"
        )
    return raw


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, newline="\n")


# -- subcommands -----------------------------------------------------------

def cmd_compute(args: argparse.Namespace) -> int:
    opts = _resolve(args, ("family", "n", "m", "units", "format"))
    try:
        state = FAMILIES[opts["family"]](opts["n"], opts["m"])
    except ZeroWavefunctionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ZERO_WAVEFUNCTION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = modified_measure(state, family=opts["family"], m=opts["m"])
    if opts["format"] == "json":
        payload = report.as_dict()
        payload["units"] = opts["units"]
        payload["S_f"] = (
            report.measure_bits if opts["units"] == "bits" else report.measure_nats
        )
        print(json.dumps(payload, indent=2))
    else:
        value = report.measure_bits if opts["units"] == "bits" else report.measure_nats
        print(
            f"S_f = {value:.12g} {opts['units']} "
            f"({opts['family']}, N={opts['n']}, m={opts['m']}, t={report.t})"
        )
    return EXIT_OK


def _points_json(points) -> str:
    rows = [
        {
            "t": p.t,
            "m": p.m,
            "family": p.family,
            "N": p.n_electrons,
            "S_f_bits": p.measure_bits,
        }
        for p in sorted(points, key=lambda q: (q.family, q.n_electrons, q.m))
    ]
    return json.dumps(rows, indent=2)


def cmd_table(args: argparse.Namespace) -> int:
    opts = _resolve(args, ("family", "n", "m_max", "format", "out", "jobs"))
    try:
        requests = [
            (opts["family"], opts["n"], m) for m in range(1, opts["m_max"] + 1, 2)
        ]
        if not requests:
            raise UsageError(f"no odd m in 1..{opts['m_max']}")
        points = sweep(requests, jobs=opts["jobs"])
    except UsageError:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _points_json(points) + "\n" if opts["format"] == "json" else rows_to_csv(points)
    if opts["out"]:
        _write_text(opts["out"], text)
        print(f"wrote {opts['out']}")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    opts = _resolve(args, ("m_max", "format", "out", "jobs"))
    t_max = (opts["m_max"] - 1) // 2
    try:
        spec = figure_spec(args.id, t_max=t_max)
        points = figure_points(spec, jobs=opts["jobs"])
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fmt = opts["format"]
    if opts["out"]:
        base = opts["out"]
        if base.endswith((".csv", ".svg", ".json")):
            base = base.rsplit(".", 1)[0]
        written = []
        if fmt in (None, "csv"):
            _write_text(f"{base}.csv", rows_to_csv(points))
            written.append(f"{base}.csv")
        if fmt in (None, "svg"):
            _write_text(f"{base}.svg", render_svg(points, figure_title(args.id)))
            written.append(f"{base}.svg")
        if fmt == "json":
            _write_text(f"{base}.json", _points_json(points) + "\n")
            written.append(f"{base}.json")
        for path in written:
            print(f"wrote {path}")
    elif fmt == "svg":
        print(render_svg(points, figure_title(args.id)), end="")
    elif fmt == "json":
        print(_points_json(points))
    else:
        print(rows_to_csv(points), end="")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(args.level)
    print(format_report(results), end="")
    return EXIT_OK if all_passed(results) else EXIT_VERIFY_FAIL


# -- parser ----------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(
        prog="fqhent",
        description=(
            "Exact Fock-basis construction and single-particle entanglement "
            "of quantum Hall model wavefunctions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p: _Parser, *, config: bool = True) -> None:
        if config:
            p.add_argument("--config", help="flat key = value config file")

    p = sub.add_parser("compute", help="measure one (family, N, m) point")
    p.add_argument("--family", choices=FAMILY_NAMES)
    p.add_argument("--n", type=int, help="electron count N")
    p.add_argument("--m", type=int, help="odd exponent m")
    p.add_argument("--units", choices=("bits", "nats"))
    p.add_argument("--format", choices=("text", "json"))
    add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="sweep odd m for one family and N")
    p.add_argument("--family", choices=FAMILY_NAMES)
    p.add_argument("--n", type=int, help="electron count N")
    p.add_argument("--m-max", dest="m_max", type=int, help="largest m (odd values up to this)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--jobs", type=int, help="parallel worker processes")
    add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("figure", help="emit a preset figure (1..5)")
    p.add_argument("id", type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("--m-max", dest="m_max", type=int, help="largest m on the t axis")
    p.add_argument("--format", choices=("csv", "svg", "json"))
    p.add_argument("--out", help="output base path (writes .csv and .svg)")
    p.add_argument("--jobs", type=int, help="parallel worker processes")
    add_common(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument(
        "level", nargs="?", default="fast", choices=("fast", "full"),
        help="fast: m <= 9, N <= 3; full: m <= 13, N <= 4",
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
