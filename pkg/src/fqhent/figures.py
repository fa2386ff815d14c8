"""Parameter sweeps and figure emission (CSV and SVG).

A figure is a set of (family, N) series evaluated over t = (m-1)/2.  The
CSV file is the canonical artifact: header ``t,m,family,N,S_f_bits``, LF
line endings, 12 significant digits, rows sorted by (family, N, m), and
byte-identical across runs and across serial/parallel evaluation.  The SVG
is a self-contained scatter rendering of the same rows; grid points whose
construction collapses to the zero wavefunction are absent from the CSV and
annotated in the SVG.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .entangle import modified_measure
from .states import FAMILIES, ZeroWavefunctionError

DEFAULT_T_MAX = 6

_PALETTE = ("#1f5fa8", "#c23b22", "#2e7d32")
_MARKERS = ("square", "cross", "circle")


@dataclass(frozen=True)
class FigureSpec:
    """One preset figure: numbered id, series list, and t grid."""

    id: int
    series: tuple[tuple[str, int], ...]
    t_values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.id not in _FIGURE_SERIES:
            raise ValueError(f"figure id must be in 1..5, got {self.id}")
        if any(t < 0 for t in self.t_values):
            raise ValueError("t values must be non-negative")


_FIGURE_SERIES: dict[int, tuple[tuple[str, int], ...]] = {
    1: (("laughlin", 2), ("hierarchical_phi", 2)),
    2: (("laughlin", 3), ("hierarchical_phi", 3)),
    3: (("laughlin", 2), ("laughlin", 3)),
    4: (("hierarchical_phi", 2), ("hierarchical_phi", 3)),
    5: (("chi", 4),),
}


def figure_spec(fig_id: int, t_max: int = DEFAULT_T_MAX) -> FigureSpec:
    """The preset series for figure fig_id over t = 0 .. t_max."""
    if fig_id not in _FIGURE_SERIES:
        raise ValueError(f"figure id must be in 1..5, got {fig_id}")
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    return FigureSpec(fig_id, _FIGURE_SERIES[fig_id], tuple(range(t_max + 1)))


@dataclass(frozen=True)
class SweepPoint:
    """One evaluated grid point; value is None when the state is zero."""

    family: str
    n_electrons: int
    m: int
    measure_bits: float | None

    @property
    def t(self) -> int:
        return (self.m - 1) // 2


def evaluate_point(family: str, n_electrons: int, m: int) -> SweepPoint:
    """Build one state and measure it; zero wavefunctions yield value None."""
    try:
        state = FAMILIES[family](n_electrons, m)
    except ZeroWavefunctionError:
        return SweepPoint(family, n_electrons, m, None)
    report = modified_measure(state, family=family, m=m)
    return SweepPoint(family, n_electrons, m, report.measure_bits)


def _evaluate_tuple(args: tuple[str, int, int]) -> SweepPoint:
    return evaluate_point(*args)


def sweep(
    requests: Sequence[tuple[str, int, int]], jobs: int = 1
) -> list[SweepPoint]:
    """Evaluate (family, N, m) requests, optionally across processes.

    The result order follows the request order regardless of jobs, so
    downstream sorting is the only ordering that matters.
    """
    if jobs <= 1 or len(requests) <= 1:
        return [evaluate_point(*req) for req in requests]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate_tuple, requests))


def figure_points(spec: FigureSpec, jobs: int = 1) -> list[SweepPoint]:
    requests = [
        (family, n, 2 * t + 1)
        for family, n in spec.series
        for t in spec.t_values
    ]
    return sweep(requests, jobs=jobs)


def rows_to_csv(points: Iterable[SweepPoint]) -> str:
    """Canonical CSV for a set of sweep points.

    Zero-wavefunction points carry no value and are omitted; rows are sorted
    by (family, N, m); line endings are LF and numbers use 12 significant
    digits with a ``.`` decimal separator.
    """
    lines = ["t,m,family,N,S_f_bits"]
    kept = [p for p in points if p.measure_bits is not None]
    for p in sorted(kept, key=lambda q: (q.family, q.n_electrons, q.m)):
        lines.append(
            f"{p.t},{p.m},{p.family},{p.n_electrons},{p.measure_bits:.12g}"
        )
    return "\n".join(lines) + "\n"


# -- SVG rendering ---------------------------------------------------------

_WIDTH, _HEIGHT = 640, 440
_LEFT, _RIGHT, _TOP, _BOTTOM = 70, 24, 36, 56


def _marker(shape: str, x: float, y: float, color: str) -> str:
    if shape == "square":
        return (
            f'<rect x="{x - 4:.2f}" y="{y - 4:.2f}" width="8" height="8" '
            f'fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
    if shape == "cross":
        return (
            f'<path d="M {x - 4:.2f} {y - 4:.2f} L {x + 4:.2f} {y + 4:.2f} '
            f'M {x - 4:.2f} {y + 4:.2f} L {x + 4:.2f} {y - 4:.2f}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
    return (
        f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="none" '
        f'stroke="{color}" stroke-width="1.5"/>'
    )


def _nice_step(span: float) -> float:
    for step in (0.05, 0.1, 0.2, 0.25, 0.5, 1.0, 2.0, 5.0):
        if span / step <= 8:
            return step
    return 10.0


def render_svg(points: Sequence[SweepPoint], title: str) -> str:
    """Self-contained scatter plot of sweep points; no external assets."""
    series: dict[tuple[str, int], list[SweepPoint]] = {}
    for p in sorted(points, key=lambda q: (q.family, q.n_electrons, q.m)):
        series.setdefault((p.family, p.n_electrons), []).append(p)

    t_values = [p.t for p in points] or [0]
    t_lo, t_hi = min(t_values), max(t_values)
    values = [p.measure_bits for p in points if p.measure_bits is not None]
    y_hi = max(values) * 1.08 if values else 1.0
    y_hi = max(y_hi, 0.1)

    def sx(t: float) -> float:
        span = max(t_hi - t_lo, 1)
        return _LEFT + (t - t_lo) / span * (_WIDTH - _LEFT - _RIGHT)

    def sy(v: float) -> float:
        return _HEIGHT - _BOTTOM - v / y_hi * (_HEIGHT - _TOP - _BOTTOM)

    out: list[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}" '
        f'font-family="monospace" font-size="12">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.0f}" y="20" text-anchor="middle">{title}</text>',
        # axes
        f'<path d="M {_LEFT} {_TOP} L {_LEFT} {_HEIGHT - _BOTTOM} '
        f'L {_WIDTH - _RIGHT} {_HEIGHT - _BOTTOM}" fill="none" '
        f'stroke="black" stroke-width="1"/>',
        f'<text x="{(_LEFT + _WIDTH - _RIGHT) / 2:.0f}" y="{_HEIGHT - 14}" '
        f'text-anchor="middle">t</text>',
        f'<text x="18" y="{(_TOP + _HEIGHT - _BOTTOM) / 2:.0f}" '
        f'text-anchor="middle" transform="rotate(-90 18 '
        f'{(_TOP + _HEIGHT - _BOTTOM) / 2:.0f})">S_f (ln2 bits)</text>',
    ]

    for t in range(t_lo, t_hi + 1):
        x = sx(t)
        out.append(
            f'<path d="M {x:.2f} {_HEIGHT - _BOTTOM} L {x:.2f} '
            f'{_HEIGHT - _BOTTOM + 5}" stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{_HEIGHT - _BOTTOM + 18}" '
            f'text-anchor="middle">{t}</text>'
        )
    step = _nice_step(y_hi)
    tick = 0.0
    while tick <= y_hi + 1e-9:
        y = sy(tick)
        out.append(
            f'<path d="M {_LEFT - 5} {y:.2f} L {_LEFT} {y:.2f}" '
            f'stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_LEFT - 9}" y="{y + 4:.2f}" text-anchor="end">'
            f"{tick:.4g}</text>"
        )
        tick += step

    for idx, ((family, n), pts) in enumerate(sorted(series.items())):
        color = _PALETTE[idx % len(_PALETTE)]
        shape = _MARKERS[idx % len(_MARKERS)]
        for p in pts:
            if p.measure_bits is None:
                x = sx(p.t)
                out.append(
                    f'<text x="{x:.2f}" y="{_HEIGHT - _BOTTOM - 8:.2f}" '
                    f'text-anchor="middle" font-size="9" fill="#777" '
                    f'transform="rotate(-90 {x:.2f} '
                    f'{_HEIGHT - _BOTTOM - 8:.2f})">zero (m={p.m})</text>'
                )
            else:
                out.append(_marker(shape, sx(p.t), sy(p.measure_bits), color))
        legend_y = _TOP + 16 * idx + 8
        out.append(_marker(shape, _LEFT + 14.0, float(legend_y), color))
        out.append(
            f'<text x="{_LEFT + 26}" y="{legend_y + 4}">{family} N={n}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def figure_title(fig_id: int) -> str:
    names = {
        1: "laughlin vs hierarchical_phi, N=2",
        2: "laughlin vs hierarchical_phi, N=3",
        3: "laughlin, N=2 vs N=3",
        4: "hierarchical_phi, N=2 vs N=3",
        5: "chi, N=4",
    }
    return f"figure {fig_id}: {names[fig_id]}"
