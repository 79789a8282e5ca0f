"""Self-contained SVG heat map of sweep results.

Rows are (beta, mu, lambda) conditions, columns are network/strategy
pairs; every cell prints its value and is filled on a single global
color scale from green (lowest infected fraction) through yellow to red
(highest).  A degenerate scale (all values equal) renders green.
"""

from __future__ import annotations

from typing import IO, Iterable
from xml.sax.saxutils import escape

from .experiment import SweepRecord

CELL_W = 56
CELL_H = 20
LEFT_MARGIN = 176
TOP_MARGIN = 40
PAD = 8
FONT = "font-family=\"sans-serif\" font-size=\"10\""

_GREEN = (99, 190, 123)
_YELLOW = (255, 235, 132)
_RED = (248, 105, 107)


def _lerp(a: tuple[int, int, int], b: tuple[int, int, int], t: float) -> str:
    rgb = tuple(round(ac + (bc - ac) * t) for ac, bc in zip(a, b))
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def scale_color(value: float, vmin: float, vmax: float) -> str:
    """Green -> yellow -> red fill for a value on the global scale."""
    if vmax <= vmin:
        x = 0.0
    else:
        x = (value - vmin) / (vmax - vmin)
    if x <= 0.5:
        return _lerp(_GREEN, _YELLOW, x * 2.0)
    return _lerp(_YELLOW, _RED, (x - 0.5) * 2.0)


def emit_heatmap(records: Iterable[SweepRecord], dest) -> None:
    """Render records as an SVG document to a path or text stream."""
    records = list(records)
    if not records:
        raise ValueError("no records to plot")

    rows = sorted({(r.beta, r.mu, r.lam) for r in records})
    cols = sorted({(r.network, r.strategy.value) for r in records})
    row_index = {key: i for i, key in enumerate(rows)}
    col_index = {key: j for j, key in enumerate(cols)}
    cells: dict[tuple[int, int], float] = {}
    for r in records:
        i = row_index[(r.beta, r.mu, r.lam)]
        j = col_index[(r.network, r.strategy.value)]
        cells[(i, j)] = r.avg_infected_fraction

    values = list(cells.values())
    vmin, vmax = min(values), max(values)

    width = LEFT_MARGIN + CELL_W * len(cols) + PAD
    height = TOP_MARGIN + CELL_H * len(rows) + PAD
    parts = [
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        f"<svg xmlns=\"http://www.w3.org/2000/svg\" "
        f"width=\"{width}\" height=\"{height}\" "
        f"viewBox=\"0 0 {width} {height}\">\n",
        f"<rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n",
    ]

    for (network, strategy), j in col_index.items():
        x = LEFT_MARGIN + j * CELL_W + CELL_W / 2
        parts.append(
            f"<text x=\"{x:g}\" y=\"14\" text-anchor=\"middle\" {FONT} "
            f"fill=\"#222222\">{escape(network)}</text>\n"
        )
        parts.append(
            f"<text x=\"{x:g}\" y=\"26\" text-anchor=\"middle\" {FONT} "
            f"fill=\"#222222\">{escape(strategy)}</text>\n"
        )

    for (beta, mu, lam), i in row_index.items():
        y = TOP_MARGIN + i * CELL_H + CELL_H / 2 + 3
        label = f"beta {beta:.2f}  mu {mu:.2f}  lambda {lam:.2f}"
        parts.append(
            f"<text x=\"{LEFT_MARGIN - 6}\" y=\"{y:g}\" text-anchor=\"end\" "
            f"{FONT} fill=\"#222222\">{label}</text>\n"
        )

    for (i, j), value in sorted(cells.items()):
        x = LEFT_MARGIN + j * CELL_W
        y = TOP_MARGIN + i * CELL_H
        fill = scale_color(value, vmin, vmax)
        parts.append(
            f"<rect x=\"{x}\" y=\"{y}\" width=\"{CELL_W}\" height=\"{CELL_H}\" "
            f"fill=\"{fill}\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n"
        )
        parts.append(
            f"<text x=\"{x + CELL_W / 2:g}\" y=\"{y + CELL_H / 2 + 3:g}\" "
            f"text-anchor=\"middle\" {FONT} fill=\"#222222\">"
            f"{value:.3f}</text>\n"
        )

    parts.append("</svg>\n")
    text = "".join(parts)

    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def grid_shape(records: Iterable[SweepRecord]) -> tuple[int, int]:
    """(rows, columns) the heat map will have for these records."""
    records = list(records)
    rows = {(r.beta, r.mu, r.lam) for r in records}
    cols = {(r.network, r.strategy.value) for r in records}
    return len(rows), len(cols)
