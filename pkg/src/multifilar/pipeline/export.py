"""CSV and SVG emission."""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from ..errors import IoFailure

CSV_HEADER = ("graph_id", "n", "d", "mu", "sigma", "m3", "m4", "m5", "residual", "mu_pred", "sigma_pred")

# qualitative palette, cycled by triangle count
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def csv_text(records: Sequence) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([_fmt(getattr(r, col)) for col in CSV_HEADER])
    return buf.getvalue()


def _write(path: Path, text: str) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(text, encoding="utf-8", newline="\n")
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def export_csv(records: Sequence, path: str | Path) -> Path:
    if not records:
        raise IoFailure("refusing to write an empty dataset")
    _write(Path(path), csv_text(records))
    return Path(path)


@dataclass(frozen=True)
class Window:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    @classmethod
    def around(cls, points: Sequence[tuple[float, float]], pad: float = 0.05) -> "Window":
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        dx = (max(xs) - min(xs)) or abs(xs[0]) * 1e-6 or 1e-6
        dy = (max(ys) - min(ys)) or abs(ys[0]) * 1e-6 or 1e-6
        return cls(min(xs) - pad * dx, max(xs) + pad * dx, min(ys) - pad * dy, max(ys) + pad * dy)


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def svg_scatter(records: Sequence, window: Window | None = None, title: str | None = None,
                width: int = 800, height: int = 600) -> str:
    pts = [(r.mu, r.sigma, r.m3, r.graph_id) for r in records]
    if window is None:
        window = Window.around([(p[0], p[1]) for p in pts])
    shown = [p for p in pts if window.contains(p[0], p[1])]
    left, right, top, bottom = 90, 30, 40 if title else 20, 60
    pw, ph = width - left - right, height - top - bottom

    def sx(x):
        return left + (x - window.xmin) / (window.xmax - window.xmin) * pw

    def sy(y):
        return top + (window.ymax - y) / (window.ymax - window.ymin) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    out.append(f'<rect class="frame" x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>')
    for x in _ticks(window.xmin, window.xmax):
        px = sx(x)
        out.append(f'<line x1="{px:.2f}" y1="{top + ph}" x2="{px:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{px:.2f}" y="{top + ph + 18}" text-anchor="middle">{x:.5g}</text>')
    for y in _ticks(window.ymin, window.ymax):
        py = sy(y)
        out.append(f'<line x1="{left - 5}" y1="{py:.2f}" x2="{left}" y2="{py:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{py + 4:.2f}" text-anchor="end">{y:.5g}</text>')
    out.append(f'<text class="xlabel" x="{left + pw / 2:.1f}" y="{height - 15}" text-anchor="middle">'
               f'mean of exp(lambda/d)</text>')
    out.append(f'<text class="ylabel" transform="translate(20,{top + ph / 2:.1f}) rotate(-90)" '
               f'text-anchor="middle">variance of exp(lambda/d)</text>')
    for x, y, m3, gid in shown:
        color = PALETTE[m3 % len(PALETTE)]
        out.append(f'<circle class="point" data-m3="{m3}" data-id="{gid}" cx="{sx(x):.2f}" '
                   f'cy="{sy(y):.2f}" r="3" fill="{color}"/>')
    for i, m3 in enumerate(sorted({p[2] for p in shown})):
        ly = top + 12 + 14 * i
        out.append(f'<circle cx="{left + 12}" cy="{ly}" r="4" fill="{PALETTE[m3 % len(PALETTE)]}"/>')
        out.append(f'<text x="{left + 20}" y="{ly + 4}">m3 = {m3}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_svg_scatter(records: Sequence, path: str | Path, window: Window | None = None,
                       title: str | None = None) -> Path:
    if not records:
        raise IoFailure("refusing to plot an empty dataset")
    _write(Path(path), svg_scatter(records, window, title))
    return Path(path)
