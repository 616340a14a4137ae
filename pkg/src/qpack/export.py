"""Pattern and diffraction exports: CSV, LaTeX picture fragments, SVG."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .diffract import DiffractionMap, extract_peaks
from .generate import Pattern

LATEX_OFFSET = (10.0, 20.0)
CLUSTER_OFFSET = (32.0, 20.0)


def pattern_header(d: int, k: int) -> list[str]:
    return ["x", "y", "z"][:d] + [f"s{i + 1}" for i in range(k)] + ["n"]


def write_pattern_csv(pattern: Pattern, path) -> Path:
    path = Path(path)
    d = int(pattern.config.get("d", pattern.d))
    k = int(pattern.config.get("k", len(pattern.points[0].source) if pattern.points else 0))
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(pattern_header(d, k))
        for pt in pattern.points:
            w.writerow([repr(c) for c in pt.phys] + list(pt.source) + [pt.occupation])
    return path


def read_pattern_csv(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(positions, sources, occupations) from a file written by write_pattern_csv."""
    with Path(path).open(newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    d = sum(1 for h in header if h in ("x", "y", "z"))
    k = len(header) - d - 1
    pos = np.array([[float(c) for c in r[:d]] for r in body], dtype=float).reshape(-1, d)
    src = np.array([[int(c) for c in r[d:d + k]] for r in body], dtype=np.int64).reshape(-1, k)
    occ = np.array([int(r[-1]) for r in body], dtype=np.int64)
    return pos, src, occ


def fortran_f(value: float, width: int = 10, decimals: int = 5) -> str:
    """Fixed-point field like a Fortran ``F10.5`` edit descriptor.

    Magnitudes below one are written without the leading zero (``.30385``,
    ``-.19615``); overflow fills the field with asterisks.
    """
    s = f"{value:.{decimals}f}"
    if s.startswith("-") and float(s) == 0:
        s = s[1:]
    if s.startswith("0."):
        s = s[1:]
    elif s.startswith("-0."):
        s = "-" + s[2:]
    if len(s) > width:
        return "*" * width
    return s.rjust(width)


def put_line(x: float, y: float, marker: str) -> str:
    return f"\\put( {fortran_f(x)},{fortran_f(y)}){{\\{marker}}} "


def latex_lines(pattern: Pattern, p: float | None = None, cluster_reps=None) -> list[str]:
    """Picture-environment body: small dots first, then the circled centres,
    then the cluster drawn around (32, 20)."""
    if pattern.d != 2:
        raise ValueError("LaTeX export supports planar patterns only")
    k = int(pattern.config.get("k", len(pattern.points[0].source) if pattern.points else 0))
    p = float(pattern.config.get("p", 50.0)) if p is None else p
    cut = k * p * 2 / 100.0
    ox, oy = LATEX_OFFSET
    lines = [f"\\put({CLUSTER_OFFSET[0]:.1f},{CLUSTER_OFFSET[1]:.1f}){{\\circle*{{0.2}}}} "]
    lines += [put_line(ox + q.phys[0], oy + q.phys[1], "circle*{0.2}") for q in pattern if q.occupation <= cut]
    lines += [put_line(ox + q.phys[0], oy + q.phys[1], "circle{0.4}") for q in pattern if q.occupation > cut]
    if cluster_reps is None and "reps" in pattern.config:
        cluster_reps = pattern.config["reps"]
    if cluster_reps is not None:
        cx, cy = CLUSTER_OFFSET
        for v in cluster_reps:
            lines.append(put_line(cx + v[0], cy + v[1], "circle*{0.2}"))
            lines.append(put_line(cx - v[0], cy - v[1], "circle*{0.2}"))
    return lines


def write_pattern_latex(pattern: Pattern, path, p: float | None = None) -> Path:
    if not pattern.points:
        raise ValueError("nothing to draw: empty pattern")
    path = Path(path)
    body = latex_lines(pattern, p)
    text = "\n".join(
        ["\\setlength{\\unitlength}{1.5mm}", "\\begin{picture}(100,35)(-25,5) "]
        + body
        + ["\\end{picture}", ""]
    )
    path.write_text(text, encoding="utf-8")
    return path


def write_pattern_svg(pattern: Pattern, path, p: float | None = None, scale: float = 20.0) -> Path:
    """Scatter plot; circle radii follow the LaTeX sizes (0.1 dots, 0.2 rings)."""
    if not pattern.points:
        raise ValueError("nothing to draw: empty pattern")
    if pattern.d != 2:
        raise ValueError("SVG export supports planar patterns only")
    path = Path(path)
    k = int(pattern.config.get("k", len(pattern.points[0].source)))
    p = float(pattern.config.get("p", 50.0)) if p is None else p
    cut = k * p * 2 / 100.0
    pos = pattern.positions()
    lo = pos.min(axis=0) - 1
    hi = pos.max(axis=0) + 1
    w, h = (hi - lo) * scale
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1f}" height="{h:.1f}" '
        f'viewBox="0 0 {w:.3f} {h:.3f}">',
        f'<rect width="{w:.3f}" height="{h:.3f}" fill="white"/>',
    ]
    for q in pattern:
        x = (q.phys[0] - lo[0]) * scale
        y = (hi[1] - q.phys[1]) * scale
        if q.occupation > cut:
            out.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="{0.2 * scale:.3f}" fill="none" stroke="black" stroke-width="1"/>')
        else:
            out.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="{0.1 * scale:.3f}" fill="black"/>')
    out.append("</svg>")
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    return path


def export_pattern(pattern: Pattern, fmt: str, path, p: float | None = None) -> Path:
    if fmt == "csv":
        return write_pattern_csv(pattern, path)
    if fmt == "latex":
        return write_pattern_latex(pattern, path, p)
    if fmt == "svg":
        return write_pattern_svg(pattern, path, p)
    raise ValueError(f"unknown format {fmt!r}")


def write_intensity_csv(dmap: DiffractionMap, path) -> Path:
    """Row i holds xi_x = min_x + i*step; column j holds xi_y = min_y + j*step."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        for row in dmap.intensity:
            w.writerow([repr(float(v)) for v in row])
    return path


def write_peaks_csv(dmap: DiffractionMap, path) -> Path:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["xi_x", "xi_y", "intensity"])
        for (x, y), v in extract_peaks(dmap):
            w.writerow([repr(x), repr(y), repr(v)])
    return path
