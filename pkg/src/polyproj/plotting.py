"""Figures: the shadow polygon as SVG, and support-curve plots via matplotlib."""
from __future__ import annotations

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def set_style():
    plt.rc("font", family="sans-serif", size=10.0)
    plt.rc("axes", linewidth=0.8, grid=True, labelsize="medium")
    plt.rc("grid", linestyle=":", linewidth=0.5, alpha=0.6)
    plt.rc(("xtick", "ytick"), direction="in")
    plt.rc("legend", frameon=False, fontsize="small")


def polygon_svg(points, margin=0.05, marker_scale=0.012) -> str:
    """Closed CCW path through ``points`` with a circle on every vertex.

    The viewBox is the bounding box grown by ``margin`` of its larger side on
    every edge.  SVG's y axis points down, so y is negated.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        raise ValueError("need at least one vertex")
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float((hi - lo).max()) or 1.0
    pad = margin * span
    x0, y0 = lo[0] - pad, -hi[1] - pad
    width, height = hi[0] - lo[0] + 2 * pad, hi[1] - lo[1] + 2 * pad
    r = marker_scale * span
    stroke = r / 3

    def xy(p):
        return f"{p[0]:.17g},{-p[1]:.17g}"

    d = "M " + " L ".join(xy(p) for p in pts) + " Z"
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.17g} {y0:.17g} {width:.17g} {height:.17g}">',
        f'  <path d="{d}" fill="#dbe8f5" stroke="#1f4e79" stroke-width="{stroke:.6g}"/>',
    ]
    for p in pts:
        out.append(f'  <circle cx="{p[0]:.17g}" cy="{-p[1]:.17g}" r="{r:.6g}" fill="#c0392b"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def curve_csv(thetas, rhos) -> str:
    buf = io.StringIO()
    buf.write("theta_deg,rho\n")
    for t, r in zip(thetas, rhos):
        buf.write(f"{t:.17g},{r:.17g}\n")
    return buf.getvalue()


def plot_support_curve(ax, thetas, rhos, junctions=()):
    ax.plot(thetas, rhos, color="#1f4e79", lw=1.2)
    for t in junctions:
        ax.axvline(t, color="#c0392b", lw=0.6, ls="--")
    ax.set_xlim(0, 360)
    ax.set_xticks(np.arange(0, 361, 90))
    ax.set_xlabel(r"$\theta$ (deg)")
    ax.set_ylabel(r"$\rho(\theta)$")


def plot_polygon(ax, points, dims=(1, 2)):
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    closed = np.vstack([pts, pts[:1]])
    ax.fill(closed[:, 0], closed[:, 1], color="#dbe8f5")
    ax.plot(closed[:, 0], closed[:, 1], color="#1f4e79", lw=1.2)
    ax.plot(pts[:, 0], pts[:, 1], "o", color="#c0392b", ms=4)
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel(f"$x_{{{dims[0]}}}$")
    ax.set_ylabel(f"$x_{{{dims[1]}}}$")


def render_figure(path, points, thetas, rhos, junctions=(), dims=(1, 2), title=None):
    """Two panels: the support curve with junction markers, and the shadow polygon."""
    set_style()
    fig, (ax_curve, ax_poly) = plt.subplots(1, 2, figsize=(9, 4))
    plot_support_curve(ax_curve, thetas, rhos, junctions)
    plot_polygon(ax_poly, points, dims)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_bench(path, rows):
    """Bar chart of mean wall time per benchmark, annotated with the vertex count."""
    set_style()
    names = [r["name"] for r in rows]
    means = [r["wall_ms_mean"] for r in rows]
    errs = [r["wall_ms_stddev"] for r in rows]
    fig, ax = plt.subplots(figsize=(max(4, 1.2 * len(rows) + 2), 3.5))
    bars = ax.bar(names, means, yerr=errs, color="#1f4e79", capsize=3)
    for bar, r in zip(bars, rows):
        ax.annotate(f"V={r['V']}", (bar.get_x() + bar.get_width() / 2, bar.get_height()),
                    ha="center", va="bottom", fontsize="small", xytext=(0, 2),
                    textcoords="offset points")
    ax.set_ylabel("wall time (ms)")
    ax.grid(axis="x", visible=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
