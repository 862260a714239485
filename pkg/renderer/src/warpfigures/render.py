"""
Rendering of the five tunneling-model figures from CSV datasets.

The renderer is a pure consumer: it plots CSV columns exactly as emitted by
the `warptunnel` CLI and never recomputes any physics. Expected schemas:

    fig1  none (static annotated schematic)
    fig2  x, then one column per trajectory family/offset ("<family>_rho=<v>")
    fig3  a, E, dt           (one curve per distinct E)
    fig4  a, n0, dt          (one horizontal line per distinct n0)
    fig5  a, n0, vs_over_c   (line with the superluminal band shaded)
"""

from dataclasses import dataclass, field

import numpy as np
import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5")

_FAMILY_LABELS = {
    "in": "incident",
    "re": "reflected",
    "tu": "tunneling",
    "tr": "transmitted",
}
_FAMILY_COLORS = {
    "in": "tab:blue",
    "re": "tab:red",
    "tu": "tab:green",
    "tr": "tab:purple",
}


@dataclass(frozen=True)
class FigureSpec:
    """One render request: which figure, from which CSV, to which image."""

    figure_id: str
    input_csv: str | None
    output_image: str


@dataclass(frozen=True)
class RenderSummary:
    """
    Plot-data mapping of a completed render: series count and per-series
    extrema. Deterministic for a given CSV, so re-rendering the same input
    yields an identical summary.
    """

    figure_id: str
    series: int
    y_min: float
    y_max: float
    shading_boundary: float | None = None
    labels: tuple = field(default_factory=tuple)


def load_csv(path: str):
    """Read a header + numeric-rows CSV; returns (header list, 2-D array)."""
    with open(path) as fh:
        first = fh.readline().strip()
        if not first:
            raise ValueError(f"{path}: empty CSV")
        header = first.split(",")
        rows = []
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(header):
                raise ValueError(
                    f"{path}:{lineno}: expected {len(header)} columns, "
                    f"got {len(parts)}")
            rows.append([float(v) for v in parts])
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return header, np.asarray(rows)


def _column(header, data, name, path):
    if name not in header:
        raise ValueError(
            f"{path}: missing column {name!r} (found {', '.join(header)})")
    return data[:, header.index(name)]


def _grouped_curves(header, data, path, x_name, group_name, y_name):
    """Split rows into (group value, x, y) curves by the group column."""
    x = _column(header, data, x_name, path)
    g = _column(header, data, group_name, path)
    y = _column(header, data, y_name, path)
    curves = []
    for val in sorted(set(g.tolist())):
        sel = g == val
        order = np.argsort(x[sel])
        curves.append((val, x[sel][order], y[sel][order]))
    return curves


def _render_fig1(ax):
    """Static annotated schematic: three regions and the barrier bubble."""
    ax.axvspan(-1.0, 1.0, color="0.85")
    r = np.linspace(-1.0, 1.0, 201)
    ax.plot(r, 0.8 / (1.0 + np.cosh(4.0 * r)) * 2.0, color="tab:blue",
            label="bubble profile")
    for x0 in (-1.0, 1.0):
        ax.axvline(x0, color="k", lw=1)
    ax.annotate("region I\n(incident + reflected)", (-2.0, 0.55),
                ha="center")
    ax.annotate("region II\n(barrier bubble)", (0.0, 0.9), ha="center")
    ax.annotate("region III\n(transmitted)", (2.0, 0.55), ha="center")
    ax.annotate("", xy=(0.6, 0.45), xytext=(0.1, 0.45),
                arrowprops=dict(arrowstyle="->"))
    ax.text(0.35, 0.48, r"$v_s$", ha="center")
    ax.set_xlim(-3.0, 3.0)
    ax.set_ylim(0.0, 1.1)
    ax.set_xlabel("x")
    ax.set_yticks([])
    return RenderSummary("fig1", series=1, y_min=0.0, y_max=1.1,
                         labels=("bubble profile",))


def _render_fig2(ax, header, data, path):
    x = _column(header, data, "x", path)
    labels = []
    y_all = []
    for j, name in enumerate(header):
        if name == "x":
            continue
        family = name.split("_", 1)[0]
        if family not in _FAMILY_LABELS or "_rho=" not in name:
            raise ValueError(f"{path}: unexpected column {name!r}")
        ax.plot(x, data[:, j], color=_FAMILY_COLORS[family], lw=1.0)
        labels.append(name)
        y_all.append(data[:, j])
    if not labels:
        raise ValueError(f"{path}: no trajectory-family columns")
    for fam, lab in _FAMILY_LABELS.items():
        ax.plot([], [], color=_FAMILY_COLORS[fam], label=lab)
    ax.set_xlabel("x")
    ax.set_ylabel("t")
    ax.legend(loc="upper left", fontsize=8)
    y = np.concatenate(y_all)
    return RenderSummary("fig2", series=len(labels),
                         y_min=float(y.min()), y_max=float(y.max()),
                         labels=tuple(labels))


def _render_fig3(ax, header, data, path):
    curves = _grouped_curves(header, data, path, "a", "E", "dt")
    for val, x, y in curves:
        ax.plot(x, y, label=f"E = {val:g}")
    ax.set_xlabel("a")
    ax.set_ylabel(r"$\Delta t$")
    ax.legend()
    y = _column(header, data, "dt", path)
    return RenderSummary("fig3", series=len(curves),
                         y_min=float(y.min()), y_max=float(y.max()),
                         labels=tuple(f"E = {v:g}" for v, _, _ in curves))


def _render_fig4(ax, header, data, path):
    curves = _grouped_curves(header, data, path, "a", "n0", "dt")
    for val, x, y in curves:
        ax.plot(x, y, label=f"$n_0$ = {val:g}")
    ax.set_xlabel("a")
    ax.set_ylabel(r"$\Delta t$")
    ax.legend()
    y = _column(header, data, "dt", path)
    return RenderSummary("fig4", series=len(curves),
                         y_min=float(y.min()), y_max=float(y.max()),
                         labels=tuple(f"$n_0$ = {v:g}" for v, _, _ in curves))


def shading_boundary(a: np.ndarray, vs_over_c: np.ndarray) -> float | None:
    """
    First grid point (in ascending a) where vs/c exceeds 1, i.e. the left
    edge of the superluminal band. None if the curve never crosses.
    """
    order = np.argsort(a)
    a, v = a[order], vs_over_c[order]
    above = np.nonzero(v > 1.0)[0]
    if above.size == 0:
        return None
    return float(a[above[0]])


def _render_fig5(ax, header, data, path):
    curves = _grouped_curves(header, data, path, "a", "n0", "vs_over_c")
    boundary = None
    for val, x, y in curves:
        ax.plot(x, y, label=f"$n_0$ = {val:g}")
        b = shading_boundary(x, y)
        if b is not None:
            boundary = b if boundary is None else min(boundary, b)
    ax.axhline(1.0, color="k", lw=0.8, ls="--")
    if boundary is not None:
        ax.axvspan(boundary, float(data[:, header.index("a")].max()),
                   color="tab:orange", alpha=0.2,
                   label="superluminal ($v_s/c > 1$)")
    ax.set_xlabel("a")
    ax.set_ylabel(r"$v_s/c$")
    ax.legend()
    y = _column(header, data, "vs_over_c", path)
    return RenderSummary("fig5", series=len(curves),
                         y_min=float(y.min()), y_max=float(y.max()),
                         shading_boundary=boundary,
                         labels=tuple(f"$n_0$ = {v:g}" for v, _, _ in curves))


def render(spec: FigureSpec) -> RenderSummary:
    """
    Render one figure from its CSV and write the image file. Returns the
    plot-data mapping (series count, extrema, shading boundary).
    """
    if spec.figure_id not in FIGURE_IDS:
        raise ValueError(
            f"unknown figure id {spec.figure_id!r} (expected one of "
            f"{', '.join(FIGURE_IDS)})")
    fig, ax = plt.subplots(figsize=(6.0, 4.0), dpi=150)
    try:
        if spec.figure_id == "fig1":
            summary = _render_fig1(ax)
        else:
            if spec.input_csv is None:
                raise ValueError(f"{spec.figure_id} requires an input CSV")
            header, data = load_csv(spec.input_csv)
            fn = {"fig2": _render_fig2, "fig3": _render_fig3,
                  "fig4": _render_fig4, "fig5": _render_fig5}[spec.figure_id]
            summary = fn(ax, header, data, spec.input_csv)
        fig.tight_layout()
        fig.savefig(spec.output_image)
    finally:
        plt.close(fig)
    return summary
