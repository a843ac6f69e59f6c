"""Quick-look figure rendering for the CLI report paths.

Each renderer takes the already-computed data (never recomputes) and
writes one PNG next to the delimited output.  The data files remain the
primary artifact; figures are an opt-in convenience.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)


_AXIS_LABELS = {
    "concentration": (r"$\alpha$", r"$\beta$"),
    "concentration2": (r"$\alpha^2$", r"$\beta^2$"),
    "spreading": (r"$\gamma$", r"$\zeta$"),
    "spreading2": (r"$\gamma^2$", r"$\zeta^2$"),
}


def render_sweep(rows, path) -> None:
    """Two-panel figure: lambda_0 versus c, and the relative difference."""
    cs = [r.c for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax1.plot(cs, [r.lambda0 for r in rows], "b-", label=r"$\lambda_0$ (numerical)")
    ax1.plot(cs, [r.lambda0_asymptotic for r in rows], "r--", label=r"$\lambda_0$ (asymptotic)")
    ax1.set_xlabel("c")
    ax1.set_ylabel(r"$\lambda_0$")
    ax1.legend(loc="lower right", fontsize=8)
    ax2.plot(cs, [r.relative_difference for r in rows], "k-")
    ax2.set_xlabel("c")
    ax2.set_ylabel("relative difference")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_boundary(boundary, path) -> None:
    """Boundary polyline in its tagged coordinate system."""
    xlab, ylab = _AXIS_LABELS.get(boundary.coords.name, ("x", "y"))
    fig, ax = plt.subplots(figsize=(4.5, 4.2))
    ax.plot(boundary.points[:, 0], boundary.points[:, 1], "b-")
    ax.set_xlabel(xlab)
    ax.set_ylabel(ylab)
    ax.set_title(f"{boundary.model} boundary, parameter = {boundary.parameter:g}",
                 fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_margins(rows, path) -> None:
    """Per-signal relative margins, grouped by suite label."""
    fig, ax = plt.subplots(figsize=(7, 3.5))
    suites = sorted({r["suite"] for r in rows})
    for suite in suites:
        pts = [(r["index"], r["relative_margin"]) for r in rows if r["suite"] == suite]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], ".", label=suite, ms=3)
    ax.axhline(0.0, color="k", lw=0.8)
    ax.set_xlabel("signal index")
    ax.set_ylabel("relative margin")
    ax.set_yscale("symlog", linthresh=1e-12)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
