"""Weight functions, their scaled evaluation, and numerical classification.

A weight here is an even, nonnegative function w with w evaluated through
|x|.  Three families are supported:

* the two-sided step weight (support strictly outside the unit interval),
  the discontinuous limit case used by the concentration theorems,
* homogeneous weights |x|^k,
* tabulated weights loaded from a two-column CSV and interpolated linearly.

classify() probes the defining properties (vanishing at zero, continuity,
evenness, strict growth, finite limit versus polynomially bounded
divergence, finiteness of the shift-ratio bound) on a finite grid.  It is
evidence, not proof: anything inconclusive is reported as unclassified.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InvalidParameter

LP_INDICATOR = "lp_indicator"
HOMOGENEOUS = "homogeneous"
TABULATED = "tabulated"

TYPE_1 = "type1"
TYPE_INFINITY = "type_infinity"
UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class WeightSpec:
    """Evaluatable weight.  Use the module constructors, not the raw fields."""

    kind: str
    k: int | None = None
    xs: np.ndarray | None = None
    ws: np.ndarray | None = None

    def __call__(self, x) -> np.ndarray:
        ax = np.abs(np.asarray(x, dtype=float))
        if self.kind == LP_INDICATOR:
            # Support strictly outside [-1, 1] so that, on a shared grid,
            # the weighted mass is the exact complement of the inside mass.
            return (ax > 1.0).astype(float)
        if self.kind == HOMOGENEOUS:
            return ax ** self.k
        if self.kind == TABULATED:
            return np.interp(ax, self.xs, self.ws)
        raise InvalidParameter(f"unknown weight kind {self.kind!r}")

    @property
    def label(self) -> str:
        if self.kind == HOMOGENEOUS:
            return f"homogeneous(k={self.k})"
        return self.kind


def lp_indicator() -> WeightSpec:
    return WeightSpec(LP_INDICATOR)


def homogeneous(k: int) -> WeightSpec:
    if k < 1:
        raise InvalidParameter(f"homogeneity degree must be a positive integer, got {k}")
    return WeightSpec(HOMOGENEOUS, k=int(k))


def tabulated(xs, ws) -> WeightSpec:
    xs = np.asarray(xs, dtype=float)
    ws = np.asarray(ws, dtype=float)
    if xs.ndim != 1 or xs.shape != ws.shape or xs.size < 2:
        raise InvalidParameter("tabulated weight needs two equal-length 1-d columns")
    if xs[0] < 0 or np.any(np.diff(xs) <= 0):
        raise InvalidParameter("tabulated x column must be strictly increasing and >= 0")
    if np.any(ws < 0):
        raise InvalidParameter("tabulated weight values must be nonnegative")
    xs = xs.copy()
    ws = ws.copy()
    xs.flags.writeable = False
    ws.flags.writeable = False
    return WeightSpec(TABULATED, xs=xs, ws=ws)


def tabulated_from_csv(path) -> WeightSpec:
    """Load a (x, w) table; evaluation extends evenly and interpolates linearly."""
    xs, ws = [], []
    with open(Path(path), newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                x, w = float(row[0]), float(row[1])
            except (ValueError, IndexError):
                continue  # header line
            xs.append(x)
            ws.append(w)
    return tabulated(xs, ws)


def eval_scaled(w: WeightSpec, a: float, x) -> np.ndarray | float:
    """S_a w at x, i.e. w(x / a)."""
    if not a > 0:
        raise InvalidParameter(f"weight scale must be positive, got {a}")
    out = w(np.asarray(x, dtype=float) / a)
    return float(out) if np.isscalar(x) else out


def c_bound(w: WeightSpec, h: float, x_star: float, probe_max: float) -> float:
    """sup of w(x + h) / w(x) over x >= x_star, probed on [x_star, probe_max].

    For homogeneous weights the ratio decreases monotonically toward 1, so
    the probe supremum (attained at x_star) is the true supremum; the
    analytic tail value 1 is merged in for completeness.  Returns +inf when
    the probe divides by a vanishing weight with nonzero numerator.
    """
    if not (h > 0 and x_star > 0 and probe_max > x_star):
        raise InvalidParameter("need h > 0, x_star > 0 and probe_max > x_star")
    xs = np.linspace(x_star, probe_max, 4097)
    num = np.asarray(w(xs + h), dtype=float)
    den = np.asarray(w(xs), dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = num / den
    ratio[(den == 0.0) & (num > 0.0)] = math.inf
    ratio = ratio[~np.isnan(ratio)]  # 0/0 probes carry no information
    sup = float(np.max(ratio)) if ratio.size else 1.0
    if w.kind == HOMOGENEOUS:
        sup = max(sup, 1.0)
    return sup


@dataclass(frozen=True)
class ProbeParams:
    """Probe layout for classify(): range, density and shift values."""

    x_max: float = 50.0
    n: int = 4001
    h_values: tuple = (0.5, 1.0, 2.0)
    flat_rel_tol: float = 5e-3
    slope_cap: float = 12.0

    def __post_init__(self):
        if not (self.x_max > 0 and self.n >= 16):
            raise InvalidParameter("probe range must be positive with n >= 16 samples")


@dataclass(frozen=True)
class WeightClass:
    kind: str
    limit: float | None
    probe_report: dict


def classify(w: WeightSpec, probe: ProbeParams = ProbeParams()) -> WeightClass:
    """Probe the weight-type axioms and report type 1, type infinity, or neither.

    Continuity is tested by sample-spacing refinement (a genuine jump keeps
    its height when the spacing halves); the limit test checks tail
    flatness; divergence is accepted only when the tail log-log slope is
    stable and below slope_cap.  A weight failing any structural probe is
    unclassified rather than guessed.
    """
    x_hi = probe.x_max
    if w.kind == TABULATED:
        x_hi = min(x_hi, float(w.xs[-1]))
    n = probe.n if probe.n % 2 == 1 else probe.n + 1
    xs = np.linspace(0.0, x_hi, n)
    vals = np.asarray(w(xs), dtype=float)

    report: dict = {}
    report["w0"] = float(vals[0])
    zero_at_origin = abs(vals[0]) <= 1e-12

    report["even_max_dev"] = float(np.max(np.abs(w(xs) - w(-xs))))
    even = report["even_max_dev"] <= 1e-12

    jump_coarse = float(np.max(np.abs(np.diff(vals[::2]))))
    jump_fine = float(np.max(np.abs(np.diff(vals))))
    report["jump_coarse"], report["jump_fine"] = jump_coarse, jump_fine
    continuous = jump_fine <= 0.6 * jump_coarse or jump_coarse == 0.0

    diffs = np.diff(vals)
    strictly_increasing = bool(np.all(diffs > 0.0))
    report["strictly_increasing"] = strictly_increasing

    ok_structure = zero_at_origin and even and continuous and strictly_increasing
    report["structure_ok"] = ok_structure
    if not ok_structure:
        return WeightClass(UNCLASSIFIED, None, report)

    tail = vals[3 * n // 4:]
    spread = float(np.max(tail) - np.min(tail))
    scale = max(float(np.max(np.abs(tail))), 1e-300)
    report["tail_rel_spread"] = spread / scale
    if spread / scale < probe.flat_rel_tol:
        limit = float(tail[-1])
        report["limit"] = limit
        return WeightClass(TYPE_1, limit, report)

    # Divergent branch: polynomially bounded growth plus a finite shift ratio.
    tx = xs[n // 2:]
    tv = vals[n // 2:]
    keep = tv > 0
    if np.count_nonzero(keep) < 8:
        return WeightClass(UNCLASSIFIED, None, report)
    lx, lv = np.log(tx[keep]), np.log(tv[keep])
    half = lx.size // 2
    slope_lo = float(np.polyfit(lx[:half], lv[:half], 1)[0])
    slope_hi = float(np.polyfit(lx[half:], lv[half:], 1)[0])
    report["loglog_slopes"] = (slope_lo, slope_hi)
    poly_bounded = abs(slope_hi - slope_lo) < 0.5 and slope_hi <= probe.slope_cap

    bounds = [c_bound(w, h, x_hi / 10.0, x_hi) for h in probe.h_values]
    report["c_bounds"] = bounds
    property_1 = all(math.isfinite(b) for b in bounds)

    if poly_bounded and property_1:
        return WeightClass(TYPE_INFINITY, None, report)
    return WeightClass(UNCLASSIFIED, None, report)
