"""Concentration and spreading functionals, and realizable-point bookkeeping.

Conventions on the grid (chosen so the complementarity identities are exact
rather than approximate): the concentration ratios count samples with
|x| <= T, the step weight counts samples with |x| > T, so the squared pair
always sums to one on the same quadrature grid.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import signal_core as sc
from .errors import InvalidParameter, TailWarning, ZeroNorm
from .weights import HOMOGENEOUS, WeightSpec

TAIL_FLAG_RATIO = 1e-6
_TAIL_CUT_FRACTION = 0.95


def _as_spectrum(f: sc.SampledSignal) -> sc.SampledSignal:
    return sc.fourier(f) if f.domain == sc.TIME else f


def _weighted_mass(sig: sc.SampledSignal, w: WeightSpec, a: float) -> float:
    """integral w(x/a) |f|^2 dx with a truncation flag for heavy-tailed weights."""
    x = sig.grid.points
    density = np.abs(sig.values) ** 2
    total = float(np.sum(w(x / a) * density)) * sig.grid.dx
    # Mass parked near the grid edge, priced at the edge weight value, bounds
    # what an extension beyond x_max could still contribute.  Integrals that
    # are themselves negligible against ||f||^2 are not worth flagging.
    norm_sq = float(np.sum(density)) * sig.grid.dx
    edge = float(np.sum(density[np.abs(x) >= _TAIL_CUT_FRACTION * sig.grid.x_max]))
    bound = float(w(sig.grid.x_max / a)) * edge * sig.grid.dx
    if total > 1e-12 * norm_sq and bound > TAIL_FLAG_RATIO * total:
        warnings.warn(
            f"weighted integral may be truncated: edge bound {bound:.3e} vs "
            f"total {total:.3e}; enlarge x_max",
            TailWarning,
            stacklevel=3,
        )
    return total


def gamma(f: sc.SampledSignal, w1: WeightSpec, a: float) -> float:
    """Time spreading: (integral w1(x/a) |f|^2 dx)^(1/2) / ||f||."""
    if not a > 0:
        raise InvalidParameter(f"time scale must be positive, got {a}")
    norm = sc.l2_norm(f)
    if norm == 0.0:
        raise ZeroNorm("spreading of the zero signal is undefined")
    return float(np.sqrt(_weighted_mass(f, w1, a))) / norm


def zeta(f: sc.SampledSignal, w2: WeightSpec, b: float) -> float:
    """Frequency spreading: gamma applied to the Fourier transform of f."""
    if not b > 0:
        raise InvalidParameter(f"frequency scale must be positive, got {b}")
    norm = sc.l2_norm(f)
    if norm == 0.0:
        raise ZeroNorm("spreading of the zero signal is undefined")
    return float(np.sqrt(_weighted_mass(_as_spectrum(f), w2, b))) / norm


def _concentration(sig: sc.SampledSignal, half_width: float) -> float:
    density = np.abs(sig.values) ** 2
    total = float(np.sum(density))
    if total == 0.0:
        raise ZeroNorm("concentration of the zero signal is undefined")
    inside = float(np.sum(density[np.abs(sig.grid.points) <= half_width]))
    return float(np.clip(np.sqrt(inside / total), 0.0, 1.0))


def alpha(f: sc.SampledSignal, T: float) -> float:
    """Fraction (in L2) of f inside [-T, T], clamped to [0, 1]."""
    if not T > 0:
        raise InvalidParameter(f"T must be positive, got {T}")
    return _concentration(f if f.domain == sc.TIME else f.with_domain(sc.TIME), T)


def beta(f: sc.SampledSignal, omega: float) -> float:
    """Fraction (in L2) of the spectrum inside [-omega, omega]."""
    if not omega > 0:
        raise InvalidParameter(f"omega must be positive, got {omega}")
    return _concentration(_as_spectrum(f), omega)


@dataclass(frozen=True)
class RealizablePoint:
    """A (gamma, zeta, c) triple with the signal and scales that produced it."""

    gamma: float
    zeta: float
    c: float
    signal: sc.SampledSignal
    a: float
    b: float

    def __post_init__(self):
        if not self.c > 0:
            raise InvalidParameter(f"scale product must be positive, got {self.c}")


def spreading_point(
    f: sc.SampledSignal, w1: WeightSpec, w2: WeightSpec, a: float, b: float
) -> RealizablePoint:
    """Bundle gamma(f, a), zeta(f, b) and c = a * b with their provenance."""
    return RealizablePoint(
        gamma=gamma(f, w1, a),
        zeta=zeta(f, w2, b),
        c=a * b,
        signal=f,
        a=a,
        b=b,
    )


def power_coords(pt: RealizablePoint, m: int, n: int) -> tuple[float, float, float]:
    """Coordinates (gamma^m, zeta^n, c) of the point, exponents >= 1."""
    if m < 1 or n < 1:
        raise InvalidParameter(f"power exponents must be >= 1, got m={m}, n={n}")
    return (pt.gamma ** m, pt.zeta ** n, pt.c)
