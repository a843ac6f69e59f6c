"""Seeded random signal corpus for the verification harnesses.

Composition per draw: 40% Gaussian mixtures, 30% modulated or translated
Gaussians, 30% smoothed indicators.  Single-component "mixtures" collapse
to a centered pure Gaussian and are labeled as such, since those are the
only members expected to sit on the second-moment equality.
Mixture components are kept separated and modulations kept away from zero
so every non-pure member stays a safe distance from equality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import erf

from . import signal_core as sc

PURE_GAUSSIAN = "gaussian"
GAUSSIAN_MIXTURE = "gaussian_mixture"
MODULATED = "modulated_gaussian"
SMOOTHED_INDICATOR = "smoothed_indicator"


@dataclass(frozen=True)
class CorpusSignal:
    signal: sc.SampledSignal
    kind: str
    index: int


def _gaussian_bump(x: np.ndarray, center: float, width: float) -> np.ndarray:
    return np.exp(-np.pi * ((x - center) / width) ** 2)


def _draw(rng: np.random.Generator, x: np.ndarray) -> tuple[np.ndarray, str]:
    u = rng.uniform()
    if u < 0.4:
        n_comp = int(rng.integers(1, 4))
        if n_comp == 1:
            width = rng.uniform(0.4, 1.6)
            return _gaussian_bump(x, 0.0, width).astype(complex), PURE_GAUSSIAN
        centers = rng.uniform(0.6, 2.0, size=n_comp) * rng.choice([-1.0, 1.0], size=n_comp)
        while np.min(np.abs(np.subtract.outer(centers, centers))
                     + np.eye(n_comp) * 10.0) < 1.0:
            centers = rng.uniform(0.6, 2.0, size=n_comp) * rng.choice([-1.0, 1.0], size=n_comp)
        widths = rng.uniform(0.4, 1.4, size=n_comp)
        amps = rng.uniform(0.4, 1.0, size=n_comp)
        vals = np.zeros_like(x, dtype=complex)
        for c0, w0, a0 in zip(centers, widths, amps):
            vals += a0 * _gaussian_bump(x, c0, w0)
        return vals, GAUSSIAN_MIXTURE
    if u < 0.7:
        width = rng.uniform(0.5, 1.5)
        center = rng.uniform(-2.0, 2.0)
        b = rng.uniform(0.8, 6.0) * rng.choice([-1.0, 1.0])
        vals = np.exp(1j * b * x) * _gaussian_bump(x, center, width)
        return vals, MODULATED
    half = rng.uniform(0.5, 2.5)
    edge = rng.uniform(0.15, 0.4)
    vals = 0.5 * (erf((x + half) / edge) - erf((x - half) / edge))
    return vals.astype(complex), SMOOTHED_INDICATOR


def make_corpus(n_signals: int, seed: int, grid: sc.Grid | None = None) -> list[CorpusSignal]:
    """Deterministic corpus of n_signals signals on the given grid."""
    grid = grid or sc.Grid(1024, 8.0)
    rng = np.random.default_rng(seed)
    x = grid.points
    out = []
    for i in range(n_signals):
        vals, kind = _draw(rng, x)
        out.append(CorpusSignal(sc.SampledSignal(grid, vals), kind, i))
    return out
