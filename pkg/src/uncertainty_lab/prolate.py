"""Eigenvalues of the time-band concentration operator and their asymptotics.

The operator is the classical one with kernel sin(c(x - y)) / (pi (x - y))
on [-1, 1] (diagonal value c / pi), discretized by Nystrom's method on
Gauss-Legendre nodes and symmetrized with the square roots of the
quadrature weights.  The kernel is entire, so the discretization converges
spectrally: n_quad = 64 already resolves the spectrum to machine precision
for c up to around 10, which the two-resolution checks in the test suite
exploit as an oracle.

c is the product of the time half-width and the angular band edge.  Band
limits expressed in the ordinary-frequency convention of the Fourier
transform used elsewhere in this package convert via angular_c().
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InvalidParameter, RangeError

DEFAULT_N_QUAD = 128
_POWER_BLOCK = 8
_POWER_SEED = 0x5EED


def angular_c(omega_hz: float, T: float) -> float:
    """Kernel parameter for a band limit given in ordinary frequency: 2*pi*omega*T."""
    return 2.0 * math.pi * omega_hz * T


def nystrom_matrix(c: float, n_quad: int = DEFAULT_N_QUAD) -> np.ndarray:
    """Symmetrized Nystrom matrix of the sinc kernel at parameter c.

    Built as outer(sqrt(w), sqrt(w)) * K with K evaluated from |x_i - x_j|,
    so the result is symmetric to the last bit, not merely to rounding.
    """
    if not c > 0:
        raise InvalidParameter(f"kernel parameter must be positive, got {c}")
    if n_quad < 32:
        raise InvalidParameter(f"n_quad must be at least 32, got {n_quad}")
    nodes, wts = np.polynomial.legendre.leggauss(n_quad)
    dist = np.abs(np.subtract.outer(nodes, nodes))
    kernel = np.empty_like(dist)
    off = dist > 0
    kernel[off] = np.sin(c * dist[off]) / (np.pi * dist[off])
    kernel[~off] = c / np.pi
    s = np.sqrt(wts)
    return np.outer(s, s) * kernel


def _top_eigenpair(A: np.ndarray, tol: float, max_iter: int, block: int):
    """Block power iteration with per-step Rayleigh-Ritz extraction.

    A scalar iteration stalls once the leading eigenvalues cluster at 1
    (c beyond about 7); a small block restores the effective gap, because
    convergence is then governed by the (block+1)-th eigenvalue.
    Terminates on the residual ||A v - lambda v||, which for a symmetric
    matrix leaves an eigenvalue error quadratically smaller than tol.
    """
    n = A.shape[0]
    b = min(block, n)
    rng = np.random.default_rng(_POWER_SEED)
    V = np.empty((n, b))
    V[:, 0] = 1.0
    if b > 1:
        V[:, 1:] = rng.standard_normal((n, b - 1))
    V, _ = np.linalg.qr(V)
    lam = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        W = A @ V
        ritz_vals, ritz_vecs = np.linalg.eigh(V.T @ W)
        lam = float(ritz_vals[-1])
        v = V @ ritz_vecs[:, -1]
        residual = float(np.linalg.norm(A @ v - lam * v))
        if residual <= tol * max(1.0, abs(lam)):
            return lam, it, residual
        V, _ = np.linalg.qr(W)
    raise ConvergenceError(
        f"power iteration did not reach tol={tol:g} in {max_iter} iterations "
        f"(last lambda={lam:.15g}, residual={residual:.3e})",
        diagnostics={"lambda": lam, "residual": residual, "iterations": max_iter},
    )


def lambda_top(
    c: float,
    n_quad: int = DEFAULT_N_QUAD,
    tol: float = 1e-12,
    max_iter: int = 10_000,
) -> float:
    """Largest eigenvalue of the concentration operator at parameter c."""
    A = nystrom_matrix(c, n_quad)
    lam, _, _ = _top_eigenpair(A, tol, max_iter, _POWER_BLOCK)
    return lam


@dataclass(frozen=True)
class ProlateSpectrum:
    c: float
    eigenvalues: tuple
    n_quad: int
    converged: bool


def lambda_spectrum(c: float, n_quad: int = DEFAULT_N_QUAD, k: int = 10) -> ProlateSpectrum:
    """Top-k eigenvalues, strictly descending, via the full symmetric solve.

    Values whose magnitude falls below 1e-15 are reported as exactly zero
    (converged-to-zero in the quadrature's eyes).
    """
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}")
    if k > n_quad // 2:
        raise InvalidParameter(f"k={k} exceeds n_quad/2={n_quad // 2}")
    evals = np.linalg.eigvalsh(nystrom_matrix(c, n_quad))[::-1][:k].copy()
    evals[np.abs(evals) < 1e-15] = 0.0
    return ProlateSpectrum(c=c, eigenvalues=tuple(float(v) for v in evals),
                           n_quad=n_quad, converged=True)


def fuchs_asymptotic(n: int, c: float) -> float:
    """Large-c asymptotic of 1 - lambda_n: 4 sqrt(pi) 8^n / n! c^(n+1/2) e^(-2c).

    Note the decaying exponential: only e^(-2c) is consistent with the
    eigenvalues approaching 1 from below as c grows.
    """
    if n < 0:
        raise InvalidParameter(f"mode index must be >= 0, got {n}")
    return (
        4.0 * math.sqrt(math.pi) * 8.0 ** n / math.factorial(n)
        * c ** (n + 0.5) * math.exp(-2.0 * c)
    )


def relative_difference(c: float, n_quad: int = DEFAULT_N_QUAD) -> float:
    """(numerical lambda_0 - asymptotic lambda_0) / (1 - asymptotic lambda_0)."""
    gap = fuchs_asymptotic(0, c)
    return (lambda_top(c, n_quad) - (1.0 - gap)) / gap


@dataclass(frozen=True)
class SweepRow:
    c: float
    lambda0: float
    lambda0_asymptotic: float
    relative_difference: float


SWEEP_COLUMNS = ("c", "lambda0", "lambda0_asymptotic", "relative_difference")


def _workers_from_env() -> int:
    raw = os.environ.get("UNCERTAINTY_LAB_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def lambda0_sweep(
    c_min: float,
    c_max: float,
    steps: int,
    n_quad: int = DEFAULT_N_QUAD,
    workers: int | None = None,
) -> list[SweepRow]:
    """lambda_0 and its asymptotic across [c_min, c_max], rows ordered by c.

    Rows may be computed on a thread pool (UNCERTAINTY_LAB_THREADS or the
    workers argument); assembly order is by c regardless.
    """
    if not (0 < c_min <= c_max):
        raise InvalidParameter(f"need 0 < c_min <= c_max, got [{c_min}, {c_max}]")
    if steps < 1 or (steps == 1 and c_min != c_max):
        raise InvalidParameter("steps must be >= 1 (and >= 2 unless c_min == c_max)")
    cs = np.linspace(c_min, c_max, steps)

    def row(c: float) -> SweepRow:
        try:
            lam = lambda_top(c, n_quad)
        except ConvergenceError as err:
            raise ConvergenceError(f"at c = {c:.17g}: {err}",
                                   diagnostics={"c": float(c), **err.diagnostics})
        gap = fuchs_asymptotic(0, c)
        return SweepRow(c=float(c), lambda0=lam, lambda0_asymptotic=1.0 - gap,
                        relative_difference=(lam - (1.0 - gap)) / gap)

    nworkers = _workers_from_env() if workers is None else max(1, workers)
    if nworkers > 1 and len(cs) > 1:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            return list(pool.map(row, cs))
    return [row(c) for c in cs]


def c_for_lambda0(
    target: float,
    n_quad: int = DEFAULT_N_QUAD,
    tol: float = 1e-8,
) -> float:
    """Invert the monotone map c -> lambda_0(c) by bisection.

    Stops when |lambda_0(c) - target| <= tol.
    """
    if not 0.0 < target < 1.0:
        raise InvalidParameter(f"target eigenvalue must lie in (0, 1), got {target}")
    lo, hi = 1e-4, 1.0
    for _ in range(60):
        if lambda_top(lo, n_quad) <= target:
            break
        lo /= 4.0
    else:
        raise RangeError(f"could not bracket lambda_0 = {target} from below")
    for _ in range(60):
        if lambda_top(hi, n_quad) >= target:
            break
        hi *= 2.0
        if hi > 64.0:
            raise RangeError(f"could not bracket lambda_0 = {target} above c = 64")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        lam = lambda_top(mid, n_quad)
        if abs(lam - target) <= tol:
            return mid
        if lam < target:
            lo = mid
        else:
            hi = mid
    raise RangeError(f"bisection for lambda_0 = {target} did not reach tol = {tol}")
