"""Possibility maps and bodies: membership tests, boundary curves, ellipse
geometry, the closed-form psi functions, convexity diagnostics, and direct
verification of the uncertainty inequalities on concrete signals.

The concentration-pair membership clauses and their spreading-pair mirror
are evaluated verbatim; points on the critical curve count as realizable
because the defining inequality is non-strict.  Boundary polylines are
produced parametrically from the equality case
arccos(alpha) + arccos(beta) = arccos(sqrt(lambda_0)) and mapped into the
requested coordinate system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import signal_core as sc
from . import spreading as sp
from .errors import InvalidInput, InvalidParameter, NotSupported, ZeroNorm
from .prolate import angular_c
from .weights import WeightSpec, homogeneous, lp_indicator

REALIZABLE = "realizable"
IMPOSSIBLE = "impossible"
OUTSIDE_DOMAIN = "outside_domain"

CONVEX = "convex"
CONCAVE = "concave"
MIXED = "mixed"

_CONVEXITY_TOL = 1e-10


@dataclass(frozen=True)
class CoordinateSystem:
    """Axis semantics of a possibility-map plot.

    name is one of concentration | concentration2 | spreading | spreading2 |
    power; the power system carries the exponents applied to the spreading
    pair.
    """

    name: str
    m: int = 1
    n: int = 1

    def __post_init__(self):
        if self.name not in ("concentration", "concentration2",
                             "spreading", "spreading2", "power"):
            raise InvalidParameter(f"unknown coordinate system {self.name!r}")
        if self.m < 1 or self.n < 1:
            raise InvalidParameter("power exponents must be >= 1")

    @property
    def label(self) -> str:
        if self.name == "power":
            return f"power(m={self.m},n={self.n})"
        return self.name


CONCENTRATION = CoordinateSystem("concentration")
CONCENTRATION_SQUARED = CoordinateSystem("concentration2")
SPREADING = CoordinateSystem("spreading")
SPREADING_SQUARED = CoordinateSystem("spreading2")


def spreading_power(m: int, n: int) -> CoordinateSystem:
    return CoordinateSystem("power", m=m, n=n)


@dataclass(frozen=True)
class MembershipVerdict:
    verdict: str
    condition_index: int | None = None


def _check_lambda0(lambda0: float):
    if not 0.0 < lambda0 < 1.0:
        raise InvalidParameter(f"lambda0 must lie in (0, 1), got {lambda0}")


def lp_membership(alpha: float, beta: float, lambda0: float) -> MembershipVerdict:
    """Concentration-pair membership: which clause admits (alpha, beta).

    The domain is the closed unit square minus the corners (0,1), (1,0)
    and (1,1); anything outside is reported as such rather than judged.
    """
    _check_lambda0(lambda0)
    if not (0.0 <= alpha <= 1.0 and 0.0 <= beta <= 1.0):
        return MembershipVerdict(OUTSIDE_DOMAIN)
    if (alpha, beta) in ((0.0, 1.0), (1.0, 0.0), (1.0, 1.0)):
        return MembershipVerdict(OUTSIDE_DOMAIN)
    root = math.sqrt(lambda0)
    if alpha == 0.0:
        return MembershipVerdict(REALIZABLE, 1)  # 0 <= beta < 1 by domain
    if alpha < root:
        return MembershipVerdict(REALIZABLE, 2)
    if alpha < 1.0:
        ok = math.acos(alpha) + math.acos(beta) >= math.acos(root)
        return MembershipVerdict(REALIZABLE if ok else IMPOSSIBLE, 3)
    ok = 0.0 < beta <= root
    return MembershipVerdict(REALIZABLE if ok else IMPOSSIBLE, 4)


def lp_star_membership(gamma: float, zeta: float, lambda0: float) -> MembershipVerdict:
    """Spreading-pair membership; mirror of lp_membership under
    gamma^2 = 1 - alpha^2, zeta^2 = 1 - beta^2.

    The garbled fourth clause of the source statement is completed by
    symmetry with the concentration version: gamma = 1 admits every
    zeta in [0, 1] still inside the domain.
    """
    _check_lambda0(lambda0)
    if not (0.0 <= gamma <= 1.0 and 0.0 <= zeta <= 1.0):
        return MembershipVerdict(OUTSIDE_DOMAIN)
    if (gamma, zeta) in ((0.0, 0.0), (0.0, 1.0), (1.0, 0.0)):
        return MembershipVerdict(OUTSIDE_DOMAIN)
    edge = math.sqrt(1.0 - lambda0)
    if gamma == 0.0:
        ok = edge <= zeta < 1.0
        return MembershipVerdict(REALIZABLE if ok else IMPOSSIBLE, 1)
    if gamma <= edge:
        lhs = math.acos(math.sqrt(1.0 - gamma ** 2)) + math.acos(math.sqrt(1.0 - zeta ** 2))
        ok = lhs >= math.acos(math.sqrt(lambda0))
        return MembershipVerdict(REALIZABLE if ok else IMPOSSIBLE, 2)
    if gamma < 1.0:
        return MembershipVerdict(REALIZABLE, 3)
    return MembershipVerdict(REALIZABLE, 4)


@dataclass(frozen=True)
class PossibilityBoundary:
    """Sampled boundary polyline of a possible area, in tagged coordinates."""

    coords: CoordinateSystem
    model: str
    parameter: float
    points: np.ndarray
    closed_form: str | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
            raise InvalidInput("boundary needs at least two (x, y) points")
        pts = pts.copy()
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)


def _map_angle_points(theta: np.ndarray, theta0: float,
                      coords: CoordinateSystem) -> np.ndarray:
    a = np.cos(theta)
    b = np.cos(theta0 - theta)
    if coords.name == "concentration":
        return np.column_stack([a, b])
    if coords.name == "concentration2":
        return np.column_stack([a ** 2, b ** 2])
    g = np.sin(theta)
    z = np.sin(theta0 - theta)
    if coords.name == "spreading":
        return np.column_stack([g, z])
    if coords.name == "spreading2":
        return np.column_stack([g ** 2, z ** 2])
    return np.column_stack([g ** coords.m, z ** coords.n])


def lp_boundary(lambda0: float, coords: CoordinateSystem = SPREADING,
                n_pts: int = 256) -> PossibilityBoundary:
    """Equality curve arccos(alpha) + arccos(beta) = arccos(sqrt(lambda_0)),
    sampled parametrically and mapped into the requested coordinates."""
    _check_lambda0(lambda0)
    if n_pts < 2:
        raise InvalidParameter(f"n_pts must be >= 2, got {n_pts}")
    theta0 = math.acos(math.sqrt(lambda0))
    theta = np.linspace(0.0, theta0, n_pts)
    return PossibilityBoundary(
        coords=coords,
        model="lp",
        parameter=lambda0,
        points=_map_angle_points(theta, theta0, coords),
        closed_form="arc of the critical circle equation",
    )


@dataclass(frozen=True)
class EllipseParams:
    major_axis_dir: np.ndarray
    minor_axis_dir: np.ndarray
    semi_major: float
    semi_minor: float
    foci: tuple

    def __post_init__(self):
        if self.semi_major < self.semi_minor:
            raise InvalidParameter("semi_major must dominate semi_minor")


def ellipse_canonical(lambda0: float,
                      coords: CoordinateSystem = CONCENTRATION) -> EllipseParams:
    """Canonical parameters of the boundary ellipse in concentration or
    spreading coordinates.

    The semi-axes are sqrt((1 - l) / (1 -+ sqrt(l))); the diagonal that
    hosts the major axis flips between the two coordinate systems, and the
    focal distance is sqrt(2) * lambda_0^(1/4) in both.
    """
    _check_lambda0(lambda0)
    if coords.name not in ("concentration", "spreading"):
        raise NotSupported("ellipse form exists in concentration or spreading coords")
    root = math.sqrt(lambda0)
    a_axis = math.sqrt((1.0 - lambda0) / (1.0 - root))
    b_axis = math.sqrt((1.0 - lambda0) / (1.0 + root))
    focus = math.sqrt(2.0) * lambda0 ** 0.25
    diag_plus = np.array([1.0, 1.0]) / math.sqrt(2.0)
    diag_minus = np.array([1.0, -1.0]) / math.sqrt(2.0)
    major = diag_plus if coords.name == "concentration" else diag_minus
    minor = diag_minus if coords.name == "concentration" else diag_plus
    return EllipseParams(
        major_axis_dir=major,
        minor_axis_dir=minor,
        semi_major=a_axis,
        semi_minor=b_axis,
        foci=(focus * major, -focus * major),
    )


def hpw_psi(gamma: float, zeta: float) -> float:
    """psi(gamma, zeta) = 1 / (4 pi gamma zeta) for the quadratic weights."""
    if not (gamma > 0 and zeta > 0):
        raise InvalidParameter("hpw_psi needs strictly positive spreadings")
    return 1.0 / (4.0 * math.pi * gamma * zeta)


def homogeneous_psi(k: int, m: int, C: float, gm: float, zm: float) -> float:
    """psi in power coordinates for degree-k homogeneous weights:
    C * (gamma^m zeta^m)^(-2 / (k m))."""
    if k < 1 or m < 1:
        raise InvalidParameter("k and m must be positive integers")
    if not (C > 0 and gm > 0 and zm > 0):
        raise InvalidParameter("homogeneous_psi needs strictly positive inputs")
    return C * (gm * zm) ** (-2.0 / (k * m))


@dataclass(frozen=True)
class ConvexityReport:
    second_difference_signs: np.ndarray
    verdict: str


def convexity_report(boundary: PossibilityBoundary) -> ConvexityReport:
    """Classify the boundary ordinate as convex, concave, or mixed.

    Uses divided second differences scaled by the local spacing squared and
    the ordinate magnitude, so rounding noise on an exactly straight
    polyline stays inside the sign tolerance and yields the mixed verdict.
    """
    pts = boundary.points
    if pts.shape[0] < 5:
        raise InvalidInput("need at least 5 boundary points")
    x, y = pts[:, 0], pts[:, 1]
    dx = np.diff(x)
    if not (np.all(dx > 0) or np.all(dx < 0)):
        raise InvalidInput("boundary abscissa must be strictly monotone")
    slopes = np.diff(y) / dx
    half_span = 0.5 * (x[2:] - x[:-2])
    second = np.diff(slopes) / half_span
    h2 = (0.5 * (np.abs(dx[1:]) + np.abs(dx[:-1]))) ** 2
    scale = max(float(np.max(np.abs(y))), 1e-300)
    normalized = second * h2 / scale
    signs = np.where(np.abs(normalized) <= _CONVEXITY_TOL, 0.0, np.sign(normalized))
    has_pos = bool(np.any(signs > 0))
    has_neg = bool(np.any(signs < 0))
    if has_pos and not has_neg:
        verdict = CONVEX
    elif has_neg and not has_pos:
        verdict = CONCAVE
    else:
        verdict = MIXED
    return ConvexityReport(second_difference_signs=signs, verdict=verdict)


def _tail_masses(f: sc.SampledSignal, T: float, omega: float) -> tuple[float, float, float]:
    if not (T > 0 and omega > 0):
        raise InvalidParameter("T and omega must be positive")
    norm = sc.l2_norm(f)
    if norm == 0.0:
        raise ZeroNorm("inequality margins of the zero signal are undefined")
    x = f.grid.points
    tail_time = float(np.sum(np.abs(f.values[np.abs(x) > T]) ** 2)) * f.grid.dx
    spec = sc.fourier(f if f.domain == sc.TIME else f.with_domain(sc.TIME))
    w = spec.grid.points
    tail_freq = float(np.sum(np.abs(spec.values[np.abs(w) > omega]) ** 2)) * spec.grid.dx
    return tail_time, tail_freq, norm


@dataclass(frozen=True)
class MarginReport:
    """One inequality evaluation: lhs >= rhs expected, margin = lhs - rhs."""

    lhs: float
    rhs: float
    margin: float
    relative_margin: float
    lambda0: float | None = None
    T: float | None = None
    omega: float | None = None
    c: float | None = None
    tail_time: float | None = None
    tail_freq: float | None = None
    equality: bool | None = None


def verify_lp_inequality(f: sc.SampledSignal, T: float, omega: float,
                         lambda0: float) -> MarginReport:
    """Sum-of-tail-roots bound: sqrt(out-of-time mass) + sqrt(out-of-band
    mass) >= sqrt(1 - lambda_0) ||f||.

    lambda0 must belong to the operator at kernel parameter
    angular_c(omega, T); the report records that parameter alongside the
    window pair so the pairing is auditable.
    """
    _check_lambda0(lambda0)
    tail_time, tail_freq, norm = _tail_masses(f, T, omega)
    lhs = math.sqrt(tail_time) + math.sqrt(tail_freq)
    rhs = math.sqrt(1.0 - lambda0) * norm
    margin = lhs - rhs
    return MarginReport(
        lhs=lhs, rhs=rhs, margin=margin, relative_margin=margin / norm,
        lambda0=lambda0, T=T, omega=omega, c=angular_c(omega, T),
        tail_time=tail_time, tail_freq=tail_freq,
    )


def verify_lp_weak_inequality(f: sc.SampledSignal, T: float, omega: float,
                              lambda0: float) -> MarginReport:
    """Root-of-tail-sum bound: sqrt(sum of the two tail masses) >=
    sqrt(1 - sqrt(lambda_0)) ||f||.  Weaker than the sum-of-roots form,
    related to it by the elementary sqrt(2) sqrt(a + b) >= sqrt(a) + sqrt(b).

    The constant comes from minimizing the squared-spreading sum over the
    critical curve: the minimum sits at the symmetric point and equals
    2 sin^2(arccos(sqrt(lambda_0)) / 2) = 1 - sqrt(lambda_0).  (The larger
    constant 1 - lambda_0 sometimes quoted for this form belongs to the
    curve's endpoints, not its interior, and concrete near-symmetric
    signals violate it.)
    """
    _check_lambda0(lambda0)
    tail_time, tail_freq, norm = _tail_masses(f, T, omega)
    lhs = math.sqrt(tail_time + tail_freq)
    rhs = math.sqrt(1.0 - math.sqrt(lambda0)) * norm
    margin = lhs - rhs
    return MarginReport(
        lhs=lhs, rhs=rhs, margin=margin, relative_margin=margin / norm,
        lambda0=lambda0, T=T, omega=omega, c=angular_c(omega, T),
        tail_time=tail_time, tail_freq=tail_freq,
    )


HPW_EQUALITY_REL_TOL = 1e-6


def verify_hpw(f: sc.SampledSignal) -> MarginReport:
    """Second-moment product bound about the origin:
    sqrt(m2_time) * sqrt(m2_freq) >= ||f||^2 / (4 pi).

    The equality flag fires only within HPW_EQUALITY_REL_TOL of the bound,
    which on centered moments singles out pure Gaussians.
    """
    norm = sc.l2_norm(f)
    if norm == 0.0:
        raise ZeroNorm("inequality margins of the zero signal are undefined")
    quad = homogeneous(2)
    lhs = sp.gamma(f, quad, 1.0) * sp.zeta(f, quad, 1.0) * norm ** 2
    rhs = norm ** 2 / (4.0 * math.pi)
    margin = lhs - rhs
    rel = margin / norm ** 2
    return MarginReport(
        lhs=lhs, rhs=rhs, margin=margin, relative_margin=rel,
        equality=bool(abs(rel) <= HPW_EQUALITY_REL_TOL),
    )


@dataclass(frozen=True)
class LPModel:
    lambda0: float


@dataclass(frozen=True)
class HPWModel:
    c: float


@dataclass(frozen=True)
class HomogeneousModel:
    k: int
    C: float
    c: float


_HYPERBOLA_DECADES = 1.0


def _hyperbola_boundary(product: float, coords: CoordinateSystem, n_pts: int,
                        model: str, parameter: float) -> PossibilityBoundary:
    # Level curve gamma * zeta = product, sampled log-symmetrically about
    # the symmetry point gamma = zeta = sqrt(product).
    if coords.name in ("concentration", "concentration2"):
        raise NotSupported(
            f"{model} boundaries are unbounded; concentration coordinates do not apply"
        )
    center = math.sqrt(product)
    g = np.geomspace(center * 10.0 ** -_HYPERBOLA_DECADES,
                     center * 10.0 ** _HYPERBOLA_DECADES, n_pts)
    z = product / g
    if coords.name == "spreading":
        pts = np.column_stack([g, z])
    elif coords.name == "spreading2":
        pts = np.column_stack([g ** 2, z ** 2])
    else:
        pts = np.column_stack([g ** coords.m, z ** coords.n])
    return PossibilityBoundary(
        coords=coords, model=model, parameter=parameter, points=pts,
        closed_form=f"gamma * zeta = {product!r}",
    )


def map_slice(model, coords: CoordinateSystem = SPREADING, n_pts: int = 256,
              weights: tuple[WeightSpec, WeightSpec] | None = None) -> PossibilityBoundary:
    """Level-c (or level-lambda_0) boundary polyline for one of the three
    closed-form models.  weights, when given, must agree with the model."""
    if n_pts < 2:
        raise InvalidParameter(f"n_pts must be >= 2, got {n_pts}")
    if isinstance(model, LPModel):
        _validate_weights(weights, lp_indicator())
        return lp_boundary(model.lambda0, coords, n_pts)
    if isinstance(model, HPWModel):
        if not model.c > 0:
            raise InvalidParameter("level c must be positive")
        _validate_weights(weights, homogeneous(2))
        return _hyperbola_boundary(1.0 / (4.0 * math.pi * model.c), coords,
                                   n_pts, "hpw", model.c)
    if isinstance(model, HomogeneousModel):
        if not (model.c > 0 and model.C > 0 and model.k >= 1):
            raise InvalidParameter("homogeneous model needs positive c, C and k >= 1")
        _validate_weights(weights, homogeneous(model.k))
        return _hyperbola_boundary((model.C / model.c) ** (model.k / 2.0), coords,
                                   n_pts, "homogeneous", model.c)
    raise NotSupported(f"unknown model {model!r}")


def _validate_weights(weights, expected: WeightSpec):
    if weights is None:
        return
    w1, w2 = weights
    if w1 != expected or w2 != expected:
        raise NotSupported(
            f"model implies weight pair ({expected.label}, {expected.label})"
        )
