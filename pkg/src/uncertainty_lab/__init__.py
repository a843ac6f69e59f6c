"""uncertainty-lab: time-frequency concentration eigenvalues, spreading
functionals, possibility-map geometry, and uncertainty-inequality checks."""

from .errors import (ConvergenceError, DomainError, GridMismatch, InvalidInput,
                     InvalidParameter, NotSupported, RangeError, TailWarning,
                     UncertaintyLabError, ZeroNorm)
from .signal_core import (FREQUENCY, TIME, Grid, SampledSignal, band_limit,
                          custom, dilate_l2, dilate_unnormalized, fourier,
                          hermite_gaussian, indicator, inner, inverse_fourier,
                          l2_norm, modulate, normalized_gaussian, resample,
                          sample, tail_mass, time_limit, translate)
from .weights import (ProbeParams, WeightClass, WeightSpec, c_bound, classify,
                      eval_scaled, homogeneous, lp_indicator, tabulated,
                      tabulated_from_csv)
from .spreading import (RealizablePoint, alpha, beta, gamma, power_coords,
                        spreading_point, zeta)
from .prolate import (ProlateSpectrum, SweepRow, angular_c, c_for_lambda0,
                      fuchs_asymptotic, lambda0_sweep, lambda_spectrum,
                      lambda_top, nystrom_matrix, relative_difference)
from .possibility import (CONCENTRATION, CONCENTRATION_SQUARED, CONVEX, CONCAVE,
                          IMPOSSIBLE, MIXED, OUTSIDE_DOMAIN, REALIZABLE,
                          SPREADING, SPREADING_SQUARED, ConvexityReport,
                          CoordinateSystem, EllipseParams, HPWModel,
                          HomogeneousModel, LPModel, MarginReport,
                          MembershipVerdict, PossibilityBoundary,
                          convexity_report, ellipse_canonical, homogeneous_psi,
                          hpw_psi, lp_boundary, lp_membership,
                          lp_star_membership, map_slice, spreading_power,
                          verify_hpw, verify_lp_inequality,
                          verify_lp_weak_inequality)
from .homogeneous_const import (ConstantEstimate, GaussianScale, HermiteMixture,
                                OptParams, estimate_constant, product_functional)
from .corpus import CorpusSignal, make_corpus

__version__ = "0.1.0"
