"""Exact barycentric-subdivision combinatorics and h-polynomial zeros.

The package studies the simplicial complex attached to the squarefree
integers up to n (one simplex per squarefree k, namely its set of prime
divisors).  It provides:

- exact subdivision counting tables, transfer matrices, descent
  matrices and their rational limit data (``subdivision``),
- sieves, f-vectors and explicit complexes with the Euler
  characteristic / Mertens cross-check (``complexes``),
- certified arbitrary-precision root finding (``rootfinding``),
- root trajectories under repeated subdivision, the exact growth
  expansion of face counts and exact scaling limits (``dynamics``),
- runnable invariant suites (``checks``) and a deterministic CLI
  (``cli``, console script ``baryzeros``).
"""

from .checks import CheckResult, complex_suite, core_suite, run_suite, zeros_suite
from .complexes import (
    ComplexSummary,
    ConsistencyError,
    FVector,
    ResourceLimitError,
    SieveTable,
    SimplicialComplex,
    barycentric_subdivide,
    build_sieve,
    chi_profile,
    dim_of,
    explicit_complex,
    first_negative_euler,
    h_poly,
    mertens,
    shared_sieve,
    summary,
    weight_count,
)
from .dynamics import (
    AlphaRecord,
    ConjectureReport,
    GrowthExpansion,
    TrajectoryEntry,
    ZeroTrajectory,
    alpha,
    alpha_scan,
    conjecture_report,
    growth_expansion,
    subdivided_f,
    trajectory,
    trajectory_precision,
)
from .polynomials import RationalPoly, poly_shift, shift_coefficients
from .rootfinding import RootFindingError, RootSet, find_roots
from .subdivision import (
    SimplexMatrix,
    descent_matrix,
    descent_matrix_bruteforce,
    det_sign_check,
    eigen_rationals,
    eigen_rationals_direct,
    h_polynomial_limit,
    identity_matrix,
    limit_f_poly,
    limit_h_coefficients,
    shift_matrix,
    shift_matrix_inverse,
    stirling2,
    subdivision_count,
    subdivision_count_recurrence,
    transfer_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaRecord",
    "CheckResult",
    "ComplexSummary",
    "ConjectureReport",
    "ConsistencyError",
    "FVector",
    "GrowthExpansion",
    "RationalPoly",
    "ResourceLimitError",
    "RootFindingError",
    "RootSet",
    "SieveTable",
    "SimplexMatrix",
    "SimplicialComplex",
    "TrajectoryEntry",
    "ZeroTrajectory",
    "__version__",
    "alpha",
    "alpha_scan",
    "barycentric_subdivide",
    "build_sieve",
    "chi_profile",
    "complex_suite",
    "conjecture_report",
    "core_suite",
    "descent_matrix",
    "descent_matrix_bruteforce",
    "det_sign_check",
    "dim_of",
    "eigen_rationals",
    "eigen_rationals_direct",
    "explicit_complex",
    "find_roots",
    "first_negative_euler",
    "growth_expansion",
    "h_poly",
    "h_polynomial_limit",
    "identity_matrix",
    "limit_f_poly",
    "limit_h_coefficients",
    "mertens",
    "poly_shift",
    "run_suite",
    "shared_sieve",
    "shift_coefficients",
    "shift_matrix",
    "shift_matrix_inverse",
    "stirling2",
    "subdivided_f",
    "subdivision_count",
    "subdivision_count_recurrence",
    "summary",
    "trajectory",
    "trajectory_precision",
    "transfer_matrix",
    "weight_count",
    "zeros_suite",
]
