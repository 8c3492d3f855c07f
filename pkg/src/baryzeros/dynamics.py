"""Behaviour of h-polynomial zeros under repeated barycentric subdivision.

Face counts evolve by an exact integer transfer matrix, so every
polynomial whose roots are studied here is known exactly; floating point
enters only in the final root approximation, at a precision that grows
with the subdivision depth.  The module also computes the exact closed
form of the face counts as a sum of factorial powers, and the scaling
limits of the smallest root across all squarefree-divisor complexes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath as mp

from .complexes import FVector, SieveTable, dim_of, h_poly, shared_sieve, summary
from .polynomials import RationalPoly
from .rootfinding import find_roots
from .subdivision import eigen_rationals, transfer_matrix

DEFAULT_TRAJECTORY_PRECISION = 192
MAX_SUBDIVISION_DEPTH = 64


def subdivided_f(fv: FVector, k: int, max_depth: int = MAX_SUBDIVISION_DEPTH) -> FVector:
    """Face counts after k rounds of barycentric subdivision, exactly.

    One round multiplies the count vector by the integer transfer matrix
    of the ambient dimension; the dimension never changes.
    """
    if k < 0:
        raise ValueError("subdivision depth must be nonnegative")
    if k > max_depth:
        raise ValueError(f"subdivision depth {k} exceeds the cap {max_depth}")
    if k == 0:
        return fv
    matrix = transfer_matrix(fv.dim)
    vector = list(fv.counts)
    for _ in range(k):
        vector = list(matrix.apply(vector))
    return FVector(tuple(int(v) for v in vector))


# ---------------------------------------------------------------------------
# exact growth expansion


@dataclass(frozen=True)
class GrowthExpansion:
    """Exact closed form f_i(k) = sum_j C[j][i] * ((d+1-j)!)^k.

    Valid for every k >= 0, not only asymptotically: the transfer matrix
    has the distinct eigenvalues 1!, 2!, ..., (d+1)! and the expansion is
    the corresponding eigendecomposition of the initial count vector.
    coefficients[j][i + 1] holds C[j][i] for i in -1..d.
    """

    dim: int
    bases: tuple
    coefficients: tuple

    def evaluate(self, i: int, k: int) -> Fraction:
        """Face count f_i after k subdivisions, from the closed form."""
        if not (-1 <= i <= self.dim):
            raise IndexError(f"i={i} outside -1..{self.dim}")
        if k < 0:
            raise ValueError("k must be nonnegative")
        return sum(
            (row[i + 1] * base**k for base, row in zip(self.bases, self.coefficients)),
            Fraction(0),
        )

    def leading(self, i: int) -> Fraction:
        """Coefficient of the dominant power ((d+1)!)^k for face size i."""
        return self.coefficients[0][i + 1]


def _solve_exact(matrix: list[list[Fraction]], rhs: list[list[Fraction]]):
    """Gaussian elimination over the rationals; rhs holds whole rows."""
    n = len(matrix)
    aug = [list(matrix[r]) + list(rhs[r]) for r in range(n)]
    width = len(aug[0])
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:width] for row in aug]


def growth_expansion(fv: FVector) -> GrowthExpansion:
    """Eigendecomposition of the subdivision dynamics started at fv.

    Solves the exact Vandermonde system built from the first d+1 exact
    iterates, then the result reproduces every iterate (the bases
    1!, ..., (d+1)! are distinct, so the system is nonsingular).
    """
    d = fv.dim
    if d < 0:
        raise ValueError("growth expansion needs dimension at least 0")
    bases = tuple(math.factorial(d + 1 - j) for j in range(d + 1))
    samples = [subdivided_f(fv, k).counts for k in range(d + 1)]
    vander = [
        [Fraction(base) ** k for base in bases] for k in range(d + 1)
    ]
    rhs = [[Fraction(c) for c in sample] for sample in samples]
    solved = _solve_exact(vander, rhs)
    coefficients = tuple(tuple(row) for row in solved)
    return GrowthExpansion(d, bases, coefficients)


# ---------------------------------------------------------------------------
# zero trajectories


@dataclass(frozen=True)
class TrajectoryEntry:
    """Root data of the h-polynomial after k subdivision rounds.

    rho_0 and rho_inf are the roots of smallest and largest modulus,
    interior the rest.  ratio_inf compares |rho_inf| against the
    predicted magnitude H1 * f_d * ((d+1)!)^k and tends to 1;
    scaled_rho0 is |rho_0| * ((d+1)!)^k and tends to |alpha_n|.
    sum_rel_err and prod_rel_err compare the numeric root sum and
    product against the exact coefficient identities.
    """

    k: int
    precision_bits: int
    roots: tuple
    residuals: tuple
    rho_0: object
    rho_inf: object
    interior: tuple
    ratio_inf: object
    scaled_rho0: object
    rho_inf_real: bool
    ambiguous: bool
    sum_rel_err: object
    prod_rel_err: object


@dataclass(frozen=True)
class ZeroTrajectory:
    """Zero dynamics of one squarefree-divisor complex under subdivision."""

    n: int
    dim: int
    base: FVector
    chi: int
    h1: Fraction
    f_top: int
    entries: tuple


def _identity_errors(h: RationalPoly, roots) -> tuple:
    degree = h.degree
    exact_sum = -h.coeffs[1] / h.coeffs[0]
    exact_prod = h.coeffs[-1] / h.coeffs[0]
    if degree % 2:
        exact_prod = -exact_prod
    num_sum = sum(roots, mp.mpc(0))
    num_prod = mp.mpc(1)
    for z in roots:
        num_prod *= z

    def rel(numeric, exact: Fraction):
        target = mp.mpf(exact.numerator) / mp.mpf(exact.denominator)
        return abs(numeric - target) / max(1, abs(target))

    return rel(num_sum, exact_sum), rel(num_prod, exact_prod)


def trajectory_precision(dim: int, k: int, requested: int) -> int:
    """Working precision for depth k: enough bits to hold ((d+1)!)^k
    exactly plus a fixed safety margin, or the requested floor."""
    needed = 64 + (math.factorial(dim + 1) ** k).bit_length()
    return max(requested, needed)


def trajectory(
    n: int,
    k_max: int,
    precision_bits: int = DEFAULT_TRAJECTORY_PRECISION,
    sieve: SieveTable | None = None,
    k_values: Sequence[int] | None = None,
) -> ZeroTrajectory:
    """Root trajectories of the h-polynomial of the complex at n.

    Produces one entry per depth k = 0..k_max, or exactly the depths in
    k_values when that is given.  Needs dimension at least 1 so that the
    smallest and largest roots are distinct objects.  Precision is raised
    automatically with k.
    """
    if k_values is None:
        if k_max < 0:
            raise ValueError("k_max must be nonnegative")
        k_values = range(k_max + 1)
    info = summary(n, sieve)
    d = info.dim
    if d < 1:
        raise ValueError(f"n={n} has dimension {d}; trajectories need dim >= 1")
    h1 = eigen_rationals(d)[1]
    f_top = info.f_vector.count(d)
    chi = info.euler_char
    fac = math.factorial(d + 1)

    entries = []
    for k in k_values:
        bits = trajectory_precision(d, k, precision_bits)
        fv_k = subdivided_f(info.f_vector, k)
        h = h_poly(fv_k)
        rootset = find_roots(h, precision_bits=bits)
        with mp.workprec(bits):
            roots = rootset.roots
            rho_0 = roots[0]
            rho_inf = roots[-1]
            interior = tuple(roots[1:-1])
            growth = mp.mpf(fac) ** k
            predicted = (
                mp.mpf(h1.numerator) / mp.mpf(h1.denominator) * f_top * growth
            )
            ratio_inf = abs(rho_inf) / predicted
            scaled_rho0 = abs(rho_0) * growth
            sep_low = abs(roots[1]) / abs(rho_0) if abs(rho_0) > 0 else mp.inf
            sep_high = (
                abs(rho_inf) / abs(roots[-2]) if abs(roots[-2]) > 0 else mp.inf
            )
            ambiguous = bool(sep_low < 2 or sep_high < 2)
            sum_err, prod_err = _identity_errors(h, roots)
        entries.append(
            TrajectoryEntry(
                k=k,
                precision_bits=bits,
                roots=roots,
                residuals=rootset.residuals,
                rho_0=rho_0,
                rho_inf=rho_inf,
                interior=interior,
                ratio_inf=ratio_inf,
                scaled_rho0=scaled_rho0,
                rho_inf_real=rootset.real_certified[-1],
                ambiguous=ambiguous,
                sum_rel_err=sum_err,
                prod_rel_err=prod_err,
            )
        )
    return ZeroTrajectory(n, d, info.f_vector, chi, h1, f_top, tuple(entries))


# ---------------------------------------------------------------------------
# scaling limits of the smallest zero


@dataclass(frozen=True)
class AlphaRecord:
    """Exact scaling limit of the smallest h-polynomial zero at one n.

    alpha = chi / (H1 * f_d) where H1 is the linear limit coefficient of
    the ambient dimension and f_d the top face count; exponent is
    log |alpha| / log (d+1)! (None when alpha = 0).
    """

    n: int
    dim: int
    chi: int
    f_top: int
    h1: Fraction
    alpha: Fraction
    exponent: float | None


def _alpha_exponent(alpha: Fraction, dim: int) -> float | None:
    if alpha == 0:
        return None
    mag = abs(alpha)
    return (
        math.log(mag.numerator) - math.log(mag.denominator)
    ) / math.log(math.factorial(dim + 1))


def _make_alpha_record(n, d, chi, f_top, h1_cache) -> AlphaRecord:
    if d not in h1_cache:
        h1_cache[d] = eigen_rationals(d)[1]
    h1 = h1_cache[d]
    alpha = Fraction(chi) / (h1 * f_top)
    return AlphaRecord(n, d, chi, f_top, h1, alpha, _alpha_exponent(alpha, d))


def alpha(n: int, sieve: SieveTable | None = None) -> AlphaRecord:
    """Scaling limit of the smallest zero for the complex at n.

    The limit needs a root of largest modulus that separates from the
    rest, which requires dimension at least 1, hence n >= 6.
    """
    if n < 6 or dim_of(n) < 1:
        raise ValueError(f"alpha needs dimension >= 1, so n >= 6; got n={n}")
    info = summary(n, sieve)
    cache: dict = {}
    return _make_alpha_record(
        n, info.dim, info.euler_char, info.f_vector.count(info.dim), cache
    )


def alpha_scan(n_max: int, sieve: SieveTable | None = None) -> list[AlphaRecord]:
    """AlphaRecord for every n from 6 to n_max in one incremental pass."""
    if n_max < 6:
        raise ValueError("n_max must be at least 6")
    table = sieve if sieve is not None else shared_sieve(n_max)
    if table.limit < n_max:
        raise ValueError(f"sieve only reaches {table.limit}, need {n_max}")
    records = []
    weight_totals: dict[int, int] = {}
    chi_run = -1  # the empty simplex, counted at n = 1
    h1_cache: dict = {}
    for n in range(2, n_max + 1):
        w = table.weight[n]
        if w > 0:
            weight_totals[w] = weight_totals.get(w, 0) + 1
            chi_run += -1 if (w - 1) % 2 else 1
        if n < 6:
            continue
        d = dim_of(n)
        records.append(
            _make_alpha_record(n, d, chi_run, weight_totals[d + 1], h1_cache)
        )
    return records


@dataclass(frozen=True)
class ConjectureReport:
    """Exact audit of the scaling-limit growth bounds up to n_max.

    strong_violations lists n where alpha^2 > ((d+1)!)^3 (exponent above
    3/2), weak_violations where |alpha| > ((d+1)!)^2 (exponent above 2);
    both comparisons are exact rational arithmetic.
    """

    n_max: int
    checked: int
    zero_count: int
    strong_violations: tuple
    weak_violations: tuple
    max_exponent: float
    argmax_n: int


def conjecture_report(n_max: int, sieve: SieveTable | None = None) -> ConjectureReport:
    records = alpha_scan(n_max, sieve)
    strong = []
    weak = []
    zero_count = 0
    best = None
    for rec in records:
        if rec.alpha == 0:
            zero_count += 1
            continue
        fac = Fraction(math.factorial(rec.dim + 1))
        if rec.alpha * rec.alpha > fac**3:
            strong.append(rec.n)
        if abs(rec.alpha) > fac**2:
            weak.append(rec.n)
        if best is None or rec.exponent > best.exponent:
            best = rec
    return ConjectureReport(
        n_max=n_max,
        checked=len(records),
        zero_count=zero_count,
        strong_violations=tuple(strong),
        weak_violations=tuple(weak),
        max_exponent=best.exponent if best is not None else float("-inf"),
        argmax_n=best.n if best is not None else 0,
    )
