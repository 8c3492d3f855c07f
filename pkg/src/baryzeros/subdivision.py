"""Exact counting data for barycentric subdivision of a simplex.

The objects here all live over a fixed ambient dimension d and are
indexed by simplex dimensions running from -1 (the empty simplex) to d.
Matrices over that index range are stored 0-based with a +1 offset and
exposed through an ``entry(i, j)`` accessor taking the -1-based indices.

Everything is exact: entries are Python ints or ``Fraction`` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial, gcd
from typing import Sequence

from .polynomials import RationalPoly, shift_coefficients

BRUTE_FORCE_DIMENSION_CAP = 5


def _binom(n: int, k: int) -> int:
    """Binomial coefficient that is 0 outside the triangle instead of raising."""
    if n < 0 or k < 0:
        return 0
    return comb(n, k)


@cache
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: set partitions of n blocks k."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _check_index_pair(i: int, d: int) -> None:
    if i < -1 or d < -1:
        raise ValueError(f"dimension indices start at -1, got i={i}, d={d}")
    if i >= 0 and i > d:
        raise ValueError(f"no {i}-simplices over a {d}-simplex (i > d)")


def subdivision_count(i: int, d: int) -> int:
    """Number of i-simplices of the subdivided d-simplex over a fixed top face.

    Closed form (i+1)! * S(d+1, i+1) with the empty-simplex conventions:
    the count is 1 for (i, d) = (-1, -1) and 0 for i = -1, d >= 0.
    """
    _check_index_pair(i, d)
    if i == -1:
        return 1 if d == -1 else 0
    return factorial(i + 1) * stirling2(d + 1, i + 1)


@cache
def subdivision_count_recurrence(i: int, d: int) -> int:
    """Same count as :func:`subdivision_count`, from the chain recurrence.

    Independent route used to cross-check the closed form:
    f(i, d) = sum_{j=i}^{d} C(d+1, j) * f(i-1, j-1).
    """
    _check_index_pair(i, d)
    if i == -1:
        return 1 if d == -1 else 0
    return sum(
        comb(d + 1, j) * subdivision_count_recurrence(i - 1, j - 1)
        for j in range(i, d + 1)
    )


def _count_or_zero(i: int, j: int) -> int:
    """Subdivision count extended by zero where no simplices exist."""
    if i > j:
        return 0
    if i == -1:
        return 1 if j == -1 else 0
    if j == -1:
        return 0
    return subdivision_count(i, j)


@cache
def eigen_rationals(d: int) -> tuple[Fraction, ...]:
    """The rational weights (indexed -1..d) attached to dimension d.

    Characterised by the descending recurrence
        w_d = 1,
        w_i = (sum_{j>i} count(i, j) * w_j) / ((d+1)! - (i+1)!)
    for 0 <= i < d, with w_{-1} = 0 for d >= 0 (and 1 for d = -1).
    The resulting vector is the (d+1)!-eigenvector of the transfer matrix.
    """
    if d < -1:
        raise ValueError("d must be at least -1")
    if d == -1:
        return (Fraction(1),)
    values: dict[int, Fraction] = {d: Fraction(1)}
    top = factorial(d + 1)
    for i in range(d - 1, -1, -1):
        acc = Fraction(0)
        for j in range(i + 1, d + 1):
            acc += subdivision_count(i, j) * values[j]
        values[i] = acc / (top - factorial(i + 1))
    values[-1] = Fraction(0)
    return tuple(values[i] for i in range(-1, d + 1))


def eigen_rationals_direct(d: int, i: int) -> Fraction:
    """Single eigen weight by the explicit chain-sum formula.

    Sums over all strictly increasing chains i = i_0 < i_1 < ... < i_L < d
    the product of count(i_m, i_{m+1}) / ((d+1)! - (i_m + 1)!) factors,
    where the last numerator uses i_{L+1} = d.  Slow (2^(d-1-i) chains);
    exists as an independent cross-check of :func:`eigen_rationals`,
    which also covers the boundary entries i = -1 and i = d that the
    chain formula leaves out.
    """
    if not (0 <= i < d):
        raise ValueError(f"the chain-sum formula needs 0 <= i < d, got ({i}, {d})")
    top = factorial(d + 1)
    total = Fraction(0)
    middle = range(i + 1, d)
    for r in range(0, len(middle) + 1):
        for chosen in itertools.combinations(middle, r):
            nodes = (i, *chosen, d)
            term = Fraction(1)
            for a, b in zip(nodes, nodes[1:]):
                term *= Fraction(subdivision_count(a, b), top - factorial(a + 1))
            total += term
    return total


def limit_f_poly(d: int) -> RationalPoly:
    """Polynomial with the eigen weights as coefficients (degree d for d >= 0)."""
    return RationalPoly.from_coefficients(eigen_rationals(d))


def h_polynomial_limit(d: int) -> RationalPoly:
    """The shifted limit polynomial: limit_f_poly(d) evaluated at z - 1.

    For d >= 1 this has degree d, positive interior coefficients and zero
    constant term; for d = 0 it degenerates to the constant 1.
    """
    return limit_f_poly(d).shift(Fraction(-1))


def limit_h_coefficients(d: int) -> tuple[Fraction, ...]:
    """Coefficient table of :func:`h_polynomial_limit`, length d + 2.

    Entry index i runs 0..d+1, with index 0 the (always zero) z^(d+1)
    coefficient so the tuple lines up with the -1..d table convention.
    """
    if d < 0:
        raise ValueError("d must be at least 0")
    raw = shift_coefficients([Fraction(x) for x in eigen_rationals(d)], Fraction(-1))
    assert len(raw) == d + 2
    return tuple(raw)


# ---------------------------------------------------------------------------
# matrices indexed -1..d


@dataclass(frozen=True)
class SimplexMatrix:
    """Square matrix whose rows/columns are indexed by dimensions -1..d."""

    d: int
    rows: tuple[tuple, ...]

    def __post_init__(self):
        size = self.d + 2
        if len(self.rows) != size or any(len(r) != size for r in self.rows):
            raise ValueError("matrix shape does not match dimension range")

    @property
    def size(self) -> int:
        return self.d + 2

    def entry(self, i: int, j: int):
        """Entry at -1-based indices (i, j), each in -1..d."""
        if not (-1 <= i <= self.d and -1 <= j <= self.d):
            raise IndexError(f"index ({i}, {j}) outside -1..{self.d}")
        return self.rows[i + 1][j + 1]

    def __matmul__(self, other: "SimplexMatrix") -> "SimplexMatrix":
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        n = self.size
        cols = list(zip(*other.rows))
        prod = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows
        )
        return SimplexMatrix(self.d, prod)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product; the vector is indexed -1..d as well."""
        if len(vector) != self.size:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.rows)

    def scale(self, factor) -> "SimplexMatrix":
        return SimplexMatrix(
            self.d, tuple(tuple(factor * x for x in row) for row in self.rows)
        )


def identity_matrix(d: int) -> SimplexMatrix:
    n = d + 2
    return SimplexMatrix(
        d, tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
    )


def transfer_matrix(d: int) -> SimplexMatrix:
    """Upper-triangular matrix of subdivision counts, diagonal 0!..(d+1)!.

    Applying it to an f-vector (indexed -1..d) gives the f-vector of the
    barycentric subdivision.
    """
    if d < -1:
        raise ValueError("d must be at least -1")
    return SimplexMatrix(
        d,
        tuple(
            tuple(_count_or_zero(i, j) for j in range(-1, d + 1))
            for i in range(-1, d + 1)
        ),
    )


def shift_matrix(d: int) -> SimplexMatrix:
    """Matrix carrying f-polynomial coefficients to reversed h-coefficients.

    Applied to (a_{-1}, ..., a_d) it yields (b_{d+1}, ..., b_0) where
    sum a_i z^(d-i) composed with z - 1 equals sum b_i z^(d+1-i).
    """
    if d < 0:
        raise ValueError("d must be at least 0")
    rows = []
    for i in range(-1, d + 1):
        row = []
        for j in range(-1, d + 1):
            sign = -1 if (d + 1 + i + j) % 2 else 1
            row.append(sign * _binom(d - j, i + 1))
        rows.append(tuple(row))
    return SimplexMatrix(d, tuple(rows))


def shift_matrix_inverse(d: int) -> SimplexMatrix:
    """Closed-form inverse of :func:`shift_matrix`."""
    if d < 0:
        raise ValueError("d must be at least 0")
    return SimplexMatrix(
        d,
        tuple(
            tuple(_binom(j + 1, d - i) for j in range(-1, d + 1))
            for i in range(-1, d + 1)
        ),
    )


@cache
def descent_matrix(d: int) -> SimplexMatrix:
    """Descent-statistic matrix, built by the boustrophedon-style recurrence.

    Entry (i, j) counts permutations of d+2 letters with i+1 descents and
    first letter j+2.  Base case d = 0 is the 2x2 identity; each larger
    matrix is assembled from partial-sum pairs of the previous one.
    """
    if d < 0:
        raise ValueError("d must be at least 0")
    if d == 0:
        return identity_matrix(0)
    prev = descent_matrix(d - 1)

    def prev_entry(i: int, j: int) -> int:
        if -1 <= i <= d - 1 and -1 <= j <= d - 1:
            return prev.entry(i, j)
        return 0

    rows = []
    for i in range(-1, d + 1):
        row = []
        for j in range(-1, d + 1):
            acc = sum(prev_entry(i - 1, l) for l in range(-1, j))
            acc += sum(prev_entry(i, l) for l in range(j, d))
            row.append(acc)
        rows.append(tuple(row))
    return SimplexMatrix(d, tuple(rows))


def descent_matrix_bruteforce(
    d: int, dimension_cap: int = BRUTE_FORCE_DIMENSION_CAP
) -> SimplexMatrix:
    """Descent matrix by enumerating all (d+2)! permutations.

    Exponentially slow; only meant to validate :func:`descent_matrix`.
    Raises for d above ``dimension_cap`` to keep runtimes sane.
    """
    if d < 0:
        raise ValueError("d must be at least 0")
    if d > dimension_cap:
        raise ValueError(
            f"brute force enumeration capped at d={dimension_cap} "
            f"({factorial(dimension_cap + 2)} permutations); got d={d}"
        )
    n = d + 2
    size = d + 2
    grid = [[0] * size for _ in range(size)]
    for perm in itertools.permutations(range(1, n + 1)):
        descents = sum(1 for t in range(n - 1) if perm[t] > perm[t + 1])
        i = descents - 1
        j = perm[0] - 2
        grid[i + 1][j + 1] += 1
    return SimplexMatrix(d, tuple(tuple(r) for r in grid))


# ---------------------------------------------------------------------------
# determinant sign for column-dominant matrices


def _column_kind(rows: Sequence[Sequence], j: int) -> str:
    n = len(rows)
    diag = rows[j][j]
    off = [rows[i][j] for i in range(n) if i != j]
    if diag < 0 and all(x > 0 for x in off) and sum(off) < -diag:
        return "dominant"
    if all(rows[i][j] < 0 for i in range(n)):
        return "negative"
    return "invalid"


def det_sign_check(rows: Sequence[Sequence]) -> int:
    """Exact determinant sign of a column-dominant matrix.

    Accepted shapes, validated before any elimination happens:
    every column has a negative diagonal entry, positive off-diagonal
    entries, and off-diagonal column sum strictly below the diagonal's
    absolute value; at most one column may instead be entirely negative
    (the replaced-column variant).  Entries may be ints or Fractions.

    The sign is computed by fraction-free Bareiss elimination after
    clearing denominators row by row, so the answer is exact.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("need a nonempty square matrix")
    replaced = 0
    for j in range(n):
        kind = _column_kind(rows, j)
        if kind == "invalid":
            raise ValueError(f"column {j} is neither dominant-form nor all-negative")
        if kind == "negative":
            replaced += 1
    if replaced > 1:
        raise ValueError("more than one replaced (all-negative) column")

    # clear denominators: scale each row by a positive integer
    work: list[list[int]] = []
    for row in rows:
        m = 1
        for x in row:
            q = Fraction(x).denominator
            m = m * q // gcd(m, q)
        work.append([int(Fraction(x) * m) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if work[r][k] != 0), None)
            if pivot is None:
                return 0
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    det = work[n - 1][n - 1]
    if det == 0:
        return 0
    return sign if det > 0 else -sign
