"""Squarefree-divisor complexes and the sieve machinery behind them.

For an integer n >= 1 the associated complex has one simplex for every
squarefree k <= n, namely the set of primes dividing k (the empty set
for k = 1).  Its reduced Euler characteristic equals minus the Mertens
function at n, which doubles as a built-in consistency oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .polynomials import RationalPoly

DEFAULT_SIEVE_LIMIT = 10**6
SIEVE_MEMORY_BUDGET = 10**8
EXPLICIT_COMPLEX_BOUND = 10**4
SUBDIVISION_OUTPUT_CAP = 2_000_000


class ConsistencyError(RuntimeError):
    """Two supposedly equal quantities computed along different routes differ."""


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds its configured size budget."""


# ---------------------------------------------------------------------------
# sieve


@dataclass
class SieveTable:
    """Smallest-prime-factor sieve with Moebius and weight side tables.

    weight[k] is the number of distinct prime factors for squarefree k
    and -1 otherwise; weight[1] = 0.  mertens_prefix[x] is the running
    Moebius sum up to x.
    """

    limit: int
    spf: list[int]
    mu: list[int]
    weight: list[int]
    mertens_prefix: list[int]

    def mertens(self, x: int) -> int:
        if not (1 <= x <= self.limit):
            raise ValueError(f"x={x} outside sieve range 1..{self.limit}")
        return self.mertens_prefix[x]

    def weight_count(self, d: int, x: int) -> int:
        """Number of squarefree integers <= x with exactly d prime factors."""
        if d < 0:
            raise ValueError("weight must be nonnegative")
        if not (1 <= x <= self.limit):
            raise ValueError(f"x={x} outside sieve range 1..{self.limit}")
        w = self.weight
        return sum(1 for k in range(1, x + 1) if w[k] == d)

    def prime_factors(self, k: int) -> tuple[int, ...]:
        if not (1 <= k <= self.limit):
            raise ValueError(f"k={k} outside sieve range 1..{self.limit}")
        out = []
        while k > 1:
            p = self.spf[k]
            out.append(p)
            while k % p == 0:
                k //= p
        return tuple(out)


def build_sieve(
    limit: int = DEFAULT_SIEVE_LIMIT, memory_budget: int = SIEVE_MEMORY_BUDGET
) -> SieveTable:
    """Linear smallest-prime-factor sieve up to ``limit`` inclusive.

    Moebius values and squarefree weights are then derived from the spf
    table by factorisation, and the Mertens running sums accumulated.
    """
    if limit < 1:
        raise ValueError("sieve limit must be at least 1")
    if limit > memory_budget:
        raise ResourceLimitError(
            f"sieve limit {limit} exceeds the configured budget {memory_budget}"
        )
    spf = list(range(limit + 1))
    primes: list[int] = []
    for i in range(2, limit + 1):
        if spf[i] == i:
            primes.append(i)
        si = spf[i]
        for p in primes:
            if p > si:
                break
            ip = i * p
            if ip > limit:
                break
            spf[ip] = p

    mu = [0] * (limit + 1)
    weight = [0] * (limit + 1)
    if limit >= 1:
        mu[1] = 1
        weight[1] = 0
    for k in range(2, limit + 1):
        m = k
        w = 0
        squarefree = True
        while m > 1:
            p = spf[m]
            m //= p
            w += 1
            if m % p == 0:
                squarefree = False
                break
        if squarefree:
            mu[k] = -1 if w % 2 else 1
            weight[k] = w
        else:
            mu[k] = 0
            weight[k] = -1

    prefix = [0] * (limit + 1)
    run = 0
    for k in range(1, limit + 1):
        run += mu[k]
        prefix[k] = run
    return SieveTable(limit, spf, mu, weight, prefix)


_shared_sieve: SieveTable | None = None


def shared_sieve(need: int) -> SieveTable:
    """Module-level sieve, grown on demand (never shrunk)."""
    global _shared_sieve
    if _shared_sieve is None or _shared_sieve.limit < need:
        _shared_sieve = build_sieve(max(need, 4096))
    return _shared_sieve


def mertens(x: int, sieve: SieveTable | None = None) -> int:
    """Moebius summatory function at x."""
    table = sieve if sieve is not None else shared_sieve(x)
    return table.mertens(x)


def weight_count(d: int, x: int, sieve: SieveTable | None = None) -> int:
    """Count of squarefree integers <= x with exactly d prime factors."""
    table = sieve if sieve is not None else shared_sieve(x)
    return table.weight_count(d, x)


# ---------------------------------------------------------------------------
# dimension via primorials

_primes_for_primorials = [2]
_primorials = [1, 2]


def _extend_primorials(n: int) -> None:
    while _primorials[-1] <= n:
        candidate = _primes_for_primorials[-1] + 1
        while True:
            if all(candidate % p for p in _primes_for_primorials):
                break
            candidate += 1
        _primes_for_primorials.append(candidate)
        _primorials.append(_primorials[-1] * candidate)


def dim_of(n: int) -> int:
    """Dimension of the squarefree-divisor complex: largest d with the
    product of the first d+1 primes at most n.  dim_of(1) == -1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _extend_primorials(n)
    d = -1
    while _primorials[d + 2] <= n:
        d += 1
    return d


# ---------------------------------------------------------------------------
# f-vectors and summaries


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_d) of a complex of dimension d.

    The leading entry counts the empty simplex and is always 1; the
    trailing entry is positive (a complex of dimension d has at least one
    d-simplex).
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts:
            raise ValueError("f-vector cannot be empty")
        if self.counts[0] != 1:
            raise ValueError("f_{-1} must be 1 (one empty simplex)")
        if any(c < 0 for c in self.counts):
            raise ValueError("face counts must be nonnegative")
        if self.counts[-1] == 0:
            raise ValueError("top face count must be positive")

    @property
    def dim(self) -> int:
        return len(self.counts) - 2

    def count(self, i: int) -> int:
        """f_i with i in -1..dim."""
        if not (-1 <= i <= self.dim):
            raise IndexError(f"i={i} outside -1..{self.dim}")
        return self.counts[i + 1]

    def euler_char(self) -> int:
        """Reduced Euler characteristic: alternating sum starting at -f_{-1}."""
        total = 0
        for idx, c in enumerate(self.counts):
            total += c if idx % 2 else -c
        return total

    def f_poly(self) -> RationalPoly:
        """sum f_i z^(d - i), degree d + 1, monic since f_{-1} = 1."""
        return RationalPoly.from_coefficients(self.counts)


def h_poly(fv: FVector) -> RationalPoly:
    """h-polynomial: the f-polynomial composed with z - 1.

    Monic of degree dim + 1 with constant term (-1)^dim times the Euler
    characteristic.  The degenerate dim = -1 vector (empty simplex only)
    is assigned the constant -1, its Euler characteristic, by convention.
    """
    if fv.dim == -1:
        return RationalPoly.from_coefficients([-1])
    return fv.f_poly().shift(Fraction(-1))


@dataclass(frozen=True)
class ComplexSummary:
    """Face data of the squarefree-divisor complex at n, cross-checked."""

    n: int
    dim: int
    f_vector: FVector
    euler_char: int
    mertens: int

    def __post_init__(self):
        if self.euler_char != -self.mertens:
            raise ConsistencyError(
                f"euler characteristic {self.euler_char} and Mertens value "
                f"{self.mertens} disagree at n={self.n}"
            )


def summary(n: int, sieve: SieveTable | None = None) -> ComplexSummary:
    """f-vector, Euler characteristic and Mertens cross-check for one n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    table = sieve if sieve is not None else shared_sieve(n)
    d = dim_of(n)
    counts = [1] + [table.weight_count(w, n) for w in range(1, d + 2)]
    fv = FVector(tuple(counts))
    return ComplexSummary(n, d, fv, fv.euler_char(), table.mertens(n))


def chi_profile(
    limit: int, sieve: SieveTable | None = None
) -> tuple[list[int], list[int]]:
    """Euler characteristics and Mertens values for all n <= limit.

    Returns (chi, mertens_values), both indexed by n with slot 0 unused.
    chi is accumulated from squarefree weight classes (each squarefree n
    of weight w contributes (-1)^(w-1)), mertens_values from Moebius
    values directly; the two routes are compared by callers.
    """
    table = sieve if sieve is not None else shared_sieve(limit)
    if table.limit < limit:
        raise ValueError(f"sieve only reaches {table.limit}, need {limit}")
    chi = [0] * (limit + 1)
    mm = [0] * (limit + 1)
    chi_run = 0
    m_run = 0
    w = table.weight
    mu = table.mu
    for k in range(1, limit + 1):
        wk = w[k]
        if wk == 0:
            chi_run -= 1  # the empty simplex enters at k = 1
        elif wk > 0:
            chi_run += -1 if (wk - 1) % 2 else 1
        m_run += mu[k]
        chi[k] = chi_run
        mm[k] = m_run
    return chi, mm


def first_negative_euler(
    limit: int = 200, sieve: SieveTable | None = None
) -> int | None:
    """Smallest n >= 2 with negative Euler characteristic, if any <= limit."""
    chi, _ = chi_profile(limit, sieve)
    for n in range(2, limit + 1):
        if chi[n] < 0:
            return n
    return None


# ---------------------------------------------------------------------------
# explicit complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex: a set of frozensets closed downward.

    Always contains the empty simplex.  Vertex labels must be hashable
    and mutually sortable (ints, strings, or the tuples produced by
    subdivision).
    """

    simplices: frozenset

    @classmethod
    def from_simplices(cls, simplices: Iterable) -> "SimplicialComplex":
        normalized = frozenset(frozenset(s) for s in simplices)
        normalized |= {frozenset()}
        return cls(normalized)

    @classmethod
    def from_facets(cls, facets: Iterable) -> "SimplicialComplex":
        """Downward closure of the given generating faces."""
        import itertools as _it

        out = {frozenset()}
        for facet in facets:
            members = tuple(facet)
            for size in range(1, len(members) + 1):
                for sub in _it.combinations(members, size):
                    out.add(frozenset(sub))
        return cls(frozenset(out))

    def validate(self) -> None:
        """Raise if some face is missing a subset (closure violation)."""
        import itertools as _it

        present = self.simplices
        if frozenset() not in present:
            raise ValueError("missing the empty simplex")
        for s in present:
            for v in s:
                smaller = s - {v}
                if smaller not in present:
                    raise ValueError(f"missing face {set(smaller)} of {set(s)}")

    @property
    def dim(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    def vertices(self) -> list:
        return sorted(v for s in self.simplices if len(s) == 1 for v in s)

    def f_vector(self) -> FVector:
        counts = [0] * (self.dim + 2)
        for s in self.simplices:
            counts[len(s)] += 1
        return FVector(tuple(counts))

    def euler_char(self) -> int:
        return self.f_vector().euler_char()


def _squarefree_prime_set(k: int) -> frozenset | None:
    """Prime divisors of k as a frozenset, or None if k is not squarefree."""
    primes = []
    m = k
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return None
            primes.append(p)
        p += 1 if p == 2 else 2
    if m > 1:
        primes.append(m)
    return frozenset(primes)


def explicit_complex(n: int, bound: int = EXPLICIT_COMPLEX_BOUND) -> SimplicialComplex:
    """Materialise the squarefree-divisor complex at n as explicit sets.

    Bounded because the output has one simplex per squarefree k <= n;
    use :func:`summary` for counting-only questions at large n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > bound:
        raise ResourceLimitError(
            f"explicit construction capped at n={bound}; use summaries instead"
        )
    faces = set()
    for k in range(1, n + 1):
        ps = _squarefree_prime_set(k)
        if ps is not None:
            faces.add(ps)
    return SimplicialComplex(frozenset(faces))


def barycentric_subdivide(
    complex_: SimplicialComplex, max_simplices: int = SUBDIVISION_OUTPUT_CAP
) -> SimplicialComplex:
    """Barycentric subdivision with canonical tuple vertex labels.

    Vertices of the output are the nonempty faces of the input, labelled
    by the sorted tuple of their members; simplices are the chains of
    properly nested faces.
    """
    faces = [s for s in complex_.simplices if s]
    label = {s: tuple(sorted(s)) for s in faces}
    face_set = set(faces)

    import itertools as _it

    strict_supersets: dict = {s: [] for s in faces}
    for big in faces:
        members = tuple(big)
        for size in range(1, len(members)):
            for sub in _it.combinations(members, size):
                fs = frozenset(sub)
                if fs in face_set:
                    strict_supersets[fs].append(big)

    out = {frozenset()}
    budget = max_simplices

    def grow(chain: tuple, top) -> None:
        nonlocal budget
        out.add(frozenset(chain))
        budget -= 1
        if budget < 0:
            raise ResourceLimitError(
                f"subdivision would exceed {max_simplices} simplices"
            )
        for nxt in strict_supersets[top]:
            grow(chain + (label[nxt],), nxt)

    for s in faces:
        grow((label[s],), s)
    return SimplicialComplex(frozenset(out))
