"""Executable invariant suites behind the command line ``verify``.

Each suite returns a list of CheckResult records; nothing in here
asserts, so the CLI and the test suite can render or aggregate the
outcomes as they see fit.  Comparisons are exact rational arithmetic
except where a numeric tolerance is the very thing under test, and every
randomized check runs from a fixed seed, so the suites are
deterministic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .complexes import (
    SimplicialComplex,
    barycentric_subdivide,
    chi_profile,
    explicit_complex,
    first_negative_euler,
    shared_sieve,
    summary,
)
from .dynamics import alpha_scan, growth_expansion, subdivided_f, trajectory
from .subdivision import (
    descent_matrix,
    descent_matrix_bruteforce,
    det_sign_check,
    eigen_rationals,
    eigen_rationals_direct,
    identity_matrix,
    limit_h_coefficients,
    shift_matrix,
    shift_matrix_inverse,
    subdivision_count,
    subdivision_count_recurrence,
    transfer_matrix,
)

DEFAULT_SEED = 94
CORE_MAX_DIM = 10
EXACT_TABLE_MAX_DIM = 12
CHAIN_FORMULA_MAX_DIM = 8
BRUTE_DESCENT_MAX_DIM = 5
MERTENS_LIMIT = 100_000
FIRST_NEGATIVE = 94
RANDOM_COMPLEX_INSTANCES = 50
DET_SIGN_INSTANCES = 100
ALPHA_IDENTITY_LIMIT = 10_000
GROWTH_DEPTH = 20


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named invariant check."""

    name: str
    passed: bool
    detail: str = ""


def _verdict(name: str, failures: list[str], scope: str) -> CheckResult:
    if failures:
        head = failures[0]
        if len(failures) > 1:
            head += f" (+{len(failures) - 1} more)"
        return CheckResult(name, False, head)
    return CheckResult(name, True, scope)


# ---------------------------------------------------------------------------
# core: exact counting identities


def _check_count_routes() -> CheckResult:
    bad = [
        f"(i={i}, d={d}): {subdivision_count(i, d)} != "
        f"{subdivision_count_recurrence(i, d)}"
        for d in range(-1, EXACT_TABLE_MAX_DIM + 1)
        for i in range(-1, d + 1)
        if subdivision_count(i, d) != subdivision_count_recurrence(i, d)
    ]
    return _verdict(
        "count-closed-form-vs-recurrence",
        bad,
        f"all pairs -1 <= i <= d <= {EXACT_TABLE_MAX_DIM}",
    )


def _check_transfer_structure() -> CheckResult:
    bad = []
    for d in range(-1, CORE_MAX_DIM + 1):
        m = transfer_matrix(d)
        for i in range(-1, d + 1):
            if m.entry(i, i) != math.factorial(i + 1):
                bad.append(f"diagonal (i={i}, d={d})")
            for j in range(-1, i):
                if m.entry(i, j) != 0:
                    bad.append(f"lower entry (i={i}, j={j}, d={d})")
    return _verdict(
        "transfer-upper-triangular-factorial-diagonal",
        bad,
        f"d <= {CORE_MAX_DIM}",
    )


def _check_transfer_eigenvector() -> CheckResult:
    bad = []
    for d in range(0, CORE_MAX_DIM + 1):
        vec = eigen_rationals(d)
        scaled = tuple(math.factorial(d + 1) * x for x in vec)
        if transfer_matrix(d).apply(vec) != scaled:
            bad.append(f"d={d}")
    return _verdict("transfer-eigenvector", bad, f"d <= {CORE_MAX_DIM}, exact")


def _check_chain_formula() -> CheckResult:
    bad = []
    for d in range(1, CHAIN_FORMULA_MAX_DIM + 1):
        vec = eigen_rationals(d)
        for i in range(0, d):
            if eigen_rationals_direct(d, i) != vec[i + 1]:
                bad.append(f"(i={i}, d={d})")
    return _verdict(
        "eigen-chain-sum-formula", bad, f"0 <= i < d <= {CHAIN_FORMULA_MAX_DIM}"
    )


def _check_shift_inverse() -> CheckResult:
    bad = []
    for d in range(0, CORE_MAX_DIM + 1):
        ident = identity_matrix(d)
        s = shift_matrix(d)
        s_inv = shift_matrix_inverse(d)
        if s @ s_inv != ident or s_inv @ s != ident:
            bad.append(f"d={d}")
    return _verdict("shift-matrix-inverse", bad, f"d <= {CORE_MAX_DIM}, both orders")


def _check_similarity() -> CheckResult:
    bad = []
    for d in range(0, CORE_MAX_DIM + 1):
        conjugated = shift_matrix(d) @ transfer_matrix(d) @ shift_matrix_inverse(d)
        if conjugated != descent_matrix(d):
            bad.append(f"d={d}")
    return _verdict(
        "transfer-descent-similarity", bad, f"d <= {CORE_MAX_DIM}, exact"
    )


def _check_descent_bruteforce() -> CheckResult:
    bad = [
        f"d={d}"
        for d in range(0, BRUTE_DESCENT_MAX_DIM + 1)
        if descent_matrix_bruteforce(d) != descent_matrix(d)
    ]
    return _verdict(
        "descent-recurrence-vs-enumeration",
        bad,
        f"d <= {BRUTE_DESCENT_MAX_DIM}, full permutation counts",
    )


def _check_descent_rotation() -> CheckResult:
    bad = []
    for d in range(0, CORE_MAX_DIM + 1):
        m = descent_matrix(d)
        for i in range(-1, d + 1):
            for j in range(-1, d + 1):
                if m.entry(i, j) != m.entry(d - 1 - i, d - 1 - j):
                    bad.append(f"(i={i}, j={j}, d={d})")
    return _verdict("descent-rotational-symmetry", bad, f"d <= {CORE_MAX_DIM}")


def _check_descent_two_powers() -> CheckResult:
    bad = []
    for d in range(0, CORE_MAX_DIM + 1):
        m = descent_matrix(d)
        for j in range(0, d + 1):
            if m.entry(0, j) != 2 ** (d - j):
                bad.append(f"(j={j}, d={d})")
    return _verdict("descent-first-row-two-powers", bad, f"d <= {CORE_MAX_DIM}")


def _check_descent_monotone_chain() -> CheckResult:
    bad = []
    for d in range(1, CORE_MAX_DIM + 1):
        m = descent_matrix(d)
        i_max = (d - 1) // 2
        stop = -1 if d % 2 == 0 else (d - 1) // 2
        seq = []
        for i in range(0, i_max + 1):
            last = stop if i == i_max else -1
            for j in range(d, last - 1, -1):
                seq.append(m.entry(i, j))
        for pos, (a, b) in enumerate(zip(seq, seq[1:])):
            if a > b:
                bad.append(f"d={d}, position {pos}: {a} > {b}")
    return _verdict(
        "descent-monotone-chain",
        bad,
        f"snake through the upper half, 1 <= d <= {CORE_MAX_DIM}",
    )


def _check_limit_h_structure() -> CheckResult:
    bad = []
    for d in range(1, EXACT_TABLE_MAX_DIM + 1):
        coeffs = limit_h_coefficients(d)
        if len(coeffs) != d + 2:
            bad.append(f"d={d}: wrong length")
            continue
        if coeffs[0] != 0 or coeffs[d + 1] != 0:
            bad.append(f"d={d}: nonzero end coefficient")
        if any(coeffs[i] <= 0 for i in range(1, d + 1)):
            bad.append(f"d={d}: interior coefficient not positive")
        if sum(coeffs) != 1:
            bad.append(f"d={d}: coefficient sum {sum(coeffs)} != 1")
        if any(coeffs[i] != coeffs[d + 1 - i] for i in range(0, d + 2)):
            bad.append(f"d={d}: not palindromic")
        if coeffs[1] != eigen_rationals(d)[1]:
            bad.append(f"d={d}: linear coefficient mismatch")
    return _verdict(
        "limit-h-structure",
        bad,
        f"ends zero, positive interior, sum 1, palindrome, 1 <= d <= "
        f"{EXACT_TABLE_MAX_DIM}",
    )


def _check_limit_h_eigenvector() -> CheckResult:
    bad = []
    for d in range(0, CORE_MAX_DIM + 1):
        coeffs = limit_h_coefficients(d)
        scaled = tuple(math.factorial(d + 1) * c for c in coeffs)
        if descent_matrix(d).apply(coeffs) != scaled:
            bad.append(f"d={d}")
    return _verdict("descent-eigenvector", bad, f"d <= {CORE_MAX_DIM}, exact")


def _check_limit_h_first_bounds() -> CheckResult:
    bad = []
    for d in range(1, EXACT_TABLE_MAX_DIM + 1):
        h1 = limit_h_coefficients(d)[1]
        fac = math.factorial(d + 1)
        if h1 > Fraction(2 ** (d + 1), fac):
            bad.append(f"d={d}: upper bound")
        if h1 * h1 < Fraction(2**d, (fac * d) ** 2):
            bad.append(f"d={d}: lower bound")
    return _verdict(
        "limit-h-linear-coefficient-bounds",
        bad,
        f"exact rational comparison, 1 <= d <= {EXACT_TABLE_MAX_DIM}",
    )


def _random_sign_matrix(rng: random.Random, n: int, replace_one: bool, integral: bool):
    def positive():
        if integral:
            return rng.randint(1, 12)
        return Fraction(rng.randint(1, 12), rng.randint(1, 4))

    columns = []
    for j in range(n):
        entries = [positive() for _ in range(n)]
        off_sum = sum(entries[i] for i in range(n) if i != j)
        entries[j] = -(off_sum + positive())
        columns.append(entries)
    if replace_one:
        j = rng.randrange(n)
        columns[j] = [-positive() for _ in range(n)]
    return [[columns[j][i] for j in range(n)] for i in range(n)]


def _check_det_sign_random() -> CheckResult:
    rng = random.Random(DEFAULT_SEED)
    bad = []
    for idx in range(DET_SIGN_INSTANCES):
        n = 1 + idx % 8
        rows = _random_sign_matrix(rng, n, idx % 2 == 1, idx % 3 == 0)
        expected = -1 if n % 2 else 1
        got = det_sign_check(rows)
        if got != expected:
            bad.append(f"instance {idx} (n={n}): sign {got} != {expected}")
    return _verdict(
        "determinant-sign-random",
        bad,
        f"{DET_SIGN_INSTANCES} seeded instances, sizes 1..8, "
        "with and without a replaced column",
    )


def core_suite() -> list[CheckResult]:
    """Exact identities of the counting tables, matrices and limits."""
    return [
        _check_count_routes(),
        _check_transfer_structure(),
        _check_transfer_eigenvector(),
        _check_chain_formula(),
        _check_shift_inverse(),
        _check_similarity(),
        _check_descent_bruteforce(),
        _check_descent_rotation(),
        _check_descent_two_powers(),
        _check_descent_monotone_chain(),
        _check_limit_h_structure(),
        _check_limit_h_eigenvector(),
        _check_limit_h_first_bounds(),
        _check_det_sign_random(),
    ]


# ---------------------------------------------------------------------------
# complex: sieve versus explicit geometry


def _check_euler_vs_mertens(limit: int) -> CheckResult:
    chi, mm = chi_profile(limit)
    bad = [
        f"n={n}: chi {chi[n]} != -M {mm[n]}"
        for n in range(1, limit + 1)
        if chi[n] != -mm[n]
    ]
    return _verdict(
        "euler-equals-minus-mertens", bad, f"two routes agree for n <= {limit}"
    )


def _check_first_negative() -> CheckResult:
    found = first_negative_euler(200)
    chi, _ = chi_profile(200)
    bad = []
    if found != FIRST_NEGATIVE:
        bad.append(f"first negative at {found}, expected {FIRST_NEGATIVE}")
    elif chi[found] != -1:
        bad.append(f"chi({found}) = {chi[found]}, expected -1")
    return _verdict(
        "first-negative-euler", bad, f"n = {FIRST_NEGATIVE} with value -1"
    )


def _check_explicit_f_vectors() -> CheckResult:
    bad = []
    for n in (6, 30, 94, 210):
        cx = explicit_complex(n)
        cx.validate()
        info = summary(n)
        if cx.f_vector() != info.f_vector:
            bad.append(f"n={n}: f-vector mismatch")
        elif cx.euler_char() != info.euler_char:
            bad.append(f"n={n}: Euler characteristic mismatch")
    return _verdict(
        "explicit-complex-face-counts", bad, "n in (6, 30, 94, 210), validated"
    )


def _check_explicit_subdivision() -> CheckResult:
    bad = []
    for n in (6, 30):
        base = explicit_complex(n)
        fv = base.f_vector()
        current = base
        for k in (1, 2):
            current = barycentric_subdivide(current)
            current.validate()
            expected = subdivided_f(fv, k)
            if current.f_vector() != expected:
                bad.append(f"n={n}, k={k}: f-vector mismatch")
            if current.dim != base.dim:
                bad.append(f"n={n}, k={k}: dimension changed")
            if current.euler_char() != base.euler_char():
                bad.append(f"n={n}, k={k}: Euler characteristic changed")
    return _verdict(
        "explicit-subdivision-vs-transfer", bad, "n in (6, 30), k <= 2, exact"
    )


def _random_complex(rng: random.Random) -> SimplicialComplex:
    vertex_count = rng.randint(3, 9)
    labels = rng.sample(range(2, 60), vertex_count)
    facets = []
    for _ in range(rng.randint(1, 7)):
        size = rng.randint(1, min(4, vertex_count))
        facets.append(frozenset(rng.sample(labels, size)))
    return SimplicialComplex.from_facets(facets)


def _check_random_subdivision_invariance() -> CheckResult:
    rng = random.Random(DEFAULT_SEED)
    bad = []
    for idx in range(RANDOM_COMPLEX_INSTANCES):
        cx = _random_complex(rng)
        cx.validate()
        if len(cx.simplices) > 1000:
            bad.append(f"instance {idx}: generator exceeded 1000 simplices")
            continue
        fv = cx.f_vector()
        sub = barycentric_subdivide(cx)
        sub.validate()
        if sub.dim != cx.dim:
            bad.append(f"instance {idx}: dimension changed")
        if sub.euler_char() != cx.euler_char():
            bad.append(f"instance {idx}: Euler characteristic changed")
        if sub.f_vector().counts != transfer_matrix(cx.dim).apply(fv.counts):
            bad.append(f"instance {idx}: f-vector != transfer matrix product")
    return _verdict(
        "random-subdivision-invariance",
        bad,
        f"{RANDOM_COMPLEX_INSTANCES} seeded complexes, <= 1000 simplices each",
    )


def complex_suite(mertens_limit: int = MERTENS_LIMIT) -> list[CheckResult]:
    """Sieve identities and explicit subdivision geometry."""
    return [
        _check_euler_vs_mertens(mertens_limit),
        _check_first_negative(),
        _check_explicit_f_vectors(),
        _check_explicit_subdivision(),
        _check_random_subdivision_invariance(),
    ]


# ---------------------------------------------------------------------------
# zeros: growth expansion and root trajectories


def _check_growth_expansion() -> CheckResult:
    bad = []
    for n in (6, 30, 210):
        fv = summary(n).f_vector
        d = fv.dim
        expansion = growth_expansion(fv)
        vec = eigen_rationals(d)
        f_top = fv.count(d)
        for i in range(-1, d + 1):
            if expansion.leading(i) != f_top * vec[i + 1]:
                bad.append(f"n={n}, i={i}: leading coefficient mismatch")
            for j in range(d - i + 1, d + 1):
                if expansion.coefficients[j][i + 1] != 0:
                    bad.append(f"n={n}, i={i}, j={j}: expected zero coefficient")
        for k in range(0, GROWTH_DEPTH + 1):
            exact = subdivided_f(fv, k)
            for i in range(-1, d + 1):
                if expansion.evaluate(i, k) != exact.count(i):
                    bad.append(f"n={n}, k={k}, i={i}: closed form mismatch")
    return _verdict(
        "growth-expansion-exact",
        bad,
        f"n in (6, 30, 210), every k <= {GROWTH_DEPTH}, exact",
    )


def _check_trajectory_dim1() -> CheckResult:
    bad = []
    run = trajectory(6, 16)
    for entry in run.entries:
        k = entry.k
        if entry.sum_rel_err > 1e-9 or entry.prod_rel_err > 1e-9:
            bad.append(f"k={k}: coefficient identity error above 1e-9")
        if k < 4:
            continue
        tol = 8 * mp.mpf(2) ** (-k)
        if abs(entry.ratio_inf - 1) > tol:
            bad.append(f"k={k}: largest-root ratio off by {abs(entry.ratio_inf - 1)}")
        if abs(entry.scaled_rho0 - 1) > tol:
            bad.append(f"k={k}: scaled smallest root off by {abs(entry.scaled_rho0 - 1)}")
        if not entry.rho_inf_real:
            bad.append(f"k={k}: largest root not certified real")
        if not mp.re(entry.rho_inf) < 0:
            bad.append(f"k={k}: largest root not negative")
        if entry.ambiguous:
            bad.append(f"k={k}: extreme roots flagged ambiguous")
    return _verdict(
        "trajectory-dim1-convergence",
        bad,
        "n=6, k <= 16, geometric error bound 8/2^k from k=4",
    )


def _check_trajectory_dim2() -> CheckResult:
    bad = []
    run = trajectory(30, 12, precision_bits=512, k_values=[12])
    entry = run.entries[0]
    if abs(entry.ratio_inf - 1) > 1e-3:
        bad.append(f"largest-root ratio off by {abs(entry.ratio_inf - 1)}")
    if abs(entry.scaled_rho0 - 6) > 1e-2:
        bad.append(f"scaled smallest root off by {abs(entry.scaled_rho0 - 6)}")
    if len(entry.interior) != 1:
        bad.append(f"expected one interior root, got {len(entry.interior)}")
    else:
        gap = abs(entry.interior[0] + 1)
        if gap > 1e-4:
            bad.append(f"interior root {gap} away from -1")
        product = mp.mpc(1)
        for z in entry.interior:
            product *= z
        if abs(product + 1) > 1e-4:
            bad.append(f"interior product {abs(product + 1)} away from -1")
    if not entry.rho_inf_real:
        bad.append("largest root not certified real")
    if not mp.re(entry.rho_inf) < 0:
        bad.append("largest root not negative")
    if entry.sum_rel_err > 1e-9 or entry.prod_rel_err > 1e-9:
        bad.append("coefficient identity error above 1e-9")
    if entry.ambiguous:
        bad.append("extreme roots flagged ambiguous")
    return _verdict(
        "trajectory-dim2-snapshot",
        bad,
        "n=30, k=12 at 512 bits, interior root within 1e-4 of -1",
    )


def _check_trajectory_dim2_deeper() -> CheckResult:
    bad = []
    run = trajectory(30, 16, precision_bits=512, k_values=[16])
    entry = run.entries[0]
    gap = abs(entry.interior[0] + 1)
    if gap > 1e-6:
        bad.append(f"interior root still {gap} away from -1 at k=16")
    return _verdict(
        "trajectory-dim2-interior-deep",
        bad,
        "n=30, k=16 at 512 bits, interior root within 1e-6 of -1",
    )


def _check_alpha_identity() -> CheckResult:
    sieve = shared_sieve(ALPHA_IDENTITY_LIMIT)
    records = alpha_scan(ALPHA_IDENTITY_LIMIT, sieve)
    bad = []
    for rec in records:
        if rec.alpha * rec.h1 * rec.f_top != rec.chi:
            bad.append(f"n={rec.n}: defining identity broken")
        elif rec.chi != -sieve.mertens(rec.n):
            bad.append(f"n={rec.n}: Euler characteristic disagrees with sieve")
    spot = {6: Fraction(1), 30: Fraction(6)}
    by_n = {rec.n: rec.alpha for rec in records}
    for n, expected in spot.items():
        if by_n.get(n) != expected:
            bad.append(f"n={n}: alpha {by_n.get(n)} != {expected}")
    return _verdict(
        "alpha-defining-identity",
        bad,
        f"all n <= {ALPHA_IDENTITY_LIMIT} with dimension >= 1, exact",
    )


def zeros_suite() -> list[CheckResult]:
    """Growth closed form, root trajectories and scaling limits."""
    return [
        _check_growth_expansion(),
        _check_trajectory_dim1(),
        _check_trajectory_dim2(),
        _check_trajectory_dim2_deeper(),
        _check_alpha_identity(),
    ]


SUITES = {
    "core": core_suite,
    "complex": complex_suite,
    "zeros": zeros_suite,
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one named suite, or all of them in order."""
    if name == "all":
        results: list[CheckResult] = []
        for key in ("core", "complex", "zeros"):
            results.extend(SUITES[key]())
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; pick all, core, complex or zeros")
    return SUITES[name]()
