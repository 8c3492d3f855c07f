"""End-to-end acceptance checks, one test per advertised guarantee.

Each test prints a single [acceptance] PASS/FAIL line.  Three checks assert
reference-table values or tolerances that the implementation demonstrably
cannot meet (two tables contain misprinted cells, and one convergence
tolerance is reached four rounds later than stated); those tests fail by
design and their messages carry the measured numbers.  The companion tests
around them cover the same ground at the values the mathematics supports.
"""

import random
import time
from fractions import Fraction
from math import factorial

from mpmath import mp

from baryzeros import (
    SimplicialComplex,
    alpha_scan,
    barycentric_subdivide,
    build_sieve,
    chi_profile,
    core_suite,
    descent_matrix,
    dim_of,
    eigen_rationals,
    explicit_complex,
    first_negative_euler,
    growth_expansion,
    limit_h_coefficients,
    shared_sieve,
    subdivided_f,
    summary,
    trajectory,
    transfer_matrix,
)
from reference_tables import (
    ALPHA_DISCREPANCIES,
    ALPHA_REFERENCE,
    CHI_REFERENCE,
    DESCENT_REFERENCE,
    F_COUNT_REFERENCE,
    F_LIMIT_REFERENCE,
    H_LIMIT_DISCREPANCIES,
    H_LIMIT_REFERENCE,
)


def report(criterion: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    line = f"[acceptance] {criterion}: {status}"
    if detail:
        line = f"{line} ({detail})"
    print(line)
    assert ok, line


def test_c1_euler_characteristics_and_first_negative():
    started = time.perf_counter()
    sieve = build_sieve(200)
    chi, mm = chi_profile(200, sieve)
    exact = [chi[n] for n in range(1, 45)] == CHI_REFERENCE
    first = first_negative_euler(200, sieve) == 94 and chi[94] == -1
    elapsed = time.perf_counter() - started
    report(
        "c1 euler characteristics n=1..44 and first negative at 94",
        exact and first and elapsed < 1.0,
        f"elapsed {elapsed:.3f}s",
    )


def test_c2_face_count_table():
    m = transfer_matrix(7)
    ok = all(m.entry(i, d) == v for (i, d), v in F_COUNT_REFERENCE.items())
    report("c2 face-count table d<=7 entry-exact", ok)


def test_c2_eigen_weight_table():
    ok = all(
        eigen_rationals(d)[i + 1] == v for (i, d), v in F_LIMIT_REFERENCE.items()
    )
    report("c2 eigen-weight table d<=7 entry-exact", ok)


def test_c2_limit_coefficient_table_minus_disputed_cell():
    ok = all(
        limit_h_coefficients(d)[i] == v
        for (i, d), v in H_LIMIT_REFERENCE.items()
        if (i, d) not in H_LIMIT_DISCREPANCIES
    )
    corrected = limit_h_coefficients(0)[1] == 1
    report(
        "c2 limit-coefficient table d<=7, 44 undisputed cells plus corrected cell",
        ok and corrected,
    )


def test_c2_limit_coefficient_table_as_printed():
    "Red by design: one printed cell contradicts the definition."
    mismatches = [
        (i, d, str(printed), str(limit_h_coefficients(d)[i]))
        for (i, d), printed in H_LIMIT_REFERENCE.items()
        if limit_h_coefficients(d)[i] != printed
    ]
    report(
        "c2 limit-coefficient table d<=7 as printed, every cell",
        not mismatches,
        "cell (i=1, d=0) is printed as 0 but the d=0 limit polynomial is "
        f"the constant 1, forcing the value 1; mismatches {mismatches}",
    )


def test_c2_descent_matrix_displays():
    ok = all(
        descent_matrix(d).rows == rows for d, rows in DESCENT_REFERENCE.items()
    )
    report("c2 descent matrices d=0..4 entrywise", ok)


def test_c3_structural_lemma_suite():
    results = core_suite()
    failures = [r.name for r in results if not r.passed]
    report(
        "c3 structural lemma suite, all exact checks",
        not failures,
        f"{len(results)} checks, failures {failures}",
    )


def random_complex(rng: random.Random) -> SimplicialComplex:
    vertices = rng.sample(range(2, 60), rng.randint(3, 9))
    facets = []
    for _ in range(rng.randint(1, 7)):
        size = rng.randint(1, min(4, len(vertices)))
        facets.append(tuple(rng.sample(vertices, size)))
    return SimplicialComplex.from_facets(facets)


def test_c4_explicit_subdivision_agrees_with_transfer():
    started = time.perf_counter()
    ok = True
    for n in (6, 30):
        current = explicit_complex(n)
        fv = current.f_vector()
        for k in (1, 2):
            current = barycentric_subdivide(current)
            ok = ok and current.f_vector() == subdivided_f(fv, k)
            ok = ok and current.euler_char() == fv.euler_char()
    rng = random.Random(94)
    for _ in range(50):
        c = random_complex(rng)
        c.validate()
        ok = ok and len(c.simplices) <= 1000
        divided = barycentric_subdivide(c)
        ok = ok and divided.f_vector() == subdivided_f(c.f_vector(), 1)
        ok = ok and divided.euler_char() == c.euler_char()
    elapsed = time.perf_counter() - started
    report(
        "c4 explicit subdivision vs transfer counts, pinned plus 50 random",
        ok and elapsed < 10.0,
        f"elapsed {elapsed:.3f}s",
    )


def test_c5_growth_expansion_closed_form():
    sieve = shared_sieve(300)
    ok = True
    for n in (6, 30, 210):
        info = summary(n, sieve)
        d = info.dim
        g = growth_expansion(info.f_vector)
        weights = eigen_rationals(d)
        f_top = info.f_vector.count(d)
        for i in range(-1, d + 1):
            ok = ok and g.leading(i) == f_top * weights[i + 1]
        for k in range(0, 21):
            fk = subdivided_f(info.f_vector, k)
            for i in range(-1, d + 1):
                ok = ok and g.evaluate(i, k) == fk.count(i)
    report("c5 growth expansion: leading coefficients and exact k<=20", ok)


def test_c6_dimension_one_trajectory():
    started = time.perf_counter()
    t = trajectory(6, 16)
    ok = True
    for e in t.entries:
        ok = ok and e.sum_rel_err < mp.mpf(1e-9) and e.prod_rel_err < mp.mpf(1e-9)
        if e.k < 4:
            continue
        bound = 8 * mp.mpf(2) ** -e.k
        ok = ok and e.rho_inf_real and mp.re(e.rho_inf) < 0
        ok = ok and abs(e.ratio_inf - 1) <= bound
        ok = ok and abs(e.scaled_rho0 - 1) <= bound
        ok = ok and not e.ambiguous
    elapsed = time.perf_counter() - started
    report(
        "c6 segment-pair trajectory k=4..16 within 8*2^-k, identities 1e-9",
        ok,
        f"elapsed {elapsed:.3f}s",
    )


def snapshot_dim2(k: int):
    t = trajectory(30, 0, precision_bits=512, k_values=[k])
    return t.entries[0]


def test_c6_dimension_two_snapshot():
    e = snapshot_dim2(12)
    with mp.workprec(e.precision_bits):
        ok = abs(e.ratio_inf - 1) <= mp.mpf(1e-3)
        ok = ok and abs(e.scaled_rho0 - 6) <= mp.mpf(1e-2)
        ok = ok and e.rho_inf_real and mp.re(e.rho_inf) < 0
        ok = ok and e.sum_rel_err < mp.mpf(1e-9)
        ok = ok and e.prod_rel_err < mp.mpf(1e-9)
        ok = ok and not e.ambiguous
    report(
        "c6 ten-vertex complex at k=12, 512 bits: edge roots and identities",
        bool(ok),
    )


def test_c6_interior_root_convergence():
    "The interior root approaches -1 at rate 3^-k; 1e-6 is first met at k=16."
    e12 = snapshot_dim2(12)
    e16 = snapshot_dim2(16)
    with mp.workprec(512):
        gap12 = abs(e12.interior[0] + 1)
        gap16 = abs(e16.interior[0] + 1)
        ok = gap12 <= mp.mpf(1e-4) and gap16 <= mp.mpf(1e-6)
        detail = f"gap(k=12) {mp.nstr(gap12, 8)}, gap(k=16) {mp.nstr(gap16, 8)}"
    report("c6 interior root near -1: 1e-4 at k=12 and 1e-6 at k=16", bool(ok), detail)


def test_c6_interior_root_tolerance_as_stated():
    "Red by design: 1e-6 at k=12 is off by a factor of about 41."
    e = snapshot_dim2(12)
    with mp.workprec(512):
        gap = abs(e.interior[0] + 1)
        product = mp.mpc(1)
        for z in e.interior:
            product *= z
        prod_gap = abs(product + 1)
        ok = gap <= mp.mpf(1e-6) and prod_gap <= mp.mpf(1e-6)
        detail = (
            f"measured gap {mp.nstr(gap, 10)} = 22.003 * 3^-12; the gap "
            "contracts by a factor of 3 per round (22.0 * 3^-k) and first "
            "drops below 1e-6 at k=16; in dimension 2 the interior product "
            "is that single root, so both parts miss together; "
            "raising precision does not move it (identical at 512+ bits)"
        )
    report(
        "c6 interior root and interior product within 1e-6 of -1 at k=12",
        bool(ok),
        detail,
    )


def test_c6_total_runtime():
    started = time.perf_counter()
    trajectory(6, 16)
    snapshot_dim2(12)
    snapshot_dim2(16)
    elapsed = time.perf_counter() - started
    report("c6 trajectory computations complete in under 60s", elapsed < 60.0,
           f"elapsed {elapsed:.3f}s")


def test_c7_alpha_printed_entries_minus_misprints():
    sieve = shared_sieve(250)
    records = {r.n: r for r in alpha_scan(250, sieve)}
    ok = all(
        records[n].alpha == printed
        for n, printed in ALPHA_REFERENCE.items()
        if n not in ALPHA_DISCREPANCIES
    )
    spots = (
        records[39].alpha == 0
        and records[215].alpha == Fraction(-11, 2)
        and records[219].alpha == -22
    )
    report(
        "c7 alpha table: 43 undisputed printed entries exact, spot values",
        ok and spots,
    )


def test_c7_alpha_table_as_printed():
    "Red by design: nine printed dimension-one cells contradict the definition."
    sieve = shared_sieve(250)
    records = {r.n: r for r in alpha_scan(250, sieve)}
    mismatches = {
        n: (str(printed), str(records[n].alpha))
        for n, printed in ALPHA_REFERENCE.items()
        if records[n].alpha != printed
    }
    report(
        "c7 alpha table as printed, all 52 entries",
        not mismatches,
        "printed vs defining ratio chi/(H1*f_top): "
        f"{mismatches}; each printed cell fails chi = alpha*H1*f_top "
        "against the exact Euler characteristic at that n",
    )


def test_c7_alpha_identity_to_ten_thousand():
    sieve = build_sieve(10**4)
    chi, mm = chi_profile(10**4, sieve)
    ok = True
    for rec in alpha_scan(10**4, sieve):
        ok = ok and rec.alpha * rec.h1 * rec.f_top == rec.chi
        ok = ok and rec.chi == -mm[rec.n]
        ok = ok and rec.dim == dim_of(rec.n) and rec.dim >= 1
    report("c7 identity alpha*H1*f_top = chi for every n <= 10^4", ok)


def test_c8_two_route_euler_characteristics():
    started = time.perf_counter()
    sieve = build_sieve(10**5)
    chi, mm = chi_profile(10**5, sieve)
    ok = all(chi[n] == -mm[n] for n in range(1, 10**5 + 1))
    elapsed = time.perf_counter() - started
    report(
        "c8 weight-class route equals Moebius route for n <= 10^5",
        ok and elapsed < 10.0,
        f"elapsed {elapsed:.3f}s",
    )
