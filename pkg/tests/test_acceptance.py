"""End-to-end acceptance checks, one test per criterion.

Each test prints a ``criterion N: PASS|FAIL`` line (visible with ``pytest -v -s`` or in
the captured output of a failure) and then asserts the same verdict.
"""
import random
import time
from fractions import Fraction

from k3rm import dickson as dk
from k3rm import isogeny as iso
from k3rm.ellsurf import analyze, family, random_member
from k3rm.ellsurf.families import rm5_section_x
from k3rm.ellsurf.sections import make_section, section_height
from k3rm.exactmath import QQ, UniPoly
from k3rm.exactmath.ffield import make_field
from k3rm.exactmath.linalg import identity, matmul
from k3rm.qform import E8, U, diag, direct_sum, rationally_isometric
from k3rm.rmendo import adjoint_check, anticommuting_involutions_e8, eigenspace_signatures, quad_endo
from k3rm.rmendo.endo import check_involutions, clifford_endo
from k3rm.rmendo.table1 import FIELD_DATA, TABLE_ROWS
from k3rm.rmendo.traceform import assemble_rm_lattice, assembly_matches_expected, certify_table_entry, \
    moduli_dimension, spec_from_data
from k3rm.zeta import cyclotomic_part, derive_algebraic_factor, lift_count, recover_charpoly, \
    splits_in_biquadratic, surface_counts
from k3rm.zeta.charpoly import elementary_from_power_sums, is_reciprocal, poly_from_high, power_sums, \
    roots_on_unit_circle
from k3rm.zeta.counting import CountingError, count_fibre, count_naive

T = UniPoly.gen(QQ)


def verdict(capsys, n, ok, detail=""):
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
    return ok


# 1 ---------------------------------------------------------------------------------------
def test_criterion_1_table_certification(capsys):
    start = time.perf_counter()
    failed = []
    for name in TABLE_ROWS + ("cubic7",):
        cert, _ = certify_table_entry(spec_from_data(name), normalize=True)
        if not cert.overall:
            failed.append((name, cert.failed()))
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed < 5.0
    assert verdict(capsys, 1, ok, f"{len(TABLE_ROWS) + 1} fields, {elapsed:.2f}s, failures {failed}")


# 2 ---------------------------------------------------------------------------------------
def test_criterion_2_rational_isometries(capsys):
    start = time.perf_counter()
    E = E8().rescale(-1)
    checks = {
        "TT": rationally_isometric(direct_sum(U(), U(), E, E, diag(-1)), diag(*([1] * 2 + [-1] * 19))),
        "m4": rationally_isometric(direct_sum(U(), diag(4, -4), E, E), diag(*([1] * 2 + [-1] * 18))),
        "m6": rationally_isometric(direct_sum(diag(4, 4), E, E), diag(*([1] * 2 + [-1] * 16))),
    }
    lattice_time = time.perf_counter() - start
    for name in TABLE_ROWS + ("cubic7",):
        _, used = certify_table_entry(spec_from_data(name), normalize=True)
        checks[f"assemble_{name}"] = assembly_matches_expected(assemble_rm_lattice(used, FIELD_DATA[name]["l"]))
    bad = [k for k, v in checks.items() if not v]
    ok = not bad and lattice_time < 1.0
    assert verdict(capsys, 2, ok, f"{len(checks)} checks, isometries in {lattice_time:.2f}s, failures {bad}")


# 3 ---------------------------------------------------------------------------------------
QUAD_CASES = [(2, 1), (3, 2), (5, 1), (5, 3), (6, 4), (7, 2), (10, 1), (11, 5), (13, Fraction(1, 2)), (2, 7)]


def test_criterion_3_quadratic_rm(capsys):
    bad = []
    for d, r in QUAD_CASES:
        plus = f"+sqrt({d})"
        for shape, want in (("U_pair", (2, 0)), ("E8_pair", (0, 8)), ("full_T", (2, 8))):
            G, M = quad_endo(d, shape, r)
            n = G.dim
            good = matmul(M.matrix, M.matrix) == identity(n, d) and adjoint_check(M, G) \
                and dict(eigenspace_signatures(M, G))[plus] == want
            if shape == "full_T":
                good = good and n == 20
            if not good:
                bad.append((d, r, shape))
    assert verdict(capsys, 3, not bad, f"{len(QUAD_CASES)} (d, r) pairs, failures {bad}")


# 4 ---------------------------------------------------------------------------------------
def test_criterion_4_e8_involutions(capsys):
    gs = anticommuting_involutions_e8()
    ok = len(gs) == 4 and all(check_involutions(gs).values())
    rng = random.Random(4)
    for _ in range(20):
        a = tuple(rng.randint(-20, 20) for _ in range(4))
        M = clifford_endo(a)
        ok = ok and matmul(M, M) == identity(8, sum(x * x for x in a))
    assert verdict(capsys, 4, ok, "4 involutions, 20 random quadruples")


# 5 ---------------------------------------------------------------------------------------
def test_criterion_5_dickson(capsys):
    start = time.perf_counter()
    ok = all(dk.matches_printed(n) for n in dk.PRINTED) and len(dk.PRINTED) == 5
    for n in range(1, 13):
        ok = ok and dk.check_defining_identity(n) and dk.check_scaling(n) and dk.check_parity(n)
    for m, n in ((3, 3), (5, 2), (2, 5)):
        ok = ok and dk.check_composition(m, n)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    assert verdict(capsys, 5, ok, f"{elapsed:.2f}s")


# 6 ---------------------------------------------------------------------------------------
# (fibre at infinity, required type counts, Euler total, Shioda-Tate bound, exact counts?)
FIBRES = {
    "res5": ("IV*", {"IV*": 1}, 12, 8, False),
    "n7": ("III", {"III": 1}, 24, 3, False),
    "n9": ("I0*", {"I0*": 1}, 24, 6, False),
    "n11": ("II", {"II": 1}, 24, 2, False),
    "prop2cm": (None, {"I2": 8, "I1": 8}, 24, 10, True),
    "prop2rm": ("III", {"I2": 6, "III": 2, "I1": 6}, 24, 10, True),
    "prop3cm": (None, {"II": 4, "I3": 4, "I1": 4}, 24, 10, True),
    "prop3rm": ("II", {"II": 4, "I3": 4, "I1": 4}, 24, 10, True),
}
FIXED = {
    "rm5": {"I5": 1, "I1": 1, "III": 2, "I0*": 2},
    "rm7": {"I7": 1, "I1": 1, "II": 2, "I0*": 2},
}


def test_criterion_6_fibre_configurations(capsys):
    bad = []
    for name, (at_inf, want, euler, bound, exact) in FIBRES.items():
        rng = random.Random(6)
        for _ in range(5):
            model, params = random_member(name, rng)
            an = analyze(model)
            inf = an.fibre_at_infinity()
            counts = dict(an.type_counts())
            shape = counts == want if exact else all(counts.get(k) == v for k, v in want.items())
            if not ((inf.type if inf else None) == at_inf and shape and an.euler_total == euler
                    and an.shioda_tate_lower_bound == bound):
                bad.append((name, params, an.summary()))
    for name, want in FIXED.items():
        an = analyze(family(name))
        if not (dict(an.type_counts()) == want and an.euler_total == 24 and an.shioda_tate_lower_bound == 16):
            bad.append((name, an.summary()))
    assert verdict(capsys, 6, not bad, f"{5 * len(FIBRES)} samples + {len(FIXED)} fixed surfaces, failures {bad}")


# 7 ---------------------------------------------------------------------------------------
def test_criterion_7_heights(capsys):
    m = family("res5", [3, 1], [1, 2, 1])
    h_res5 = section_height(m, make_section(m, 0), analyze(m))
    m = family("n7", 1, 2, -1, 1)
    h_n7 = section_height(m, make_section(m, 1), analyze(m))
    m = family("rm5")
    h_rm5 = section_height(m, make_section(m, rm5_section_x()), analyze(m))
    got = (h_res5, h_n7, h_rm5)
    want = (Fraction(2, 3), Fraction(7, 2), Fraction(2))
    detail = ", ".join(f"{n} {g} (want {w})" for n, g, w in zip(("res5", "n7", "rm5"), got, want))
    # known gap: the rm5 section computes to height 4/5 (doubling gives 16/5, consistent)
    assert verdict(capsys, 7, got == want, detail)


# 8 ---------------------------------------------------------------------------------------
def test_criterion_8_isogenies(capsys):
    ok = all(iso.verify_isogeny(deg, iso.isogeny_formula(deg, "derived")) for deg in (2, 3))
    found = {}
    rng = random.Random(8)
    for name in ("prop2cm", "prop2rm", "prop3cm", "prop3rm"):
        model, _ = random_member(name, rng)
        found[name] = iso.selfmap_multiplier_squareclass(model)
    for name in ("rm5", "rm7"):
        found[name] = iso.numeric_multiplier(name).squareclass
    want = {"prop2cm": -2, "prop2rm": 2, "prop3cm": -3, "prop3rm": 3, "rm5": 5, "rm7": 7}
    ok = ok and found == want
    assert verdict(capsys, 8, ok, f"square classes {found}")


# 9 ---------------------------------------------------------------------------------------
PRINTED_A = poly_from_high([1, 0, Fraction(8, 7), 0, Fraction(6, 7), 0, 1, 0, Fraction(6, 7), 0, Fraction(8, 7), 0, 1])
ALG_A = (T - 1) ** 3 * (T + 1) * (T**2 + 1) * (T**4 + 1)
PRINTED_B = poly_from_high([1, 0, -1, 0, 1, 0, Fraction(-7, 5), 0, 1, 0, -1, 0, 1])
ALG_B_PRINTED = (T - 1) ** 6 * (T**2 + T + 1) ** 2
H_RM5 = poly_from_high([1, Fraction(-12, 11), Fraction(18, 11), Fraction(-12, 11), 1])


def _recover(model, p, kmax, alg):
    start = time.perf_counter()
    tab = surface_counts(model, kmax)
    try:
        fd = recover_charpoly(tab, alg)
    except ValueError:
        fd = None
    return fd, time.perf_counter() - start


def test_criterion_9_zeta(capsys):
    lines = []
    # (a)
    m = family("prop3rm", [1, 2], [3, 4, 1]).reduce_mod(7)
    fd, sec = _recover(m, 7, 6, ALG_A)
    ok_a = fd is not None and fd.transcendental_factor == PRINTED_A and fd.picard_upper_bound == 10 and sec < 900
    lines.append(f"(a) {'ok' if ok_a else 'FAIL'} {sec:.1f}s")
    # (b) with the printed algebraic factor, then with the derived one
    m = family("prop3cm", [3, 4, 1], [1, 3]).reduce_mod(5)
    fd, sec = _recover(m, 5, 7, ALG_B_PRINTED)
    ok_b = fd is not None and fd.transcendental_factor == PRINTED_B and fd.picard_upper_bound == 10 and sec < 60
    lines.append(f"(b) {'ok' if ok_b else 'FAIL'} with the printed factor")
    derived = derive_algebraic_factor(analyze(m))
    fd, sec = _recover(m, 5, 7, derived)
    ok_b_derived = fd is not None and fd.transcendental_factor == PRINTED_B and fd.picard_upper_bound == 10
    lines.append(f"(b') {'ok' if ok_b_derived else 'FAIL'} with the derived factor {sec:.1f}s")
    # (c)
    m = family("rm5").reduce_mod(11)
    alg = derive_algebraic_factor(analyze(m), [-1, -1])
    fd, sec = _recover(m, 11, 2, alg)
    ok_c = fd is not None and fd.transcendental_factor == H_RM5 and fd.picard_upper_bound == 18 and sec < 60 \
        and cyclotomic_part(alg)[2] == 18 and splits_in_biquadratic(fd.transcendental_factor, 5, -2)
    lines.append(f"(c) {'ok' if ok_c else 'FAIL'} {sec:.1f}s")
    assert verdict(capsys, 9, ok_a and ok_b and ok_c, "; ".join(lines))


# 10 --------------------------------------------------------------------------------------
def test_criterion_10_property_suites(capsys):
    ok = True
    # Hasse bound on every smooth fibre of a surface over F_7 and F_49
    m = family("prop3rm", [1, 2], [3, 4, 1]).reduce_mod(7)
    for k in (1, 2):
        F = make_field(7, k)
        q = 7**k
        for t0 in F.elements():
            try:
                n = count_fibre(m, t0, F)
            except CountingError:
                continue
            ok = ok and (n - q - 1) ** 2 <= 4 * q
    # lifting recurrence on 100 random curves
    rng = random.Random(10)
    F1, F2 = make_field(11), make_field(11, 2)
    done = 0
    while done < 100:
        a, b = rng.randrange(11), rng.randrange(11)
        if (4 * a**3 + 27 * b**2) % 11 == 0:
            continue
        n = count_naive(F1, F1.convert(a), F1.convert(b))
        ok = ok and lift_count(n, 11, 2) == count_naive(F2, F2.convert(a), F2.convert(b))
        done += 1
    # functional equation and unit circle on a recovered factor
    tab = surface_counts(family("rm5").reduce_mod(11), 2)
    fd = recover_charpoly(tab, derive_algebraic_factor(analyze(family("rm5").reduce_mod(11)), [-1, -1]))
    ok = ok and is_reciprocal(fd.transcendental_factor) == 1 and roots_on_unit_circle(fd.transcendental_factor, 1e-9)
    # Newton round trip on the degree-12 polynomial
    e = elementary_from_power_sums(power_sums(PRINTED_A, 12))
    ok = ok and poly_from_high([(-1) ** i * e[i] for i in range(13)]) == PRINTED_A
    # moduli dimensions
    ok = ok and (moduli_dimension(20, 2, "RM"), moduli_dimension(12, 3, "RM"), moduli_dimension(21, 3, "RM")) \
        == (8, 2, 5)
    assert verdict(capsys, 10, ok, "Hasse, lifting x100, functional equation, Newton, moduli dimensions")
