import io
import random
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from k3rm.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, run
from k3rm.cli.formats import ParseError, parse_field_spec, parse_lattice, parse_list, parse_surface, print_surface
from k3rm.ellsurf import WeierstrassModel, family
from k3rm.exactmath import GF, QQ, UniPoly
from k3rm.qform import U, diag, direct_sum

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(text):
    return dict(line.split(": ", 1) for line in text.splitlines())


# formats --------------------------------------------------------------------------------------
def test_parse_list():
    assert parse_list("[1, -2/3, 0]") == [1, Fraction(-2, 3), 0]
    assert parse_list("[]") == []
    with pytest.raises(ParseError):
        parse_list("1, 2")
    with pytest.raises(ParseError):
        parse_list("[1.5]")


def _random_model(rng):
    R = rng.choice([QQ, GF(7), GF(11)])
    form = rng.choice(["short", "two_torsion", "three_isog"])
    while True:
        def rc():
            if R == QQ:
                return Fraction(rng.randint(-20, 20), rng.randint(1, 6))
            return rng.randrange(R.p)
        c1 = UniPoly([rc() for _ in range(rng.randint(0, 5))], R)
        c2 = UniPoly([rc() for _ in range(rng.randint(1, 7))], R)
        try:
            return WeierstrassModel(c1, c2, form)
        except ValueError:
            continue


@pytest.mark.parametrize("seed", range(100))
def test_round_trip(seed):
    m = _random_model(random.Random(seed))
    text = print_surface(m)
    back = parse_surface(text)
    assert (back.c1, back.c2, back.form, back.ring) == (m.c1, m.c2, m.form, m.ring)
    assert print_surface(back) == text


def test_family_shorthand():
    m = parse_surface("family = rm5\n")
    assert (m.A, m.B) == (family("rm5").A, family("rm5").B)
    m = parse_surface((DATA / "surfaces" / "prop3rm.surf").read_text())
    assert (m.c1, m.c2) == (family("prop3rm", [1, 2], [3, 4, 1]).c1, family("prop3rm", [1, 2], [3, 4, 1]).c2)


def test_explicit_short():
    m = parse_surface("base = Q\nform = short\nA = [3, 1]\nB = [4, 4, 1]\n")
    assert m.form == "short" and m.A == UniPoly([3, 1], QQ)


@pytest.mark.parametrize("text", [
    "base = Fp:7\nA = [1/7, 1]\nB = [1]\n",
    "base = Q\nA = [1]\nB = [1]\nC = [2]\n",
    "A = [1]\nA = [2]\nB = [1]\n",
    "form = short\nA = [1, x]\nB = [1]\n",
    "base = Fp:8\nA = [1]\nB = [1]\n",
    "form = twotorsion\nA = [1]\nb = [1]\n",
    "A = [1]\n",
    "just some words\n",
    "family = nosuch\n",
    "family = res5\nparams = a1=[1,2,3], a2=[1]\n",
])
def test_bad_surfaces(text):
    with pytest.raises(ParseError):
        parse_surface(text)


def test_parse_error_location():
    with pytest.raises(ParseError) as ei:
        parse_surface("base = Q\nA = [1]\nB = [1, q]\n")
    assert ei.value.line == 3


def test_field_spec_file():
    spec = parse_field_spec((DATA / "fields" / "g7.field").read_text())
    assert spec["delta"][1] == 7 and spec["l"] == 3
    with pytest.raises(ParseError):
        parse_field_spec("f = [1, 2]\ndelta = [1]\nudelta = [1]\n")  # not monic


def test_lattice_expressions():
    assert parse_lattice("U+<1>") == direct_sum(U(), diag(1))
    assert parse_lattice("<1>^2+<-1>").dim == 3
    assert parse_lattice("E8(-1)^2").dim == 16
    with pytest.raises(ParseError):
        parse_lattice("Q7")


# exit codes ------------------------------------------------------------------------------------
def test_exit_matrix(tmp_path):
    bad = tmp_path / "bad.surf"
    bad.write_text("base = Fp:7\nA = [1/7]\nB = [1]\n")
    s = lambda n: str(DATA / "surfaces" / n)  # noqa: E731
    cases = [
        (("dickson", "--n", "5"), EXIT_OK),
        (("dickson", "--n", "9", "--compose", "3"), EXIT_OK),
        (("lattice", "reproduce"), EXIT_OK),
        (("lattice", "compare", "U", "<1>+<-1>"), EXIT_OK),
        (("lattice", "compare", "U", "<1>+<1>"), EXIT_FAIL),
        (("lattice", "compare", "U"), EXIT_INPUT),
        (("rm", "certify-table1", "--field", "f6"), EXIT_OK),
        (("rm", "certify-table1", "--field", "g4", "--literal"), EXIT_FAIL),
        (("rm", "certify-table1", "--file", str(DATA / "fields" / "g7.field")), EXIT_OK),
        (("rm", "certify-table1", "--field", "nosuch"), EXIT_INPUT),
        (("rm", "assemble", "--field", "cubic7", "--l", "7"), EXIT_OK),
        (("rm", "quad", "--d", "5", "--r", "3"), EXIT_OK),
        (("rm", "quad", "--d", "2", "--shape", "E8_swap"), EXIT_FAIL),
        (("surface", "analyze", s("res5.surf"), "--section-x", "[5]"), EXIT_FAIL),
        (("surface", "analyze", s("rm5.surf")), EXIT_OK),
        (("surface", "print", s("rm7.surf")), EXIT_OK),
        (("surface", "analyze", str(bad)), EXIT_INPUT),
        (("surface", "analyze", str(tmp_path / "missing.surf")), EXIT_INPUT),
        (("isogeny", "verify"), EXIT_OK),
        (("isogeny", "verify", "--degree", "3", "--variant", "printed"), EXIT_FAIL),
        (("isogeny", "multiplier", "--family", "prop2cm", "--seed", "3"), EXIT_OK),
        (("isogeny", "multiplier", "--family", "n7"), EXIT_INPUT),
        (("zeta", "--p", "11", "--kmax", "2", "--section-class", "-1", "--section-class", "-1", s("rm5.surf")),
         EXIT_OK),
        (("zeta", "--p", "3", "--kmax", "2", s("rm5.surf")), EXIT_INPUT),
        (("nosuch",), EXIT_INPUT),
        (("dickson",), EXIT_INPUT),
    ]
    for argv, want in cases:
        code, out, err = call(*argv)
        assert code == want, (argv, code, out, err)
        if want == EXIT_INPUT:
            assert err
        else:
            assert out.startswith("command: ")


def test_res5_constant_section_height():
    code, out, _ = call("surface", "analyze", str(DATA / "surfaces" / "res5.surf"), "--section-x", "[0]")
    r = report(out)
    assert code == 0 and r["height"] == "2/3"


def test_zeta_printed_example():
    T = UniPoly.gen(QQ)
    f = (T - 1) ** 3 * (T + 1) * (T**2 + 1) * (T**4 + 1)
    alg = "[" + ", ".join(str(int(c)) for c in f.coeffs) + "]"
    code, out, _ = call("zeta", "--p", "7", "--kmax", "6", "--alg-factor", alg,
                        str(DATA / "surfaces" / "prop3rm.surf"))
    r = report(out)
    assert code == 0
    assert r["transcendental_factor"] == "[1, 0, 8/7, 0, 6/7, 0, 1, 0, 6/7, 0, 8/7, 0, 1]"
    assert r["picard_upper_bound"] == "10"


def test_dickson_lowest_first():
    _, out, _ = call("dickson", "--n", "3", "--a", "2")
    r = report(out)
    assert r["polynomial"] == "[0, -6, 0, 1]"
    assert r["coefficients"] == "[0, -3a, 0, 1]"


# determinism -------------------------------------------------------------------------------------
@pytest.mark.parametrize("argv", [
    ("isogeny", "multiplier", "--seed", "5"),
    ("surface", "analyze", str(DATA / "surfaces" / "prop3cm.surf")),
    ("rm", "certify-table1"),
])
def test_byte_identical(argv):
    assert call(*argv) == call(*argv)


def test_workers_do_not_change_output():
    base = ("zeta", "--p", "7", "--kmax", "3", "--alg-factor", "[1]", str(DATA / "surfaces" / "prop3rm.surf"))
    a = call(*base)
    b = call(*base, "--workers", "2")
    assert a[1] == b[1]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "k3rm.cli", "dickson", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "check.matches_printed: PASS" in proc.stdout
