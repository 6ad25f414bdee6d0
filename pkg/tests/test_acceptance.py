"""Acceptance suite: one test per criterion, exact comparisons throughout.

Every criterion is a zero-tolerance check; each test prints a single
PASS line once its assertions hold (visible with `pytest -s` or -rA).
"""
from __future__ import annotations

from fractions import Fraction
from importlib import resources

from click.testing import CliRunner

from helpers import fibonacci_numbers, lucas_numbers
from lucaskit import idexpr
from lucaskit.cli import main as cli_main
from lucaskit.extring import ExtElem, ZERO_EXT
from lucaskit.identities import (
    check_ex1,
    check_ex2,
    check_ex3,
    check_ex5a,
    check_ex6a,
    verify_range,
)
from lucaskit.lucascore import (
    SequenceKind,
    binet_check,
    compose_fib,
    compose_luc,
    fib,
    fib_fast,
    fib_value,
    luc,
    luc_fast,
    luc_value,
)
from lucaskit.ratpoly import ONE, RatPoly, X, Y, ZERO
from lucaskit.series import gf_fib, gf_luc

EX_CHECKS = ("ex1", "ex2", "ex3", "ex4", "ex5a", "ex5b", "ex6a", "ex6b")


def _report(criterion: int, label: str) -> None:
    print(f"ACCEPTANCE {criterion} ({label}): PASS")


def test_criterion_1_identity_suite():
    for name in EX_CHECKS:
        reports = verify_range(name, 64)
        for r in reports:
            assert r.passed, f"{name} failed at n={r.n}"
        expected_first = 1 if name in ("ex1", "ex6b") else 0
        assert reports[0].n == expected_first
        assert reports[-1].n == 64
    _report(1, "identity suite exact for all admissible n <= 64")


def test_criterion_2_binet_cross_check():
    for n in range(65):
        assert binet_check(SequenceKind.FIB, n), f"FIB Binet failed at n={n}"
        assert binet_check(SequenceKind.LUC, n), f"LUC Binet failed at n={n}"
    _report(2, "extension-ring Binet forms match for all n <= 64")


def test_criterion_3_generating_functions():
    gfib, gluc = gf_fib(128), gf_luc(128)
    for n in range(129):
        assert gfib.coeff(n) == fib(n), f"gf_fib coefficient t^{n}"
        assert gluc.coeff(n) == luc(n), f"gf_luc coefficient t^{n}"
    _report(3, "generating-function coefficients equal recurrence polynomials to order 128")


def test_criterion_4_composition_identities():
    for n in range(9):
        for k in range(1, 9):
            assert compose_fib(n, k).passed, f"fib composition failed at ({n},{k})"
            assert compose_luc(n, k).passed, f"luc composition failed at ({n},{k})"
    _report(4, "composition identities exact on the (n, k) <= (8, 8) grid")


def test_criterion_5_numeric_reductions():
    fibs = fibonacci_numbers(6 * 22 + 1)
    lucs = lucas_numbers(6 * 22 + 1)
    checks = {
        "ex1": (check_ex1, 1),
        "ex2": (check_ex2, 0),
        "ex3": (check_ex3, 0),
        "ex5a": (check_ex5a, 0),
        "ex6a": (check_ex6a, 0),
    }

    def expected(name: str, n: int, k: int) -> Fraction:
        if name == "ex1":
            return Fraction(lucs[k * n])
        if name == "ex2":
            return Fraction(2 ** n, n + 1) * Fraction(fibs[k * (n + 1)], fibs[k])
        if name == "ex3":
            return Fraction(2 ** (n + 1) * lucs[k * (n + 1)] - 2 * lucs[k] ** (n + 1))
        if name == "ex5a":
            return Fraction(2) ** (n - 1) * lucs[k * n]
        return Fraction(2) ** (n - 1) * Fraction(fibs[k * n], fibs[k])

    for name, (check, n_min) in checks.items():
        for n in range(n_min, 21):
            r = check(n)
            for k in range(1, 7):
                x0, y0 = lucs[k], (-1) ** (k + 1)
                lhs_val, rhs_val = r.lhs.eval_at(x0, y0), r.rhs.eval_at(x0, y0)
                assert lhs_val == rhs_val, f"{name} reduction at n={n}, k={k}"
                assert rhs_val == expected(name, n, k), f"{name} oracle at n={n}, k={k}"
    _report(5, "numeric reductions match integer recurrences for k <= 6, n <= 20")


def test_criterion_6_known_sequences():
    runner = CliRunner()
    cases = {
        ("fib", 10): [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55],
        ("luc", 10): [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123],
        ("pell", 8): [0, 1, 2, 5, 12, 29, 70, 169, 408],
    }
    for (kind, n_max), expected in cases.items():
        result = runner.invoke(
            cli_main, ["numbers", "--kind", kind, "--n-max", str(n_max)]
        )
        assert result.exit_code == 0
        assert [int(v) for v in result.output.split()] == expected, kind
    _report(6, "numbers command reproduces Fibonacci, Lucas and Pell sequences")


def test_criterion_7_oracle_equivalence():
    for n in range(65):
        assert fib_fast(n) == fib(n), f"fib_fast mismatch at n={n}"
        assert luc_fast(n) == luc(n), f"luc_fast mismatch at n={n}"
    # numeric route at (1,1): the doubling scheme against the plain
    # integer recurrence, arbitrary precision throughout
    fibs = fibonacci_numbers(2002)
    lucs = lucas_numbers(2002)
    for n in range(2001):
        assert fib_value(n, 1, 1) == fibs[n], f"fib value mismatch at n={n}"
        assert luc_value(n, 1, 1) == lucs[n], f"luc value mismatch at n={n}"
    # the specialized doubling agrees with evaluating the full polynomial
    for n in (0, 1, 2, 31, 64, 128, 256, 512):
        assert fib_fast(n).eval_at(1, 1) == fib_value(n, 1, 1)
        assert luc_fast(n).eval_at(1, 1) == luc_value(n, 1, 1)
    assert fibs[2000] > 10 ** 400  # genuinely arbitrary-precision territory
    _report(7, "fast doubling equals recurrence symbolically (n<=64) and numerically (n<=2000)")


def test_criterion_8_dsl_equivalence():
    # built-in checks vs bundled declarations, report for report
    for name in EX_CHECKS:
        text = resources.files("lucaskit").joinpath("dsl", f"{name}.id").read_text()
        decl = idexpr.parse_identity_file(text)[0]
        dsl_reports = idexpr.verify_identity(decl, decl.min_n, 32)
        builtin_reports = verify_range(name, 32)
        assert len(dsl_reports) == len(builtin_reports)
        for d, b in zip(dsl_reports, builtin_reports):
            assert d.n == b.n and d.passed and b.passed
            assert d.lhs == b.lhs and d.rhs == b.rhs
    # remark declarations are the k=2 slice of the composition checks
    for name, compose in (("remark_fib", compose_fib), ("remark_luc", compose_luc)):
        text = resources.files("lucaskit").joinpath("dsl", f"{name}.id").read_text()
        decl = idexpr.parse_identity_file(text)[0]
        for d in idexpr.verify_identity(decl, 0, 32):
            b = compose(d.n, 2)
            assert d.passed and b.passed
            assert d.lhs == b.lhs and d.rhs == b.rhs
    # malformed corpus: every input rejected with a position diagnostic
    malformed = [
        "bad : n>=0 : C(n) == 1",
        "t : n>=0 : k == 0",
        "a : n>=0 : x +",
        "b : n>=0 : (x == y",
        "c : n>0 : x == x",
        "d : n>=0 : sum(k, 0, n) == x",
        "e : n>=0 : F(n; x) == x",
        "f : n>=0 : z + x == x",
        "g : n>=0 : x ^ ^ 2 == x",
        ": n>=0 : x == x",
        "h : n>=0 : floor(n) == 0",
        "i : n>=0 : 2 $ 2 == x",
    ]
    assert len(malformed) >= 10
    for text in malformed:
        try:
            idexpr.parse_identity(text)
        except idexpr.IdentityParseError as err:
            assert err.line >= 1 and err.col >= 1
        else:
            raise AssertionError(f"malformed input accepted: {text}")
    _report(8, "DSL agrees with built-in checks (n <= 32); malformed corpus rejected")


def test_criterion_9_module_invariants():
    # ring axioms on a deterministic sample of small polynomials
    sample = [
        ZERO,
        ONE,
        X,
        Y,
        X + Y,
        X - Y,
        X ** 2 + Y.scale(4),
        RatPoly({(1, 1): -3, (0, 2): 5}),
        RatPoly({(2, 1): Fraction(1, 2), (0, 0): -9}),
    ]
    for p in sample:
        for q in sample:
            assert p + q == q + p
            assert p * q == q * p
            for r in sample[:5]:
                assert (p + q) + r == p + (q + r)
                assert p * (q + r) == p * q + p * r
    # empty-sum convention at the DSL level
    decl = idexpr.parse_identity("t : n>=0 : sum(k, 0, floor((n-1)/2), x) == 0")
    assert idexpr.verify_identity(decl, 0, 0)[0].passed
    # degree and coefficient shape of the sequence polynomials
    for n in range(1, 65):
        f, l = fib(n), luc(n)
        assert f.deg_x == n - 1 and l.deg_x == n
        assert all(isinstance(c, int) and c > 0 for c in f.terms.values())
        assert all(isinstance(c, int) and c > 0 for c in l.terms.values())
    # the shifted roots satisfy the shifted characteristic equation
    const = ((X ** 2).scale(2) - Y).scale(4)
    for doubled_root in (ExtElem(X.scale(3), ONE), ExtElem(X.scale(3), -ONE)):
        assert doubled_root ** 2 - X.scale(6) * doubled_root + const == ZERO_EXT
    _report(9, "module invariants: ring axioms, empty sums, shape, root checks")
