import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from laurentcm.errors import InsufficientCoverage, InvalidAction, Unsupported, WeightBookkeeping
from laurentcm.exact import QSeries, ScaledScalar
from laurentcm.forms import binom, jacobi_polynomial, parse_form_expr, q_expansion
from laurentcm.theta import (BS, BZ, CoefficientTable, FiniteGroupAction, FiniteQuadraticModule, ShimuraData,
                             binary_theta_cm, bs_laurent_level1, bs_lift_q_expansion, bz_lift_q_expansion,
                             ct_laurent_general, ct_laurent_level1, isotypic_project, leading_singular_coeff,
                             pairing, theta_N, unary_theta, vector_series)
from oracles.kohnen import cohen_H2, kohnen_fsc

S = ShimuraData()
F_SC = CoefficientTable.load("f_sc.json")
THETA3 = CoefficientTable.load("theta3_plus.json")
F1 = CoefficientTable.load("f1_chi1.json")
TT2 = CoefficientTable.load("ttheta2_plus.json")
TT6 = CoefficientTable.load("ttheta6_plus.json")


def tensor_label(lab):
    (a, c), b = lab
    return (a, c, b)


# fixtures against independent constructions

def test_cohen_class_numbers():
    assert [cohen_H2(N) for N in (0, 1, 4, 5)] == [Fraction(1, 120), Fraction(-1, 12), Fraction(-7, 12),
                                                   Fraction(-2, 5)]


def test_f_sc_fixture_matches_oracle():
    expect = kohnen_fsc(F_SC.coverage)
    got = {n: c for (_, n), c in F_SC.qseries.terms.items()}
    assert got == {n: c for n, c in expect.items() if c}
    assert got[-3] == 1 and got[1] == 64 and got[4] == -32384


def test_theta3_plus_fixture():
    q = THETA3.qseries
    assert THETA3.unit == ScaledScalar.of(Fraction(9, 32), omega=6)
    assert q.den == 3 and q.weight == -2
    assert q.terms == {(1, -1): 1, (1, 2): -61, (2, -1): -1, (2, 2): 61}


def test_shimura_fixtures_match_basis_vectors():
    labels_a, labels_c = set(S.A.elements()), set(S.C.elements())
    assert F1.qseries == vector_series([(1, 1, S.e(1)), (4, 6, S.e(0))], 12, Fraction(5, 2), 9, labels_a)
    assert TT2.qseries == vector_series([(-1, 1, S.e_prime(1))], 12, -1, -1, labels_c)
    assert TT6.qseries == vector_series([(-4, 1, S.e_prime(0)), (-1, 38, S.e_prime(1))], 12, -5, -1, labels_c)


def test_table_json_round_trip():
    for t in (F_SC, THETA3, F1, TT6):
        back = CoefficientTable.from_json(t.to_json())
        assert back.qseries == t.qseries and back.unit == t.unit
        assert back.dumps() == t.dumps()


# finite quadratic modules and projections

def test_group_orders():
    assert len(S.A) == 72 and len(S.C) == 36
    assert S.group("A", "chi1").order() == 48
    assert S.group("C", "chi1").order() == 16


@pytest.mark.parametrize("which,character", [("A", "chi0"), ("A", "chi1"), ("C", "chi1"), ("C", "chi2")])
def test_projector_idempotent(which, character):
    g = S.group(which, character)
    mod = S.A if which == "A" else S.C
    rng = random.Random(7)
    v = {x: Fraction(rng.randint(-5, 5)) for x in mod.elements()}
    p = g.project(v)
    assert g.project(p) == p


def test_e1_is_chi1_isotypic():
    g = S.group("A", "chi1")
    assert g.project(S.e(1)) == S.e(1)
    assert g.project(S.e(0)) == S.e(0)
    assert pairing(S.e(0), S.e(1)) == 0


def test_binary_theta_projections():
    gens = S.generators("C")
    assert not isotypic_project(theta_N(2, 3), S.C, gens, S.characters["chi0"]).terms
    assert isotypic_project(theta_N(0, 3), S.C, gens, S.characters["chi0"]).terms
    p = isotypic_project(theta_N(2, 3), S.C, gens, S.characters["chi1"])
    assert p.terms


def test_non_isometry_rejected():
    mod = FiniteQuadraticModule.diagonal([3], [Fraction(1, 3)])
    with pytest.raises(InvalidAction):
        FiniteGroupAction(mod, {"bad": lambda x: ((x[0] * 2) % 3 if x[0] else 1,)})


# theta series

def test_unary_theta():
    th = unary_theta(1, 0, 3, modulus=2)
    assert th.den == 4
    assert th.coefficient(0, 0) == 1 and th.coefficient(1, 1) == 2 and th.coefficient(4, 0) == 2
    assert th.coefficient(9, 1) == 2 and th.coefficient(2, 0) == 0
    th1 = unary_theta(3, 1, 2)
    assert th1.coefficient(1, 1) == -th1.coefficient(1, 5)
    with pytest.raises(Unsupported):
        unary_theta(3, 2, 2)


@pytest.mark.parametrize("mu,sign", [(1, 1), (2, -1)])
def test_binary_theta_is_eta8(mu, sign):
    th = binary_theta_cm(3, 3, mu, 10)
    e8 = q_expansion(parse_form_expr("eta^8"), 10)
    for n in range(31):
        assert th.coeff_at(Fraction(n, 3)) == sign * 3 * e8.coeff_at(Fraction(n, 3))


# lifted Laurent coefficients

def test_example_a1():
    assert bs_laurent_level1(F_SC, THETA3, 3, 2, 1) == ScaledScalar.of(-2, pi=1, omega=6)
    assert ct_laurent_level1(F_SC, THETA3, 3, 2, 1) == ScaledScalar.of(-2, pi=1, omega=6)


def test_wrong_weight_table_rejected():
    with pytest.raises(WeightBookkeeping):
        bs_laurent_level1(F_SC, THETA3, 3, 2, 2)
    with pytest.raises(WeightBookkeeping):
        ct_laurent_level1(F_SC, THETA3, 3, 4, 1)


def test_shimura_values():
    tp = unary_theta(1, 0, 10, modulus=2)
    a0 = ct_laurent_general(F1, TT2, tp, 2, 0, 1, BS, tensor_label)
    a4 = ct_laurent_general(F1, TT6, tp, 2, 4, 1, BS, tensor_label)
    assert a0 == ScaledScalar.of(Fraction(-8, 3), e3=1, omega=4)
    assert a4 == ScaledScalar.of(Fraction(-2 ** 7 * 5, 3 ** 3), e3=1, pi=4, omega=12)
    assert a4 / a0 == ScaledScalar.of(Fraction(5, 6) * 4 ** 4 / factorial(4), pi=4, omega=8)


def test_truncated_f_raises_coverage():
    short = CoefficientTable(THETA3.qseries.truncate(1), "maass_holomorphic_part", THETA3.unit)
    with pytest.raises(InsufficientCoverage):
        bs_laurent_level1(F_SC, short, 3, 2, 1)
    with pytest.raises(InsufficientCoverage):
        ct_laurent_level1(F_SC, short, 3, 2, 1)
    # c_f is only needed up to N = 1 here
    assert bs_laurent_level1(CoefficientTable(F_SC.qseries.truncate(1)), THETA3, 3, 2, 1) != 0
    f1 = CoefficientTable(F1.qseries.truncate(2))
    with pytest.raises(InsufficientCoverage):
        ct_laurent_general(f1, TT6, unary_theta(1, 0, 10, modulus=2), 2, 4, 1, BS, tensor_label)


def synthetic_tables(rng, k, m):
    """Random Kohnen-plus f without constant term and a D = 3 table with c_{-mu} = (-1)^l c_mu."""
    l = m % 2
    f = {(None, N): Fraction(rng.randint(-9, 9))
         for N in range(-8, 13) if N % 4 in (0, 1) and N and (N < 0 or rng.random() < 0.7)}
    mt = {}
    for n in range(-4, 5):
        if rng.random() < 0.7:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            mt[(1, n)], mt[(2, n)] = c, (-1) ** l * c
        if not l and rng.random() < 0.6:
            mt[(0, n)] = Fraction(rng.randint(-9, 9))
    fq = QSeries(1, f, Fraction(2 * k + 1, 2), 12, {None})
    mq = QSeries(3, mt, Fraction(1 - k - m), 40, {0, 1, 2})
    return CoefficientTable(fq), CoefficientTable(mq, "maass_holomorphic_part", ScaledScalar.of(1, omega=2))


@pytest.mark.parametrize("seed", range(5))
def test_explicit_sum_vs_bracket_on_synthetic_tables(seed):
    # the two expressions agree up to the sign (-1)^r, r = floor(m/2)
    rng = random.Random(seed)
    for m in range(7):
        k = rng.choice([2, 4])
        f, mt = synthetic_tables(rng, k, m)
        sign = (-1) ** (m // 2)
        assert bs_laurent_level1(f, mt, 3, k, m) == sign * ct_laurent_level1(f, mt, 3, k, m)


def brute_bs(f, mt, D, k, m, bmax=60):
    """The explicit sum over every b in [-bmax, bmax] and every stored n."""
    r, l = divmod(m, 2)
    total = Fraction(0)
    for (mu, n), c in mt.qseries.terms.items():
        for b in range(-bmax, bmax + 1):
            if (2 * mu + b) % D or (-b * b - 4 * n) % D:
                continue
            cf = f.qseries.terms.get((None, (-b * b - 4 * n) // D), 0)
            s = 4 * n + b * b
            if s:
                jac = Fraction(s) ** r * jacobi_polynomial(r, Fraction(2 * l - 1, 2), -k - m, Fraction(4 * n - b * b, s))
            else:
                jac = Fraction(4 * n) ** r * binom(r + Fraction(2 * l - 1, 2), r) if r else 1
            total += c * cf * b ** l * jac
    two_half = ScaledScalar.of(2 ** ((3 * k + 4 * m) // 2), e2=(3 * k + 4 * m) % 2)
    kappa = -two_half * ScaledScalar.of(Fraction(1, D ** (k + m) * factorial(m)), pi=m) / binom(-k - m + r, r)
    return kappa * mt.unit * total if total else ScaledScalar.zero()


@pytest.mark.parametrize("seed", range(5))
def test_window_matches_brute_force(seed):
    rng = random.Random(100 + seed)
    for m in range(5):
        k = rng.choice([2, 4])
        f, mt = synthetic_tables(rng, k, m)
        assert bs_laurent_level1(f, mt, 3, k, m) == brute_bs(f, mt, 3, k, m)


def test_example_window_matches_brute_force():
    assert bs_laurent_level1(F_SC, THETA3, 3, 2, 1) == brute_bs(F_SC, THETA3, 3, 2, 1)


# Fourier expansions of lifts

def test_bs_lift_fourier_expansion():
    lift = bs_lift_q_expansion(F_SC, 2, 9)
    g = q_expansion(parse_form_expr("-256*Delta/E4^2"), 9)
    assert all(lift.coefficient(n) == g.coefficient(n) for n in range(1, 10))
    assert lift.coefficient(1) == -256


def test_bz_lift_fourier_expansion():
    k = 3
    bz = bz_lift_q_expansion(F_SC, k, 5)
    assert bz.prefactor == ScaledScalar.of(4, e2=1, pi=Fraction(5, 2))
    assert bz.i_power == (1 - k) % 4
    c = lambda N: F_SC.coefficient(N)  # noqa: E731
    assert bz.series.coefficient(1) == c(1)
    for p in (2, 3, 5):
        assert bz.series.coefficient(p) == (c(1) + p ** k * c(p * p)) * p ** (k - 1)


def test_bz_lift_of_zero():
    bz = bz_lift_q_expansion(CoefficientTable(QSeries(1, {}, Fraction(1, 2), 30, {None})), 1, 5)
    assert not bz.series.terms and bz.constant_symbol == "C"


def test_bs_lift_rejects_odd_k():
    with pytest.raises(Unsupported):
        bs_lift_q_expansion(F_SC, 3, 4)


# singular coefficients

def test_leading_singular_example():
    y = ScaledScalar.of(Fraction(1, 2), e3=1)
    assert leading_singular_coeff(1, Fraction(-3, 4), 2, y, BS) == ScaledScalar.of(Fraction(1, 9), pi=-2)


def test_leading_singular_trivial_cases():
    assert leading_singular_coeff(0, -3, 2, 1) == 0
    assert leading_singular_coeff(5, -1, 1, 1, BZ) == ScaledScalar.of(5, pi=Fraction(-1, 2), e2=1) / 2
    assert leading_singular_coeff(1, -1, 1, 1, BS) == ScaledScalar.of(1, pi=-1, e2=1) / 4


@given(st.integers(1, 5), st.sampled_from([Fraction(-3, 4), Fraction(-1), Fraction(-3), Fraction(-1, 2)]))
def test_leading_singular_scales_with_c(k, m_neg):
    a = leading_singular_coeff(1, m_neg, k, 1)
    assert leading_singular_coeff(7, m_neg, k, 1) == a * 7
