from fractions import Fraction as F
from math import factorial

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hbsum import sums
from hbsum.series import (
    OmegaParams,
    Parity,
    TruncatedSeries,
    check_omega_reciprocity,
    hwz_G_series,
    omega_membership,
    omega_series,
    omega_term,
    reciprocity_rhs,
)

X = lambda N: TruncatedSeries.variable("X", N)  # noqa: E731
Y = lambda N: TruncatedSeries.variable("Y", N)  # noqa: E731


def test_square_of_sum():
    s = (X(2) + Y(2)) ** 2
    assert s.coeffs == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_scale_by_zero_and_truncation():
    assert (X(3) + Y(3)).scale(0).is_zero()
    assert (X(1) * Y(1)).is_zero()


def test_degree_mismatch():
    with pytest.raises(ValueError):
        X(2) + X(3)
    with pytest.raises(ValueError):
        TruncatedSeries(2, {(-1, 0): 1})


def test_substitute_linear_form():
    s = TruncatedSeries(3, {(2, 0): 1, (0, 1): 3})
    out = s.substitute("X", -1, -1)
    assert out.coeffs == {(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 1): 3}


small_series = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.builds(F, st.integers(-9, 9), st.integers(1, 5)),
    max_size=6,
).map(lambda d: TruncatedSeries(4, d))


@settings(max_examples=60)
@given(small_series, small_series, small_series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncatedSeries.zero(4)
    assert a ** 3 == a * a * a


def test_text_export_order():
    s = TruncatedSeries(2, {(0, 2): F(1, 3), (1, 0): -1, (0, 0): 2, (2, 0): 5, (1, 1): F(-1, 2)})
    assert s.to_text() == "0 0 2\n1 0 -1\n0 2 1/3\n1 1 -1/2\n2 0 5\n"


# -- Omega ------------------------------------------------------------------

_X, _Y = sp.symbols("X Y")


def _sympy_omega(params, N, perm):
    """Omega for one permutation built from the direct-loop oracle and sympy."""
    mult = {"a": params.a, "b": params.b, "c": params.c}
    shift = {"a": params.x, "b": params.y, "c": params.z}
    order = [("a", "b", "c", _X, _Y), ("c", "a", "b", -_X - _Y, _X), ("b", "c", "a", _Y, -_X - _Y)][perm]
    s1, s2, s3, U, V = order
    A, B, C = (params.d * mult[k] for k in (s1, s2, s3))
    expr = 0
    for p in range(1, N + 2):
        for q in range(1, N + 3 - p):
            sbar = oracles.pair_sum(True, "Ebar", p - 1, A, shift[s1], "Ebar", q - 1, B, shift[s2],
                                    C, shift[s3], sign=-1)
            coef = sp.Rational(p * q, 4) / (factorial(p) * factorial(q)) * oracles.to_sym(sbar)
            expr += coef * (U / A) ** (p - 1) * (V / B) ** (q - 1)
    poly = sp.Poly(sp.expand(expr), _X, _Y)
    return {m: oracles.to_frac(c) for m, c in poly.terms() if c != 0}


@pytest.mark.parametrize("perm", [0, 1, 2])
@pytest.mark.parametrize(
    "args", [(1, 1, 1, 2), (1, 2, 3, 2, F(1, 3), F(1, 2), 0), (2, 3, 5, 4, F(2, 3), 0, F(1, 3))]
)
def test_omega_matches_sympy(args, perm):
    params = OmegaParams(*args)
    assert omega_series(params, 3, perm).coeffs == _sympy_omega(params, 3, perm)


def test_constant_term_is_quarter_sbar11():
    params = OmegaParams(1, 2, 3, 2, F(1, 3), F(1, 5), F(1, 2))
    term = omega_term(params, 1, 1, 4)
    expected = sums.S_pq_bar(1, 1, 2, 4, 6, F(1, 3), F(1, 5), F(1, 2)) / 4
    assert term.coeffs == ({(0, 0): expected} if expected else {})


def test_second_permutation_leads_with_minus_x_minus_y():
    params = OmegaParams(1, 2, 3, 2, F(1, 3), 0, F(1, 2))
    t = omega_term(params, 2, 1, 3, permutation=1)
    assert set(t.coeffs) <= {(1, 0), (0, 1)}
    assert t[(1, 0)] == t[(0, 1)]


@pytest.mark.parametrize("perm", [0, 1, 2])
def test_degree_slice_sparsity(perm):
    params = OmegaParams(3, 4, 5, 2, F(1, 2), F(2, 3), F(1, 3))
    for p in range(1, 6):
        for q in range(1, 7 - p):
            assert omega_term(params, p, q, 6, perm).is_homogeneous(p + q - 2)


def test_omega_params_validation():
    with pytest.raises(ValueError):
        OmegaParams(1, 1, 1, 3)
    with pytest.raises(ValueError):
        OmegaParams(2, 4, 1, 2)
    with pytest.raises(ValueError):
        OmegaParams(1, 1, 0, 2)


def test_membership_zero_point():
    v = omega_membership(0, 0, 0, 2, 2, 2)
    assert v.member
    assert v.witness == (0, 0, 0, 0)
    # R = 1/2 with offsets (-1, -1, -1) is a second witness of the other parity
    assert v.witnesses[1] == (F(1, 2), -1, -1, -1)
    assert v.parity_class is Parity.AMBIGUOUS
    assert reciprocity_rhs(v, "quarter") is None
    assert reciprocity_rhs(v, "witness-sum") == 0


def test_membership_non_member():
    assert not omega_membership(F(1, 2), 0, 0, 2, 2, 2).member
    assert reciprocity_rhs(omega_membership(F(1, 2), 0, 0, 2, 2, 2)) == 0


def test_membership_constructed_point():
    t0 = F(1, 4)
    v = omega_membership(2 * t0, 4 * t0, 6 * t0, 2, 4, 6)
    assert v.member and v.witness == (t0, 0, 0, 0)
    assert v.parity_class is Parity.EVEN
    assert reciprocity_rhs(v, "quarter") == F(-1, 4)


@given(st.builds(F, st.integers(-12, 12), st.integers(1, 6)),
       st.builds(F, st.integers(-12, 12), st.integers(1, 6)),
       st.builds(F, st.integers(-12, 12), st.integers(1, 6)),
       st.integers(1, 12), st.integers(1, 12), st.integers(1, 12))
def test_membership_witnesses_are_valid(x, y, z, da, db, dc):
    v = omega_membership(x, y, z, da, db, dc)
    assert v.member == bool(v.witnesses)
    for R, a0, b0, c0 in v.witnesses:
        assert (x, y, z) == (da * R + a0, db * R + b0, dc * R + c0)
        assert 0 <= R < 1


def test_check_zero_shift_111():
    report = check_omega_reciprocity(OmegaParams(1, 1, 1, 2), 4)
    assert report.higher_degree_zero
    # the Ebar_0 arguments are all integers here, so the constant is 0
    assert report.total[(0, 0)] == 0
    assert report.branch == "ambiguous" and report.status == "indeterminate"
    assert check_omega_reciprocity(OmegaParams(1, 1, 1, 2), 4, "witness-sum").status == "pass"


def test_check_non_member():
    report = check_omega_reciprocity(OmegaParams(1, 1, 1, 2, F(1, 3)), 3)
    assert report.branch == "non-member" and report.rhs == 0
    assert report.status == "pass"
    assert all(c == 0 for D in report.by_degree.values() for c in D.values())
    assert len(report.by_degree[3]) == 4


def test_even_sum_member_constant():
    # every witness R mod 1 contributes its own signed quarter
    report = check_omega_reciprocity(OmegaParams(1, 2, 3, 2, F(1, 2), 1, F(3, 2)), 4)
    assert report.verdict.parity_class is Parity.EVEN
    assert report.total[(0, 0)] == F(-1, 2)
    assert report.status == "fail"
    assert check_omega_reciprocity(report.params, 4, "witness-sum").status == "pass"


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(1, 1, 1), (1, 2, 3), (2, 3, 5), (3, 4, 5), (1, 1, 2), (3, 5, 7)]),
       st.sampled_from([2, 4]),
       st.tuples(*[st.builds(F, st.integers(0, 5), st.sampled_from([1, 2, 3]))] * 3))
def test_reciprocity_holds_in_positive_degrees(abc, d, shifts):
    params = OmegaParams(*abc, d, *shifts)
    report = check_omega_reciprocity(params, 5, "witness-sum")
    assert report.higher_degree_zero
    assert report.status == "pass"


def test_hwz_G_layout():
    a, b, c, x, y, z = 2, 3, 5, F(1, 3), F(1, 4), F(1, 2)
    g = hwz_G_series(a, b, c, x, y, z, 2)
    assert g.low == -1
    assert g[(0, 0)] == sums.hwz_s(1, 1, a, b, c, x, y, z)
    assert g[(-1, 0)] == sums.hwz_s(0, 1, a, b, c, x, y, z) * a
    assert all(i + j <= 2 for i, j in g.coeffs)


def test_hwz_G_single_term_for_c_one():
    x, y = F(1, 3), F(1, 4)
    g = hwz_G_series(1, 1, 1, x, y, 0, 1)
    assert g[(0, 0)] == oracles.bbar(1, -x) * oracles.bbar(1, -y)
