from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hbsum.polyfun import (
    DegreeOutOfRange,
    bbar_fun,
    bernoulli_fun,
    bernoulli_poly,
    build_tables,
    default_tables,
    ebar_fun,
    euler_fun,
    euler_poly,
    fourier_partial,
    sawtooth,
)
from hbsum.rational import floor_split, format_rational, parse_rational, to_rational

rationals = st.builds(F, st.integers(-60, 60), st.integers(1, 12))
orders = st.integers(0, 8)


def test_build_tables_low_orders():
    bern, euler = build_tables(2)
    assert bern.coeffs[1] == (F(-1, 2), 1)
    assert bern.coeffs[2] == (F(1, 6), -1, 1)
    assert euler.coeffs[2] == (0, -1, 1)


def test_tables_match_sympy_up_to_default_degree():
    bern, euler = default_tables()
    for n in range(bern.max_degree + 1):
        for x in (F(0), F(1, 3), F(-5, 7), F(2)):
            assert bern.evaluate(n, x) == oracles.bernoulli_poly(n, x)
            assert euler.evaluate(n, x) == oracles.euler_poly(n, x)


def test_scaled_coefficients_are_consistent():
    bern, euler = build_tables(10)
    for table in (bern, euler):
        for n, (L, ints) in enumerate(table.scaled):
            assert tuple(F(i, L) for i in ints) == table.coeffs[n]


def test_degree_out_of_range():
    tables = build_tables(3)
    with pytest.raises(DegreeOutOfRange):
        bernoulli_fun(4, 0, tables)
    with pytest.raises(DegreeOutOfRange):
        ebar_fun(4, F(1, 2), tables)
    with pytest.raises(DegreeOutOfRange):
        euler_poly(-1, 0)


@pytest.mark.parametrize("x, expected", [(F(7, 3), (2, F(1, 3))), (F(-1, 2), (-1, F(1, 2))), (3, (3, 0))])
def test_floor_split(x, expected):
    assert tuple(floor_split(x)) == expected


def test_rational_text_round_trip():
    assert parse_rational("-3/6") == F(-1, 2)
    assert parse_rational(" +4 ") == 4
    assert format_rational(F(-1, 2)) == "-1/2"
    assert format_rational(F(4)) == "4"
    for bad in ("1/0", "1.5", "a/b", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


@pytest.mark.parametrize(
    "fn, n, x, expected",
    [
        (bernoulli_fun, 1, 0, F(-1, 2)),
        (bernoulli_fun, 1, F(1, 2), 0),
        (bernoulli_fun, 2, F(5, 2), F(-1, 12)),
        (bbar_fun, 1, 0, 0),
        (bbar_fun, 2, F(1, 3), F(-1, 18)),
        (bbar_fun, 0, F(7, 5), 1),
        (euler_fun, 1, 0, F(-1, 2)),
        (euler_fun, 0, F(1, 3), 1),
        (euler_fun, 0, F(3, 2), -1),
        (ebar_fun, 0, 5, 0),
        (ebar_fun, 0, F(1, 2), 1),
    ],
)
def test_golden_values(fn, n, x, expected):
    assert fn(n, x) == expected


def test_ebar_order3_at_even_integer():
    # E_3(0) = 1/4 and the floor 2 is even, so the value is 1/4 rather than 0
    assert euler_poly(3, 0) == F(1, 4)
    assert ebar_fun(3, 2) == F(1, 4)


@pytest.mark.parametrize("x, expected", [(F(7, 3), F(-1, 6)), (2, 0), (F(-1, 6), F(1, 3))])
def test_sawtooth(x, expected):
    assert sawtooth(x) == expected


@given(orders, rationals)
def test_periodic_functions_match_oracle(n, x):
    assert bernoulli_fun(n, x) == oracles.bfun(n, x)
    assert bbar_fun(n, x) == oracles.bbar(n, x)
    assert euler_fun(n, x) == oracles.efun(n, x)
    assert ebar_fun(n, x) == oracles.ebar(n, x)


@given(orders, rationals)
def test_bernoulli_reflection(n, x):
    if n == 1 and x.denominator == 1:
        return
    assert bernoulli_fun(n, -x) == (-1) ** n * bernoulli_fun(n, x)


@given(orders, rationals)
def test_euler_reflection(n, x):
    if n == 0 and x.denominator == 1:
        return
    assert euler_fun(n, -x) == (-1) ** (n - 1) * euler_fun(n, x)


@given(orders, rationals, st.integers(-5, 5))
def test_periodicity(n, x, m):
    assert bernoulli_fun(n, x + m) == bernoulli_fun(n, x)
    assert bbar_fun(n, x + m) == bbar_fun(n, x)
    assert euler_fun(n, x + m) == (-1) ** (m % 2) * euler_fun(n, x)


@given(orders, rationals, st.integers(1, 8))
def test_bernoulli_multiplication(n, x, r):
    rhs = F(r) ** (n - 1) * sum(bernoulli_fun(n, (x + v) / r) for v in range(r))
    assert bernoulli_fun(n, x) == rhs


@given(orders, rationals, st.integers(0, 4).map(lambda k: 2 * k + 1))
def test_euler_multiplication_odd(n, x, r):
    rhs = F(r) ** n * sum((-1) ** v * euler_fun(n, (x + v) / r) for v in range(r))
    assert euler_fun(n, x) == rhs


@given(st.integers(1, 8), rationals, st.integers(1, 4).map(lambda k: 2 * k))
def test_euler_from_bernoulli_multiplication_even(n, x, r):
    rhs = -F(2, n) * F(r) ** (n - 1) * sum((-1) ** v * bernoulli_fun(n, (x + v) / r) for v in range(r))
    assert euler_fun(n - 1, x) == rhs


def test_fourier_examples():
    assert abs(fourier_partial(2, 0.0, 10**4) - 1 / 6) <= 1e-4
    assert abs(fourier_partial(2, 0.25, 10**4) + 1 / 48) <= 1e-4
    assert abs(fourier_partial(1, 0.5, 10**5)) <= 1e-3


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_fourier_error_shrinks(p):
    x = F(2, 7)
    exact = float(bernoulli_fun(p, x))
    errors = [abs(fourier_partial(p, float(x), M) - exact) for M in (10, 100, 1000)]
    assert errors[0] > errors[1] > errors[2]


def test_fourier_domain_errors():
    with pytest.raises(ValueError):
        fourier_partial(1, 2.0, 100)
    with pytest.raises(ValueError):
        fourier_partial(0, 0.3, 100)
    with pytest.raises(ValueError):
        fourier_partial(2, 0.3, 0)


@settings(max_examples=50)
@given(st.integers(0, 8), rationals)
def test_polynomials_match_oracle_off_unit_interval(n, x):
    assert bernoulli_poly(n, x) == oracles.bernoulli_poly(n, x)
    assert euler_poly(n, x) == oracles.euler_poly(n, x)
