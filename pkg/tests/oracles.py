"""Independent reference evaluators built on sympy, for cross-checking."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import sympy as sp

_t = sp.Symbol("t")


def to_frac(v) -> Fraction:
    v = sp.Rational(v)
    return Fraction(int(v.p), int(v.q))


def to_sym(v) -> sp.Rational:
    v = Fraction(v)
    return sp.Rational(v.numerator, v.denominator)


@lru_cache(maxsize=None)
def _poly(kind: str, n: int):
    expr = sp.bernoulli(n, _t) if kind == "B" else sp.euler(n, _t)
    return tuple(to_frac(c) for c in sp.Poly(expr, _t).all_coeffs())


def _horner(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * Fraction(x) + c
    return acc


def bernoulli_poly(n, x) -> Fraction:
    return _horner(_poly("B", n), x)


def euler_poly(n, x) -> Fraction:
    return _horner(_poly("E", n), x)


def _split(x):
    x = Fraction(x)
    fl = math.floor(x)
    return fl, x - fl


def bfun(n, x) -> Fraction:
    return bernoulli_poly(n, _split(x)[1])


def bbar(n, x) -> Fraction:
    if n == 1 and Fraction(x).denominator == 1:
        return Fraction(0)
    return bfun(n, x)


def efun(n, x) -> Fraction:
    fl, fr = _split(x)
    return (-1) ** (fl % 2) * euler_poly(n, fr)


def ebar(n, x) -> Fraction:
    if n == 0 and Fraction(x).denominator == 1:
        return Fraction(0)
    return efun(n, x)


def saw(x) -> Fraction:
    return bbar(1, x)


FUN = {"B": bfun, "Bbar": bbar, "E": efun, "Ebar": ebar}


def pair_sum(weight_alt, f1, n1, a, x, f2, n2, b, y, c, z, sign=1, start=0) -> Fraction:
    """Direct loop: sum_mu w(mu) f1(a(mu+z)/c + sign x) f2(b(mu+z)/c + sign y)."""
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    total = Fraction(0)
    for mu in range(start, c):
        u = a * (mu + z) / c + sign * x
        v = b * (mu + z) / c + sign * y
        w = (-1) ** mu if weight_alt else 1
        total += w * FUN[f1](n1, u) * FUN[f2](n2, v)
    return total


def classical(kind: str, a: int, c: int) -> Fraction:
    total = Fraction(0)
    for n in range(1, c):
        fl = (a * n) // c
        r, s = Fraction(n, c), Fraction(a * n, c)
        total += {
            "dedekind": lambda: saw(r) * saw(s),
            "S": lambda: Fraction((-1) ** ((n + 1 + fl) % 2)),
            "s1": lambda: (-1) ** (fl % 2) * saw(r),
            "s2": lambda: (-1) ** n * saw(r) * saw(s),
            "s3": lambda: (-1) ** n * saw(s),
            "s4": lambda: Fraction((-1) ** (fl % 2)),
            "s5": lambda: (-1) ** ((n + fl) % 2) * saw(r),
        }[kind]()
    return total


def dedekind_cot(a: int, c: int) -> float:
    """Cotangent form of s(a, c), a floating-point oracle."""
    return sum(
        1 / math.tan(math.pi * k / c) / math.tan(math.pi * k * a / c) for k in range(1, c)
    ) / (4 * c)
