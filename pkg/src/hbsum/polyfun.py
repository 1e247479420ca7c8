"""Bernoulli and Euler polynomials and their periodic extensions.

All evaluation is exact over :class:`~fractions.Fraction`.  Coefficient
tables are built once up to a fixed degree and never grow afterwards;
asking for a higher order raises :class:`DegreeOutOfRange`.

Conventions (``[x]`` is the floor of ``x``):

* ``bernoulli_fun(n, x) = B_n(x - [x])``, so ``bernoulli_fun(1, 0) == -1/2``.
* ``bbar_fun`` agrees with it except that order 1 vanishes at integers,
  which makes ``bbar_fun(1, x)`` the sawtooth ``((x))``.
* ``euler_fun(n, x) = (-1)**[x] * E_n(x - [x])``.
* ``ebar_fun`` agrees with it except that order 0 vanishes at integers.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce

import numpy as np

from .rational import RationalLike, floor_split, to_rational

DEFAULT_MAX_DEGREE = 24


class PolyKind(Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"


class DegreeOutOfRange(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PolyTable:
    """Dense monomial coefficients of B_0..B_max or E_0..E_max.

    ``coeffs[n][k]`` is the coefficient of ``x**k`` in the n-th polynomial.
    ``scaled[n]`` is ``(L, ints)`` with ``coeffs[n][k] == ints[k] / L``,
    used by the integer kernels.
    """

    kind: PolyKind
    max_degree: int
    coeffs: tuple[tuple[Fraction, ...], ...]
    scaled: tuple[tuple[int, tuple[int, ...]], ...]

    def check(self, n: int) -> None:
        if n < 0:
            raise DegreeOutOfRange(f"negative order {n}")
        if n > self.max_degree:
            raise DegreeOutOfRange(
                f"{self.kind.value} order {n} exceeds table degree {self.max_degree}"
            )

    def evaluate(self, n: int, x: Fraction) -> Fraction:
        self.check(n)
        acc = Fraction(0)
        for c in reversed(self.coeffs[n]):
            acc = acc * x + c
        return acc


def _lcm(values) -> int:
    return reduce(lambda u, v: u * v // math.gcd(u, v), values, 1)


def _scale(poly: tuple[Fraction, ...]) -> tuple[int, tuple[int, ...]]:
    den = _lcm(c.denominator for c in poly)
    return den, tuple(int(c * den) for c in poly)


def _bernoulli_numbers(n_max: int) -> list[Fraction]:
    # sum_{k<n} C(n, k) B_k = 0 for n >= 2, with B_1 = -1/2
    nums = [Fraction(1)]
    for n in range(1, n_max + 1):
        total = sum((math.comb(n + 1, k) * nums[k] for k in range(n)), Fraction(0))
        nums.append(-total / (n + 1))
    return nums


def build_tables(max_degree: int) -> tuple[PolyTable, PolyTable]:
    """Return ``(bernoulli_table, euler_table)`` valid up to ``max_degree``."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    # Euler order n needs Bernoulli order n + 1.
    bnums = _bernoulli_numbers(max_degree + 1)
    bpolys = [
        tuple(math.comb(n, k) * bnums[n - k] for k in range(n + 1))
        for n in range(max_degree + 2)
    ]
    epolys = []
    for n in range(max_degree + 1):
        # E_n(x) = 2/(n+1) * (B_{n+1}(x) - 2**(n+1) * B_{n+1}(x/2))
        b = bpolys[n + 1]
        e = tuple(
            Fraction(2, n + 1) * b[k] * (1 - 2 ** (n + 1 - k)) for k in range(n + 1)
        )
        epolys.append(e)
    if epolys[0] != (1,) or (max_degree >= 1 and epolys[1] != (Fraction(-1, 2), 1)):
        raise AssertionError("Euler table failed its low-order sanity check")
    bern = tuple(bpolys[: max_degree + 1])
    euler = tuple(epolys)
    return (
        PolyTable(PolyKind.BERNOULLI, max_degree, bern, tuple(map(_scale, bern))),
        PolyTable(PolyKind.EULER, max_degree, euler, tuple(map(_scale, euler))),
    )


_DEFAULT: tuple[PolyTable, PolyTable] | None = None


def default_max_degree() -> int:
    cap = os.environ.get("HBSUM_MAX_DEGREE")
    if cap:
        return min(DEFAULT_MAX_DEGREE, int(cap))
    return DEFAULT_MAX_DEGREE


def default_tables() -> tuple[PolyTable, PolyTable]:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = build_tables(default_max_degree())
    return _DEFAULT


def _tables(tables):
    return default_tables() if tables is None else tables


def bernoulli_poly(n: int, x: RationalLike, tables=None) -> Fraction:
    return _tables(tables)[0].evaluate(n, to_rational(x))


def euler_poly(n: int, x: RationalLike, tables=None) -> Fraction:
    return _tables(tables)[1].evaluate(n, to_rational(x))


def bernoulli_fun(n: int, x: RationalLike, tables=None) -> Fraction:
    _, frac = floor_split(x)
    return _tables(tables)[0].evaluate(n, frac)


def sawtooth(x: RationalLike) -> Fraction:
    """The sawtooth ``((x))``: ``x - [x] - 1/2`` off the integers, 0 on them."""
    _, frac = floor_split(x)
    if frac == 0:
        return Fraction(0)
    return frac - Fraction(1, 2)


def bbar_fun(n: int, x: RationalLike, tables=None) -> Fraction:
    if n == 1:
        _tables(tables)[0].check(1)
        return sawtooth(x)
    return bernoulli_fun(n, x, tables)


def euler_fun(n: int, x: RationalLike, tables=None) -> Fraction:
    fl, frac = floor_split(x)
    value = _tables(tables)[1].evaluate(n, frac)
    return -value if fl % 2 else value


def ebar_fun(n: int, x: RationalLike, tables=None) -> Fraction:
    if n == 0:
        _tables(tables)[1].check(0)
        if to_rational(x).denominator == 1:
            return Fraction(0)
    return euler_fun(n, x, tables)


def fourier_partial(p: int, x: float, M: int) -> float:
    """Partial Fourier sum of the periodic Bernoulli function of order ``p``.

    Sums the modes ``0 < |m| <= M`` with ``m`` and ``-m`` paired so the
    result is real.  Floating point only; used as a convergence sanity check.
    """
    if p < 1:
        raise ValueError("order must be at least 1")
    if M < 1:
        raise ValueError("M must be positive")
    if p == 1 and abs(x - round(x)) < 1e-9:
        raise ValueError("order-1 Fourier series is excluded at integer arguments")
    m = np.arange(1, M + 1, dtype=np.float64)
    theta = 2.0 * np.pi * m * x
    scale = -math.factorial(p) / (2.0 * math.pi) ** p * 2.0
    # (2*pi*i)**p = (2*pi)**p * i**p; pairing m with -m leaves cos (p even) or i*sin (p odd)
    if p % 2 == 0:
        sign = -1.0 if (p // 2) % 2 else 1.0
        series = np.sum(np.cos(theta) / m**p)
    else:
        sign = -1.0 if ((p - 1) // 2) % 2 else 1.0
        series = np.sum(np.sin(theta) / m**p)
    return float(scale * sign * series)
