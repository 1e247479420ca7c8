"""Residual evaluators for the reciprocity, multiplication and product identities.

Each catalog entry maps named parameters to ``LHS - RHS`` (read top to
bottom as the identity is usually displayed).  The residual is exactly zero
whenever the entry's hypotheses hold.  Hypotheses depend only on the
integer parameters; shifts and arguments are unrestricted rationals.

Parameter domains (used by the sweep driver):

``modulus``  positive integers up to the campaign's modulus bound
``order``    orders 1..order_max
``order0``   orders 0..order_max
``index``    Mikolas index r, 0..order_max - 1 (filtered by r < m)
``scale``    dilation factor d >= 1
``shift``    rationals k/D in [0, 1)
``point``    rationals k/D in [-1, 1], integers included
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Mapping

from . import sums
from .polyfun import bbar_fun, bernoulli_fun, ebar_fun, euler_fun
from .rational import RationalLike, to_rational
from .sums import (
    S1_pq,
    S2_pq,
    S35_pq,
    S4_pq,
    S_pq,
    Sp1,
    Sp2,
    Sp5,
    Sq3,
    Sq4,
    S_p,
    classical_sum,
    mikolas_s,
)

INTEGER_DOMAINS = frozenset({"modulus", "order", "order0", "index", "scale"})
RATIONAL_DOMAINS = frozenset({"shift", "point"})


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Identity:
    id: str
    params: tuple[tuple[str, str], ...]
    hypothesis: Callable[..., bool]
    residual: Callable[..., Fraction]
    summary: str

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.params)

    @property
    def integer_names(self) -> tuple[str, ...]:
        return tuple(n for n, dom in self.params if dom in INTEGER_DOMAINS)

    @property
    def rational_names(self) -> tuple[str, ...]:
        return tuple(n for n, dom in self.params if dom in RATIONAL_DOMAINS)


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    params: dict
    applicable: bool
    residual: Fraction | None

    @property
    def passed(self) -> bool:
        return self.applicable and self.residual == 0


CATALOG: dict[str, Identity] = {}


def identity(id_: str, summary: str, hypothesis=None, **domains):
    def register(fn):
        hyp = hypothesis or (lambda *ints: True)
        CATALOG[id_] = Identity(id_, tuple(domains.items()), hyp, fn, summary)
        return fn

    return register


# ---------------------------------------------------------------------------
# small helpers

def binom(n: int, k: int) -> int:
    """Binomial coefficient extended to negative upper index."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def pw(base: int, exp: int) -> Fraction:
    return Fraction(base) ** exp


def coprime(*xs: int) -> bool:
    return all(gcd(u, v) == 1 for i, u in enumerate(xs) for v in xs[i + 1 :])


def positive(*xs: int) -> bool:
    return all(v >= 1 for v in xs)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    """Least positive residue of ``a**-1 mod m`` (0 for m == 1)."""
    if m == 1:
        return 0
    g, s, _ = ext_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return s % m


def _pq_coprime_pos(a, b, c):
    return positive(a, b, c) and coprime(a, b, c)


B, BB, E, EB = bernoulli_fun, bbar_fun, euler_fun, ebar_fun
half = Fraction(1, 2)


# ---------------------------------------------------------------------------
# product formula and multiplication formulas

@identity(
    "eq-0",
    "binom(p+q,q) B_p(X+Y) B_q(Y) expanded into products of lower periodic Bernoulli functions",
    lambda p, q: p >= 1 and q >= 1,
    p="order", q="order", X="point", Y="point",
)
def _eq0(p, q, X, Y):
    n = p + q
    lhs = comb(n, q) * B(p, X + Y) * B(q, Y)
    rhs = Fraction(0)
    for j in range(n + 1):
        k = binom(n - 1 - j, q - 1)
        if k:
            rhs += comb(n, j) * k * B(n - j, Y) * B(j, X)
    for h in range(q + 1):
        rhs += comb(n, h) * binom(n - 1 - h, p - 1) * (-1) ** h * B(n - h, X + Y) * B(h, X)
    return lhs - rhs


@identity("mult-B", "B_n(x) = r^(n-1) sum_v B_n((x+v)/r)", lambda n, r: n >= 0 and r >= 1,
          n="order0", r="modulus", x="point")
def _mult_b(n, r, x):
    return B(n, x) - pw(r, n - 1) * sum((B(n, (x + v) / r) for v in range(r)), Fraction(0))


@identity("mult-E-odd", "E_n(x) = r^n sum_v (-1)^v E_n((x+v)/r), r odd",
          lambda n, r: n >= 0 and r >= 1 and r % 2 == 1, n="order0", r="modulus", x="point")
def _mult_e_odd(n, r, x):
    alt = sum(((-1) ** v * E(n, (x + v) / r) for v in range(r)), Fraction(0))
    return E(n, x) - pw(r, n) * alt


@identity("mult-E-even", "E_{n-1}(x) = -(2/n) r^(n-1) sum_v (-1)^v B_n((x+v)/r), r even",
          lambda n, r: n >= 1 and r >= 2 and r % 2 == 0, n="order", r="modulus", x="point")
def _mult_e_even(n, r, x):
    alt = sum(((-1) ** v * B(n, (x + v) / r) for v in range(r)), Fraction(0))
    return E(n - 1, x) + Fraction(2, n) * pw(r, n - 1) * alt


@identity("mult-Ebar-even", "-(p/2) Ebar_{p-1}(x) = r^(p-1) sum_v (-1)^v Bbar_p((x+v)/r), r even",
          lambda p, r: p >= 1 and r >= 2 and r % 2 == 0, p="order", r="modulus", x="point")
def _mult_ebar_even(p, r, x):
    alt = sum(((-1) ** v * BB(p, (x + v) / r) for v in range(r)), Fraction(0))
    return -Fraction(p, 2) * EB(p - 1, x) - pw(r, p - 1) * alt


@identity("lemma-27", "sum_{mu<a} E_p(c(mu+x)/a + z) = a^-p E_p(az+cx), a odd, c even",
          lambda p, a, c: p >= 0 and positive(a, c) and coprime(a, c) and a % 2 == 1 and c % 2 == 0,
          p="order0", a="modulus", c="modulus", x="shift", z="shift")
def _lemma27(p, a, c, x, z):
    lhs = sum((E(p, c * (mu + x) / a + z) for mu in range(a)), Fraction(0))
    return lhs - pw(a, -p) * E(p, a * z + c * x)


@identity("lemma-11", "sum_{mu<a} (-1)^mu E_p(c(mu+x)/a + z) = a^-p E_p(az+cx), a and c odd",
          lambda p, a, c: p >= 0 and positive(a, c) and coprime(a, c) and a % 2 == 1 and c % 2 == 1,
          p="order0", a="modulus", c="modulus", x="shift", z="shift")
def _lemma11(p, a, c, x, z):
    lhs = sum(((-1) ** mu * E(p, c * (mu + x) / a + z) for mu in range(a)), Fraction(0))
    return lhs - pw(a, -p) * E(p, a * z + c * x)


# ---------------------------------------------------------------------------
# classical two-term reciprocities

def _cs(kind, a, c):
    return classical_sum(kind, a, c)


def _coprime_pair(a, c):
    return positive(a, c) and coprime(a, c)


@identity("classical-dedekind", "s(a,c) + s(c,a) = -1/4 + (a/c + c/a + 1/(ac))/12",
          _coprime_pair, a="modulus", c="modulus")
def _dedekind(a, c):
    rhs = Fraction(-1, 4) + Fraction(1, 12) * (Fraction(a, c) + Fraction(c, a) + Fraction(1, a * c))
    return _cs("dedekind", a, c) + _cs("dedekind", c, a) - rhs


@identity("hb-0", "S(a,c) + S(c,a) = 1, a+c odd",
          lambda a, c: _coprime_pair(a, c) and (a + c) % 2 == 1, a="modulus", c="modulus")
def _hb0(a, c):
    return _cs("S", a, c) + _cs("S", c, a) - 1


@identity("hb-12", "s1(a,c) - 2 s2(c,a) = 1/2 - (1/(ac) + c/a)/2, a even",
          lambda a, c: _coprime_pair(a, c) and a % 2 == 0, a="modulus", c="modulus")
def _hb12(a, c):
    rhs = half - half * (Fraction(1, a * c) + Fraction(c, a))
    return _cs("s1", a, c) - 2 * _cs("s2", c, a) - rhs


@identity("hb-34", "2 s3(a,c) - s4(c,a) = 1 - a/c, c odd",
          lambda a, c: _coprime_pair(a, c) and c % 2 == 1, a="modulus", c="modulus")
def _hb34(a, c):
    return 2 * _cs("s3", a, c) - _cs("s4", c, a) - (1 - Fraction(a, c))


@identity("hb-5", "s5(a,c) + s5(c,a) = 1/2 - 1/(2ac), a+c even",
          lambda a, c: _coprime_pair(a, c) and (a + c) % 2 == 0, a="modulus", c="modulus")
def _hb5(a, c):
    return _cs("s5", a, c) + _cs("s5", c, a) - (half - Fraction(1, 2 * a * c))


# ---------------------------------------------------------------------------
# the alternating Euler-Euler family S_{p,q}

def _hyp_rpS(a, b, c, p=1, q=1):
    return p >= 1 and q >= 1 and _pq_coprime_pos(a, b, c) and (a + b + c) % 2 == 0


@identity("rp-S", "linear relation for S_{p,q}(a,b,c:x,y,z), a+b+c even", _hyp_rpS,
          a="modulus", b="modulus", c="modulus", p="order", q="order",
          x="shift", y="shift", z="shift")
def _rp_S(a, b, c, p, q, x, y, z):
    lhs = pw(a, 1 - p) * pw(b, 1 - q) * S_pq(p, q, a, b, c, x, y, z)
    rhs = Fraction(0)
    for j in range(1, p + 1):
        rhs += comb(p - 1, j - 1) * pw(a, 1 - j) * pw(c, 1 + j - p - q) * S_pq(p + q - j, j, c, -a, b, z, x, y)
    for h in range(1, q + 1):
        rhs += (comb(q - 1, h - 1) * (-1) ** h * pw(b, 1 - h) * pw(c, 1 + h - p - q)
                * S_pq(p + q - h, h, c, b, a, z, -y, x))
    return lhs - rhs


@identity("three-term-12", "S_11(a,b,c:x,y,z) - S_11(c,-a,b:z,x,y) + S_11(c,b,a:z,-y,x) = 0",
          _hyp_rpS, a="modulus", b="modulus", c="modulus", x="shift", y="shift", z="shift")
def _three_term_12(a, b, c, x, y, z):
    return S_pq(1, 1, a, b, c, x, y, z) - S_pq(1, 1, c, -a, b, z, x, y) + S_pq(1, 1, c, b, a, z, -y, x)


def goldberg_S(a: int, b: int, c: int) -> Fraction:
    """sum_{mu=1}^{c-1} (-1)^(mu+1) E_0(a mu/c) E_0(b mu/c)."""
    spec = sums.SumSpec(
        modulus=c,
        first=sums.FunctionSpec(sums.Family.EULER, 0, a),
        second=sums.FunctionSpec(sums.Family.EULER, 0, b),
        weight=sums.Weight.ALTERNATING,
        start=1,
    )
    return -sums.generalized_sum(spec)


@identity("goldberg-12a", "S(a,b,c) + S(c,a,b) + S(c,b,a) = 1", _hyp_rpS,
          a="modulus", b="modulus", c="modulus")
def _goldberg_12a(a, b, c):
    return goldberg_S(a, b, c) + goldberg_S(c, a, b) + goldberg_S(c, b, a) - 1


@identity("cor-S-15", "a c^p S_p(a,c:x,z) + c a^p S_p(c,a:z,x) = sum of Euler products, a+c odd",
          lambda a, c, p: p >= 1 and _coprime_pair(a, c) and (a + c) % 2 == 1,
          a="modulus", c="modulus", p="order", x="shift", z="shift")
def _cor_S_15(a, c, p, x, z):
    lhs = a * pw(c, p) * S_p(p, a, c, x, z) + c * pw(a, p) * S_p(p, c, a, z, x)
    rhs = sum((comb(p - 1, j - 1) * pw(a, p + 1 - j) * pw(c, j) * E(p - j, z) * E(j - 1, x)
               for j in range(1, p + 1)), Fraction(0))
    return lhs - rhs


# ---------------------------------------------------------------------------
# S^(1) and S^(2)

@identity("rp-s12", "linear relation for S^(2)_{p,q}(a,b,c:x,y,z) through S^(1), c even",
          lambda a, b, c, p, q: p >= 1 and q >= 1 and positive(a, b, c) and c % 2 == 0,
          a="modulus", b="modulus", c="modulus", p="order", q="order",
          x="shift", y="shift", z="shift")
def _rp_s12(a, b, c, p, q, x, y, z):
    lhs = pw(a, 1 - p) * pw(b, 1 - q) * S2_pq(p, q, a, b, c, x, y, z)
    first = sum((comb(p, j) * pw(a, 1 - j) * pw(c, 1 + j - p - q) * S1_pq(p + q - j, j, c, -a, b, z, x, y)
                 for j in range(p + 1)), Fraction(0))
    second = sum((comb(q, h) * (-1) ** h * pw(b, 1 - h) * pw(c, 1 + h - p - q)
                  * S1_pq(p + q - h, h, c, b, a, z, -y, x) for h in range(q + 1)), Fraction(0))
    return lhs + Fraction(q, 2) * first + Fraction(p, 2) * second


def _hyp_c_even(a, b, c):
    return _pq_coprime_pos(a, b, c) and c % 2 == 0


@identity("three-term-29", "three-term relation for S^(1)_11 and S^(2)_11 with shifts, c even",
          _hyp_c_even, a="modulus", b="modulus", c="modulus", x="shift", y="shift", z="shift")
def _three_term_29(a, b, c, x, y, z):
    lhs = S1_pq(1, 1, c, b, a, z, -y, x) - S1_pq(1, 1, c, -a, b, z, x, y) - 2 * S2_pq(1, 1, a, b, c, x, y, z)
    rhs = Fraction(a, b * c) * E(1, b * z + c * y) + Fraction(b, a * c) * E(1, a * z + c * x)
    return lhs - rhs


@identity("eq-30", "S^(1)_11(c,b,a) - S^(1)_11(c,-a,b) - 2 S^(2)_11(a,b,c) = -(a/b + b/a)/(2c)",
          _hyp_c_even, a="modulus", b="modulus", c="modulus")
def _eq30(a, b, c):
    lhs = S1_pq(1, 1, c, b, a) - S1_pq(1, 1, c, -a, b) - 2 * S2_pq(1, 1, a, b, c)
    return lhs + Fraction(1, 2 * c) * (Fraction(a, b) + Fraction(b, a))


@identity("hb-12-from-30", "s1(c,a) - 2 s2(a,c) = 1/2 - (a/c + 1/(ac))/2, c even",
          lambda a, c: _coprime_pair(a, c) and c % 2 == 0, a="modulus", c="modulus")
def _hb12_from_30(a, c):
    rhs = half - half * (Fraction(a, c) + Fraction(1, a * c))
    return _cs("s1", c, a) - 2 * _cs("s2", a, c) - rhs


@identity("s1-two-term", "s1(2a',b) + s1(2b',a) = 1/2 - (a/b + b/a)/4, a and b odd",
          lambda a, b: _coprime_pair(a, b) and a % 2 == 1 and b % 2 == 1,
          a="modulus", b="modulus")
def _s1_two_term(a, b):
    a_inv, b_inv = mod_inverse(a, b), mod_inverse(b, a)
    lhs = _cs("s1", 2 * a_inv, b) + _cs("s1", 2 * b_inv, a)
    return lhs - (half - Fraction(1, 4) * (Fraction(a, b) + Fraction(b, a)))


@identity("cor-s12", "reciprocity between S^(1)_p(c,a:z,x) and S^(2)_p(a,c:x,z), c even",
          lambda a, c, p: p >= 1 and _coprime_pair(a, c) and c % 2 == 0,
          a="modulus", c="modulus", p="order", x="shift", z="shift")
def _cor_s12(a, c, p, x, z):
    lhs = p * c * pw(a, p) * Sp1(p, c, a, z, x) - 2 * a * pw(c, p) * Sp2(p, a, c, x, z)
    rhs = sum((comb(p, j) * pw(a, p + 1 - j) * pw(c, j) * E(p - j, z) * B(j, x) for j in range(p + 1)),
              Fraction(0))
    return lhs - rhs - p * E(p, a * z + c * x)


# ---------------------------------------------------------------------------
# S^(3,5) and S^(4)

def _hyp_ac_even(a, b, c, p=1, q=1):
    return p >= 1 and q >= 1 and _pq_coprime_pos(a, b, c) and (a + c) % 2 == 0


@identity("rp-s543", "linear relation for S^(3,5)_{p,q}(a,b,c:x,y,z) through S^(4), a+c even",
          _hyp_ac_even, a="modulus", b="modulus", c="modulus", p="order", q="order",
          x="shift", y="shift", z="shift")
def _rp_s543(a, b, c, p, q, x, y, z):
    lhs = pw(a, 1 - p) * pw(b, 1 - q) * S35_pq(p, q, a, b, c, x, y, z)
    first = sum((comb(p - 1, j - 1) * pw(a, 1 - j) * pw(c, 1 + j - p - q) * S4_pq(p + q - j, j, c, -a, b, z, x, y)
                 for j in range(1, p + 1)), Fraction(0))
    second = sum((comb(q, h) * (-1) ** h * pw(b, 1 - h) * pw(c, 1 + h - p - q)
                  * S35_pq(p + q - h, h, c, b, a, z, -y, x) for h in range(q + 1)), Fraction(0))
    return lhs + Fraction(q, 2) * first - second


@identity("three-term-10", "three-term relation for S^(3,5)_11 and S^(4)_11 with shifts, a+c even",
          _hyp_ac_even, a="modulus", b="modulus", c="modulus", x="shift", y="shift", z="shift")
def _three_term_10(a, b, c, x, y, z):
    lhs = (S35_pq(1, 1, a, b, c, x, y, z) + half * S4_pq(1, 1, c, -a, b, z, x, y)
           + S35_pq(1, 1, c, b, a, z, -y, x))
    return lhs - Fraction(b, a * c) * E(1, c * x + a * z)


@identity("red-13a", "S^(3,5)_11(a,1,c) = s5(a,c) - 1/2", _coprime_pair, a="modulus", c="modulus")
def _red13a(a, c):
    return S35_pq(1, 1, a, 1, c) - (_cs("s5", a, c) - half)


@identity("red-13b", "S^(3,5)_11(1,b,c) = s3(b,c) - 1/2", _coprime_pair, b="modulus", c="modulus")
def _red13b(b, c):
    return S35_pq(1, 1, 1, b, c) - (_cs("s3", b, c) - half)


@identity("red-13c", "S^(4)_11(c,-1,b) = 1 - s4(c,b)", _coprime_pair, b="modulus", c="modulus")
def _red13c(b, c):
    return S4_pq(1, 1, c, -1, b) - (1 - _cs("s4", c, b))


@identity("cor-rp-s5", "a c^p S^(5)_p(a,c:x,z) + c a^p S^(5)_p(c,a:z,x) reciprocity, a and c odd",
          lambda a, c, p: p >= 1 and _coprime_pair(a, c) and a % 2 == 1 and c % 2 == 1,
          a="modulus", c="modulus", p="order", x="shift", z="shift")
def _cor_rp_s5(a, c, p, x, z):
    lhs = a * pw(c, p) * Sp5(p, a, c, x, z) + c * pw(a, p) * Sp5(p, c, a, z, x)
    euler_products = sum((comb(p - 1, j - 1) * pw(a, p + 1 - j) * pw(c, j) * E(p - j, z) * E(j - 1, x)
                          for j in range(1, p + 1)), Fraction(0))
    return lhs + half * euler_products - E(p, a * z + c * x)


@identity("cor-s3s4", "2 b c^q S^(3)_q(b,c:y,z) - q c b^q S^(4)_q(c,b:z,y) reciprocity, c odd",
          lambda b, c, q: q >= 1 and _coprime_pair(b, c) and c % 2 == 1,
          b="modulus", c="modulus", q="order", y="shift", z="shift")
def _cor_s3s4(b, c, q, y, z):
    lhs = 2 * b * pw(c, q) * Sq3(q, b, c, y, z) - q * c * pw(b, q) * Sq4(q, c, b, z, y)
    rhs = 2 * sum((comb(q, h) * pw(b, q + 1 - h) * pw(c, h) * E(q - h, z) * B(h, y) for h in range(q + 1)),
                  Fraction(0))
    return lhs - rhs


# ---------------------------------------------------------------------------
# homogeneity under (a, b, c) -> (da, db, dc)

def _hom(fn, a, b, c, d, p, q, x, y, z):
    return fn(p, q, d * a, d * b, d * c, x, y, z) - d * fn(p, q, a, b, c, x, y, z)


_HOM_DOMAINS = dict(a="modulus", b="modulus", c="modulus", d="scale", p="order", q="order",
                    x="shift", y="shift", z="shift")


@identity("hom-14", "S_{p,q}(da,db,dc:x,y,z) = d S_{p,q}(a,b,c:x,y,z), a+b+c even",
          lambda a, b, c, d, p, q: positive(a, b, c, d, p, q) and (a + b + c) % 2 == 0, **_HOM_DOMAINS)
def _hom14(a, b, c, d, p, q, x, y, z):
    return _hom(S_pq, a, b, c, d, p, q, x, y, z)


@identity("hom-35", "S^(3,5)_{p,q}(da,db,dc:x,y,z) = d S^(3,5)_{p,q}(a,b,c:x,y,z), a+c even",
          lambda a, b, c, d, p, q: positive(a, b, c, d, p, q) and (a + c) % 2 == 0, **_HOM_DOMAINS)
def _hom35(a, b, c, d, p, q, x, y, z):
    return _hom(S35_pq, a, b, c, d, p, q, x, y, z)


@identity("hom-4", "S^(4)_{p,q}(da,db,dc:x,y,z) = d S^(4)_{p,q}(a,b,c:x,y,z), a+b even",
          lambda a, b, c, d, p, q: positive(a, b, c, d, p, q) and (a + b) % 2 == 0, **_HOM_DOMAINS)
def _hom4(a, b, c, d, p, q, x, y, z):
    return _hom(S4_pq, a, b, c, d, p, q, x, y, z)


# ---------------------------------------------------------------------------
# Mikolas' linear relation

def _hyp_mikolas(a, b, c, m, r):
    return _pq_coprime_pos(a, b, c) and m >= 1 and 0 <= r <= m - 1


@identity("mikolas-shifted", "Mikolas relation for shifted sums s_{m-r,r+1}(a,b,c:x,y,z)",
          _hyp_mikolas, a="modulus", b="modulus", c="modulus", m="order", r="index",
          x="shift", y="shift", z="shift")
def _mikolas_shifted(a, b, c, m, r, x, y, z):
    s = mikolas_s
    lhs = (comb(m + 1, r + 1) * pw(a, r + 1) * pw(b, m - r) * pw(c, m) * s(m - r, r + 1, a, b, c, x, y, z)
           - (-1) ** r * pw(c, m + 1) * B(m + 1, b * x - a * y))
    rhs = Fraction(0)
    for j in range(m - r + 1):
        rhs += (comb(m + 1, j) * comb(m - j, r) * pw(a, m + 1 - j) * pw(c, j) * pw(b, m)
                * s(m + 1 - j, j, c, -a, b, z, x, y))
    for h in range(r + 2):
        rhs += (comb(m + 1, h) * comb(m - h, m - 1 - r) * (-1) ** h * pw(b, m + 1 - h) * pw(c, h) * pw(a, m)
                * s(m + 1 - h, h, c, b, a, z, -y, x))
    return lhs - rhs


@identity("mikolas-final", "Mikolas relation for unshifted s_{m,r}(a,b,c)", _hyp_mikolas,
          a="modulus", b="modulus", c="modulus", m="order", r="index")
def _mikolas_final(a, b, c, m, r):
    s = mikolas_s
    lhs = comb(m + 1, r + 1) * pw(a, r + 1) * pw(b, m - r) * pw(c, m) * s(m - r, r + 1, a, b, c)
    for j in range(1, m - r + 1):
        lhs += (comb(m + 1, j) * comb(m - j, r) * (-1) ** (j + 1) * pw(a, m + 1 - j) * pw(c, j) * pw(b, m)
                * s(m + 1 - j, j, c, a, b))
    for j in range(1, r + 2):
        lhs += (comb(m + 1, j) * comb(m - j, m - 1 - r) * (-1) ** (j + 1) * pw(b, m + 1 - j) * pw(c, j)
                * pw(a, m) * s(m + 1 - j, j, c, b, a))
    rhs = ((-1) ** r * pw(c, m + 1) + comb(m, r) * pw(a, m + 1) + comb(m, r + 1) * pw(b, m + 1)) * B(m + 1, 0)
    rhs -= (m + 1) * binom(m - 1, r) * pw(a * b, m) * c * B(m, 0)
    return lhs - rhs


# ---------------------------------------------------------------------------
# public entry points

def get_identity(id_: str) -> Identity:
    try:
        return CATALOG[id_]
    except KeyError:
        raise UnknownIdentity(id_) from None


def normalize_params(ident: Identity, params: Mapping[str, RationalLike]) -> dict:
    out = {}
    for name, domain in ident.params:
        if name not in params:
            raise ValueError(f"identity {ident.id} needs parameter {name!r}")
        value = to_rational(params[name])
        if domain in INTEGER_DOMAINS:
            if value.denominator != 1:
                raise ValueError(f"parameter {name!r} of {ident.id} must be an integer")
            value = value.numerator
        out[name] = value
    return out


def hypotheses_hold(ident: Identity, params: dict) -> bool:
    # positional, in declaration order
    return bool(ident.hypothesis(*(params[k] for k in ident.integer_names)))


def raw_residual(id_: str, params: Mapping[str, RationalLike]) -> Fraction:
    """Residual evaluated regardless of the hypotheses (for necessity probes)."""
    ident = get_identity(id_)
    return ident.residual(**normalize_params(ident, params))


def check_identity(id_: str, params: Mapping[str, RationalLike]) -> IdentityCheck:
    ident = get_identity(id_)
    norm = normalize_params(ident, params)
    if not hypotheses_hold(ident, norm):
        return IdentityCheck(id_, norm, False, None)
    return IdentityCheck(id_, norm, True, ident.residual(**norm))
