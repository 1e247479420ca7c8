"""Weighted double sums of periodic functions over residues.

Every sum family is an instance of one kernel::

    sum_{mu=start}^{c-1} w(mu) * f1(a (mu + z) / c + e1 x) * f2(b (mu + z) / c + e2 y)

where ``w`` is either 1 or ``(-1)**mu`` and ``f1``, ``f2`` are periodic
Bernoulli/Euler functions (plain or "bar").  :func:`generalized_sum`
evaluates it exactly; the named wrappers below fix the families, orders,
weights and shift signs for each classical or generalized sum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd

from . import kernel
from .polyfun import DegreeOutOfRange, PolyTable, default_tables, sawtooth
from .rational import RationalLike, floor_split, to_rational


class Family(Enum):
    BERNOULLI = "B"
    BERNOULLI_BAR = "Bbar"
    EULER = "E"
    EULER_BAR = "Ebar"

    @property
    def code(self) -> int:
        return _KIND_CODES[self]

    @property
    def is_euler(self) -> bool:
        return self in (Family.EULER, Family.EULER_BAR)


_KIND_CODES = {
    Family.BERNOULLI: kernel.BERNOULLI,
    Family.BERNOULLI_BAR: kernel.BERNOULLI_BAR,
    Family.EULER: kernel.EULER,
    Family.EULER_BAR: kernel.EULER_BAR,
}


class Weight(Enum):
    NONE = "none"
    ALTERNATING = "alternating"


@dataclass(frozen=True)
class FunctionSpec:
    family: Family
    order: int
    multiplier: int
    shift: Fraction = Fraction(0)
    shift_sign: int = 1

    def __post_init__(self):
        if self.multiplier == 0:
            raise ValueError("multiplier must be nonzero")
        if self.shift_sign not in (1, -1):
            raise ValueError("shift_sign must be +1 or -1")
        if self.order < 0:
            raise DegreeOutOfRange(f"negative order {self.order}")
        object.__setattr__(self, "shift", to_rational(self.shift))


@dataclass(frozen=True)
class SumSpec:
    modulus: int
    first: FunctionSpec
    second: FunctionSpec
    inner_shift: Fraction = Fraction(0)
    weight: Weight = Weight.NONE
    start: int = 0

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if self.start not in (0, 1):
            raise ValueError("start must be 0 or 1")
        object.__setattr__(self, "inner_shift", to_rational(self.inner_shift))


# Column cache: values of one factor over mu, keyed independently of the
# table (the polynomials do not depend on the table's size).
_COLUMNS: dict = {}
_COLUMN_CACHE_LIMIT = 500_000


def _table_for(family: Family, tables) -> PolyTable:
    bern, euler = default_tables() if tables is None else tables
    return euler if family.is_euler else bern


def factor_column(
    fs: FunctionSpec, modulus: int, inner_shift: Fraction, start: int, tables=None
) -> tuple[list[int], int]:
    """Integer numerators of ``f(m (mu + z) / c + s x)`` for mu in [start, c) and their common denominator."""
    table = _table_for(fs.family, tables)
    table.check(fs.order)
    key = (fs.family, fs.order, fs.multiplier, fs.shift_sign * fs.shift, modulus, inner_shift, start)
    hit = _COLUMNS.get(key)
    if hit is not None:
        return hit
    z, x = inner_shift, fs.shift_sign * fs.shift
    D = modulus * z.denominator * x.denominator
    step = fs.multiplier * x.denominator * z.denominator
    N0 = fs.multiplier * x.denominator * (z.numerator + start * z.denominator) + (
        x.numerator * modulus * z.denominator
    )
    g = gcd(gcd(D, step), N0)
    D, step, N0 = D // g, step // g, N0 // g
    L, ints = table.scaled[fs.order]
    values = kernel.periodic_column(fs.family.code, fs.order, ints, D, N0, step, modulus - start)
    result = (values, L * D**fs.order)
    if len(_COLUMNS) > _COLUMN_CACHE_LIMIT:
        _COLUMNS.clear()
    _COLUMNS[key] = result
    return result


def generalized_sum(spec: SumSpec, tables=None) -> Fraction:
    """Exact value of the weighted double sum described by ``spec``."""
    if spec.start >= spec.modulus:
        # still validate orders so a bad request fails the same way every time
        _table_for(spec.first.family, tables).check(spec.first.order)
        _table_for(spec.second.family, tables).check(spec.second.order)
        return Fraction(0)
    u, du = factor_column(spec.first, spec.modulus, spec.inner_shift, spec.start, tables)
    v, dv = factor_column(spec.second, spec.modulus, spec.inner_shift, spec.start, tables)
    total = kernel.weighted_dot(u, v, spec.weight is Weight.ALTERNATING, spec.start)
    return Fraction(total, du * dv)


def clear_cache() -> None:
    _COLUMNS.clear()


# ---------------------------------------------------------------------------
# Classical sums, evaluated literally from their defining sums over mu = 1..c-1.

CLASSICAL_KINDS = ("dedekind", "S", "s1", "s2", "s3", "s4", "s5")


def classical_sum(kind: str, a: int, c: int) -> Fraction:
    if c < 1:
        raise ValueError(f"modulus must be positive, got {c}")
    if kind not in CLASSICAL_KINDS:
        raise ValueError(f"unknown classical sum {kind!r}")
    total = Fraction(0)
    for mu in range(1, c):
        fl = floor_split(Fraction(a * mu, c)).floor
        if kind == "dedekind":
            total += sawtooth(Fraction(mu, c)) * sawtooth(Fraction(a * mu, c))
        elif kind == "S":
            total += -1 if (mu + 1 + fl) % 2 else 1
        elif kind == "s1":
            total += (-1 if fl % 2 else 1) * sawtooth(Fraction(mu, c))
        elif kind == "s2":
            total += (-1 if mu % 2 else 1) * sawtooth(Fraction(a * mu, c)) * sawtooth(Fraction(mu, c))
        elif kind == "s3":
            total += (-1 if mu % 2 else 1) * sawtooth(Fraction(a * mu, c))
        elif kind == "s4":
            total += -1 if fl % 2 else 1
        else:
            total += (-1 if (mu + fl) % 2 else 1) * sawtooth(Fraction(mu, c))
    return total


def dedekind_sum(a: int, c: int) -> Fraction:
    return classical_sum("dedekind", a, c)


# ---------------------------------------------------------------------------
# Named generalized sums.  Argument order follows the usual notation
# S(a, b, c : x, y, z) with modulus c and inner shift z.

B, BBAR, E, EBAR = Family.BERNOULLI, Family.BERNOULLI_BAR, Family.EULER, Family.EULER_BAR
ALT, NONE = Weight.ALTERNATING, Weight.NONE


def _pair(
    weight, fam1, n1, a, x, fam2, n2, b, y, c, z, sign=1, tables=None
) -> Fraction:
    spec = SumSpec(
        modulus=c,
        first=FunctionSpec(fam1, n1, a, to_rational(x), sign),
        second=FunctionSpec(fam2, n2, b, to_rational(y), sign),
        inner_shift=to_rational(z),
        weight=weight,
    )
    return generalized_sum(spec, tables)


def _euler_order(p: int) -> int:
    if p < 1:
        raise DegreeOutOfRange(f"Euler slot index must be >= 1, got {p}")
    return p - 1


def hwz_s(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    """sum_{v<c} Bbar_p(a (v+z)/c - x) Bbar_q(b (v+z)/c - y)."""
    return _pair(NONE, BBAR, p, a, x, BBAR, q, b, y, c, z, sign=-1, tables=tables)


def carlitz_s(p, a, c, x=0, y=0, tables=None) -> Fraction:
    """sum_{v<c} B_p(a (v+y)/c + x) ((( v+y)/c))."""
    return _pair(NONE, B, p, a, x, BBAR, 1, 1, 0, c, y, tables=tables)


def rademacher_s(a, c, x=0, y=0, tables=None) -> Fraction:
    return _pair(NONE, BBAR, 1, a, x, BBAR, 1, 1, 0, c, y, tables=tables)


def mikolas_s(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    """sum_{v<c} B_p(a (v+z)/c + x) B_q(b (v+z)/c + y); unshifted by default."""
    return _pair(NONE, B, p, a, x, B, q, b, y, c, z, tables=tables)


def apostol_s(p, a, c, tables=None) -> Fraction:
    return _pair(NONE, BBAR, p, a, 0, BBAR, 1, 1, 0, c, 0, tables=tables)


def S_pq(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    """Alternating sum of E_{p-1} and E_{q-1}; generalizes S(a, c)."""
    return _pair(ALT, E, _euler_order(p), a, x, E, _euler_order(q), b, y, c, z, tables=tables)


def S1_pq(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(NONE, E, _euler_order(p), a, x, B, q, b, y, c, z, tables=tables)


def S2_pq(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(ALT, B, p, a, x, B, q, b, y, c, z, tables=tables)


def S35_pq(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(ALT, E, _euler_order(p), a, x, B, q, b, y, c, z, tables=tables)


def S4_pq(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(NONE, E, _euler_order(p), a, x, E, _euler_order(q), b, y, c, z, tables=tables)


def S_p(p, a, c, x=0, z=0, tables=None) -> Fraction:
    return S_pq(p, 1, a, 1, c, x, 0, z, tables)


def Sp1(p, a, c, x=0, z=0, tables=None) -> Fraction:
    return S1_pq(p, 1, a, 1, c, x, 0, z, tables)


def Sp2(p, a, c, x=0, z=0, tables=None) -> Fraction:
    return S2_pq(p, 1, a, 1, c, x, 0, z, tables)


def Sp5(p, a, c, x=0, z=0, tables=None) -> Fraction:
    return S35_pq(p, 1, a, 1, c, x, 0, z, tables)


def Sq3(q, b, c, y=0, z=0, tables=None) -> Fraction:
    """sum_{mu<c} (-1)^mu B_q(b (mu+z)/c + y) E_0((mu+z)/c)."""
    return _pair(ALT, B, q, b, y, E, 0, 1, 0, c, z, tables=tables)


def Sq4(q, c, b, z=0, y=0, tables=None) -> Fraction:
    """sum_{mu<b} E_{q-1}(c (mu+y)/b + z) E_0((mu+y)/b); note the modulus is b."""
    return _pair(NONE, E, _euler_order(q), c, z, E, 0, 1, 0, b, y, tables=tables)


# Bar variants: Ebar/Bbar families with the shifts subtracted.

def S_pq_bar(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(ALT, EBAR, _euler_order(p), a, x, EBAR, _euler_order(q), b, y, c, z, -1, tables)


def S1_bar(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(NONE, EBAR, _euler_order(p), a, x, BBAR, q, b, y, c, z, -1, tables)


def S2_bar(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(ALT, BBAR, p, a, x, BBAR, q, b, y, c, z, -1, tables)


def S35_bar(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    # alternating weight (-1)**mu, like every other member of the family
    return _pair(ALT, EBAR, _euler_order(p), a, x, BBAR, q, b, y, c, z, -1, tables)


def S4_bar(p, q, a, b, c, x=0, y=0, z=0, tables=None) -> Fraction:
    return _pair(NONE, EBAR, _euler_order(p), a, x, EBAR, _euler_order(q), b, y, c, z, -1, tables)


@dataclass(frozen=True)
class SumEntry:
    func: object
    params: tuple[str, ...]
    doc: str = field(default="")


def _classical(kind):
    return SumEntry(lambda a, c, tables=None: classical_sum(kind, a, c), ("a", "c"))


_PQ = ("p", "q", "a", "b", "c", "x", "y", "z")

SUM_REGISTRY: dict[str, SumEntry] = {
    **{kind: _classical(kind) for kind in CLASSICAL_KINDS},
    "hwz": SumEntry(hwz_s, _PQ),
    "carlitz": SumEntry(carlitz_s, ("p", "a", "c", "x", "y")),
    "rademacher": SumEntry(rademacher_s, ("a", "c", "x", "y")),
    "mikolas": SumEntry(mikolas_s, _PQ),
    "apostol": SumEntry(apostol_s, ("p", "a", "c")),
    "Spq": SumEntry(S_pq, _PQ),
    "S1pq": SumEntry(S1_pq, _PQ),
    "S2pq": SumEntry(S2_pq, _PQ),
    "S35pq": SumEntry(S35_pq, _PQ),
    "S4pq": SumEntry(S4_pq, _PQ),
    "Sp": SumEntry(S_p, ("p", "a", "c", "x", "z")),
    "Sp1": SumEntry(Sp1, ("p", "a", "c", "x", "z")),
    "Sp2": SumEntry(Sp2, ("p", "a", "c", "x", "z")),
    "Sp5": SumEntry(Sp5, ("p", "a", "c", "x", "z")),
    "Sq3": SumEntry(Sq3, ("q", "b", "c", "y", "z")),
    "Sq4": SumEntry(Sq4, ("q", "c", "b", "z", "y")),
    "Spq-bar": SumEntry(S_pq_bar, _PQ),
    "S1pq-bar": SumEntry(S1_bar, _PQ),
    "S2pq-bar": SumEntry(S2_bar, _PQ),
    "S35pq-bar": SumEntry(S35_bar, _PQ),
    "S4pq-bar": SumEntry(S4_bar, _PQ),
}

INTEGER_PARAMS = frozenset("pqabcdmnr")


def evaluate_named(name: str, params: dict[str, RationalLike], tables=None) -> Fraction:
    """Evaluate a registry sum from a name -> value mapping (missing shifts default to 0)."""
    try:
        entry = SUM_REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown sum {name!r}") from None
    args = []
    for pname in entry.params:
        if pname in params:
            value = to_rational(params[pname])
            if pname in INTEGER_PARAMS:
                if value.denominator != 1:
                    raise ValueError(f"parameter {pname} must be an integer")
                value = value.numerator
            args.append(value)
        elif pname in INTEGER_PARAMS:
            raise ValueError(f"missing parameter {pname} for sum {name}")
        else:
            args.append(Fraction(0))
    return entry.func(*args, tables=tables)
