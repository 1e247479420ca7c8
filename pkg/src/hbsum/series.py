"""Truncated bivariate power series and the Omega generating-function check.

Series live in the variables X and Y; a third variable Z is always
eliminated as ``Z = -X - Y`` so that the three cyclic Omega terms can be
added coefficient by coefficient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernel
from .identities import coprime, positive
from .rational import RationalLike, format_rational, to_rational
from .sums import Family, FunctionSpec, factor_column, hwz_s


class TruncatedSeries:
    """Coefficients ``{(i, j): c}`` of ``c X**i Y**j`` with ``i + j <= max_degree``.

    ``low`` is the smallest exponent allowed per variable; it is 0 for power
    series and -1 for the Laurent-truncated generating function of
    :func:`hwz_G_series`.  Absent keys are zero.
    """

    __slots__ = ("max_degree", "coeffs", "low")

    def __init__(self, max_degree: int, coeffs: Mapping[tuple[int, int], RationalLike] | None = None,
                 low: int = 0):
        if max_degree < 2 * low:
            raise ValueError("max_degree below the lowest representable degree")
        self.max_degree = max_degree
        self.low = low
        self.coeffs: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < low or j < low:
                raise ValueError(f"exponent ({i}, {j}) below {low}")
            c = to_rational(c)
            if c and i + j <= max_degree:
                self.coeffs[(i, j)] = c

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, max_degree: int) -> "TruncatedSeries":
        return cls(max_degree)

    @classmethod
    def constant(cls, value: RationalLike, max_degree: int) -> "TruncatedSeries":
        return cls(max_degree, {(0, 0): value})

    @classmethod
    def linear(cls, alpha: RationalLike, beta: RationalLike, max_degree: int) -> "TruncatedSeries":
        """The linear form ``alpha X + beta Y``."""
        return cls(max_degree, {(1, 0): alpha, (0, 1): beta})

    @classmethod
    def variable(cls, name: str, max_degree: int) -> "TruncatedSeries":
        forms = {"X": (1, 0), "Y": (0, 1), "Z": (-1, -1)}
        return cls.linear(*forms[name], max_degree)

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.max_degree != self.max_degree or other.low != self.low:
            raise ValueError(
                f"degree mismatch: {self.max_degree} vs {other.max_degree}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TruncatedSeries(self.max_degree, out, self.low)

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "TruncatedSeries":
        factor = to_rational(factor)
        return TruncatedSeries(self.max_degree, {k: c * factor for k, c in self.coeffs.items()}, self.low)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        if self.low != 0:
            raise ValueError("multiplication is defined for power series only")
        N = self.max_degree
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.coeffs.items():
            for (k, l), d in other.coeffs.items():
                if i + j + k + l <= N:
                    key = (i + k, j + l)
                    out[key] = out.get(key, 0) + c * d
        return TruncatedSeries(N, out)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedSeries.constant(1, self.max_degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, var: str, alpha: RationalLike, beta: RationalLike) -> "TruncatedSeries":
        """Replace ``var`` (``"X"`` or ``"Y"``) by ``alpha X + beta Y``."""
        if var not in ("X", "Y"):
            raise ValueError("can only substitute for X or Y")
        if self.low != 0:
            raise ValueError("substitution is defined for power series only")
        N = self.max_degree
        form = TruncatedSeries.linear(alpha, beta, N)
        other = TruncatedSeries.variable("Y" if var == "X" else "X", N)
        out = TruncatedSeries.zero(N)
        for (i, j), c in self.coeffs.items():
            k_sub, k_keep = (i, j) if var == "X" else (j, i)
            out = out + ((form**k_sub) * (other**k_keep)).scale(c)
        return out

    # inspection ---------------------------------------------------------
    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.max_degree, self.low, self.coeffs) == (other.max_degree, other.low, other.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.max_degree}, {self.coeffs!r}, low={self.low})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree_slice(self, degree: int) -> dict[tuple[int, int], Fraction]:
        """Every monomial of total ``degree`` (zeros included), highest X power first."""
        lo = self.low
        return {
            (i, degree - i): self[(i, degree - i)]
            for i in range(degree - lo, lo - 1, -1)
        }

    def is_homogeneous(self, degree: int) -> bool:
        return all(i + j == degree for i, j in self.coeffs)

    def to_text(self) -> str:
        keys = sorted(self.coeffs, key=lambda k: (k[0] + k[1], k[0]))
        return "".join(f"{i} {j} {format_rational(self.coeffs[(i, j)])}\n" for i, j in keys)


# ---------------------------------------------------------------------------
# Omega

_LINEAR = {"X": (1, 0), "Y": (0, 1), "Z": (-1, -1)}

# (multiplier slots, shift slots, leading variables) for the three cyclic terms
PERMUTATIONS = (
    (("a", "b", "c"), ("x", "y", "z"), ("X", "Y")),
    (("c", "a", "b"), ("z", "x", "y"), ("Z", "X")),
    (("b", "c", "a"), ("y", "z", "x"), ("Y", "Z")),
)


@dataclass(frozen=True)
class OmegaParams:
    a: int
    b: int
    c: int
    d: int
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        if not positive(self.a, self.b, self.c) or not coprime(self.a, self.b, self.c):
            raise ValueError("a, b, c must be pairwise coprime positive integers")
        if self.d < 1 or self.d % 2:
            raise ValueError(f"d must be an even positive integer, got {self.d}")
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def slot(self, permutation: int):
        mults, shifts, variables = PERMUTATIONS[permutation]
        A, B, C = (self.d * getattr(self, m) for m in mults)
        s1, s2, s3 = (getattr(self, s) for s in shifts)
        return (A, B, C), (s1, s2, s3), variables


@lru_cache(maxsize=4096)
def _form_product(u: tuple[int, int], v: tuple[int, int], m: int, n: int) -> tuple:
    """Monomial expansion of ``(u0 X + u1 Y)**m (v0 X + v1 Y)**n`` as ((i, j), int) pairs."""
    out: dict[tuple[int, int], int] = {}
    for i in range(m + 1):
        ci = math.comb(m, i) * u[0] ** i * u[1] ** (m - i)
        if not ci:
            continue
        for k in range(n + 1):
            ck = math.comb(n, k) * v[0] ** k * v[1] ** (n - k)
            if ck:
                key = (i + k, m - i + n - k)
                out[key] = out.get(key, 0) + ci * ck
    return tuple((k, c) for k, c in out.items() if c)


def sbar_matrix(params: OmegaParams, permutation: int, max_index: int, tables=None):
    """``M[p-1][q-1]`` = alternating Ebar_{p-1} Ebar_{q-1} sum with subtracted shifts, for p, q <= max_index + 1."""
    (A, B, C), (s1, s2, s3), _ = params.slot(permutation)
    cols_u, den_u, cols_v, den_v = [], [], [], []
    for k in range(max_index + 1):
        u, du = factor_column(FunctionSpec(Family.EULER_BAR, k, A, s1, -1), C, s3, 0, tables)
        v, dv = factor_column(FunctionSpec(Family.EULER_BAR, k, B, s2, -1), C, s3, 0, tables)
        cols_u.append(list(u))
        cols_v.append(list(v))
        den_u.append(du)
        den_v.append(dv)
    raw = kernel.dot_matrix(cols_u, cols_v, True, 0)
    return [
        [Fraction(raw[i][j], den_u[i] * den_v[j]) for j in range(max_index + 1)]
        for i in range(max_index + 1)
    ]


def _omega_terms(params: OmegaParams, N: int, permutation: int, tables=None):
    """Yield ``(p, q, coefficient_dict)`` for every term with p + q - 2 <= N."""
    (A, B, _), _, (uname, vname) = params.slot(permutation)
    u, v = _LINEAR[uname], _LINEAR[vname]
    M = sbar_matrix(params, permutation, N, tables)
    for k1 in range(N + 1):
        for k2 in range(N + 1 - k1):
            s = M[k1][k2]
            if not s:
                continue
            # pq / (4 p! q!) = 1 / (4 (p-1)! (q-1)!)
            scale = s / (4 * math.factorial(k1) * math.factorial(k2) * A**k1 * B**k2)
            yield k1 + 1, k2 + 1, {key: scale * c for key, c in _form_product(u, v, k1, k2)}


def omega_term(params: OmegaParams, p: int, q: int, N: int, permutation: int = 0, tables=None) -> TruncatedSeries:
    """The single (p, q) contribution to one Omega permutation."""
    for tp, tq, coeffs in _omega_terms(params, N, permutation, tables):
        if (tp, tq) == (p, q):
            return TruncatedSeries(N, coeffs)
    return TruncatedSeries.zero(N)


def omega_series(params: OmegaParams, N: int = 6, permutation: int = 0, tables=None) -> TruncatedSeries:
    out: dict[tuple[int, int], Fraction] = {}
    for _, _, coeffs in _omega_terms(params, N, permutation, tables):
        for key, c in coeffs.items():
            out[key] = out.get(key, 0) + c
    return TruncatedSeries(N, out)


def omega_total(params: OmegaParams, N: int = 6, tables=None) -> TruncatedSeries:
    total = TruncatedSeries.zero(N)
    for perm in range(3):
        total = total + omega_series(params, N, perm, tables)
    return total


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class MembershipVerdict:
    """Whether ``(x, y, z) = (da, db, dc) R + (a0, b0, c0)`` for some real R and integers.

    ``parity_class`` is the parity of ``a0 + b0 + c0``.  ``witnesses`` lists
    one witness per solution R modulo 1; ``witness`` is the first of them.
    """

    member: bool
    parity_class: Parity | None = None
    witness: tuple[Fraction, int, int, int] | None = None
    witnesses: tuple[tuple[Fraction, int, int, int], ...] = field(default=())


def omega_membership(x: RationalLike, y: RationalLike, z: RationalLike, da: int, db: int, dc: int) -> MembershipVerdict:
    x, y, z = to_rational(x), to_rational(y), to_rational(z)
    if not positive(da, db, dc):
        raise ValueError("multipliers must be positive")
    found = []
    # da R = x - a0 pins R to (x + k) / da; k over a full residue system covers R mod 1
    for k in range(da):
        R = (x + k) / da
        R -= R.numerator // R.denominator
        b0, c0 = y - db * R, z - dc * R
        if b0.denominator == 1 and c0.denominator == 1:
            a0 = x - da * R
            found.append((R, int(a0), int(b0), int(c0)))
    if not found:
        return MembershipVerdict(False)
    found.sort()
    parities = {(a0 + b0 + c0) % 2 for _, a0, b0, c0 in found}
    if len(parities) > 1:
        parity = Parity.AMBIGUOUS
    else:
        parity = Parity.ODD if parities.pop() else Parity.EVEN
    return MembershipVerdict(True, parity, found[0], tuple(found))


RHS_MODES = ("quarter", "witness-sum")


def reciprocity_rhs(verdict: MembershipVerdict, mode: str = "quarter") -> Fraction | None:
    """Constant the three Omega terms should sum to; None when undetermined.

    ``quarter``: (-1)**(a0+b0+c0+1)/4 for members, 0 otherwise; undetermined
    if the witnesses disagree in parity.
    ``witness-sum``: the same signed quarter summed over every witness R mod 1.
    """
    if mode not in RHS_MODES:
        raise ValueError(f"unknown rhs mode {mode!r}")
    if not verdict.member:
        return Fraction(0)
    if mode == "witness-sum":
        return sum((Fraction(-1 if (a0 + b0 + c0) % 2 == 0 else 1, 4)
                    for _, a0, b0, c0 in verdict.witnesses), Fraction(0))
    if verdict.parity_class is Parity.AMBIGUOUS:
        return None
    return Fraction(-1, 4) if verdict.parity_class is Parity.EVEN else Fraction(1, 4)


@dataclass
class OmegaReport:
    params: OmegaParams
    degree: int
    rhs_mode: str
    verdict: MembershipVerdict
    rhs: Fraction | None
    total: TruncatedSeries
    residual: TruncatedSeries

    @property
    def by_degree(self) -> dict[int, dict[tuple[int, int], Fraction]]:
        return {D: self.residual.degree_slice(D) for D in range(self.degree + 1)}

    @property
    def higher_degree_zero(self) -> bool:
        return all(i + j == 0 for i, j in self.residual.coeffs)

    @property
    def status(self) -> str:
        if not self.higher_degree_zero:
            return "fail"
        if self.rhs is None:
            return "indeterminate"
        return "pass" if self.residual.is_zero() else "fail"

    @property
    def branch(self) -> str:
        if not self.verdict.member:
            return "non-member"
        return "ambiguous" if self.verdict.parity_class is Parity.AMBIGUOUS else "member"


def check_omega_reciprocity(params: OmegaParams, N: int = 6, rhs: str = "quarter", tables=None) -> OmegaReport:
    """Sum the three cyclic Omega series and subtract the predicted constant.

    With an undetermined constant (``rhs="quarter"`` and ambiguous parity)
    the degree-0 coefficient is left as is and only degrees >= 1 are judged.
    """
    total = omega_total(params, N, tables)
    verdict = omega_membership(params.x, params.y, params.z,
                               params.d * params.a, params.d * params.b, params.d * params.c)
    constant = reciprocity_rhs(verdict, rhs)
    residual = total if constant is None else total - TruncatedSeries.constant(constant, N)
    return OmegaReport(params, N, rhs, verdict, constant, total, residual)


# ---------------------------------------------------------------------------
# Hall-Wilson-Zagier generating function, for inspection and export

def hwz_G_series(a: int, b: int, c: int, x: RationalLike = 0, y: RationalLike = 0, z: RationalLike = 0,
                 N: int = 4, tables=None) -> TruncatedSeries:
    """``sum_{p,q>=0} s_{p,q}/(p! q!) (X/a)**(p-1) (Y/b)**(q-1)`` truncated at total degree N.

    Exponents start at -1 in each variable; no expansion of 1/(X+Y) is attempted.
    """
    out: dict[tuple[int, int], Fraction] = {}
    for p in range(N + 3):
        for q in range(N + 3 - p):
            s = hwz_s(p, q, a, b, c, x, y, z, tables=tables)
            if s:
                out[(p - 1, q - 1)] = (s / (math.factorial(p) * math.factorial(q))
                                       * Fraction(a) ** (1 - p) * Fraction(b) ** (1 - q))
    return TruncatedSeries(N, out, low=-1)


def iter_pairwise_coprime(limit: int) -> Iterable[tuple[int, int, int]]:
    for a in range(1, limit + 1):
        for b in range(1, limit + 1):
            for c in range(1, limit + 1):
                if coprime(a, b, c):
                    yield a, b, c
