"""Exact evaluation of Dedekind-type and Hardy-Berndt sums and checks of their reciprocity laws."""
from .kernel import BACKEND
from .polyfun import (
    DegreeOutOfRange,
    bbar_fun,
    bernoulli_fun,
    bernoulli_poly,
    ebar_fun,
    euler_fun,
    euler_poly,
    fourier_partial,
    sawtooth,
)
from .rational import format_rational, parse_rational
from .sums import dedekind_sum, evaluate_named, generalized_sum

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegreeOutOfRange",
    "bbar_fun",
    "bernoulli_fun",
    "bernoulli_poly",
    "dedekind_sum",
    "ebar_fun",
    "euler_fun",
    "euler_poly",
    "evaluate_named",
    "format_rational",
    "fourier_partial",
    "generalized_sum",
    "parse_rational",
    "sawtooth",
]
