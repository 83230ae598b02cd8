"""Exact Todd classes and Riemann-Roch for simplicial toric varieties.

Thin wrapper over the compiled extension: every rational crosses the
boundary as an exact "p/q" string and is converted to fractions.Fraction
here; integers arrive as native Python ints.  No floating point anywhere.
"""

from fractions import Fraction

from ._core import (
    Error,
    Fan,
    IncompleteFanError,
    InvalidFanError,
    ParseError,
    RationalityError,
    is_nef,
    load_fan,
    make_fan,
    validate,
)
from . import _core

__all__ = [
    "Error",
    "Fan",
    "IncompleteFanError",
    "InvalidFanError",
    "ParseError",
    "RationalityError",
    "chi",
    "count_points",
    "ehrhart",
    "group_elements",
    "is_nef",
    "load_fan",
    "make_fan",
    "todd",
    "validate",
]


def group_elements(fan):
    """Stabilizer support set: [{"order": int, "charges": [Fraction]}]."""
    return [
        {"order": el["order"],
         "charges": [Fraction(q) for q in el["charges"]]}
        for el in _core.group_elements(fan)
    ]


def todd(fan):
    """Todd class by degree: {k: [(cone_tuple, Fraction)]}."""
    return {
        degree: [(term["cone"], Fraction(term["coeff"])) for term in terms]
        for degree, terms in _core.todd(fan).items()
    }


def chi(fan, coeffs, scale=1):
    """chi(O(scale * D)) for D = sum coeffs[tau] V(tau); exact Fraction."""
    return Fraction(_core.chi(fan, list(coeffs), scale))


def ehrhart(fan, coeffs, max_n):
    """chi(nD) for n = 0..max_n; dict with nef/cartier flags, the chi table
    as Fractions, and the polynomial coefficients when D is Cartier."""
    r = _core.ehrhart(fan, list(coeffs), max_n)
    poly = r["polynomial"]
    return {
        "nef": r["nef"],
        "cartier": r["cartier"],
        "chi": [Fraction(v) for v in r["chi"]],
        "polynomial": None if poly is None else [Fraction(c) for c in poly],
    }


def count_points(fan, coeffs, scale=1, interior=False):
    """Brute-force lattice-point count of the dilated divisor polytope."""
    return _core.count_points(fan, list(coeffs), scale, interior)
