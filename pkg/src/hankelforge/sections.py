"""Weighted differentials f(z)(dz)^m and the infinitesimal sl(2) action on them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .algebra import LaurentPoly, Rational, exact, poly_derive, z

__all__ = [
    "HalfWeight",
    "HALF",
    "Section",
    "Sl2",
    "act_sl2",
    "monomial_action",
    "commutator",
    "proj_plus",
    "proj_minus",
    "lie_half",
    "half_density",
    "WeightError",
]


class WeightError(ValueError):
    """A section of the wrong weight was passed to an operation."""


@dataclass(frozen=True, order=True)
class HalfWeight:
    """The weight m, stored as the integer 2m."""

    twice_m: int

    @classmethod
    def of(cls, m: Rational) -> "HalfWeight":
        t = Fraction(m) * 2
        if t.denominator != 1:
            raise ValueError(f"weight must be a half-integer, got {m}")
        return cls(int(t))

    @property
    def m(self) -> Rational:
        return exact(Fraction(self.twice_m, 2))

    def __add__(self, other: "HalfWeight") -> "HalfWeight":
        return HalfWeight(self.twice_m + other.twice_m)

    def __str__(self):
        return str(self.m)


HALF = HalfWeight(1)


@dataclass(frozen=True)
class Section:
    """f(z)(dz)^m.

    Weight 1/2 sections with support in exponents >= 0 model H^{1/2} of the disk,
    support in exponents <= -1 the exterior disk. A weight -s section is the
    s-fold vector field x(z)(d/dz)^s.
    """

    weight: HalfWeight
    coeff: LaurentPoly

    def __add__(self, other: "Section") -> "Section":
        if self.weight != other.weight:
            raise WeightError(f"cannot add weights {self.weight} and {other.weight}")
        return Section(self.weight, self.coeff + other.coeff)

    def __sub__(self, other: "Section") -> "Section":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "Section":
        return Section(self.weight, self.coeff.scale(c))

    def __mul__(self, other: "Section") -> "Section":
        # tensor product of line bundle sections: weights add
        return Section(self.weight + other.weight, self.coeff * other.coeff)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()


def half_density(coeff: LaurentPoly) -> Section:
    return Section(HALF, coeff)


class Sl2(enum.Enum):
    LOWER = "A-"
    RAISE = "A+"
    CARTAN = "E"


def act_sl2(X: Sl2, u: Section) -> Section:
    """A- = -d/dz, A+ = z^2 d/dz + 2m z, E = 2z d/dz + 2m, at the weight of ``u``."""
    f = u.coeff
    two_m = u.weight.twice_m
    df = poly_derive(f, 1)
    if X is Sl2.LOWER:
        g = -df
    elif X is Sl2.RAISE:
        g = z(2) * df + z(1, two_m) * f
    elif X is Sl2.CARTAN:
        g = z(1, 2) * df + f.scale(two_m)
    else:
        raise TypeError(f"not an sl(2) generator: {X!r}")
    return Section(u.weight, g)


def monomial_action(X: Sl2, twice_m: int, p: int) -> Tuple[int, int]:
    """Image of z^p under X at weight m as (exponent, factor).

    Every generator sends a monomial to a multiple of a single monomial, which
    is what the sparse tensor actions are built on.
    """
    if X is Sl2.LOWER:
        return p - 1, -p
    if X is Sl2.RAISE:
        return p + 1, p + twice_m
    if X is Sl2.CARTAN:
        return p, 2 * p + twice_m
    raise TypeError(f"not an sl(2) generator: {X!r}")


def commutator(X: Sl2, Y: Sl2, u: Section) -> Section:
    return act_sl2(X, act_sl2(Y, u)) - act_sl2(Y, act_sl2(X, u))


def _require_half(u: Section) -> None:
    if u.weight != HALF:
        raise WeightError("projection defined only on weight-1/2 sections")


def proj_plus(u: Section) -> Section:
    _require_half(u)
    return Section(u.weight, u.coeff.truncate(lo=0))


def proj_minus(u: Section) -> Section:
    _require_half(u)
    return Section(u.weight, u.coeff.truncate(hi=-1))


def lie_half(x: Section, u: Section) -> Section:
    """Lie derivative of a half-density along a vector field: ((1/2)x'f + x f')(dz)^{1/2}."""
    if x.weight != HalfWeight(-2):
        raise WeightError(f"vector field must have weight -1, got {x.weight}")
    if u.weight != HALF:
        raise WeightError(f"half-density must have weight 1/2, got {u.weight}")
    xs, f = x.coeff, u.coeff
    g = (poly_derive(xs, 1) * f).scale(Fraction(1, 2)) + xs * poly_derive(f, 1)
    return Section(HALF, g)
