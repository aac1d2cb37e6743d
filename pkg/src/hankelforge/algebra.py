"""Exact scalars, binomial combinatorics and sparse Laurent polynomials.

Rationals are :class:`fractions.Fraction`; integral values are kept as plain
``int`` wherever possible so that integer-only computations stay fast.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Tuple, Union

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "exact",
    "factorial",
    "falling",
    "binom",
    "SparseVec",
    "LaurentPoly",
    "poly_derive",
    "poly_mul",
    "z",
]


def exact(value: Rational) -> Rational:
    """Collapse an integral Fraction to ``int``; reject floats."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"exact arithmetic only: got {type(value).__name__}")


def _cap_from_env() -> int:
    raw = os.environ.get("HANKELFORGE_FACTORIAL_CAP", "512")
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"HANKELFORGE_FACTORIAL_CAP must be an integer, got {raw!r}")
    return max(cap, 0)


FACTORIAL_CAP = _cap_from_env()
_FACT = [1]
for _n in range(1, FACTORIAL_CAP + 1):
    _FACT.append(_FACT[-1] * _n)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    if n <= FACTORIAL_CAP:
        return _FACT[n]
    return math.factorial(n)


def falling(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); the empty product for k = 0."""
    out = 1
    for t in range(k):
        out *= n - t
    return out


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the conventions used throughout the package.

    ``k < 0`` gives 0 regardless of ``n`` (checked first), ``k > n >= 0`` gives
    0, and a negative upper index with ``k >= 0`` is rejected.
    """
    if k < 0:
        return 0
    if n < 0:
        raise ValueError("negative upper index unsupported")
    if k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


class SparseVec:
    """Immutable sparse vector over the rationals, keyed by hashable basis labels.

    Zero coefficients are never stored. Subclasses fix the key type and add
    structure (multiplication, actions); this class only knows the vector
    space operations.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Hashable, Rational], Iterable[Tuple[Hashable, Rational]], None] = None):
        acc: Dict[Hashable, Rational] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                key = self._normalize_key(key)
                acc[key] = acc.get(key, 0) + exact(c)
        self._terms = {k: exact(v) for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def _normalize_key(cls, key):
        return key

    @classmethod
    def _from_clean(cls, terms: Dict[Hashable, Rational]):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # mapping-ish surface
    @property
    def terms(self) -> Mapping[Hashable, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __getitem__(self, key) -> Rational:
        return self._terms.get(self._normalize_key(key), 0)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # vector space
    def _check(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = exact(s)
            else:
                out.pop(k, None)
        return self._from_clean(out)

    def __neg__(self):
        return self._from_clean({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c: Rational):
        c = exact(c)
        if c == 0:
            return self._from_clean({})
        return self._from_clean({k: exact(v * c) for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def map_terms(self, rule: Callable[[Hashable, Rational], Iterable[Tuple[Hashable, Rational]]]):
        """Linear extension of ``rule`` which sends one term to a list of terms."""
        out: Dict[Hashable, Rational] = {}
        for k, v in self._terms.items():
            for k2, c in rule(k, v):
                if c:
                    out[k2] = out.get(k2, 0) + c
        return self._from_clean({k: exact(v) for k, v in out.items() if v != 0})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{k!r}: {v}" for k, v in sorted(self._terms.items()))
        return f"{type(self).__name__}({{{body}}})"


class LaurentPoly(SparseVec):
    """Finite Laurent polynomial in ``z``: a sparse map exponent -> coefficient."""

    __slots__ = ()

    @classmethod
    def _normalize_key(cls, key):
        if not isinstance(key, int) or isinstance(key, bool):
            raise TypeError(f"Laurent exponents are integers, got {key!r}")
        return key

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: Rational) -> "LaurentPoly":
        return cls({0: c})

    def coeff(self, e: int) -> Rational:
        return self._terms.get(e, 0)

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        return super().__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        return super().__sub__(other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def derive(self, k: int = 1) -> "LaurentPoly":
        return poly_derive(self, k)

    def truncate(self, lo: int | None = None, hi: int | None = None) -> "LaurentPoly":
        """Keep exponents in the closed window [lo, hi] (None = unbounded)."""
        return LaurentPoly._from_clean({
            e: c for e, c in self._terms.items()
            if (lo is None or e >= lo) and (hi is None or e <= hi)
        })

    def __str__(self):
        from .parser import format_poly

        return format_poly(self)


def poly_derive(p: LaurentPoly, k: int) -> LaurentPoly:
    """k-th formal derivative: ``c z^e`` goes to ``c e(e-1)...(e-k+1) z^(e-k)``."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k == 0:
        return p
    out = {}
    for e, c in p.items():
        f = falling(e, k)
        if f:
            out[e - k] = exact(c * f)
    return LaurentPoly._from_clean(out)


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    out: Dict[int, Rational] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly._from_clean({e: exact(c) for e, c in out.items() if c != 0})


def z(exponent: int = 1, coeff: Rational = 1) -> LaurentPoly:
    """Shorthand for the monomial ``coeff * z**exponent``."""
    return LaurentPoly.monomial(exponent, coeff)
