"""The tensor square of weight-1/2 sections, viewed also as operators.

b_i (x) b_j with b_p = z^p (dz)^{1/2} is keyed by (i, j). Acting on a half-density
supported in negative exponents, b_i (x) b_j extracts the coefficient of
z^{-(j+1)} and returns it times z^i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .algebra import LaurentPoly, Rational, SparseVec, binom, factorial
from .sections import HALF, Section, Sl2, WeightError, monomial_action

__all__ = [
    "TensorElt",
    "tensor_act",
    "lowest_weight",
    "apply_tensor",
    "oj_tensor",
    "DomainError",
    "LemmaHypothesisError",
]


class DomainError(ValueError):
    """Input outside the domain of an operator."""


class LemmaHypothesisError(ValueError):
    pass


class TensorElt(SparseVec):
    __slots__ = ()

    @classmethod
    def _normalize_key(cls, key):
        i, j = key
        if i < 0 or j < 0:
            raise ValueError(f"tensor indices must be nonnegative: {key}")
        return (int(i), int(j))

    def degree_set(self):
        return {i + j for i, j in self._terms}

    def __repr__(self):
        body = " + ".join(f"({v})b{i}@b{j}" for (i, j), v in sorted(self._terms.items(), reverse=True))
        return f"TensorElt({body or '0'})"


def tensor_act(X: Sl2, t: TensorElt) -> TensorElt:
    """Leibniz action with both slots at weight 1/2."""
    tm = HALF.twice_m

    def rule(key: Tuple[int, int], c: Rational):
        i, j = key
        i2, fi = monomial_action(X, tm, i)
        j2, fj = monomial_action(X, tm, j)
        return (((i2, j), c * fi), ((i, j2), c * fj))

    return t.map_terms(rule)


def lowest_weight(s: int) -> TensorElt:
    """l_s = sum_i (-1)^i C(s,i) b_{s-i} (x) b_i."""
    if s < 0:
        raise ValueError("s must be >= 0")
    return TensorElt({(s - i, i): (-1) ** i * binom(s, i) for i in range(s + 1)})


def apply_tensor(t: TensorElt, f: Section) -> Section:
    if f.weight != HALF:
        raise WeightError("operator input must have weight 1/2")
    if f.coeff and f.coeff.max_exp() >= 0:
        raise DomainError("operator domain is H^{1/2}(Delta*)")
    out: Dict[int, Rational] = {}
    for (i, j), c in t.items():
        fv = f.coeff.coeff(-(j + 1))
        if fv:
            out[i] = out.get(i, 0) + c * fv
    return Section(HALF, LaurentPoly(out))


def oj_tensor(s: int, j: int, k: int) -> TensorElt:
    """Closed form of P+ (z^k)^{(s-j)} (d/dz)^j as a tensor.

    sum_{i=0}^{k-s-1} (-1)^j (i+j)!/i! k!/(k-s+j)! b_{k-s-1-i} (x) b_i
    """
    if not 0 <= j <= s:
        raise ValueError(f"need 0 <= j <= s, got j={j}, s={s}")
    if k <= s - j:
        raise LemmaHypothesisError(f"closed form needs k > s-j, got k={k}, s-j={s - j}")
    top = k - s - 1
    if top < 0:
        return TensorElt()
    outer = (-1) ** j * Fraction(factorial(k), factorial(k - s + j))
    return TensorElt({
        (top - i, i): outer * Fraction(factorial(i + j), factorial(i))
        for i in range(top + 1)
    })
