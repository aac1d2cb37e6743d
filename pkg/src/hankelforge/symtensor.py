"""Symmetric tensors over vector fields and the equivariant cross-section.

A basis monomial d_{p_1} . ... . d_{p_s} (with d_p = z^p d/dz) is stored as the
descending tuple (p_1, ..., p_s). The sl(2) action is the Leibniz rule over the
factors, each factor being a weight -1 section.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from .algebra import LaurentPoly, Rational, SparseVec, exact
from .sections import HalfWeight, Section, Sl2, monomial_action

__all__ = [
    "SymTensor",
    "RecursionTable",
    "d_power",
    "sym_act",
    "project_Ps",
    "compute_Cs",
    "build_recursion",
    "build_v",
    "section_sigma",
    "LemmaViolation",
]

VECTOR_FIELD = HalfWeight(-2)


class LemmaViolation(ArithmeticError):
    """An identity that must hold by construction failed to hold."""


class SymTensor(SparseVec):
    """Element of S^s over vector fields; keys are descending power tuples."""

    __slots__ = ("degree",)

    def __init__(self, degree: int, terms=None):
        if degree < 1:
            raise ValueError("symmetric tensor degree must be >= 1")
        self.degree = degree
        super().__init__(terms)
        for key in self._terms:
            if len(key) != degree:
                raise ValueError(f"key {key} does not have degree {degree}")

    @classmethod
    def _normalize_key(cls, key):
        key = tuple(sorted(key, reverse=True))
        if any(p < 0 for p in key):
            raise ValueError(f"powers must be nonnegative: {key}")
        return key

    def _from_clean(self, terms):
        obj = SymTensor.__new__(SymTensor)
        obj.degree = self.degree
        obj._terms = terms
        obj._hash = None
        return obj

    def _check(self, other):
        if not isinstance(other, SymTensor) or other.degree != self.degree:
            return NotImplemented
        return other

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    __hash__ = SparseVec.__hash__

    def total_powers(self):
        return {sum(k) for k in self._terms}

    def coefficient_sum(self) -> Rational:
        return exact(sum(self._terms.values(), 0))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._terms.items(), reverse=True))
        return f"SymTensor[{self.degree}]({{{body}}})"


def d_power(*powers: int, coeff: Rational = 1) -> SymTensor:
    """The monomial d_{p_1} . d_{p_2} . ... as a SymTensor."""
    return SymTensor(len(powers), {tuple(powers): coeff})


def sym_act(X: Sl2, t: SymTensor) -> SymTensor:
    """Leibniz action: act on each factor in turn at weight -1 and sum.

    Equal factors give equal summands, so each distinct power is acted on once
    and weighted by its multiplicity.
    """
    out: Dict[Tuple[int, ...], Rational] = {}
    for key, c in t.items():
        mult = Counter(key)
        for p, m in mult.items():
            q, factor = monomial_action(X, VECTOR_FIELD.twice_m, p)
            if factor == 0:
                continue
            rest = list(key)
            rest.remove(p)
            rest.append(q)
            new_key = tuple(sorted(rest, reverse=True))
            out[new_key] = out.get(new_key, 0) + c * factor * m
    return SymTensor(t.degree, out)


def project_Ps(t: SymTensor) -> Section:
    """Multiply the factors out: d_{p_1} . ... . d_{p_s} goes to z^{sum p}(d/dz)^s."""
    coeffs: Dict[int, Rational] = {}
    for key, c in t.items():
        e = sum(key)
        coeffs[e] = coeffs.get(e, 0) + c
    return Section(HalfWeight(-2 * t.degree), LaurentPoly(coeffs))


@lru_cache(maxsize=None)
def compute_Cs(s: int) -> Rational:
    """The constant C_s with (A+)^{2s} (d_0)^s = C_s (d_2)^s, by repeated raising."""
    if s < 1:
        raise ValueError("s must be >= 1")
    t = SymTensor(s, {(0,) * s: 1})
    for _ in range(2 * s):
        t = sym_act(Sl2.RAISE, t)
    top = (2,) * s
    if set(t.keys()) != {top}:
        raise LemmaViolation(f"A- v is not a multiple of d2^s for s={s}: {t!r}")
    return t[top]


@dataclass(frozen=True)
class RecursionTable:
    """Coefficients A_{pn} of v_{2s+1}, indexed by largest power p and the multiplicity n of d_1."""

    s: int
    entries: Mapping[Tuple[int, int], Rational] = field(default_factory=dict)

    def __getitem__(self, pn: Tuple[int, int]) -> Rational:
        return self.entries.get(pn, 0)

    def admissible(self, p: int, n: int) -> bool:
        return (p + n) % 2 == 1 and 0 <= n <= min(p - 3, 2 * self.s + 1 - p)


@lru_cache(maxsize=None)
def build_recursion(s: int) -> RecursionTable:
    if s < 1:
        raise ValueError("s must be >= 1")
    entries: Dict[Tuple[int, int], Rational] = {}
    table = RecursionTable(s, entries)
    if s == 1:
        return table
    entries[(4, 1)] = exact(Fraction(-compute_Cs(s) * (s - 1), 6))
    for p in range(4, 2 * s + 1):
        for n in range(0, 2 * s + 3):
            val = (2 * s - p - n + 2) * entries.get((p, n - 1), 0) + (n + 1) * entries.get((p, n + 1), 0)
            if val == 0:
                continue
            if not table.admissible(p + 1, n):
                raise LemmaViolation(f"recursion produced A_({p + 1},{n}) outside its range")
            entries[(p + 1, n)] = exact(Fraction(-val) / (p + 1))
    return table


@lru_cache(maxsize=None)
def build_v(s: int) -> SymTensor:
    """The total-power 2s+1 vector whose lowering is C_s (d_2)^s."""
    cs = compute_Cs(s)
    terms: Dict[Tuple[int, ...], Rational] = {(3,) + (2,) * (s - 1): Fraction(-cs, 3)}
    for (p, n), a in build_recursion(s).entries.items():
        m = (2 * s + 1 - p - n) // 2
        zeros = s - m - n - 1
        key = (p,) + (2,) * m + (1,) * n + (0,) * zeros
        terms[key] = terms.get(key, 0) - a
    return SymTensor(s, terms)


@lru_cache(maxsize=None)
def section_sigma(s: int, p: int) -> SymTensor:
    """Image of z^p (d/dz)^s under the cross-section, normalised so P_s(sigma) = z^p (d/dz)^s.

    The finite chain p <= 2s is generated by raising (d_0)^s; the infinite chain
    p >= 2s+1 by raising v_{2s+1}. Each raising step is divided by the factor
    (p - 2s) that A+ picks up on z^p (d/dz)^s.
    """
    if s < 1 or p < 0:
        raise ValueError("need s >= 1 and p >= 0")
    if p == 0:
        return SymTensor(s, {(0,) * s: 1})
    if p == 2 * s + 1:
        v = build_v(s)
        return v.scale(Fraction(1) / v.coefficient_sum())
    prev = section_sigma(s, p - 1)
    return sym_act(Sl2.RAISE, prev).scale(Fraction(1, p - 1 - 2 * s))

