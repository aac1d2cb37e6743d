"""Transvectants and the two Hankel bilinear forms they induce.

``form_K`` pairs the conjugated symbol against the transvectant of (f, g) on the
circle; ``form_Ktilde`` reads off the coefficient of B_{s+1}(x) in the tensor
square. The two are proportional, and ``adjointness_report`` measures the constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import LaurentPoly, Rational, binom, exact, poly_derive
from .hankel import b_as_tensor
from .sections import HalfWeight, Section, WeightError
from .tensor_rep import DomainError

__all__ = [
    "transvect",
    "residue_pair",
    "conj_symbol",
    "form_K",
    "form_Ktilde",
    "BilinearReport",
    "adjointness_report",
]


def transvect(s: int, f: LaurentPoly, g: LaurentPoly, start: int = 0) -> Section:
    """sum_{j=start}^s (-1)^j C(s,j)^2 f^{(s-j)} g^{(j)}, a weight s+1 section.

    ``start=1`` drops the j = 0 term.
    """
    out = LaurentPoly()
    for j in range(start, s + 1):
        out = out + (poly_derive(f, s - j) * poly_derive(g, j)).scale((-1) ** j * binom(s, j) ** 2)
    return Section(HalfWeight(2 * s + 2), out)


def residue_pair(u: Section) -> Rational:
    """Integral of a one-density over the circle, with the 2 pi i dropped."""
    if u.weight != HalfWeight(2):
        raise WeightError(f"residue pairing needs a weight-1 density, got weight {u.weight}")
    return u.coeff.coeff(-1)


def conj_symbol(s: int, x: LaurentPoly) -> Section:
    """Conjugate of x(z)(d/dz)^s on |z| = 1: z^k (d/dz)^s goes to (-1)^s z^{2s-k} (d/dz)^s."""
    if x and x.min_exp() < 0:
        raise DomainError("symbol must be holomorphic on the disk")
    sign = (-1) ** s
    return Section(HalfWeight(-2 * s), LaurentPoly({2 * s - k: sign * c for k, c in x.items()}))


def form_K(s: int, x: LaurentPoly, f: LaurentPoly, g: LaurentPoly, start: int = 0) -> Rational:
    for name, p in (("f", f), ("g", g)):
        if p and p.min_exp() < 0:
            raise DomainError(f"{name} must be supported on exponents >= 0")
    return residue_pair(conj_symbol(s, x) * transvect(s, f, g, start=start))


def form_Ktilde(s: int, x: LaurentPoly, i: int, j: int) -> Rational:
    return b_as_tensor(s, x)[(i, j)]


# (a, b) are the exponents of f = z^a, g = z^b; these give the matching tensor index
PAIRINGS = {
    "swap": lambda a, b: (b, a),
    "direct": lambda a, b: (a, b),
}


@dataclass
class BilinearReport:
    s: int
    lam: Optional[Rational]
    pairing: Optional[str]
    samples: List[Tuple[int, int, int, Rational, Rational]] = field(default_factory=list)
    offending: Optional[Tuple[int, int, int, Rational, Rational]] = None

    @property
    def defined(self) -> bool:
        return self.lam is not None

    def to_dict(self):
        from .serialize import rational_json

        return {
            "s": self.s,
            "kind": "adjointness",
            "lambda": rational_json(self.lam) if self.lam is not None else "undefined",
            "pairing": self.pairing,
            "entries": [
                {"k": k, "a": a, "b": b, "K": rational_json(kv), "Ktilde": rational_json(kt)}
                for k, a, b, kv, kt in self.samples
            ],
            "offending": None if self.offending is None else list(self.offending[:3]),
        }


def _sweep(s, k_max, pairing, start):
    samples = []
    lam = None
    for k in range(2 * s + 1, k_max + 1):
        x = LaurentPoly.monomial(k)
        tensor = b_as_tensor(s, x)
        for a in range(k - s):
            b = k - s - 1 - a
            kv = form_K(s, x, LaurentPoly.monomial(a), LaurentPoly.monomial(b), start=start)
            kt = tensor[PAIRINGS[pairing](a, b)]
            sample = (k, a, b, kv, kt)
            samples.append(sample)
            if lam is None and kv != 0:
                lam = exact(Fraction(kt) / kv)
            if lam is None:
                if kt != 0:
                    return None, samples, sample
            elif kt != lam * kv:
                return None, samples, sample
    return lam, samples, None


def adjointness_report(s: int, k_max: int, start: int = 0) -> BilinearReport:
    """Fit K~ = lambda K over monomial symbols z^k, 2s+1 <= k <= k_max.

    Only f = z^a, g = z^b with a + b = k - s - 1 are sampled; off that line both
    forms vanish identically. The conjugation of f reverses the slot order, so the
    swapped pairing is tried first.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    first_failure = None
    for pairing in PAIRINGS:
        lam, samples, bad = _sweep(s, k_max, pairing, start)
        if bad is None and lam is not None:
            return BilinearReport(s, lam, pairing, samples)
        if first_failure is None:
            first_failure = BilinearReport(s, None, None, samples, bad)
    return first_failure
