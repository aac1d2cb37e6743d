"""Binomial identities that come out of the equivariance of B_{s+1}.

Family A expands B(A+ z^k) = A+ B(z^k); family B expands
B((A+)^r z^{2s+1}) = (A+)^r l_s with r = i + j - s. Both are checked exactly on
finite grids, and the ``equivariance_expansion_*`` functions recompute the
operator equations to confirm each identity is their coefficientwise expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

from .algebra import LaurentPoly, Rational, binom, factorial
from .hankel import b_as_tensor
from .sections import HalfWeight, Section, Sl2, act_sl2
from .tensor_rep import lowest_weight, tensor_act

__all__ = [
    "IdentityResult",
    "identity_A",
    "identity_B",
    "equivariance_expansion_A",
    "equivariance_expansion_B",
    "grid_A",
    "grid_B",
]


@dataclass(frozen=True)
class IdentityResult:
    family: str
    params: Tuple[int, ...]
    lhs: Rational
    rhs: Rational

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def identity_A(s: int, k: int, l: int) -> IdentityResult:
    if s < 1:
        raise ValueError(f"identity A needs s >= 1, got s={s}")
    if k < 2 * s + 1:
        raise ValueError(f"identity A needs k >= 2s+1, got k={k}, s={s}")
    if not 0 <= l <= k - s:
        raise ValueError(f"identity A needs 0 <= l <= k-s, got l={l}")
    lhs = sum(
        (-1) ** j * binom(s + j, j) * binom(k, s - j)
        * (binom(l + j, j) * (k - s) - binom(l + j - 1, j - 1) * l)
        for j in range(s + 1)
    )
    rhs = sum(
        (-1) ** j * binom(s + j, j) * binom(k + 1, s - j) * binom(l + j, j) * (k - 2 * s)
        for j in range(s + 1)
    )
    return IdentityResult("A", (s, k, l), lhs, rhs)


def identity_B(s: int, i: int, j: int, variant: str = "corrected") -> IdentityResult:
    """sum_l (-1)^l C(s+l,l) C(j+l,l) C(i+j+s+1,s-l) = sum_l (-1)^l C(s,l) C(j,l) C(i,s-l).

    ``variant="verbatim"`` uses C(s,j) in place of C(s,l) on the right, the form in
    which the identity is often quoted; it is false in general (e.g. s=1, i=0, j=2).
    """
    if s < 1:
        raise ValueError(f"identity B needs s >= 1, got s={s}")
    if i < 0 or j < 0:
        raise ValueError("identity B needs i, j >= 0")
    if i + j < s:
        raise ValueError(f"identity B needs i+j >= s, got i+j={i + j}, s={s}")
    if variant not in ("corrected", "verbatim"):
        raise ValueError(f"unknown variant {variant!r}")
    lhs = sum(
        (-1) ** l * binom(s + l, l) * binom(j + l, l) * binom(i + j + s + 1, s - l)
        for l in range(s + 1)
    )
    outer = (lambda l: binom(s, l)) if variant == "corrected" else (lambda l: binom(s, j))
    rhs = sum((-1) ** l * outer(l) * binom(j, l) * binom(i, s - l) for l in range(s + 1))
    return IdentityResult("B", (s, i, j), lhs, rhs)


def equivariance_expansion_A(s: int, k: int) -> bool:
    """Check B(A+ z^k) = A+ B(z^k) and that its coefficients are identity A's two sides.

    At b_{k-s-l} (x) b_l the left tensor carries identity A's rhs and the right
    tensor its lhs.
    """
    sym = act_sl2(Sl2.RAISE, Section(HalfWeight(-2 * s), LaurentPoly.monomial(k)))
    left = b_as_tensor(s, sym.coeff)
    right = tensor_act(Sl2.RAISE, b_as_tensor(s, LaurentPoly.monomial(k)))
    if left != right:
        return False
    support = {(k - s - l, l) for l in range(k - s + 1)}
    if not set(left.keys()) <= support:
        return False
    for l in range(k - s + 1):
        res = identity_A(s, k, l)
        if left[(k - s - l, l)] != res.rhs or right[(k - s - l, l)] != res.lhs:
            return False
    return True


def equivariance_expansion_B(s: int, i: int, j: int) -> bool:
    """Check the coefficient of b_i (x) b_j on both sides of B((A+)^r z^{2s+1}) = (A+)^r l_s.

    Both sides carry a factor r! relative to identity B.
    """
    r = i + j - s
    sym = Section(HalfWeight(-2 * s), LaurentPoly.monomial(2 * s + 1))
    for _ in range(r):
        sym = act_sl2(Sl2.RAISE, sym)
    left = b_as_tensor(s, sym.coeff)
    right = lowest_weight(s)
    for _ in range(r):
        right = tensor_act(Sl2.RAISE, right)
    res = identity_B(s, i, j)
    return left == right and left[(i, j)] == factorial(r) * res.lhs and right[(i, j)] == factorial(r) * res.rhs


def grid_A(max_s: int = 8, k_span: int = 12) -> Iterator[IdentityResult]:
    for s in range(1, max_s + 1):
        for k in range(2 * s + 1, 2 * s + k_span + 1):
            for l in range(k - s + 1):
                yield identity_A(s, k, l)


def grid_B(max_s: int = 8, ij_max: int = 12, variant: str = "corrected") -> Iterator[IdentityResult]:
    for s in range(1, max_s + 1):
        for i in range(ij_max + 1):
            for j in range(ij_max + 1):
                if i + j >= s:
                    yield identity_B(s, i, j, variant)
