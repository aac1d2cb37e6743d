"""Higher-order Hankel operators B_{s+1}(x) = P+ L_s(x) P-.

L_s(x) = sum_j a_j x^{(s-j)} (d/dz)^j with a_j = C(s,j) C(s+j,j) / s!. The
coefficients are also recovered by solving the lowest-weight condition
M_s a = l_s through the Pascal factorisation M_s = L_s U_s D_s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import LaurentPoly, Rational, binom, exact, factorial, poly_derive
from .sections import HALF, Section, WeightError, half_density, proj_plus
from .tensor_rep import DomainError, TensorElt, oj_tensor

__all__ = [
    "coeffs_a",
    "DiffOp",
    "build_Ls",
    "apply_B",
    "OperatorWindow",
    "matrix_window",
    "ExactMatrix",
    "build_Ms",
    "build_Ns",
    "build_Ds",
    "pascal_lower",
    "pascal_upper",
    "pascal_lower_inv",
    "pascal_upper_inv",
    "lowest_rhs",
    "FactoredSolve",
    "factored_solve",
    "solve_for_a",
    "b_as_tensor",
]


def coeffs_a(s: int) -> List[Rational]:
    if s < 0:
        raise ValueError("s must be >= 0")
    return [exact(Fraction(binom(s, j) * binom(s + j, j), factorial(s))) for j in range(s + 1)]


@dataclass(frozen=True)
class DiffOp:
    """sum_j coeffs[j](z) (d/dz)^j."""

    order: int
    coeffs: Tuple[LaurentPoly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"order {self.order} operator needs {self.order + 1} coefficients")

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        out = LaurentPoly()
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + c * poly_derive(f, j)
        return out


def _require_holomorphic(x: LaurentPoly) -> None:
    if x and x.min_exp() < 0:
        raise DomainError("symbol must be holomorphic on the disk")


def build_Ls(s: int, x: LaurentPoly) -> DiffOp:
    _require_holomorphic(x)
    a = coeffs_a(s)
    return DiffOp(s, tuple(poly_derive(x, s - j).scale(a[j]) for j in range(s + 1)))


def apply_B(s: int, x: LaurentPoly, f: Section) -> Section:
    if f.weight != HALF:
        raise WeightError("B_{s+1}(x) acts on weight-1/2 sections")
    if f.coeff and f.coeff.max_exp() >= 0:
        raise DomainError("operator domain is H^{1/2}(Delta*)")
    return proj_plus(half_density(build_Ls(s, x).apply(f.coeff)))


@dataclass(frozen=True)
class OperatorWindow:
    """entries[m][n] = coefficient of z^m in B_{s+1}(x) z^{-(n+1)} (dz)^{1/2}; row 0 first."""

    s: int
    rows: int
    cols: int
    entries: Tuple[Tuple[Rational, ...], ...]

    def paper_orientation(self) -> Tuple[Tuple[Rational, ...], ...]:
        """Rows bottom-up, as the matrices are usually drawn."""
        return tuple(reversed(self.entries))


def matrix_window(s: int, x: LaurentPoly, rows: int, cols: int) -> OperatorWindow:
    L = build_Ls(s, x)
    cols_out = []
    for n in range(cols):
        image = proj_plus(half_density(L.apply(LaurentPoly.monomial(-(n + 1)))))
        cols_out.append([image.coeff.coeff(m) for m in range(rows)])
    entries = tuple(tuple(cols_out[n][m] for n in range(cols)) for m in range(rows))
    return OperatorWindow(s, rows, cols, entries)


class ExactMatrix:
    """Small dense matrix with exact entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Rational]]):
        self.rows = tuple(tuple(exact(v) for v in r) for r in rows)
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("ExactMatrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rule(cls, dim: int, rule) -> "ExactMatrix":
        return cls([[rule(i, j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "ExactMatrix":
        return cls.from_rule(dim, lambda i, j: int(i == j))

    @classmethod
    def diag(cls, values: Sequence[Rational]) -> "ExactMatrix":
        return cls.from_rule(len(values), lambda i, j: values[i] if i == j else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            cols = list(zip(*other.rows))
            return ExactMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        return [exact(sum(a * b for a, b in zip(r, other))) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({[list(map(str, r)) for r in self.rows]})"


def build_Ms(s: int) -> ExactMatrix:
    top = factorial(2 * s + 1)
    return ExactMatrix.from_rule(
        s + 1,
        lambda i, j: (-1) ** j * (factorial(i + j) // factorial(i)) * (top // factorial(s + j + 1)),
    )


def build_Ns(s: int) -> ExactMatrix:
    return ExactMatrix.from_rule(s + 1, lambda i, j: factorial(i + j) // (factorial(i) * factorial(j)))


def _d_diag(s: int) -> List[int]:
    top = factorial(2 * s + 1)
    return [(-1) ** j * factorial(j) * (top // factorial(s + j + 1)) for j in range(s + 1)]


def build_Ds(s: int) -> ExactMatrix:
    return ExactMatrix.diag(_d_diag(s))


def pascal_lower(s: int) -> ExactMatrix:
    return ExactMatrix.from_rule(s + 1, lambda i, j: binom(i, j))


def pascal_upper(s: int) -> ExactMatrix:
    return ExactMatrix.from_rule(s + 1, lambda i, j: binom(j, i))


def pascal_lower_inv(s: int) -> ExactMatrix:
    return ExactMatrix.from_rule(s + 1, lambda i, j: (-1) ** (i + j) * binom(i, j))


def pascal_upper_inv(s: int) -> ExactMatrix:
    return ExactMatrix.from_rule(s + 1, lambda i, j: (-1) ** (i + j) * binom(j, i))


def lowest_rhs(s: int) -> List[int]:
    """Coordinates of l_s in the basis b_{s-i} (x) b_i: ((-1)^i C(s,i))_i."""
    return [(-1) ** i * binom(s, i) for i in range(s + 1)]


@dataclass(frozen=True)
class FactoredSolve:
    s: int
    after_lower: Tuple[Rational, ...]
    after_upper: Tuple[Rational, ...]
    a: Tuple[Rational, ...]


def factored_solve(s: int) -> FactoredSolve:
    """Solve M_s a = l_s as a = D^{-1} U^{-1} L^{-1} l_s, checking both intermediate closed forms."""
    rhs = lowest_rhs(s)
    y = pascal_lower_inv(s) @ rhs
    if y != [(-1) ** j * binom(s + j, j) for j in range(s + 1)]:
        raise ArithmeticError(f"L_s^-1 l_s closed form failed for s={s}")
    w = pascal_upper_inv(s) @ y
    if w != [(-1) ** j * binom(s + j, j) * binom(2 * s + 1, s + j + 1) for j in range(s + 1)]:
        raise ArithmeticError(f"U_s^-1 L_s^-1 l_s closed form failed for s={s}")
    d = _d_diag(s)
    if 0 in d:
        raise ZeroDivisionError(f"D_{s} is singular")
    a = tuple(exact(Fraction(wj, dj)) for wj, dj in zip(w, d))
    return FactoredSolve(s, tuple(y), tuple(w), a)


def solve_for_a(s: int) -> List[Rational]:
    return list(factored_solve(s).a)


def b_as_tensor(s: int, x: LaurentPoly) -> TensorElt:
    """B_{s+1}(x) as an element of the tensor square: sum_j a_j O_j(x), linearly in x."""
    _require_holomorphic(x)
    a = coeffs_a(s)
    out = TensorElt()
    for k, c in x.items():
        if k < s + 1:
            continue
        for j in range(s + 1):
            out = out + oj_tensor(s, j, k).scale(c * a[j])
    return out
