"""Self-verification suites run by ``hankelforge verify``.

Each suite is a function ``(max_s) -> list[Check]``. Ranges are the documented
ones, capped at ``max_s``.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List

from .algebra import LaurentPoly, binom, factorial, poly_derive, poly_mul
from .forms import adjointness_report, transvect
from .hankel import (
    apply_B,
    b_as_tensor,
    build_Ds,
    build_Ms,
    build_Ns,
    coeffs_a,
    matrix_window,
    pascal_lower,
    pascal_lower_inv,
    pascal_upper,
    pascal_upper_inv,
    ExactMatrix,
    solve_for_a,
)
from .identities import equivariance_expansion_A, equivariance_expansion_B, grid_A, grid_B
from .sections import HALF, HalfWeight, Section, Sl2, act_sl2, commutator, lie_half, proj_plus
from .symtensor import SymTensor, build_v, compute_Cs, project_Ps, section_sigma, sym_act
from .tensor_rep import apply_tensor, lowest_weight, oj_tensor, tensor_act

__all__ = ["Check", "SUITES", "run_suites"]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _mono(k, m2):
    return Section(HalfWeight(m2), LaurentPoly.monomial(k))


def suite_algebra(max_s: int) -> List[Check]:
    rng = random.Random(0)
    out = []
    pascal = all(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k) for n in range(1, 41) for k in range(0, n + 1))
    out.append(Check("algebra", "pascal_rule", pascal))
    ok = True
    for _ in range(50):
        p = LaurentPoly({rng.randint(-8, 8): rng.randint(-5, 5) for _ in range(4)})
        j, k = rng.randint(0, 3), rng.randint(0, 3)
        ok &= poly_derive(p, j + k) == poly_derive(poly_derive(p, j), k)
    out.append(Check("algebra", "derive_composition", ok))
    return out


def suite_sections(max_s: int) -> List[Check]:
    out = []
    ok = True
    for m2 in range(-2 * max_s, 6):
        for p in range(0, 8):
            u = _mono(p, m2)
            ok &= commutator(Sl2.CARTAN, Sl2.RAISE, u) == act_sl2(Sl2.RAISE, u).scale(2)
            ok &= commutator(Sl2.CARTAN, Sl2.LOWER, u) == act_sl2(Sl2.LOWER, u).scale(-2)
            ok &= commutator(Sl2.RAISE, Sl2.LOWER, u) == act_sl2(Sl2.CARTAN, u)
    out.append(Check("sections", "sl2_brackets", ok, "[E,A+]=2A+, [E,A-]=-2A-, [A+,A-]=E"))
    ok = all(act_sl2(Sl2.RAISE, _mono(2 * s, -2 * s)).is_zero() for s in range(1, max_s + 1))
    out.append(Check("sections", "finite_chain_terminates", ok))
    ok = True
    for k in range(0, 8):
        for n in range(1, 6):
            f = Section(HALF, LaurentPoly.monomial(-n))
            x = LaurentPoly.monomial(k)
            ok &= apply_B(1, x, f) == proj_plus(lie_half(Section(HalfWeight(-2), x), f)).scale(2)
    out.append(Check("sections", "normalization_bridge", ok))
    return out


def suite_symtensor(max_s: int) -> List[Check]:
    out = []
    top = min(max_s, 12)
    ok = all(
        sym_act(Sl2.LOWER, build_v(s)) == SymTensor(s, {(2,) * s: compute_Cs(s)})
        for s in range(1, top + 1)
    )
    out.append(Check("symtensor", "cond_lowering_of_v", ok))
    ok = all(compute_Cs(s) == factorial(2 * s) for s in range(1, top + 1))
    out.append(Check("symtensor", "Cs_equals_(2s)!", ok))
    ok = True
    for s in range(1, top + 1):
        for key in build_v(s).keys():
            ok &= sum(key) == 2 * s + 1 and 3 <= key[0] <= 2 * s + 1 and all(p <= 2 for p in key[1:])
    out.append(Check("symtensor", "v_key_structure", ok))
    ok = True
    for s in range(1, min(top, 4) + 1):
        for p in range(0, 2 * s + 6):
            ok &= project_Ps(section_sigma(s, p)) == _mono(p, -2 * s)
        for p in range(2 * s + 1, 2 * s + 5):
            ok &= sym_act(Sl2.RAISE, section_sigma(s, p)) == section_sigma(s, p + 1).scale(p - 2 * s)
    out.append(Check("symtensor", "sigma_is_section_and_chainwise_equivariant", ok))
    return out


def suite_tensor(max_s: int) -> List[Check]:
    out = []
    top = min(max_s, 60)
    ok = all(tensor_act(Sl2.LOWER, lowest_weight(s)).is_zero() for s in range(0, top + 1))
    ok &= all(tensor_act(Sl2.CARTAN, lowest_weight(s)) == lowest_weight(s).scale(2 * (s + 1)) for s in range(top + 1))
    out.append(Check("tensor", "lowest_weight", ok))
    ok = True
    for s in range(0, min(max_s, 6) + 1):
        for j in range(s + 1):
            for k in range(s + 1, 2 * s + 9):
                t = oj_tensor(s, j, k)
                for n in range(1, k - s + 1):
                    direct = proj_plus(Section(HALF, poly_mul(poly_derive(LaurentPoly.monomial(k), s - j), poly_derive(LaurentPoly.monomial(-n), j))))
                    ok &= apply_tensor(t, Section(HALF, LaurentPoly.monomial(-n))) == direct
    out.append(Check("tensor", "oj_closed_form_oracle", ok))
    return out


def suite_hankel(max_s: int) -> List[Check]:
    out = []
    ok = all(b_as_tensor(s, LaurentPoly.monomial(2 * s + 1)) == lowest_weight(s) for s in range(0, min(max_s, 12) + 1))
    out.append(Check("hankel", "lowest_weight_condition", ok))
    ok = True
    for s in range(0, min(max_s, 4) + 1):
        for k in range(2 * s + 1, 2 * s + 9):
            base = b_as_tensor(s, LaurentPoly.monomial(k))
            for X in Sl2:
                image = act_sl2(X, _mono(k, -2 * s))
                ok &= b_as_tensor(s, image.coeff) == tensor_act(X, base)
        for k in range(0, 2 * s + 1):
            ok &= all(apply_B(s, LaurentPoly.monomial(k), Section(HALF, LaurentPoly.monomial(-n))).is_zero() for n in range(1, 2 * s + 5))
    out.append(Check("hankel", "equivariance_and_kernel", ok))
    ok = True
    for s in range(0, min(max_s, 4) + 1):
        for k in range(0, 2 * s + 9):
            t = b_as_tensor(s, LaurentPoly.monomial(k))
            for n in range(1, k + 1):
                f = Section(HALF, LaurentPoly.monomial(-n))
                ok &= apply_B(s, LaurentPoly.monomial(k), f) == apply_tensor(t, f)
    out.append(Check("hankel", "operator_tensor_consistency", ok))
    ok = True
    for s in range(0, max_s + 1):
        L, U, D = pascal_lower(s), pascal_upper(s), build_Ds(s)
        I = ExactMatrix.identity(s + 1)
        ok &= build_Ms(s) == build_Ns(s) @ D == L @ U @ D
        ok &= L @ pascal_lower_inv(s) == I and U @ pascal_upper_inv(s) == I
        ok &= solve_for_a(s) == coeffs_a(s)
    out.append(Check("hankel", "pascal_factorization_and_solve", ok))
    w = matrix_window(0, LaurentPoly({1: 1, 2: 2, 3: 3, 4: -1}), 5, 5)
    ok = all(w.entries[m][n] == w.entries[m + 1][n - 1] for m in range(4) for n in range(1, 5))
    out.append(Check("hankel", "classical_hankel_antidiagonals", ok))
    return out


def suite_forms(max_s: int) -> List[Check]:
    out = []
    ok = True
    for s in range(0, min(max_s, 5) + 1):
        for a in range(0, 7):
            for b in range(0, 7):
                f, g = LaurentPoly.monomial(a), LaurentPoly.monomial(b)
                ok &= transvect(s, f, g).coeff == transvect(s, g, f).coeff.scale((-1) ** s)
    out.append(Check("forms", "transvectant_symmetry", ok))
    lams = {}
    ok = True
    for s in range(0, min(max_s, 5) + 1):
        rep = adjointness_report(s, 2 * s + 9)
        ok &= rep.defined
        lams[s] = rep.lam
    ok &= lams.get(0) == 1
    out.append(Check("forms", "adjointness", ok, ", ".join(f"lambda_{s}={v}" for s, v in lams.items())))
    return out


def suite_identities(max_s: int) -> List[Check]:
    top = min(max_s, 8)
    out = [
        Check("identities", "identity_A_grid", all(r.equal for r in grid_A(top, 12))),
        Check("identities", "identity_B_grid", all(r.equal for r in grid_B(top, 12))),
        Check(
            "identities",
            "A_is_expansion_of_equivariance",
            all(equivariance_expansion_A(s, k) for s in range(1, min(top, 4) + 1) for k in range(2 * s + 1, 2 * s + 9)),
        ),
        Check(
            "identities",
            "B_is_expansion_of_lowest_weight_orbit",
            all(
                equivariance_expansion_B(s, i, j)
                for s in range(1, min(top, 4) + 1)
                for i in range(0, 7)
                for j in range(0, 7)
                if i + j >= s
            ),
        ),
    ]
    return out


SUITES: Dict[str, Callable[[int], List[Check]]] = {
    "algebra": suite_algebra,
    "sections": suite_sections,
    "symtensor": suite_symtensor,
    "tensor": suite_tensor,
    "hankel": suite_hankel,
    "forms": suite_forms,
    "identities": suite_identities,
}


def run_suites(names: List[str], max_s: int, jobs: int = 1) -> List[Check]:
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda n: SUITES[n](max_s), names))
    else:
        results = [SUITES[n](max_s) for n in names]
    return [c for group in results for c in group]
