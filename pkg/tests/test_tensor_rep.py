from fractions import Fraction

import pytest

from hankelforge.algebra import LaurentPoly, poly_derive, poly_mul, z
from hankelforge.sections import HALF, Section, Sl2, proj_plus
from hankelforge.tensor_rep import (
    DomainError,
    LemmaHypothesisError,
    TensorElt,
    apply_tensor,
    lowest_weight,
    oj_tensor,
    tensor_act,
)


def T(d):
    return TensorElt(d)


def half(p):
    return Section(HALF, p)


def test_tensor_act_examples():
    assert tensor_act(Sl2.LOWER, T({(1, 0): 1})) == T({(0, 0): -1})
    assert tensor_act(Sl2.RAISE, T({(0, 0): 1})) == T({(1, 0): 1, (0, 1): 1})
    for s in range(6):
        for i in range(s + 1):
            assert tensor_act(Sl2.CARTAN, T({(s - i, i): 1})) == T({(s - i, i): 2 * (s + 1)})


def test_lowest_weight_examples():
    assert lowest_weight(0) == T({(0, 0): 1})
    assert lowest_weight(1) == T({(1, 0): 1, (0, 1): -1})
    assert lowest_weight(2) == T({(2, 0): 1, (1, 1): -2, (0, 2): 1})


@pytest.mark.parametrize("s", [0, 1, 2, 5, 13, 40, 60])
def test_lowest_weight_is_annihilated_and_has_weight(s):
    l = lowest_weight(s)
    assert tensor_act(Sl2.LOWER, l).is_zero()
    assert tensor_act(Sl2.CARTAN, l) == l.scale(2 * (s + 1))


def test_tensor_brackets():
    t = T({(3, 1): 2, (0, 4): -1, (2, 2): Fraction(1, 3)})
    act = lambda X, u: tensor_act(X, u)
    br = lambda X, Y: act(X, act(Y, t)) - act(Y, act(X, t))
    assert br(Sl2.CARTAN, Sl2.RAISE) == act(Sl2.RAISE, t).scale(2)
    assert br(Sl2.CARTAN, Sl2.LOWER) == act(Sl2.LOWER, t).scale(-2)
    assert br(Sl2.RAISE, Sl2.LOWER) == act(Sl2.CARTAN, t)


def test_apply_examples():
    assert apply_tensor(T({(0, 0): 1}), half(z(-1))) == half(z(0))
    assert apply_tensor(T({(0, 0): 1}), half(z(-2))).is_zero()
    assert apply_tensor(T({(2, 1): 1}), half(z(-2, 3) + z(-1))) == half(z(2, 3))


def test_apply_domain():
    with pytest.raises(DomainError, match="H\\^\\{1/2\\}\\(Delta\\*\\)"):
        apply_tensor(T({(0, 0): 1}), half(z(0)))


def test_oj_examples():
    assert oj_tensor(0, 0, 1) == T({(0, 0): 1})
    assert oj_tensor(1, 1, 3) == T({(1, 0): -1, (0, 1): -2})
    assert oj_tensor(1, 0, 3) == T({(1, 0): 3, (0, 1): 3})
    assert oj_tensor(3, 3, 2).is_zero()


def test_oj_hypothesis():
    with pytest.raises(LemmaHypothesisError):
        oj_tensor(3, 1, 2)


def direct_oj(s, j, k, n):
    """P+ of [d^{s-j} z^k][d^j z^{-n}], straight from polynomial arithmetic."""
    prod = poly_mul(poly_derive(z(k), s - j), poly_derive(z(-n), j))
    return proj_plus(half(prod))


@pytest.mark.parametrize("s", range(0, 7))
def test_oj_closed_form_against_direct_computation(s):
    for j in range(s + 1):
        for k in range(s + 1, 2 * s + 9):
            t = oj_tensor(s, j, k)
            for n in range(1, k - s + 1):
                assert apply_tensor(t, half(z(-n))) == direct_oj(s, j, k, n)
            # nothing beyond depth k-s is extracted
            assert apply_tensor(t, half(z(-(k - s + 1)))).is_zero()
