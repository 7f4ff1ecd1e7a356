import cmath
import math

import pytest
from gmpy2 import mpq as Q

from heckman_opdam.rootsys import root_system
from heckman_opdam.trigpoly import (
    TrigPoly,
    act_s0,
    act_weyl,
    substitute_cosh,
    symmetrize_signs,
)

x = TrigPoly.monomial((1,))
one = TrigPoly.constant(1)


def test_ring_examples():
    assert TrigPoly.monomial((1, 2)) * TrigPoly.monomial((-3, 1)) == TrigPoly.monomial((-2, 3))
    assert x + TrigPoly.zero(1) == x
    assert (x + 1) * (TrigPoly.monomial((-1,)) + 1) == TrigPoly(1, {(1,): 1, (-1,): 1, (0,): 2})


def test_no_zero_coefficients():
    f = TrigPoly(2, {(1, 0): 0, (0, 1): Q(1, 2)})
    assert f.support() == {(0, 1)}
    assert (f - f).terms == {}
    assert f - f == 0


def test_rank_mismatch():
    with pytest.raises(ValueError):
        TrigPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        TrigPoly.constant(1) + TrigPoly.constant(2)


def test_act_weyl_examples():
    d = root_system("BC", 2)
    assert act_weyl(d, (1,), TrigPoly.monomial((1, 0))) == TrigPoly.monomial((0, 1))
    assert act_weyl(d, (2,), TrigPoly.monomial((0, 1))) == TrigPoly.monomial((0, -1))
    f = TrigPoly(2, {(1, 0): 1, (0, 1): 2})
    assert act_weyl(d, (1,), f) == TrigPoly(2, {(0, 1): 1, (1, 0): 2})


def test_act_s0_examples():
    d = root_system("BC", 1)
    assert act_s0(d, one) == x
    assert act_s0(d, x) == one
    f = TrigPoly(1, {(3,): 2, (-2,): Q(1, 3)})
    assert act_s0(d, act_s0(d, f)) == f


def test_eval_examples():
    f = TrigPoly(1, {(1,): 1, (-1,): 1, (0,): 2})
    assert f.eval((0,)) == 4
    assert one.eval((1.7 + 2j,)) == 1
    assert abs(x.eval((math.log(3),)) - 3) < 1e-12


def test_eval_overflow():
    with pytest.raises(OverflowError):
        TrigPoly.monomial((2,)).eval_real((400,))


def test_eval_at_zero_examples():
    f = TrigPoly(1, {(-1,): 1, (1,): Q(1, 3), (0,): Q(2, 3)})
    assert f.eval_at_zero() == 2
    assert TrigPoly.zero(3).eval_at_zero() == 0
    assert TrigPoly.monomial((4, -2)).eval_at_zero() == 1


def test_substitute_cosh_examples():
    y = TrigPoly.monomial((1,))
    assert substitute_cosh(y) == TrigPoly(1, {(1,): Q(1, 4), (0,): Q(1, 2), (-1,): Q(1, 4)})
    assert substitute_cosh(one) == one
    assert substitute_cosh(y * y) == TrigPoly(
        1, {(2,): Q(1, 16), (1,): Q(4, 16), (0,): Q(6, 16), (-1,): Q(4, 16), (-2,): Q(1, 16)})
    with pytest.raises(ValueError):
        substitute_cosh(TrigPoly.monomial((-1,)))


def test_substitute_cosh_numeric():
    f = TrigPoly(2, {(2, 1): 3, (0, 1): Q(-1, 2)})
    g = substitute_cosh(f)
    for p in [(0.3, -1.1), (1.5, 0.2)]:
        y = [math.cosh(t / 2) ** 2 for t in p]
        assert abs(g.eval_real(p) - f.eval_poly(y)) < 1e-10


def test_symmetrize_signs():
    f = TrigPoly(2, {(1, -2): 4})
    assert symmetrize_signs(f) == TrigPoly(2, {(1, 2): 1, (1, -2): 1, (-1, 2): 1, (-1, -2): 1})


def test_json_round_trip():
    f = TrigPoly(3, {(1, -2, 0): Q(-7, 3), (0, 0, 5): 2})
    text = f.to_json()
    assert TrigPoly.from_json(text) == f
    assert '"c": "-7/3"' in text


def test_eval_weyl_action():
    d = root_system("BC", 2)
    f = TrigPoly(2, {(1, -2): 3, (0, 1): Q(1, 5)})
    z = (0.4 + 0.1j, -0.7)
    # s_1 s_2 acts on points as well; (w f)(z) = f(w^{-1} z)
    g = act_weyl(d, (1, 2), f)
    winv_z = (z[1], -z[0])  # s_2 s_1 z
    assert abs(g.eval(z) - f.eval(winv_z)) < 1e-12
    h = act_s0(root_system("BC", 2), f)
    sb = (-z[0], z[1])
    assert abs(h.eval(z) - cmath.exp(z[0]) * f.eval(sb)) < 1e-12
