from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from qcms.jacobian import jacobian, primitive_dim, primitive_dim_formula


def _inversions(seq):
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def test_omega_cubed_sign():
    # φ1φ4φ2φ5φ3φ6 needs 3 transpositions to sort
    ctx = jacobian(3)
    top = ctx.phi_product(range(1, 7))
    assert _inversions((1, 4, 2, 5, 3, 6)) == 3
    assert ctx.omega_power(3) == top * -6


def test_omega_power_edges():
    ctx = jacobian(2)
    assert ctx.omega_power(0) == ctx.sig.one()
    assert not ctx.omega_power(3)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_integrals(g):
    ctx = jacobian(g)
    for k in range(g):
        assert ctx.integrate(ctx.omega_power(k)) == 0
    assert ctx.integrate(ctx.omega_power(g)) == factorial(g)
    pair = ctx.phi(1) * ctx.phi(1 + g)
    assert ctx.integrate(pair * ctx.omega_power(g - 1)) == factorial(g - 1)


def test_volume_sign_brute_force():
    # sign of the permutation (1, 1+g, 2, 2+g, ...) computed by counting inversions
    for g in range(1, 7):
        order = [x for i in range(1, g + 1) for x in (i, i + g)]
        assert jacobian(g).volume_sign == (-1) ** _inversions(order)


def test_chern_and_segre_examples():
    ctx = jacobian(3)
    w = ctx.omega
    assert ctx.chern_class(0) == ctx.sig.one()
    assert ctx.chern_class(1) == w * 4
    assert ctx.chern_class(2) == w * w * 8
    assert not ctx.chern_class(4)
    assert ctx.segre_class(1, "E") == w * -4
    assert ctx.segre_class(2, "E_zeta") == w * w * 32
    assert ctx.segre_class(0, "E") == ctx.segre_class(0, "E_zeta") == ctx.sig.one()
    with pytest.raises(ValueError):
        ctx.segre_class(1, "F")


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_chern_times_segre_is_one(g):
    ctx = jacobian(g)
    for k in range(1, g + 1):
        total = ctx.sig.zero()
        for i in range(k + 1):
            total = total + ctx.chern_class(i) * ctx.segre_class(k - i, "E")
        assert not total


def test_primitive_dims():
    assert primitive_dim(3, 2) == 14
    for g in range(1, 6):
        assert primitive_dim(g, 0) == 1
        assert primitive_dim(g, 1) == 2 * g
        for k in range(g + 1):
            assert primitive_dim(g, k) == comb(2 * g, k) - (comb(2 * g, k - 2) if k > 1 else 0)
    with pytest.raises(ValueError):
        primitive_dim(2, 3)


def test_primitive_dim_formula_small():
    assert primitive_dim_formula(2, 2) == comb(4, 2) - 1
