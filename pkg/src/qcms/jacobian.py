"""Cohomology of the Jacobian: the exterior algebra on 2g odd classes.

``φ1 … φ2g`` is a symplectic basis of H¹(J) with ``φi`` paired to ``φ(i+g)``,
and ``ω = Σ φi φ(i+g)``. Integration over [J] is normalized so that
``∫ω^g = g!``.
"""

from __future__ import annotations

from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .algebra import AlgebraElement, AlgebraSignature, monomial_sign
from .linalg import rank
from .scalar import Scalar

__all__ = [
    "JacobianContext",
    "jacobian",
    "omega_power",
    "integrate_J",
    "chern_class",
    "segre_class",
    "primitive_dim",
    "primitive_dim_formula",
]


class JacobianContext:
    def __init__(self, g: int):
        if g < 1:
            raise ValueError("genus must be at least 1")
        self.g = g
        self.sig = AlgebraSignature(odd=tuple((f"φ{i}", 1) for i in range(1, 2 * g + 1)))
        self.top_mask = (1 << (2 * g)) - 1
        # sign of φ1 φ(1+g) φ2 φ(2+g) ... relative to φ1 φ2 ... φ2g
        sign, acc = 1, 0
        for i in range(g):
            pair = (1 << i) | (1 << (i + g))
            sign *= monomial_sign(acc, pair)
            acc |= pair
        self.volume_sign = sign
        self.omega = self.sig.zero()
        for i in range(g):
            self.omega = self.omega + self.phi(i + 1) * self.phi(i + 1 + g)
        self._omega_powers = [self.sig.one()]

    def phi(self, i: int) -> AlgebraElement:
        """The class φi, 1-based."""
        if not 1 <= i <= 2 * self.g:
            raise IndexError(f"φ{i} out of range for genus {self.g}")
        return self.sig.gen(f"φ{i}")

    def phi_product(self, indices) -> AlgebraElement:
        out = self.sig.one()
        for i in indices:
            out = out * self.phi(i)
        return out

    def omega_power(self, k: int) -> AlgebraElement:
        if k < 0:
            raise ValueError("negative power of ω")
        if k > self.g:
            return self.sig.zero()
        while len(self._omega_powers) <= k:
            self._omega_powers.append(self._omega_powers[-1] * self.omega)
        return self._omega_powers[k]

    def integrate(self, a: AlgebraElement) -> Scalar:
        c = a.terms.get(((), self.top_mask))
        if c is None:
            return Scalar(0)
        return c if self.volume_sign > 0 else -c

    def chern_class(self, i: int) -> AlgebraElement:
        """c_i of the extension bundle: 4^i/i! ω^i."""
        if i < 0:
            raise ValueError("negative index")
        return self.omega_power(i) * Fraction(4 ** i, factorial(i))

    def segre_class(self, i: int, kind: str = "E") -> AlgebraElement:
        """(-4)^i/i! ω^i for ``kind="E"``; (-8)^i/i! ω^i for ``kind="E_zeta"``."""
        if i < 0:
            raise ValueError("negative index")
        base = {"E": -4, "E_zeta": -8}.get(kind)
        if base is None:
            raise ValueError(f"unknown bundle {kind!r}; expected 'E' or 'E_zeta'")
        return self.omega_power(i) * Fraction(base ** i, factorial(i))

    def basis(self, degree: int) -> list[AlgebraElement]:
        """Monomial basis of Λ^degree, ascending index subsets in lexicographic order."""
        return [self.phi_product(s) for s in combinations(range(1, 2 * self.g + 1), degree)]


@lru_cache(maxsize=None)
def jacobian(g: int) -> JacobianContext:
    return JacobianContext(g)


def omega_power(ctx: JacobianContext, k: int) -> AlgebraElement:
    return ctx.omega_power(k)


def integrate_J(ctx: JacobianContext, a: AlgebraElement) -> Scalar:
    return ctx.integrate(a)


def chern_class(ctx: JacobianContext, i: int) -> AlgebraElement:
    return ctx.chern_class(i)


def segre_class(ctx: JacobianContext, i: int, kind: str = "E") -> AlgebraElement:
    return ctx.segre_class(i, kind)


def primitive_dim_formula(g: int, k: int) -> int:
    return comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)


@lru_cache(maxsize=None)
def primitive_dim(g: int, k: int) -> int:
    """Dimension of the kernel of ω^(g-k+1) on Λ^k of a 2g-dimensional symplectic space.

    Computed from an exact rank and checked against C(2g,k) - C(2g,k-2).
    """
    if not 0 <= k <= g:
        raise ValueError(f"k={k} outside 0..{g}")
    ctx = jacobian(g)
    lefschetz = ctx.omega_power(g - k + 1)
    target = {}
    rows = []
    for s in combinations(range(2 * g), k):
        image = ctx.sig.monomial(odd=s) * lefschetz
        row = {}
        for (_, m), c in image.terms.items():
            row[target.setdefault(m, len(target))] = c
        rows.append(row)
    dim = comb(2 * g, k) - rank(rows)
    expected = primitive_dim_formula(g, k)
    if dim != expected:
        raise ArithmeticError(f"primitive dimension mismatch at g={g}, k={k}: {dim} != {expected}")
    return dim
