"""The recursive relation triples (P¹, P², P³) in Q(i)[α, β, γ].

All families share the recursion, started from (1, 0, 0):

    P¹(r+1) = α P¹(r) + r² P²(r)
    P²(r+1) = (β + c(r+1)) P¹(r) + 2r/(r+1) P³(r)
    P³(r+1) = γ P¹(r) + d(r+1) P²(r)

and differ only in the constants ``c(k)``, ``d(k)``:

    classical, floer   c(k) = (-1)^k 8
    quantum(g)         c(k) = (-1)^(k+g) 8
    graded             c(k) = 0           (homogeneous leading forms)
    generic            caller supplied

with ``d(k) = 0`` except for ``generic``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import POLY, AlgebraElement, AlgebraSignature
from .scalar import Scalar, as_scalar

__all__ = [
    "PresentationTriple",
    "DeformationSplit",
    "DeformationError",
    "classical_triple",
    "graded_triple",
    "floer_triple",
    "quantum_triple",
    "generic_triple",
    "quantum_constants",
    "floer_constants",
    "deformation_split",
    "HATTED",
    "to_hatted",
    "triple_text",
]

KINDS = ("classical", "graded", "floer", "quantum", "generic")

HATTED = AlgebraSignature(even=(("α", 2), ("β̂", 4), ("γ̂", 6)))
"""Same ring as ``POLY`` with the corrected generators β̂, γ̂ in the β, γ slots."""


@dataclass(frozen=True)
class PresentationTriple:
    kind: str
    r: int
    p1: AlgebraElement
    p2: AlgebraElement
    p3: AlgebraElement
    g: int | None = None
    params: tuple = field(default=(), compare=False)

    @property
    def entries(self) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
        return (self.p1, self.p2, self.p3)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> AlgebraElement:
        """1-based access, matching the superscripts P¹, P², P³."""
        if i not in (1, 2, 3):
            raise IndexError("triple entries are numbered 1..3")
        return self.entries[i - 1]

    def expected_degrees(self) -> tuple[int, int, int]:
        return (2 * self.r, 2 * self.r + 2, 2 * self.r + 4)

    def __str__(self) -> str:
        return triple_text(self.entries)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "r": self.r,
               "entries": [p.to_json() for p in self.entries],
               "text": [str(p) for p in self.entries]}
        if self.g is not None:
            out["g"] = self.g
        return out


def triple_text(entries) -> str:
    return "(" + ", ".join(str(p) for p in entries) + ")"


def _run(r: int, c: Sequence[Scalar], d: Sequence[Scalar]):
    alpha, beta, gamma = POLY.gens()
    p1, p2, p3 = POLY.one(), POLY.zero(), POLY.zero()
    for k in range(r):
        # step k -> k+1 uses c(k+1) = c[k], d(k+1) = d[k]
        p1, p2, p3 = (
            alpha * p1 + p2 * (k * k),
            (beta + c[k]) * p1 + p3 * Fraction(2 * k, k + 1),
            gamma * p1 + p2 * d[k],
        )
    return p1, p2, p3


def floer_constants(r: int) -> list[Scalar]:
    return [Scalar(8 * (-1) ** k) for k in range(1, r + 1)]


def quantum_constants(g: int, r: int) -> list[Scalar]:
    """``c(k) = (-1)^(k+g) 8`` for k = 1..r, i.e. the sign (-1)^(r+g+1) at step r -> r+1."""
    return [Scalar(8 * (-1) ** (k + g)) for k in range(1, r + 1)]


@lru_cache(maxsize=None)
def _family(kind: str, r: int, parity: int) -> tuple:
    zeros = [Scalar(0)] * r
    if kind == "graded":
        c = zeros
    elif kind in ("classical", "floer"):
        c = floer_constants(r)
    elif kind == "quantum":
        c = quantum_constants(parity, r)
    else:
        raise ValueError(kind)
    return _run(r, c, zeros)


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"index r must be a non-negative integer, got {r!r}")


def classical_triple(r: int) -> PresentationTriple:
    """The classical recursion with the constant ``(-1)^(r+1) 8`` kept in the β slot.

    With that constant the triple is inhomogeneous and coincides with the Floer
    one; ``graded_triple`` gives its homogeneous leading forms.
    """
    _check_r(r)
    return PresentationTriple("classical", r, *_family("classical", r, 0))


def graded_triple(r: int) -> PresentationTriple:
    """Homogeneous relations: the recursion with every constant set to zero."""
    _check_r(r)
    return PresentationTriple("graded", r, *_family("graded", r, 0))


def floer_triple(r: int) -> PresentationTriple:
    _check_r(r)
    return PresentationTriple("floer", r, *_family("floer", r, 0))


def quantum_triple(r: int, g: int) -> PresentationTriple:
    _check_r(r)
    if g < 1:
        raise ValueError("genus must be at least 1")
    return PresentationTriple("quantum", r, *_family("quantum", r, g % 2), g=g)


def generic_triple(r: int, c: Sequence, d: Sequence) -> PresentationTriple:
    """Recursion with free constants; ``c[k-1]``, ``d[k-1]`` are used to produce index k."""
    _check_r(r)
    if len(c) < r or len(d) < r:
        raise ValueError(f"need at least {r} constants, got c:{len(c)} d:{len(d)}")
    cs = [as_scalar(x) for x in c[:r]]
    ds = [as_scalar(x) for x in d[:r]]
    return PresentationTriple("generic", r, *_run(r, cs, ds), params=(tuple(cs), tuple(ds)))


class DeformationError(ValueError):
    pass


@dataclass(frozen=True)
class DeformationSplit:
    """Components ``P_j`` of degree ``topdeg - 4j``, j = 0 .. topdeg // 4."""

    topdeg: int
    components: tuple[AlgebraElement, ...]

    def __getitem__(self, j: int) -> AlgebraElement:
        return self.components[j]

    def __len__(self) -> int:
        return len(self.components)

    def total(self) -> AlgebraElement:
        out = self.components[0].sig.zero()
        for c in self.components:
            out = out + c
        return out

    def nonzero(self) -> dict[int, AlgebraElement]:
        return {j: c for j, c in enumerate(self.components) if c}


def deformation_split(p: AlgebraElement, topdeg: int) -> DeformationSplit:
    parts = p.components()
    for d in parts:
        if d > topdeg or (topdeg - d) % 4:
            raise DeformationError(
                f"component of degree {d} is not topdeg - 4j for topdeg={topdeg}: {p}")
    comps = tuple(parts.get(topdeg - 4 * j, p.sig.zero()) for j in range(topdeg // 4 + 1))
    return DeformationSplit(topdeg, comps)


def to_hatted(p: AlgebraElement) -> AlgebraElement:
    """Rename β, γ to β̂, γ̂ (same coefficients and exponents)."""
    if p.sig != POLY:
        raise ValueError("expected an element of Q(i)[α, β, γ]")
    return AlgebraElement(HATTED, p.terms)
