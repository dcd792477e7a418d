"""Comparison of the quantum and Floer presentations.

The quantum ideal J_r (from ``quantum_triple(r, g)``) is carried onto the
Floer ideal I'_r by the rescaling α ↦ i^g α, β ↦ i^(2g) β, γ ↦ i^(3g) γ.
For odd g the rescaling (iα, −β, −iγ) works equally well; for even g the
identity does. Both are checked block by block, one block per index r.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import POLY, AlgebraElement, AlgebraSignature
from .ideals import (
    build,
    build_from_triple,
    default_cap,
    ideal_equal,
    normal_form,
    quotient_dim,
)
from .jacobian import primitive_dim
from .presentations import HATTED, floer_triple, quantum_triple, to_hatted
from .report import Report
from .scalar import I, Scalar

__all__ = [
    "SubstitutionMap",
    "substitution_map",
    "parity_map",
    "apply_substitution",
    "scalar_multiple",
    "isomorphism_scalars",
    "verify_isomorphism",
    "special_case_g1",
    "special_case_g2",
    "PoincareSeries",
    "poincare_series",
    "total_dimension",
]


@dataclass(frozen=True)
class SubstitutionMap:
    """α ↦ a·α, β ↦ b·β, γ ↦ c·γ with unit scalars a, b, c."""

    name: str
    scalars: tuple[Scalar, Scalar, Scalar]

    def images(self, target: AlgebraSignature = POLY) -> dict[str, AlgebraElement]:
        names = [n for n, _ in target.even]
        return {src: target.gen(dst) * s
                for src, dst, s in zip(("α", "β", "γ"), names, self.scalars)}

    def __call__(self, p: AlgebraElement, target: AlgebraSignature = POLY) -> AlgebraElement:
        src = [n for n, _ in p.sig.even]
        imgs = self.images(target)
        return p.substitute({s: imgs[k] for s, k in zip(src, ("α", "β", "γ"))}, target)

    def text(self) -> str:
        return "(" + ", ".join(str(POLY.gen(n) * s) for s, n in zip(self.scalars, "αβγ")) + ")"


def substitution_map(g: int) -> SubstitutionMap:
    """(i^g α, i^(2g) β, i^(3g) γ)."""
    return SubstitutionMap(f"i^g rescaling, g={g}", (I ** g, I ** (2 * g), I ** (3 * g)))


def parity_map(g: int) -> SubstitutionMap:
    """Identity for even g, (iα, −β, −iγ) for odd g."""
    if g % 2 == 0:
        return SubstitutionMap("identity", (Scalar(1), Scalar(1), Scalar(1)))
    return SubstitutionMap("(iα, −β, −iγ)", (I, Scalar(-1), -I))


def apply_substitution(g: int, p: AlgebraElement) -> AlgebraElement:
    if p.sig != POLY:
        raise ValueError("expected an element of Q(i)[α, β, γ]")
    return substitution_map(g)(p)


def scalar_multiple(a: AlgebraElement, b: AlgebraElement) -> Scalar | None:
    """The s with a = s·b, or None if there is none."""
    if not b:
        return Scalar(1) if not a else None
    mono, coef = b.items()[0]
    s = a.terms.get(mono, Scalar(0)) / coef
    return s if a == b * s else None


def _map_block(m: SubstitutionMap, g: int, r: int, cache_dir) -> tuple[bool, list]:
    q = quantum_triple(r, g)
    f = floer_triple(r)
    images = [m(p) for p in q.entries]
    cap = default_cap(r)
    target = build_from_triple(f, cap, cache_dir=cache_dir)
    mapped = build(images, cap, label={"kind": "mapped-quantum", "g": g, "r": r},
                   cache_dir=cache_dir)
    scalars = [scalar_multiple(a, b) for a, b in zip(images, f.entries)]
    return ideal_equal(mapped, target, r), scalars


def _scalar_text(s: Scalar | None) -> str:
    return "none" if s is None else str(s)


def isomorphism_scalars(g: int, which: str = "rescaling", *, cache_dir=None) -> dict:
    """{(r, j): s} with σ(Q_r^j) = s·R_r^j, or None when no single scalar exists."""
    m = substitution_map(g) if which == "rescaling" else parity_map(g)
    out = {}
    for r in range(1, g + 1):
        for j, s in enumerate(_map_block(m, g, r, cache_dir)[1], 1):
            out[(r, j)] = s
    return out


def verify_isomorphism(g: int, *, cache_dir=None) -> Report:
    if g < 1:
        raise ValueError("genus must be at least 1")
    report = Report("iso", g)
    for label, m in (("rescaling", substitution_map(g)), ("parity", parity_map(g))):
        for r in range(1, g + 1):
            equal, scalars = _map_block(m, g, r, cache_dir)
            report.add(f"{label} map r={r}: mapped J_{r} = I'_{r}", equal, m.text())
            units = {Scalar(1), Scalar(-1), I, -I}
            report.add(
                f"{label} map r={r}: generator scalars",
                all(s in units for s in scalars),
                [_scalar_text(s) for s in scalars],
                gating=False,
            )
    return report


def special_case_g1(*, cache_dir=None) -> Report:
    report = Report("g1", 1)
    alpha, beta_hat, gamma = HATTED.gens()
    relations = [alpha, beta_hat + 8, gamma]
    q = to_hatted(quantum_triple(1, 1).p1), to_hatted(quantum_triple(1, 1).p2), \
        to_hatted(quantum_triple(1, 1).p3)
    report.add("hatted relations equal Q_1 at g=1", list(q) == relations,
               "(" + ", ".join(str(p) for p in relations) + ")")
    ideal = build(relations, default_cap(1), label={"kind": "hatted", "g": 1, "r": 1},
                  cache_dir=cache_dir)
    dim = quotient_dim(1, ideal)
    report.add("quotient dimension", dim == 1, dim)
    nf = normal_form(beta_hat, 1, ideal)
    report.add("normal form of β̂", nf == HATTED.scalar(-8), str(nf))
    m = SubstitutionMap("(iα, −β, −iγ)", (I, Scalar(-1), -I))
    images = [m(p) for p in relations]
    target = build_from_triple(floer_triple(1), default_cap(1), cache_dir=cache_dir)
    mapped = build(images, default_cap(1), label={"kind": "mapped-hatted", "g": 1, "r": 1},
                   cache_dir=cache_dir)
    report.add("map (iα, −β, −iγ) carries the relations onto I'_1",
               ideal_equal(mapped, target, 1),
               "(" + ", ".join(str(p) for p in images) + ")")
    return report


def special_case_g2(*, cache_dir=None) -> Report:
    report = Report("g2", 2)
    alpha, beta_hat, gamma_hat = HATTED.gens()
    stated = [alpha * alpha + beta_hat - 8, (beta_hat + 8) * alpha + gamma_hat, alpha * gamma_hat]
    q2 = [to_hatted(p) for p in quantum_triple(2, 2).entries]
    report.add("quantum triple r=2 in hatted variables", q2 == stated,
               "(" + ", ".join(str(p) for p in q2) + ")")
    odd_block = [alpha, beta_hat - 8, gamma_hat]
    q1 = [to_hatted(p) for p in quantum_triple(1, 2).entries]
    report.add("H³-block relations", q1 == odd_block,
               "(" + ", ".join(str(p) for p in q1) + ")")

    ideal_odd = build(odd_block, default_cap(1), label={"kind": "hatted", "g": 2, "r": 1},
                      cache_dir=cache_dir)
    ideal_inv = build(stated, default_cap(2), label={"kind": "hatted", "g": 2, "r": 2},
                      cache_dir=cache_dir)
    d_odd, d_inv = quotient_dim(1, ideal_odd), quotient_dim(2, ideal_inv)
    report.add("H³-block quotient dimension", d_odd == 1, d_odd)
    report.add("invariant block quotient dimension", d_inv == 4, d_inv)
    total = primitive_dim(2, 0) * d_inv + primitive_dim(2, 1) * d_odd
    report.add("total dimension", total == 8, total)

    blocks = ((1, odd_block), (2, stated))

    def carries(m: SubstitutionMap) -> tuple[bool, list]:
        ok, shown = True, []
        for r, rel in blocks:
            images = [m(p) for p in rel]
            target = build_from_triple(floer_triple(r), default_cap(r), cache_dir=cache_dir)
            mapped = build(images, default_cap(r),
                           label={"kind": "mapped-hatted", "g": 2, "r": r}, cache_dir=cache_dir)
            equal = ideal_equal(mapped, target, r)
            ok = ok and equal
            shown.append({"r": r, "equal": equal,
                          "images": [str(p) for p in images]})
        return ok, shown

    rescale = substitution_map(2)
    ok, shown = carries(rescale)
    report.add(f"map {rescale.text()} carries both blocks onto I'", ok, shown)
    literal = SubstitutionMap("(iα, −β, −iγ)", (I, Scalar(-1), -I))
    ok, shown = carries(literal)
    report.add("map (iα, −β, −iγ) on hatted generators", ok, shown, gating=False)
    return report


class PoincareSeries:
    """Integer polynomial in t, stored as {exponent: coefficient}."""

    def __init__(self, coeffs: dict[int, int]):
        self.coeffs = {k: v for k, v in sorted(coeffs.items()) if v}

    def __call__(self, t=1):
        return sum(c * t ** k for k, c in self.coeffs.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, PoincareSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, dict):
            return self.coeffs == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __str__(self) -> str:
        sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
        parts = []
        for k, c in self.coeffs.items():
            mono = "" if k == 0 else ("t" if k == 1 else "t" + str(k).translate(sup))
            coef = str(c) if (c != 1 or not mono) else ""
            parts.append(coef + mono)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.coeffs.items()}


def poincare_series(g: int) -> PoincareSeries:
    if g < 1:
        raise ValueError("genus must be at least 1")
    coeffs: dict[int, int] = {}
    for k in range(g):
        mult = primitive_dim(g, k)
        n = g - k
        for a in range(n):
            for b in range(n - a):
                for c in range(n - a - b):
                    d = 3 * k + 2 * a + 4 * b + 6 * c
                    coeffs[d] = coeffs.get(d, 0) + mult
    return PoincareSeries(coeffs)


def total_dimension(g: int) -> int:
    return sum((comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)) * comb(g - k + 2, 3)
               for k in range(g))
