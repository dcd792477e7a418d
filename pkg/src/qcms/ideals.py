"""Ideals of Q(i)[α, β, γ] by truncated exact linear algebra.

An ideal with generators f_1..f_n is represented up to a degree cap D by the
span of all products ``m * f_i`` with ``deg m + topdeg f_i <= D``. Columns are
the monomials of degree <= D ordered by descending degree, so the pivot of a
reduced row is its leading monomial and the pivots in degree d span the
degree-d part of the ideal of leading forms.

When the leading forms of the generators have a finite quotient (three forms
in three variables, hence a regular sequence) every syzygy of the leading
forms lifts, and the truncated span is exactly ``I ∩ {deg <= D}``. The
quotient dimension checks below certify that hypothesis for every ideal
built from a presentation triple.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from pathlib import Path

from .algebra import POLY, AlgebraElement, AlgebraSignature
from .linalg import RREF, rref
from .presentations import PresentationTriple, quantum_triple
from .report import Report
from .scalar import Scalar

__all__ = [
    "GradedIdeal",
    "QuotientBasis",
    "IdealError",
    "build",
    "build_from_triple",
    "contains",
    "normal_form",
    "quotient_dim",
    "ideal_equal",
    "lemma17_check",
    "default_cap",
    "CACHE_VERSION",
]

log = logging.getLogger(__name__)

CACHE_VERSION = 1
CACHE_ENV = "QCMS_CACHE_DIR"


class IdealError(ValueError):
    pass


@lru_cache(maxsize=None)
def _columns(sig: AlgebraSignature, cap: int) -> tuple[tuple[tuple[int, ...], ...], dict]:
    """Monomials of degree <= cap: descending degree, then descending exponents."""
    degs = [d for _, d in sig.even]
    monos = []

    def rec(k, left, prefix):
        if k == len(degs):
            monos.append(tuple(prefix))
            return
        for e in range(left // degs[k] + 1):
            rec(k + 1, left - e * degs[k], prefix + [e])

    rec(0, cap, [])

    def degree(m):
        return sum(e * d for e, d in zip(m, degs))

    monos.sort(key=lambda m: (-degree(m), tuple(-e for e in m)))
    return tuple(monos), {m: i for i, m in enumerate(monos)}


def default_cap(r: int) -> int:
    """6(r-1) + 6: one generator-degree step past the top of the quotient."""
    return max(6 * r, 2 * r + 4)


def _fingerprint(gens) -> str:
    payload = json.dumps([g.to_json() for g in gens], sort_keys=True, ensure_ascii=True)
    return hashlib.sha256(payload.encode()).hexdigest()


class GradedIdeal:
    """Truncated ideal: generators, cap and the canonical reduced span."""

    def __init__(self, gens, cap: int, form: RREF, *, label: dict | None = None):
        self.gens = tuple(gens)
        self.cap = cap
        self.form = form
        self.label = dict(label or {})
        self.sig = self.gens[0].sig if self.gens else POLY
        self.monomials, self.index = _columns(self.sig, cap)
        self._degree = [self.sig.degree_of((m, 0)) for m in self.monomials]

    # -- vectors ----------------------------------------------------------
    def vector(self, p: AlgebraElement) -> dict[int, Scalar]:
        if p.sig != self.sig:
            raise IdealError("polynomial lives in a different ring")
        out = {}
        for (exps, _), c in p.terms.items():
            col = self.index.get(exps)
            if col is None:
                raise IdealError(f"degree {p.top_degree()} exceeds the cap {self.cap}")
            out[col] = c
        return out

    def element(self, vec: dict[int, Scalar]) -> AlgebraElement:
        return AlgebraElement(self.sig, {(self.monomials[c], 0): v for c, v in vec.items()})

    # -- queries ----------------------------------------------------------
    def reduce(self, p: AlgebraElement) -> AlgebraElement:
        """Remainder of p on the standard (non-leading) monomials."""
        return self.element(self.form.reduce(self.vector(p)))

    def contains(self, p: AlgebraElement) -> bool:
        return not self.form.reduce(self.vector(p))

    def pivot_degrees(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.form.rows:
            d = self._degree[c]
            out[d] = out.get(d, 0) + 1
        return out

    def span(self, d: int) -> list[AlgebraElement]:
        """Reduced basis rows whose leading monomial has degree d."""
        return [self.element(row) for c, row in self.form.rows.items() if self._degree[c] == d]

    def standard_monomials(self) -> list[tuple[int, ...]]:
        return [m for c, m in enumerate(self.monomials) if c not in self.form.rows]

    def monomial_count(self, d: int) -> int:
        return sum(1 for x in self._degree if x == d)

    def full_in_degree(self, d: int) -> bool:
        return all(c in self.form.rows for c, x in enumerate(self._degree) if x == d)

    # -- cache ------------------------------------------------------------
    def to_cache(self) -> dict:
        spans: dict[str, list[list[str]]] = {}
        ncols = len(self.monomials)
        first_col = {}
        for c, d in enumerate(self._degree):
            first_col.setdefault(d, c)
        for c, row in self.form.rows.items():
            d = self._degree[c]
            start = first_col[d]
            spans.setdefault(str(d), []).append(
                [str(row.get(j, Scalar(0))) for j in range(start, ncols)])
        return {
            "version": CACHE_VERSION,
            "kind": self.label.get("kind", "generic"),
            "g": self.label.get("g"),
            "r": self.label.get("r"),
            "cap": self.cap,
            "fingerprint": _fingerprint(self.gens),
            "checksum": _checksum(spans),
            "spans": spans,
        }

    @classmethod
    def from_cache(cls, data: dict, gens, cap: int, label: dict) -> GradedIdeal:
        """Rebuild from a cache record; raises IdealError on any mismatch."""
        expect = {"version": CACHE_VERSION, "kind": label.get("kind", "generic"),
                  "g": label.get("g"), "r": label.get("r"), "cap": cap,
                  "fingerprint": _fingerprint(gens)}
        for key, val in expect.items():
            if data.get(key) != val:
                raise IdealError(f"cache field {key!r} mismatch")
        if data.get("checksum") != _checksum(data["spans"]):
            raise IdealError("cache checksum mismatch")
        sig = gens[0].sig if gens else POLY
        monos, _ = _columns(sig, cap)
        degree = [sig.degree_of((m, 0)) for m in monos]
        first_col = {}
        for c, d in enumerate(degree):
            first_col.setdefault(d, c)
        rows = {}
        for dkey, entries in data["spans"].items():
            d = int(dkey)
            if d not in first_col:
                raise IdealError("cache degree out of range")
            start = first_col[d]
            for entry in entries:
                if len(entry) != len(monos) - start:
                    raise IdealError("cache row has wrong length")
                row = {}
                for j, text in enumerate(entry):
                    v = Scalar.parse(text)
                    if v:
                        row[start + j] = v
                if not row:
                    raise IdealError("empty cache row")
                lead = min(row)
                if degree[lead] != d or row[lead] != 1 or lead in rows:
                    raise IdealError("cache row is not in reduced echelon form")
                rows[lead] = row
        for lead, row in rows.items():
            if any(c in rows and c != lead for c in row):
                raise IdealError("cache rows are not fully reduced")
        form = RREF(rows)
        for block in _spanning_rows(gens, cap).values():
            if any(form.reduce(row) for row in block):
                raise IdealError("cached span misses a product of a generator")
        return cls(gens, cap, form, label=label)


def _checksum(spans: dict) -> str:
    return hashlib.sha256(json.dumps(spans, sort_keys=True).encode()).hexdigest()


def _cache_path(cache_dir: Path, label: dict, cap: int, gens) -> Path:
    kind = label.get("kind", "generic")
    name = f"{kind}-g{label.get('g')}-r{label.get('r')}-cap{cap}-{_fingerprint(gens)[:16]}.json"
    return cache_dir / name


def _resolve_cache_dir(cache_dir) -> Path | None:
    if cache_dir is False:
        return None
    if cache_dir is None:
        env = os.environ.get(CACHE_ENV)
        if not env:
            return None
        cache_dir = env
    return Path(cache_dir)


def _spanning_rows(gens, cap: int) -> dict[int, list]:
    """The products m * f with deg m + topdeg f <= cap, grouped by mod-4 block."""
    sig = gens[0].sig if gens else POLY
    monos, index = _columns(sig, cap)
    mod4 = all(len({d % 4 for d in f.degrees()}) == 1 for f in gens)
    blocks: dict[int, list] = {}
    for f in gens:
        top = f.top_degree()
        for m in monos:
            dm = sig.degree_of((m, 0))
            if dm + top > cap:
                continue
            key = (dm + top) % 4 if mod4 else 0
            prod = AlgebraElement(sig, {(m, 0): Scalar(1)}) * f
            blocks.setdefault(key, []).append(
                {index[e]: c for (e, _), c in prod.terms.items()})
    return blocks


def _compute_form(gens, cap: int) -> RREF:
    blocks = _spanning_rows(gens, cap)
    rows = {}
    for key in sorted(blocks):
        rows.update(rref(blocks[key]).rows)
    return RREF(rows)


def build(gens, cap: int, *, label: dict | None = None, cache_dir=None) -> GradedIdeal:
    """Build the truncated ideal generated by ``gens`` up to degree ``cap``.

    ``cache_dir=None`` falls back to $QCMS_CACHE_DIR; ``False`` disables caching.
    """
    gens = [f for f in gens if f]
    if gens:
        sigs = {f.sig for f in gens}
        if len(sigs) != 1 or any(f.sig.odd for f in gens):
            raise IdealError("generators must lie in one commutative polynomial ring")
        need = max(f.top_degree() for f in gens)
        if cap < need:
            raise IdealError(f"cap {cap} below generator degree {need}")
    label = dict(label or {})
    directory = _resolve_cache_dir(cache_dir)
    path = _cache_path(directory, label, cap, gens) if directory else None
    if path is not None and path.exists():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            return GradedIdeal.from_cache(data, gens, cap, label)
        except (IdealError, ValueError, KeyError, TypeError, AttributeError) as exc:
            log.warning("discarding cache file %s: %s", path, exc)
    ideal = GradedIdeal(gens, cap, _compute_form(gens, cap), label=label)
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(f".tmp{os.getpid()}")
            tmp.write_text(json.dumps(ideal.to_cache(), sort_keys=True), encoding="utf-8")
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("cache disabled, cannot write %s: %s", path, exc)
    return ideal


def build_from_triple(t: PresentationTriple, cap: int | None = None, *, cache_dir=None) -> GradedIdeal:
    cap = default_cap(t.r) if cap is None else cap
    label = {"kind": t.kind, "g": t.g, "r": t.r}
    if t.kind == "generic":
        label["kind"] = "generic"
    return build(t.entries, cap, label=label, cache_dir=cache_dir)


def contains(ideal: GradedIdeal, p: AlgebraElement) -> bool:
    if p and p.top_degree() > ideal.cap:
        raise IdealError(f"degree {p.top_degree()} exceeds the cap {ideal.cap}")
    return ideal.contains(p)


@dataclass(frozen=True)
class QuotientBasis:
    """Monomials α^a β^b γ^c with a + b + c < r."""

    r: int

    @property
    def monomials(self) -> list[tuple[int, int, int]]:
        out = [(a, b, c) for a in range(self.r) for b in range(self.r) for c in range(self.r)
               if a + b + c < self.r]
        out.sort(key=lambda m: (-(2 * m[0] + 4 * m[1] + 6 * m[2]), tuple(-e for e in m)))
        return out

    def __len__(self) -> int:
        return comb(self.r + 2, 3)

    @property
    def top_degree(self) -> int:
        return 6 * (self.r - 1)

    def elements(self, sig: AlgebraSignature = POLY) -> list[AlgebraElement]:
        return [sig.monomial(m) for m in self.monomials]


def normal_form(p: AlgebraElement, r: int, ideal: GradedIdeal) -> AlgebraElement:
    """The unique combination of basis monomials congruent to p modulo the ideal."""
    basis = QuotientBasis(r)
    ncols = len(ideal.monomials)
    rows = []
    for k, m in enumerate(basis.monomials):
        rem = ideal.form.reduce(ideal.vector(ideal.sig.monomial(m)))
        rem[ncols + k] = Scalar(1)
        rows.append(rem)
    system = rref(rows)
    if any(c >= ncols for c in system.rows):
        raise IdealError(f"basis monomials are dependent modulo the ideal (r={r})")
    rem = system.reduce(ideal.form.reduce(ideal.vector(p)))
    if any(c < ncols for c in rem):
        raise IdealError(f"{p} is not congruent to a combination of the basis (r={r})")
    out = ideal.sig.zero()
    for c, v in rem.items():
        out = out + ideal.sig.monomial(basis.monomials[c - ncols], coef=-v)
    return out


def quotient_dim(r: int, ideal: GradedIdeal) -> int:
    """dim of the quotient, counted on standard monomials of degree <= 6(r-1).

    Raises IdealError if some degree in (6(r-1), cap] is not entirely leading.
    """
    top = 6 * (r - 1)
    for d in sorted(set(ideal._degree)):
        if d > top and not ideal.full_in_degree(d):
            raise IdealError(f"quotient does not vanish in degree {d} > {top}")
    return sum(1 for c, d in enumerate(ideal._degree) if d <= top and c not in ideal.form.rows)


def ideal_equal(a: GradedIdeal, b: GradedIdeal, r: int | None = None) -> bool:
    if a.cap != b.cap or a.sig != b.sig:
        raise IdealError(f"cap mismatch: {a.cap} vs {b.cap}")
    if r is not None:
        quotient_dim(r, a)
        quotient_dim(r, b)
    return a.form == b.form


def lemma17_check(g: int, *, cache_dir=None) -> Report:
    """γ J_k ⊂ J_(k+1) ⊂ J_k for k = 0..g-1, with J_r the quantum ideal at index r."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    report = Report("lemma17", g)
    triples = [quantum_triple(r, g) for r in range(g + 1)]
    gamma = POLY.gen("γ")
    for k in range(g):
        small, big = triples[k + 1], triples[k]
        up = [gamma * f for f in big.entries]
        cap_small = max(default_cap(k + 1), *(f.top_degree() for f in up if f))
        cap_big = max(default_cap(k), 2 * k + 6)
        ideal_small = build_from_triple(small, cap_small, cache_dir=cache_dir)
        ideal_big = build_from_triple(big, cap_big, cache_dir=cache_dir)
        for j, f in enumerate(up, 1):
            ok = contains(ideal_small, f)
            report.add(f"gamma*Q[{k}]^{j} in J_{k + 1}", ok)
        for j, f in enumerate(small.entries, 1):
            ok = contains(ideal_big, f)
            report.add(f"Q[{k + 1}]^{j} in J_{k}", ok)
    return report
