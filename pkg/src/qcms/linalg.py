"""Sparse exact row reduction over Q(i).

Rows are dicts ``column -> Scalar``; a smaller column index is more
significant, so the pivot of a row is its minimal column. Elimination runs
fraction-free on Gaussian integers (pairs of Python ints) with content
removal, and only the final reduced row echelon form is converted back to
Scalars with pivot entries equal to 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .scalar import Scalar

__all__ = ["rref", "reduce_vector", "rank", "RREF"]

GInt = tuple[int, int]
Row = dict[int, Scalar]


def _to_gauss(row: Mapping[int, Scalar]) -> dict[int, GInt]:
    den = 1
    for v in row.values():
        den = lcm(den, v.re.denominator, v.im.denominator)
    out = {}
    for c, v in row.items():
        re = v.re.numerator * (den // v.re.denominator)
        im = v.im.numerator * (den // v.im.denominator)
        if re or im:
            out[c] = (re, im)
    return out


def _primitive(row: dict[int, GInt]) -> dict[int, GInt]:
    g = 0
    for re, im in row.values():
        g = gcd(g, re, im)
        if g == 1:
            return row
    if g > 1:
        return {c: (re // g, im // g) for c, (re, im) in row.items()}
    return row


def _combine(a: GInt, row: dict[int, GInt], b: GInt, piv: dict[int, GInt]) -> dict[int, GInt]:
    """Return a*row - b*piv, dropping zeros."""
    ar, ai = a
    br, bi = b
    if ai == 0:
        out = {c: (ar * r, ar * i) for c, (r, i) in row.items()}
    else:
        out = {c: (ar * r - ai * i, ar * i + ai * r) for c, (r, i) in row.items()}
    for c, (r, i) in piv.items():
        pr, pi = (br * r - bi * i, br * i + bi * r) if bi else (br * r, br * i)
        cur = out.get(c)
        if cur is None:
            out[c] = (-pr, -pi)
        else:
            nr, ni = cur[0] - pr, cur[1] - pi
            if nr or ni:
                out[c] = (nr, ni)
            else:
                del out[c]
    return out


def _normalize(row: dict[int, GInt], lead: int) -> Row:
    lr, li = row[lead]
    if li == 0:
        return {c: Scalar._make(Fraction(r, lr), Fraction(i, lr)) for c, (r, i) in row.items()}
    n = lr * lr + li * li
    # v / lead = v * conj(lead) / |lead|^2
    return {c: Scalar._make(Fraction(r * lr + i * li, n), Fraction(i * lr - r * li, n))
            for c, (r, i) in row.items()}


class RREF:
    """Reduced row echelon form: ``rows[pivot]`` is a row with entry 1 at ``pivot``
    and zeros at every other pivot column."""

    __slots__ = ("rows",)

    def __init__(self, rows: dict[int, Row]):
        self.rows = dict(sorted(rows.items()))

    @property
    def pivots(self) -> list[int]:
        return list(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, RREF) and self.rows == other.rows

    def reduce(self, vec: Mapping[int, Scalar]) -> Row:
        return reduce_vector(self, vec)

    def contains(self, vec: Mapping[int, Scalar]) -> bool:
        return not self.reduce(vec)


def rref(rows: Iterable[Mapping[int, Scalar]]) -> RREF:
    pivots: dict[int, dict[int, GInt]] = {}
    for raw in rows:
        row = _to_gauss(raw)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            row = _primitive(_combine(piv[lead], row, row[lead], piv))

    order = sorted(pivots)
    for k in range(len(order) - 1, -1, -1):
        c = order[k]
        pc = pivots[c]
        a = pc[c]
        for c2 in order[:k]:
            r = pivots[c2]
            b = r.get(c)
            if b is not None:
                pivots[c2] = _primitive(_combine(a, r, b, pc))
    return RREF({c: _normalize(r, c) for c, r in pivots.items()})


def reduce_vector(form: RREF, vec: Mapping[int, Scalar]) -> Row:
    """Remainder of ``vec`` modulo the row space; supported on non-pivot columns."""
    out = {c: v for c, v in vec.items() if v}
    for c in [c for c in out if c in form.rows]:
        coef = out.get(c)
        if not coef:
            continue
        for c2, v in form.rows[c].items():
            nv = out.get(c2, 0) - coef * v
            if nv:
                out[c2] = nv
            else:
                out.pop(c2, None)
    return out


def rank(rows: Iterable[Mapping[int, Scalar]]) -> int:
    return len(rref(rows))
