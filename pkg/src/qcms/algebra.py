"""Sparse elements of graded-commutative algebras over Q(i).

An algebra is described by an :class:`AlgebraSignature`: a list of commuting
generators of even degree and a list of anticommuting generators of odd
degree. A monomial is a pair ``(exps, mask)`` where ``exps`` is the exponent
vector of the commuting generators and ``mask`` is a bit set of anticommuting
generators, always read in ascending index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Rational
from typing import Iterable, Mapping

from .scalar import ONE, Scalar, as_scalar

__all__ = [
    "AlgebraSignature",
    "AlgebraElement",
    "SignatureMismatch",
    "ParityError",
    "monomial_sign",
    "POLY",
]

Monomial = tuple[tuple[int, ...], int]

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class SignatureMismatch(ValueError):
    pass


class ParityError(ValueError):
    pass


def monomial_sign(a: int, b: int) -> int:
    """Sign of the product of odd monomials ``a`` then ``b`` once sorted.

    Returns 0 when they share a generator.
    """
    if a & b:
        return 0
    swaps = 0
    while b:
        low = b & -b
        swaps += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if swaps & 1 else 1


def _bits(mask: int) -> list[int]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


@dataclass(frozen=True)
class AlgebraSignature:
    even: tuple[tuple[str, int], ...] = ()
    odd: tuple[tuple[str, int], ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = [n for n, _ in self.even] + [n for n, _ in self.odd]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for name, d in self.even:
            if d % 2 or d < 0:
                raise ValueError(f"commuting generator {name} needs even degree, got {d}")
        for name, d in self.odd:
            if d % 2 == 0:
                raise ValueError(f"anticommuting generator {name} needs odd degree, got {d}")
        index = {n: ("even", k) for k, (n, _) in enumerate(self.even)}
        index.update({n: ("odd", k) for k, (n, _) in enumerate(self.odd)})
        object.__setattr__(self, "_index", index)

    @property
    def nvars(self) -> int:
        return len(self.even)

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.even] + [n for n, _ in self.odd]

    def kind_of(self, name: str) -> tuple[str, int]:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no generator named {name!r}") from None

    def degree_of(self, mono: Monomial) -> int:
        exps, mask = mono
        d = sum(e * deg for e, (_, deg) in zip(exps, self.even))
        for j in _bits(mask):
            d += self.odd[j][1]
        return d

    # -- constructors -----------------------------------------------------
    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def scalar(self, c) -> AlgebraElement:
        c = as_scalar(c)
        return AlgebraElement(self, {((0,) * self.nvars, 0): c} if c else {})

    def gen(self, name: str) -> AlgebraElement:
        kind, k = self.kind_of(name)
        if kind == "even":
            exps = tuple(1 if j == k else 0 for j in range(self.nvars))
            return AlgebraElement(self, {(exps, 0): ONE})
        return AlgebraElement(self, {((0,) * self.nvars, 1 << k): ONE})

    def gens(self) -> list[AlgebraElement]:
        return [self.gen(n) for n in self.names]

    def monomial(self, exps: Iterable[int] = (), odd: Iterable[int] = (), coef=1) -> AlgebraElement:
        """Build ``coef * x^exps * o_{i1} o_{i2} ...`` with odd indices 0-based, in the given order."""
        exps = tuple(exps) or (0,) * self.nvars
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        out = AlgebraElement(self, {(exps, 0): as_scalar(coef)})
        for j in odd:
            out = out * AlgebraElement(self, {((0,) * self.nvars, 1 << j): ONE})
        return out


POLY = AlgebraSignature(even=(("α", 2), ("β", 4), ("γ", 6)))
"""The ambient ring Q(i)[α, β, γ] of the presentations."""


def _coerce(sig: AlgebraSignature, x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        if x.sig != sig:
            raise SignatureMismatch("elements live in different algebras")
        return x
    if isinstance(x, (int, Rational, Scalar)):
        return sig.scalar(x)
    raise TypeError(f"cannot combine AlgebraElement with {type(x).__name__}")


def _sort_key(mono: Monomial):
    exps, mask = mono
    return (tuple(-e for e in exps), len(_bits(mask)), _bits(mask))


class AlgebraElement:
    """Immutable sparse element. ``terms`` maps monomials to non-zero Scalars."""

    __slots__ = ("sig", "terms", "_hash")

    def __init__(self, sig: AlgebraSignature, terms: Mapping[Monomial, Scalar]):
        self.sig = sig
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    # -- basic protocol ---------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational, Scalar)):
            other = self.sig.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in canonical monomial order."""
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    def coefficient(self, exps=None, odd: Iterable[int] = ()) -> Scalar:
        exps = tuple(exps) if exps is not None else (0,) * self.sig.nvars
        mask = 0
        for j in odd:
            mask |= 1 << j
        return self.terms.get((exps, mask), Scalar(0))

    def constant_term(self) -> Scalar:
        return self.terms.get(((0,) * self.sig.nvars, 0), Scalar(0))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> AlgebraElement:
        other = _coerce(self.sig, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return AlgebraElement(self.sig, out)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.sig, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> AlgebraElement:
        return self + (-_coerce(self.sig, other))

    def __rsub__(self, other) -> AlgebraElement:
        return _coerce(self.sig, other) - self

    def scale(self, c) -> AlgebraElement:
        c = as_scalar(c)
        if not c:
            return self.sig.zero()
        return AlgebraElement(self.sig, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Rational, Scalar)):
            return self.scale(other)
        other = _coerce(self.sig, other)
        out: dict[Monomial, Scalar] = {}
        for (ea, ma), ca in self.terms.items():
            for (eb, mb), cb in other.terms.items():
                if ma & mb:
                    continue
                sign = monomial_sign(ma, mb) if (ma and mb) else 1
                key = (tuple(x + y for x, y in zip(ea, eb)), ma | mb)
                c = ca * cb
                if sign < 0:
                    c = -c
                prev = out.get(key)
                out[key] = c if prev is None else prev + c
        return AlgebraElement(self.sig, out)

    def __rmul__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Rational, Scalar)):
            return self.scale(other)
        return _coerce(self.sig, other) * self

    def __truediv__(self, other) -> AlgebraElement:
        return self.scale(as_scalar(other).inverse())

    def __pow__(self, n: int) -> AlgebraElement:
        if n < 0:
            raise ValueError("negative power")
        result, base = self.sig.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- grading ----------------------------------------------------------
    def degrees(self) -> list[int]:
        return sorted({self.sig.degree_of(m) for m in self.terms})

    def grade_component(self, d: int) -> AlgebraElement:
        deg = self.sig.degree_of
        return AlgebraElement(self.sig, {m: c for m, c in self.terms.items() if deg(m) == d})

    def components(self) -> dict[int, AlgebraElement]:
        """All non-zero homogeneous components, keyed by degree."""
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(self.sig.degree_of(m), {})[m] = c
        return {d: AlgebraElement(self.sig, t) for d, t in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def top_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero element has no degree")
        return max(self.sig.degree_of(m) for m in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero element has no degree")
        return min(self.sig.degree_of(m) for m in self.terms)

    def map_coefficients(self, f) -> AlgebraElement:
        return AlgebraElement(self.sig, {m: f(c) for m, c in self.terms.items()})

    # -- substitution -----------------------------------------------------
    def substitute(self, images: Mapping[str, AlgebraElement],
                   target: AlgebraSignature | None = None) -> AlgebraElement:
        """Apply the algebra morphism determined by generator ``images``.

        Generators missing from ``images`` go to the generator of the same
        name in ``target``. Images must preserve degree parity.
        """
        target = target or self.sig
        even_imgs, odd_imgs = [], []
        for name, d in self.sig.even:
            img = images[name] if name in images else target.gen(name)
            img = _coerce(target, img)
            if any(target.degree_of(m) % 2 for m in img.terms):
                raise ParityError(f"image of even generator {name} has odd-degree terms")
            even_imgs.append(img)
        for name, d in self.sig.odd:
            img = images[name] if name in images else target.gen(name)
            img = _coerce(target, img)
            if any(target.degree_of(m) % 2 == 0 for m in img.terms):
                raise ParityError(f"image of odd generator {name} has even-degree terms")
            odd_imgs.append(img)

        powers: dict[tuple[int, int], AlgebraElement] = {}

        def power(k: int, e: int) -> AlgebraElement:
            if (k, e) not in powers:
                powers[(k, e)] = even_imgs[k] ** e
            return powers[(k, e)]

        out = target.zero()
        for (exps, mask), c in self.terms.items():
            term = target.scalar(c)
            for k, e in enumerate(exps):
                if e:
                    term = term * power(k, e)
            for j in _bits(mask):
                term = term * odd_imgs[j]
            out = out + term
        return out

    # -- presentation -----------------------------------------------------
    def monomial_text(self, mono: Monomial) -> str:
        exps, mask = mono
        parts = []
        for e, (name, _) in zip(exps, self.sig.even):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(name + str(e).translate(_SUPERSCRIPT))
        parts.extend(self.sig.odd[j][0] for j in _bits(mask))
        return "".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.items():
            body = self.monomial_text(mono)
            if c.is_real():
                neg = c.re < 0
                mag = str(abs(c.re))
                if body and mag == "1":
                    mag = ""
            else:
                neg = False
                mag = f"({c})"
            pieces.append(("−" if neg else "+", mag + body))
        text = "".join(sign + p for sign, p in pieces)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def to_json(self) -> list[dict]:
        """Serialize as a list of ``{"monomial": {...}, "coef": {...}}`` in canonical order.

        ``odd`` indices are 1-based positions in the anticommuting generator list.
        """
        return [
            {"monomial": {"exp": list(exps), "odd": [j + 1 for j in _bits(mask)]},
             "coef": c.to_json()}
            for (exps, mask), c in self.items()
        ]

    @classmethod
    def from_json(cls, sig: AlgebraSignature, data: list[dict]) -> AlgebraElement:
        out = sig.zero()
        for entry in data:
            mono = entry["monomial"]
            odd = [j - 1 for j in mono.get("odd", [])]
            if sorted(odd) != odd:
                raise ValueError("odd indices must be ascending")
            out = out + sig.monomial(mono.get("exp", []), odd, Scalar.from_json(entry["coef"]))
        return out

