"""Exact Gaussian rationals: the coefficient field Q(i)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "I", "ONE", "ZERO", "as_scalar"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class Scalar:
    """An element re + im*i of Q(i).

    Both parts are :class:`fractions.Fraction`, so they are always in lowest
    terms with positive denominators. Floats are rejected.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("imaginary part given twice")
            self.re, self.im = re.re, re.im
            return
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> Scalar:
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    # -- predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- field operations -------------------------------------------------
    def __add__(self, other) -> Scalar:
        o = as_scalar(other)
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        o = as_scalar(other)
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> Scalar:
        return as_scalar(other) - self

    def __neg__(self) -> Scalar:
        return Scalar._make(-self.re, -self.im)

    def __mul__(self, other) -> Scalar:
        o = as_scalar(other)
        if not self.im and not o.im:
            return Scalar._make(self.re * o.re, Fraction(0))
        return Scalar._make(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("Scalar division by zero")
        if not self.im:
            return Scalar._make(1 / self.re, Fraction(0))
        n = self.re * self.re + self.im * self.im
        return Scalar._make(self.re / n, -self.im / n)

    def __truediv__(self, other) -> Scalar:
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other) -> Scalar:
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            raise TypeError("only integer powers")
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> Scalar:
        return Scalar._make(self.re, -self.im)

    # -- text -------------------------------------------------------------
    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def __str__(self) -> str:
        """Render as ``p/q``, ``p/q·i`` or ``p/q + p'/q'·i``; zero parts elided."""
        if not self.im:
            return str(self.re)
        im = "i" if abs(self.im) == 1 else f"{abs(self.im)}·i"
        if not self.re:
            return ("-" if self.im < 0 else "") + im
        return f"{self.re} {'-' if self.im < 0 else '+'} {im}"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Inverse of ``str``."""
        t = text.replace(" ", "")
        try:
            if not t.endswith("i"):
                return cls._make(Fraction(t), Fraction(0))
            t = t[:-1].rstrip("·")
            cut = max(t.rfind("+"), t.rfind("-"))
            if cut > 0:
                re_text, im_text = t[:cut], t[cut:]
            else:
                re_text, im_text = "0", t
            if im_text in ("", "+", "-"):
                im_text += "1"
            return cls._make(Fraction(re_text), Fraction(im_text))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a Gaussian rational: {text!r}") from None

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj: dict) -> Scalar:
        return cls(Fraction(obj["re"]), Fraction(obj["im"]))


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
