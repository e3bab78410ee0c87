"""Gaussian rationals: exact field arithmetic over Q(i).

Coefficients of algebra elements live here; no floating point anywhere in
the symbolic layer.  Rational parts serialise as decimal-free "p/q" strings.
"""

from dataclasses import dataclass
from fractions import Fraction


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


@dataclass(frozen=True)
class QQi:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    # --- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = as_qqi(other)
        return QQi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_qqi(other)
        return QQi(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_qqi(other) - self

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __mul__(self, other):
        other = as_qqi(other)
        return QQi(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_qqi(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi((self.re * other.re + self.im * other.im) / d,
                   (self.im * other.re - self.re * other.im) / d)

    def conjugate(self):
        return QQi(self.re, -self.im)

    def abs2(self):
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"

    def to_json(self):
        return {"re": str(self.re), "im": str(self.im)}


ZERO = QQi()
ONE = QQi(1)
I = QQi(0, 1)


def as_qqi(x):
    if isinstance(x, QQi):
        return x
    if isinstance(x, (int, Fraction)):
        return QQi(x)
    raise TypeError(f"cannot coerce {x!r} to a Gaussian rational")


def qqi_from_json(d):
    return QQi(Fraction(d["re"]), Fraction(d["im"]))
