"""Exact univariate polynomials over the rationals.

A :class:`Polynomial` stores its coefficients as a tuple of
:class:`fractions.Fraction`, lowest degree first, with trailing zeros
stripped.  Instances are immutable and hashable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class _ZeroDegree:
    """Degree marker of the zero polynomial.

    Deliberately not an ``int``: comparing it with a number raises
    ``TypeError`` instead of quietly behaving like ``-1`` or ``0``.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO_DEGREE"

    def __reduce__(self):
        return "ZERO_DEGREE"


ZERO_DEGREE = _ZeroDegree()


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Polynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # caller guarantees Fractions without trailing zeros
        p = object.__new__(cls)
        p._c = coeffs
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * n + [c])

    # -- basic accessors ---------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        """Index of the leading coefficient, or ``ZERO_DEGREE`` for 0."""
        return len(self._c) - 1 if self._c else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial((as_fraction(other),))

    def __add__(self, other) -> "Polynomial":
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-a for a in self._c))

    def __sub__(self, other) -> "Polynomial":
        return add(self, -self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return add(self._coerce(other), -self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return mul(self, other)
        c = as_fraction(other)
        if c == 0:
            return Polynomial()
        return Polynomial._raw(tuple(a * c for a in self._c))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        c = as_fraction(other)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Polynomial._raw(tuple(a / c for a in self._c))

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        return divmod_poly(self, other)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod_poly(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod_poly(self, other)[1]

    def __call__(self, x):
        return evaluate(self, x)

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        try:
            return self._c == Polynomial._coerce(other)._c
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = -a if a < 0 else a
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- convenience wrappers ------------------------------------------------

    def derivative(self) -> "Polynomial":
        return derivative(self)

    def scale_arg(self, k) -> "Polynomial":
        return scale_arg(self, k)

    def shift(self, a) -> "Polynomial":
        return shift(self, a)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self / self.leading


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return Polynomial._raw(tuple(out))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Polynomial()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    # product of nonzero leading terms is nonzero over a field
    return Polynomial._raw(tuple(out))


def scale_arg(p: Polynomial, k) -> Polynomial:
    """Return ``p(k*x)``."""
    k = as_fraction(k)
    out = []
    kp = Fraction(1)
    for a in p.coeffs:
        out.append(a * kp)
        kp *= k
    return Polynomial(out)


def shift(p: Polynomial, a) -> Polynomial:
    """Return ``p(x + a)`` (Taylor shift, Horner scheme)."""
    a = as_fraction(a)
    lin = Polynomial((a, 1))
    result = Polynomial()
    for c in reversed(p.coeffs):
        result = mul(result, lin) + c
    return result


def evaluate(p: Polynomial, x) -> Fraction:
    """Exact Horner evaluation of ``p`` at the rational ``x``."""
    x = as_fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def binomial_poly(shift: int, d: int) -> Polynomial:
    """``C(x + shift, d)`` as a polynomial in ``x``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    num = Polynomial((1,))
    for j in range(d):
        num = mul(num, Polynomial((shift - j, 1)))
    return num / math.factorial(d)


def binomial_linear(a, shift: int, d: int) -> Polynomial:
    """``C(a*x + shift, d)``."""
    return scale_arg(binomial_poly(shift, d), a)


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial._raw(tuple(i * c for i, c in enumerate(p.coeffs) if i))


def divmod_poly(p: Polynomial, q: Polynomial):
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lq = q.leading
    if len(rem) - 1 < dq:
        return Polynomial(), p
    quot = [Fraction(0)] * (len(rem) - dq)
    for i in range(len(rem) - 1 - dq, -1, -1):
        c = rem[i + dq] / lq
        quot[i] = c
        if c:
            for j, qc in enumerate(q.coeffs):
                rem[i + j] -= c * qc
    return Polynomial(quot), Polynomial(rem[:dq])


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero if both are zero)."""
    while not q.is_zero:
        p, q = q, divmod_poly(p, q)[1]
    return p.monic()


def lowest_order(p: Polynomial) -> int:
    """Multiplicity of 0 as a root of the nonzero polynomial ``p``."""
    for i, c in enumerate(p.coeffs):
        if c:
            return i
    raise ValueError("zero polynomial has no finite root multiplicity at 0")
