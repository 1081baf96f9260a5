"""h*-vectors, generating-function numerators and related predicates.

A degree-``d`` polynomial ``f`` is written in the binomial basis as

    f(x) = sum_i h_i C(x + d - i, d),

which is the same as saying ``sum_{n>=0} f(n) t^n = h(t) / (1-t)^(d+1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ZeroPolynomialError
from .magic import MagicExpansion, from_magic, to_magic
from .poly import Polynomial, as_fraction, binomial_poly, evaluate
from .roots import is_real_rooted as _poly_real_rooted


@dataclass(frozen=True)
class HStarVector:
    """Numerator coefficients ``h_0..h_d``.

    ``lattice_candidate`` marks vectors that claim to come from a lattice
    polytope; for those, :attr:`issues` lists every way the vector falls
    short of Stanley's non-negativity/integrality and ``h_0 = 1``.
    """

    d: int
    h: tuple
    lattice_candidate: bool = field(default=True, compare=False)

    def __post_init__(self):
        h = tuple(as_fraction(v) for v in self.h)
        if len(h) != self.d + 1:
            raise ValueError(f"expected {self.d + 1} entries, got {len(h)}")
        object.__setattr__(self, "h", h)

    @property
    def issues(self) -> list[str]:
        if not self.lattice_candidate:
            return []
        out = []
        if self.h[0] != 1:
            out.append(f"h_0 = {self.h[0]} (expected 1 for a lattice polytope)")
        for i, v in enumerate(self.h):
            if v.denominator != 1:
                out.append(f"h_{i} = {v} is not an integer")
            if v < 0:
                out.append(f"h_{i} = {v} is negative")
        return out

    def as_polynomial(self) -> Polynomial:
        """``h(t)`` as a polynomial in ``t``."""
        return Polynomial(self.h)


def ehrhart_from_hstar(h: HStarVector) -> Polynomial:
    d = h.d
    total = Polynomial()
    for i, hi in enumerate(h.h):
        if hi:
            total = total + binomial_poly(d - i, d) * hi
    return total


def hstar_from_ehrhart(f: Polynomial, d: int | None = None, lattice_candidate: bool = True) -> HStarVector:
    """Invert :func:`ehrhart_from_hstar` by finite differences.

    ``h_i = sum_{j<=i} (-1)^j C(d+1, j) f(i - j)``.  ``d`` defaults to
    ``deg f`` and may be set larger when the numerator is meant to sit
    over a higher power of ``1 - t``.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no h*-vector")
    if d is None:
        d = f.degree
    elif d < f.degree:
        raise ValueError(f"d = {d} is below deg f = {f.degree}")
    values = [evaluate(f, n) for n in range(d + 1)]
    h = []
    for i in range(d + 1):
        s = Fraction(0)
        for j in range(i + 1):
            t = math.comb(d + 1, j) * values[i - j]
            s += -t if j & 1 else t
        h.append(s)
    return HStarVector(d, tuple(h), lattice_candidate)


def numerator_from_magic(e: MagicExpansion) -> HStarVector:
    """``h(t)`` with ``sum_n (sum_j c_j n^j (n+1)^(d-j)) t^n = h(t)/(1-t)^(d+1)``."""
    f = from_magic(e)
    if f.is_zero:
        return HStarVector(e.d, (0,) * (e.d + 1), lattice_candidate=False)
    return hstar_from_ehrhart(f, d=e.d, lattice_candidate=False)


def is_palindromic(h: HStarVector) -> bool:
    """``h_i = h_{d-i}`` for all ``i`` and ``h_d != 0`` (degree exactly ``d``)."""
    v = h.h
    return v[-1] != 0 and v == v[::-1]


def reflexive_magic_check(f: Polynomial) -> bool:
    """Palindromicity of the magic coefficients of ``f``."""
    a = to_magic(f, 1).coeffs
    return a == a[::-1]


def is_real_rooted(f: Polynomial) -> bool:
    if f.is_zero:
        raise ZeroPolynomialError("real-rootedness of the zero polynomial is undefined")
    return _poly_real_rooted(f)
