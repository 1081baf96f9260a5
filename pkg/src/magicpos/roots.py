"""Exact real-root counting and isolation with Sturm chains."""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import Polynomial, as_fraction, derivative, divmod_poly, evaluate, gcd


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')`` made monic; constants map to 1."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return Polynomial((1,))
    g = gcd(p, derivative(p))
    return divmod_poly(p, g)[0].monic()


def squarefree_decomposition(p: Polynomial) -> list[Polynomial]:
    """Yun's algorithm.

    Returns ``[s1, s2, ...]`` with each ``s_i`` monic and squarefree,
    pairwise coprime, and ``p = lc(p) * prod(s_i ** i)``.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = c - derivative(b)
    out = []
    while b.degree != 0:
        a = gcd(b, d)
        out.append(a)
        b = divmod_poly(b, a)[0]
        c = divmod_poly(d, a)[0]
        d = c - derivative(b)
    return out


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    """Sturm chain of the squarefree part of ``p``.

    Each remainder is rescaled by a positive constant so coefficients
    stay small; signs are untouched.
    """
    s = squarefree_part(p)
    chain = [s, derivative(s)]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        r = -divmod_poly(chain[-2], chain[-1])[1]
        if r.is_zero:
            break
        chain.append(r / abs(r.leading))
    return [c for c in chain if not c.is_zero]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at(chain, x) -> list[int]:
    if x == "-inf":
        return [_sign(c.leading) * (-1 if c.degree % 2 else 1) for c in chain]
    if x == "+inf":
        return [_sign(c.leading) for c in chain]
    return [_sign(evaluate(c, x)) for c in chain]


def count_real_roots(p: Polynomial, lo=None, hi=None, chain=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``None`` stands for -infinity (``lo``) or +infinity (``hi``).
    """
    if chain is None:
        chain = sturm_sequence(p)
    a = "-inf" if lo is None else as_fraction(lo)
    b = "+inf" if hi is None else as_fraction(hi)
    return _variations(_signs_at(chain, a)) - _variations(_signs_at(chain, b))


def is_real_rooted(p: Polynomial) -> bool:
    """True iff every complex root of the nonzero polynomial ``p`` is real."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    s = squarefree_part(p)
    return count_real_roots(s, chain=sturm_sequence(s)) == s.degree


def cauchy_bound(p: Polynomial) -> Fraction:
    """``1 + max |c_j / c_lead|``: every complex root has modulus below it."""
    lead = abs(p.leading)
    lower = p.coeffs[:-1]
    if not lower:
        return Fraction(1)
    return 1 + max(abs(c) for c in lower) / lead


def simplest_rational(lo, hi) -> Fraction:
    """The rational of least denominator in ``[lo, hi]`` (continued fractions)."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    return fl + 1 / simplest_rational(1 / (hi - fl), 1 / (lo - fl))


def isolate_real_roots(p: Polynomial, lo, hi, width=Fraction(1, 2**20)):
    """Isolating intervals for the distinct roots of ``p`` in ``(lo, hi]``.

    Returns sorted ``(a, b)`` pairs, each containing exactly one root in
    ``(a, b]`` with ``b - a <= width``; an exact rational root ``r`` is
    reported as ``(r, r)``.
    """
    s = squarefree_part(p)
    chain = sturm_sequence(s)
    width = as_fraction(width)
    out = []

    def count(a, b):
        return count_real_roots(s, a, b, chain)

    def refine(a, b):
        while True:
            if evaluate(s, b) == 0:
                return (b, b)
            if b - a <= width:
                c = simplest_rational(a, b)
                if c > a and evaluate(s, c) == 0:
                    return (c, c)
                return (a, b)
            mid = (a + b) / 2
            if evaluate(s, mid) == 0:
                return (mid, mid)
            if count(a, mid):
                b = mid
            else:
                a = mid

    stack = [(as_fraction(lo), as_fraction(hi))]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append(refine(a, b))
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out
