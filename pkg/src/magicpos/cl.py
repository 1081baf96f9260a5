"""Polynomials whose roots all lie on the line Re(z) = -1/2.

After the substitution ``x = y - 1/2`` such a polynomial becomes
``a * y^m * r(y^2)`` where every root of ``r`` is a negative real
``u_i = -b_i^2``; the roots of the original are ``-1/2 +- b_i i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NegativeInputError, NotCLError, ZeroPolynomialError
from .poly import Polynomial, as_fraction, evaluate, lowest_order, shift
from .roots import (
    cauchy_bound,
    count_real_roots,
    isolate_real_roots,
    squarefree_decomposition,
    sturm_sequence,
)

ISOLATION_WIDTH = Fraction(1, 2**20)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CLCertificate:
    """Verdict of :func:`cl_check`.

    ``squared_parts`` holds one isolating interval ``(lo, hi)`` per
    quadratic factor ``(x + 1/2)^2 + b^2``, repeated by multiplicity and
    sorted; a degenerate interval means ``b^2`` is exactly ``lo``.
    """

    is_cl: bool
    odd_degree_half_root: bool
    squared_parts: tuple
    max_b_squared_upper: Fraction
    reason: str = ""

    # squarefree polynomial whose positive roots are the distinct b_i^2
    radical: Polynomial = field(default=Polynomial((1,)), repr=False, compare=False)


def _reject(reason: str) -> CLCertificate:
    return CLCertificate(False, False, (), Fraction(0), reason)


def cl_check(f: Polynomial) -> CLCertificate:
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    q = shift(f, -HALF)
    m = lowest_order(q)
    core = Polynomial(q.coeffs[m:])
    if any(c for c in core.coeffs[1::2]):
        return _reject("roots are not symmetric about Re(z) = -1/2")
    # core(y) = r(y^2); m has the parity of deg f because core is even
    r = Polynomial(core.coeffs[0::2])

    parts = [(Fraction(0), Fraction(0))] * (m // 2)
    radical = Polynomial((1,))
    if r.degree > 0:
        # roots of r(-v) are the b_i^2 and must all be positive reals
        rv = r.scale_arg(-1)
        factors = [
            (s, mult)
            for mult, s in enumerate(squarefree_decomposition(rv), start=1)
            if s.degree > 0
        ]
        for s, _ in factors:
            radical = radical * s
        bound = cauchy_bound(radical)
        if count_real_roots(radical, 0, bound) != radical.degree:
            return _reject("a root lies off the line Re(z) = -1/2")
        for lo, hi in isolate_real_roots(radical, 0, bound, ISOLATION_WIDTH):
            for s, mult in factors:
                if (evaluate(s, lo) == 0) if lo == hi else count_real_roots(s, lo, hi):
                    parts.extend([(lo, hi)] * mult)
                    break
    parts.sort()
    upper = parts[-1][1] if parts else Fraction(0)
    return CLCertificate(True, bool(m % 2), tuple(parts), upper, "", radical)


def quadratic_threshold(b_squared) -> Fraction:
    """Least ``k`` making ``f(k x)`` magic positive for ``f`` with roots ``-1/2 +- b i``."""
    b_squared = as_fraction(b_squared)
    if b_squared < 0:
        raise NegativeInputError(f"b^2 must be non-negative, got {b_squared}")
    return HALF + 2 * b_squared


def _ceil_threshold(s: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Exact ``ceil(1/2 + 2 v)`` for the unique root ``v`` of ``s`` in ``(lo, hi]``."""
    chain = sturm_sequence(s)
    while lo != hi:
        if evaluate(s, hi) == 0:
            lo = hi
            break
        c = math.ceil(HALF + 2 * hi)
        brk = (c - 1 - HALF) / 2  # value where 1/2 + 2v = c - 1
        if brk <= lo:
            return c
        if evaluate(s, brk) == 0:
            return c - 1
        if count_real_roots(s, lo, brk, chain):
            hi = brk
        else:
            lo = brk
    return math.ceil(HALF + 2 * lo)


def cl_mindex_bound(f: Polynomial) -> int:
    """``ceil(1/2 + 2 max b_i^2)``, an upper bound on the m-index of a CL polynomial."""
    cert = cl_check(f)
    if not cert.is_cl:
        raise NotCLError(cert.reason or "polynomial is not CL")
    if not cert.squared_parts:
        return 1
    lo, hi = cert.squared_parts[-1]
    if lo == hi:
        return max(1, math.ceil(HALF + 2 * lo))
    return max(1, _ceil_threshold(cert.radical, lo, hi))


def dimension_only_bound(d: int) -> int:
    """``ceil(1/2 + 2 d^2 (d - 1/2)^2)``, valid for every CL polytope of dimension ``d``."""
    if d < 1:
        raise ValueError("d must be positive")
    return math.ceil(HALF + 2 * d * d * (d - HALF) ** 2)
