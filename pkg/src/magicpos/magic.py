"""Expansion in the basis ``x^i (x+1)^(d-i)`` and magic positivity.

For ``f(x) = sum b_j x^j`` of degree ``d`` the coefficient of
``x^i (x+1)^(d-i)`` in ``f(k x)`` is

    g_i(k) = sum_{j<=i} (-1)^(i-j) C(d-j, i-j) b_j k^j,

the same alternating transform that takes an f-vector to an h-vector.
Everything below is built on that identity.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveCoefficientsError, ZeroDilationError, ZeroPolynomialError
from .poly import Polynomial, as_fraction, evaluate, mul
from .roots import cauchy_bound

DEFAULT_SCAN_CAP = 10_000


@dataclass(frozen=True)
class MagicExpansion:
    """Coefficients ``a_0..a_d`` of ``sum a_i x^i (x+1)^(d-i)``."""

    d: int
    coeffs: tuple

    def __post_init__(self):
        c = tuple(as_fraction(a) for a in self.coeffs)
        if len(c) != self.d + 1:
            raise ValueError(f"expected {self.d + 1} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @property
    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def first_negative(self):
        """Index of the first negative coefficient, or ``None``."""
        for i, a in enumerate(self.coeffs):
            if a < 0:
                return i
        return None

    def __add__(self, other: "MagicExpansion") -> "MagicExpansion":
        if self.d != other.d:
            raise ValueError("basis degrees differ")
        return MagicExpansion(self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


@dataclass(frozen=True)
class ThresholdPolynomials:
    """The ``d+1`` polynomials ``g_i(k)`` in the dilation variable ``k``."""

    d: int
    g: tuple

    def at(self, k) -> MagicExpansion:
        return MagicExpansion(self.d, tuple(evaluate(gi, k) for gi in self.g))


@dataclass(frozen=True)
class MIndexResult:
    """Outcome of an m-index search.

    ``value`` is ``None`` when a capped linear scan found nothing.
    """

    value: int | None
    search_bound_used: int
    monotone_search: bool

    @property
    def found(self) -> bool:
        return self.value is not None


def _check_nonzero(f: Polynomial) -> int:
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no magic expansion")
    return f.degree


def _transform(b, k) -> tuple:
    d = len(b) - 1
    bk = []
    kp = Fraction(1)
    for bj in b:
        bk.append(bj * kp)
        kp *= k
    out = []
    for i in range(d + 1):
        s = Fraction(0)
        for j in range(i + 1):
            t = math.comb(d - j, i - j) * bk[j]
            s += -t if (i - j) & 1 else t
        out.append(s)
    return tuple(out)


def to_magic(f: Polynomial, k=1) -> MagicExpansion:
    """Expand ``f(k x)`` in the basis ``x^i (x+1)^(d-i)`` with ``d = deg f``."""
    d = _check_nonzero(f)
    k = as_fraction(k)
    if k == 0:
        raise ZeroDilationError("dilation factor must be nonzero")
    return MagicExpansion(d, _transform(f.coeffs, k))


def from_magic(e: MagicExpansion) -> Polynomial:
    """Multiply out ``sum a_i x^i (x+1)^(d-i)``."""
    x = Polynomial.x()
    x1 = Polynomial((1, 1))
    total = Polynomial()
    for i, a in enumerate(e.coeffs):
        if a:
            total = total + mul(x ** i, x1 ** (e.d - i)) * a
    return total


def is_magic_positive(f: Polynomial) -> bool:
    return to_magic(f, 1).is_nonnegative


def _magic_positive_at(f: Polynomial, k) -> bool:
    return all(a >= 0 for a in _transform(f.coeffs, as_fraction(k)))


def threshold_polys(f: Polynomial) -> ThresholdPolynomials:
    d = _check_nonzero(f)
    b = f.coeffs
    g = []
    for i in range(d + 1):
        coeffs = [
            (-1) ** (i - j) * math.comb(d - j, i - j) * b[j] for j in range(i + 1)
        ]
        g.append(Polynomial(coeffs))
    return ThresholdPolynomials(d, tuple(g))


def _require_positive(f: Polynomial) -> None:
    _check_nonzero(f)
    if any(c <= 0 for c in f.coeffs):
        raise NonPositiveCoefficientsError(
            "all coefficients must be strictly positive, got " + str(f)
        )


def search_bound(f: Polynomial) -> int:
    """An integer ``K >= 1`` with every ``g_i(k) > 0`` for ``k >= K``.

    Takes the largest Cauchy root bound over the threshold polynomials;
    ``g_i`` has leading coefficient ``b_i > 0`` so it is positive past
    all of its real roots.
    """
    _require_positive(f)
    bound = Fraction(1)
    for gi in threshold_polys(f).g:
        if gi.degree >= 1:
            bound = max(bound, cauchy_bound(gi))
    return max(1, math.ceil(bound))


def scan_cap_from_env() -> int:
    raw = os.environ.get("EHRHART_SCAN_CAP")
    if not raw:
        return DEFAULT_SCAN_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("EHRHART_SCAN_CAP must be a positive integer")
    return cap


def m_index(f: Polynomial, cap: int | None = None) -> MIndexResult:
    """Smallest positive integer ``k`` with ``f(k x)`` magic positive.

    With strictly positive coefficients the predicate is monotone in
    ``k``, so a binary search over ``[1, search_bound(f)]`` is exact.
    Otherwise ``k = 1, 2, ..., cap`` is scanned and no monotonicity is
    claimed.
    """
    _check_nonzero(f)
    if all(c > 0 for c in f.coeffs):
        bound = hi = search_bound(f)
        if _magic_positive_at(f, 1):
            return MIndexResult(1, bound, True)
        lo = 1  # invariant: lo fails, hi succeeds
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _magic_positive_at(f, mid):
                hi = mid
            else:
                lo = mid
        return MIndexResult(hi, bound, True)

    if cap is None:
        cap = scan_cap_from_env()
    for k in range(1, cap + 1):
        if _magic_positive_at(f, k):
            return MIndexResult(k, cap, False)
    return MIndexResult(None, cap, False)


def m_index_linear(f: Polynomial, upto: int) -> int | None:
    """Plain scan ``k = 1..upto``; the reference the binary search is checked against."""
    for k in range(1, upto + 1):
        if _magic_positive_at(f, k):
            return k
    return None


def magic_threshold(f: Polynomial, tol) -> tuple[Fraction, Fraction]:
    """Bracket ``inf{k > 0 : f(k x) magic positive}`` to width ``tol``.

    Returns ``(lo, hi)`` with ``hi`` magic positive and ``lo`` either 0
    or not magic positive.
    """
    _require_positive(f)
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = Fraction(0), Fraction(search_bound(f))
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _magic_positive_at(f, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi
