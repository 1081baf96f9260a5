"""Closed-form Ehrhart polynomials of several polytope families.

Each family is a small frozen dataclass.  :func:`ehrhart` returns the
closed form; :func:`lattice_count` counts lattice points of a dilate by
brute-force enumeration and exists only to validate those closed forms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import InvalidParametersError, TooLargeError, UnsupportedGenericError
from .magic import is_magic_positive, m_index
from .poly import Polynomial, binomial_linear, binomial_poly, scale_arg

ENUMERATION_LIMIT = 10**7


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParametersError(msg)


@dataclass(frozen=True)
class StandardSimplex:
    """conv(e_1, ..., e_{d+1}) in R^{d+1}."""

    d: int

    def __post_init__(self):
        _need(self.d >= 1, f"StandardSimplex needs d >= 1, got d={self.d}")


@dataclass(frozen=True)
class SpikedSimplex:
    """conv(e_1, ..., e_d, -q(e_1 + ... + e_d)); h* = (1, q, ..., q)."""

    q: int
    d: int

    def __post_init__(self):
        _need(self.d >= 1, f"SpikedSimplex needs d >= 1, got d={self.d}")
        _need(self.q >= 1, f"SpikedSimplex needs q >= 1, got q={self.q}")


@dataclass(frozen=True)
class MinimalMatroid:
    """Base polytope of the minimal connected matroid of rank k on n elements."""

    k: int
    n: int

    def __post_init__(self):
        _need(self.k >= 1 and self.n >= self.k + 1,
              f"MinimalMatroid needs 1 <= k < n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class CompleteMultipartite:
    """Edge polytope of the complete multipartite graph with part sizes ``q``."""

    q: tuple

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(int(v) for v in self.q))
        _need(len(self.q) >= 2, f"CompleteMultipartite needs at least 2 parts, got {self.q}")
        _need(all(v >= 1 for v in self.q), f"part sizes must be >= 1, got {self.q}")


@dataclass(frozen=True)
class Hypersimplex:
    """{x in [0,1]^n : sum x = k}."""

    k: int
    n: int

    def __post_init__(self):
        _need(1 <= self.k <= self.n,
              f"Hypersimplex needs 1 <= k <= n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class CrossPolytope:
    """conv(+-e_1, ..., +-e_d)."""

    d: int

    def __post_init__(self):
        _need(self.d >= 1, f"CrossPolytope needs d >= 1, got d={self.d}")


@dataclass(frozen=True)
class StandardReflexiveSimplex:
    """conv(e_1, ..., e_d, -(e_1 + ... + e_d)); h* = (1, ..., 1)."""

    d: int

    def __post_init__(self):
        _need(self.d >= 1, f"StandardReflexiveSimplex needs d >= 1, got d={self.d}")


@dataclass(frozen=True)
class Generic:
    """A bare polynomial with no geometry attached."""

    poly: Polynomial


FamilySpec = Union[
    StandardSimplex, SpikedSimplex, MinimalMatroid, CompleteMultipartite,
    Hypersimplex, CrossPolytope, StandardReflexiveSimplex, Generic,
]


# ---------------------------------------------------------------------------
# closed forms


def _spiked(q: int, d: int) -> Polynomial:
    total = binomial_poly(d, d)
    for i in range(1, d + 1):
        total = total + binomial_poly(d - i, d) * q
    return total


def _minimal_matroid(k: int, n: int) -> Polynomial:
    s = Polynomial()
    for j in range(k):
        s = s + binomial_poly(j, j) * math.comb(n - k - 1 + j, j)
    return binomial_poly(n - k, n - k) * s / math.comb(n - 1, k - 1)


def _multipartite(q: tuple) -> Polynomial:
    d = sum(q)
    total = binomial_linear(2, d - 1, d - 1)
    for qk in q:
        for j in range(1, qk + 1):
            for i in range(1, j + 1):
                total = total - binomial_poly(j - i - 1, j - i) * binomial_poly(d - j - 1, d - j)
    return total


def _hypersimplex(k: int, n: int) -> Polynomial:
    total = Polynomial()
    for j in range(k):
        term = binomial_linear(k - j, n - 1 - j, n - 1) * math.comb(n, j)
        total = total - term if j & 1 else total + term
    return total


def _cross(d: int) -> Polynomial:
    total = Polynomial()
    for i in range(d + 1):
        total = total + binomial_poly(0, i) * (2**i * math.comb(d, i))
    return total


def _reflexive_simplex(d: int) -> Polynomial:
    total = Polynomial()
    for i in range(d + 1):
        total = total + binomial_poly(d - i, d)
    return total


def ehrhart(spec: FamilySpec) -> Polynomial:
    """Ehrhart polynomial of the family member described by ``spec``."""
    if isinstance(spec, StandardSimplex):
        return binomial_poly(spec.d, spec.d)
    if isinstance(spec, SpikedSimplex):
        return _spiked(spec.q, spec.d)
    if isinstance(spec, MinimalMatroid):
        return _minimal_matroid(spec.k, spec.n)
    if isinstance(spec, CompleteMultipartite):
        return _multipartite(spec.q)
    if isinstance(spec, Hypersimplex):
        return _hypersimplex(spec.k, spec.n)
    if isinstance(spec, CrossPolytope):
        return _cross(spec.d)
    if isinstance(spec, StandardReflexiveSimplex):
        return _reflexive_simplex(spec.d)
    if isinstance(spec, Generic):
        return spec.poly
    raise InvalidParametersError(f"unknown family spec {spec!r}")


def ehrhart_dilated(spec: FamilySpec, k: int) -> Polynomial:
    """Ehrhart polynomial of ``k P``, i.e. ``E_P(k x)``."""
    if k < 1:
        raise InvalidParametersError(f"dilation must be a positive integer, got {k}")
    return scale_arg(ehrhart(spec), k)


# ---------------------------------------------------------------------------
# brute-force lattice point enumeration


@dataclass(frozen=True)
class LatticePointCount:
    spec: FamilySpec
    dilation: int
    n: int
    count: int


def _compositions(length: int, total: int, upper: int) -> Iterator[tuple]:
    """Integer vectors in [0, upper]^length with the given coordinate sum."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        if 0 <= total <= upper:
            yield (total,)
        return
    rest_max = upper * (length - 1)
    for first in range(max(0, total - rest_max), min(upper, total) + 1):
        for tail in _compositions(length - 1, total - first, upper):
            yield (first,) + tail


def _l1_ball(dim: int, radius: int) -> Iterator[tuple]:
    if dim == 0:
        yield ()
        return
    for first in range(-radius, radius + 1):
        for tail in _l1_ball(dim - 1, radius - abs(first)):
            yield (first,) + tail


def _guard(estimate: int) -> None:
    if estimate > ENUMERATION_LIMIT:
        raise TooLargeError(
            f"enumeration would visit about {estimate} candidates (limit {ENUMERATION_LIMIT})"
        )


def _compositions_estimate(length: int, total: int) -> int:
    return math.comb(total + length - 1, length - 1)


def _count_simplex(d: int, m: int) -> int:
    _guard(_compositions_estimate(d + 1, m))
    return sum(1 for _ in _compositions(d + 1, m, m))


def _count_spiked(q: int, d: int, m: int) -> int:
    # barycentric weight of the apex is (m - sum x)/(1 + d q) scaled by m;
    # every other weight x_i + q*that must be non-negative
    _guard(((q + 1) * m + 1) ** d)
    count = 0
    for x in itertools.product(range(-q * m, m + 1), repeat=d):
        s = sum(x)
        if s > m:
            continue
        slack = q * (m - s)
        if all((1 + d * q) * xi + slack >= 0 for xi in x):
            count += 1
    return count


def _count_minimal_matroid(k: int, n: int, m: int) -> int:
    # graphic realisation: a (k+1)-cycle with one edge replaced by a
    # parallel class A of size n-k; the only non-trivial flat bound is
    # x(A) <= rank(A) = 1
    _guard(_compositions_estimate(n, k * m))
    a = n - k
    return sum(1 for x in _compositions(n, k * m, m) if sum(x[:a]) <= m)


def _count_multipartite(q: tuple, m: int) -> int:
    # rank-2 matroid whose parallel classes are the parts
    d = sum(q)
    _guard(_compositions_estimate(d, 2 * m))
    bounds = []
    start = 0
    for size in q:
        bounds.append((start, start + size))
        start += size
    return sum(
        1 for x in _compositions(d, 2 * m, m)
        if all(sum(x[a:b]) <= m for a, b in bounds)
    )


def _count_hypersimplex(k: int, n: int, m: int) -> int:
    _guard(_compositions_estimate(n, k * m))
    return sum(1 for _ in _compositions(n, k * m, m))


def _count_cross(d: int, m: int) -> int:
    _guard((2 * m + 1) ** d)
    return sum(1 for _ in _l1_ball(d, m))


def lattice_count(spec: FamilySpec, dilation: int, n: int) -> LatticePointCount:
    """Count lattice points of ``n * (dilation * P)`` by enumeration."""
    if dilation < 1 or n < 1:
        raise InvalidParametersError("dilation and n must be positive integers")
    m = dilation * n
    if isinstance(spec, StandardSimplex):
        c = _count_simplex(spec.d, m)
    elif isinstance(spec, SpikedSimplex):
        c = _count_spiked(spec.q, spec.d, m)
    elif isinstance(spec, StandardReflexiveSimplex):
        c = _count_spiked(1, spec.d, m)
    elif isinstance(spec, MinimalMatroid):
        c = _count_minimal_matroid(spec.k, spec.n, m)
    elif isinstance(spec, CompleteMultipartite):
        c = _count_multipartite(spec.q, m)
    elif isinstance(spec, Hypersimplex):
        c = _count_hypersimplex(spec.k, spec.n, m)
    elif isinstance(spec, CrossPolytope):
        c = _count_cross(spec.d, m)
    elif isinstance(spec, Generic):
        raise UnsupportedGenericError("a bare polynomial has no lattice points to count")
    else:
        raise InvalidParametersError(f"unknown family spec {spec!r}")
    return LatticePointCount(spec, dilation, n, c)


# ---------------------------------------------------------------------------
# dimension-wise counterexamples


def counterexample_q(d: int, k: int, max_q: int | None = None) -> int:
    """Smallest ``q`` with ``E_{k P_{q,d}}`` not magic positive.

    The scan is linear in ``q`` so minimality is by construction.
    """
    _need(d >= 3, f"counterexamples exist only for d >= 3, got d={d}")
    _need(k >= 1, f"dilation must be >= 1, got k={k}")
    q = 1
    while True:
        if not is_magic_positive(ehrhart_dilated(SpikedSimplex(q, d), k)):
            return q
        q += 1
        if max_q is not None and q > max_q:
            raise TooLargeError(f"no counterexample with q <= {max_q}")


# ---------------------------------------------------------------------------
# conjecture scans


CONJECTURES = ("minimal-matroid", "multipartite", "hypersimplex")

MULTIPARTITE_TYPES = (
    (1, 1, 1), (2, 2, 2), (3, 3, 3), (1, 2, 3),
    (1, 2, 4), (1, 2, 5), (1, 2, 3, 4), (1, 1, 1, 5),
)


@dataclass(frozen=True)
class ConjectureRecord:
    params: dict
    computed: int | None
    conjectured: tuple
    status: str  # "match", "mismatch" or "skipped"
    note: str = ""


def _scan_minimal_matroid(ns) -> list[ConjectureRecord]:
    out = []
    for n in ns:
        for k in range(1, n // 2 + 1):
            params = {"k": k, "n": n}
            if n < k + 1:
                out.append(ConjectureRecord(params, None, (n - k,), "skipped", "needs n > k"))
                continue
            got = m_index(ehrhart(MinimalMatroid(k, n))).value
            want = (n - k,)
            out.append(ConjectureRecord(params, got, want, "match" if got in want else "mismatch"))
    return out


def _scan_multipartite(types) -> list[ConjectureRecord]:
    out = []
    for q in types:
        q = tuple(q)
        params = {"q": list(q)}
        if len(q) < 2:
            out.append(ConjectureRecord(params, None, (), "skipped", "needs at least 2 parts"))
            continue
        total = sum(q)
        want = (max(q), total // 2, -(-total // 2))
        got = m_index(ehrhart(CompleteMultipartite(q))).value
        out.append(ConjectureRecord(params, got, want, "match" if got in want else "mismatch"))
    return out


def _scan_hypersimplex(ns) -> list[ConjectureRecord]:
    out = []
    for n in ns:
        half = n // 2
        for j in range(0, half - 1):
            k = half - j
            params = {"k": k, "n": n, "offset": j}
            got = m_index(ehrhart(Hypersimplex(k, n))).value
            want = (j + 2,)
            out.append(ConjectureRecord(params, got, want, "match" if got in want else "mismatch"))
    return out


def conjecture_scan(which: str, ns=None, types=None) -> list[ConjectureRecord]:
    """Compare computed m-indices with conjectured values; reports, never asserts.

    ``which`` is one of :data:`CONJECTURES`:

    * ``"minimal-matroid"``: m-index(B(T_{k,n})) = n - k for 1 <= k <= n/2
    * ``"multipartite"``: m-index lies in {max q, floor(sum/2), ceil(sum/2)}
    * ``"hypersimplex"``: m-index(Delta_{floor(n/2) - j, n}) = j + 2
      for 0 <= j <= floor(n/2) - 2
    """
    if which == "minimal-matroid":
        return _scan_minimal_matroid(ns if ns is not None else range(2, 11))
    if which == "multipartite":
        return _scan_multipartite(types if types is not None else MULTIPARTITE_TYPES)
    if which == "hypersimplex":
        return _scan_hypersimplex(ns if ns is not None else range(4, 13))
    raise InvalidParametersError(f"unknown conjecture {which!r}; choose from {CONJECTURES}")
