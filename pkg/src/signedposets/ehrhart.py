"""Brute-force lattice-point counting and exact Ehrhart/h* machinery.

Counting is direct enumeration over an integer box with early row rejection;
the box comes from single-coordinate rows when possible and otherwise from
exact LP bounds.  Interpolation uses the nodes t = 0..n, the smallest exact
determining set for a degree-n polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .errors import (
    InternalInconsistency,
    NegativeHstar,
    NonIntegralHstar,
    UnboundedSystem,
)
from .halfspaces import HalfspaceSystem
from .linalg import minimize

Poly = tuple[Fraction, ...]


def poly_eval(coeffs: Sequence[Fraction | int], t) -> Fraction:
    """Evaluate Σ c_k t^k exactly."""
    total = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        total += c * power
        power *= t
    return total


def _lp_bound(system: HalfspaceSystem, t: int, coord: int, sign: int) -> Fraction:
    """Exact min (sign=+1) or −max (sign=−1) of x_coord over the t-dilate."""
    objective = [0] * system.n
    objective[coord] = sign
    rows = [(row.a, Fraction(t * row.b)) for row in system.rows]
    status, value, _ = minimize(objective, rows)
    if status == "unbounded":
        raise UnboundedSystem(
            f"coordinate {coord + 1} is unbounded; cannot count lattice points"
        )
    if status == "infeasible":
        raise _EmptySystem()
    return value


class _EmptySystem(Exception):
    """Internal: the dilate is empty, so every count is zero."""


def integer_box(system: HalfspaceSystem, t: int) -> list[tuple[int, int]]:
    """Per-coordinate integer bounds enclosing the t-dilate.

    Rows supported on a single coordinate give bounds syntactically; any side
    still missing falls back to an exact LP.
    """
    lo: list[Optional[Fraction]] = [None] * system.n
    hi: list[Optional[Fraction]] = [None] * system.n
    for row in system.rows:
        support = [i for i, c in enumerate(row.a) if c != 0]
        if len(support) != 1:
            continue
        (i,) = support
        c = row.a[i]
        bound = Fraction(t * row.b, c)
        if c > 0:
            lo[i] = bound if lo[i] is None else max(lo[i], bound)
        else:
            hi[i] = bound if hi[i] is None else min(hi[i], bound)
    box = []
    for i in range(system.n):
        low = lo[i] if lo[i] is not None else _lp_bound(system, t, i, 1)
        high = hi[i] if hi[i] is not None else -_lp_bound(system, t, i, -1)
        box.append((math.ceil(low), math.floor(high)))
    return box


@lru_cache(maxsize=131072)
def count_points(system: HalfspaceSystem, t: int, strict: bool = False) -> int:
    """|tP ∩ Z^n| (or the strict-interior count) by box enumeration.

    Memoized: the verification sweeps ask for the same counts many times
    (h*, reciprocity, Gorenstein index all sit on the same values).
    """
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    try:
        box = integer_box(system, t)
    except _EmptySystem:
        return 0
    if any(lo > hi for lo, hi in box):
        return 0
    ranges = [range(lo, hi + 1) for lo, hi in box]
    rows = [(row.a, t * row.b) for row in system.rows]
    count = 0
    for x in product(*ranges):
        for a, b in rows:
            value = sum(ai * xi for ai, xi in zip(a, x))
            if value < b or (strict and value == b):
                break
        else:
            count += 1
    return count


def ehrhart_polynomial(system: HalfspaceSystem, n: Optional[int] = None) -> Poly:
    """Exact Lagrange interpolation of t ↦ |tP ∩ Z^n| through t = 0..n."""
    if n is None:
        n = system.n
    counts = [count_points(system, t) for t in range(n + 1)]
    coeffs = [Fraction(0)] * (n + 1)
    for t, value in enumerate(counts):
        # Lagrange basis polynomial for node t over nodes 0..n.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for s in range(n + 1):
            if s == t:
                continue
            # multiply basis by (x - s)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * s
                nxt[k + 1] += c
            basis = nxt
            denom *= t - s
        scale = Fraction(value) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    if coeffs[n] <= 0:
        raise InternalInconsistency(
            f"Ehrhart interpolation gave degree < {n} (leading {coeffs[n]}); "
            "the polytope is not full-dimensional"
        )
    return tuple(coeffs)


def hstar_from_counts(system: HalfspaceSystem, n: Optional[int] = None) -> tuple[int, ...]:
    """h*-vector from raw counts: h*_j = Σ_i (−1)^i C(n+1, i) ehr(j−i).

    Integrality and nonnegativity are asserted; failures mean the counting
    kernel is broken and raise loudly.
    """
    if n is None:
        n = system.n
    counts = [count_points(system, t) for t in range(n + 1)]
    hstar = []
    for j in range(n + 1):
        value = sum(
            (-1) ** i * math.comb(n + 1, i) * counts[j - i] for i in range(j + 1)
        )
        hstar.append(value)
    for value in hstar:
        if not isinstance(value, int):  # pragma: no cover - ints in, ints out
            raise NonIntegralHstar(f"h* = {hstar}")
        if value < 0:
            raise NegativeHstar(f"h* = {hstar}")
    while len(hstar) > 1 and hstar[-1] == 0:
        hstar.pop()
    return tuple(hstar)


def reciprocity_check(system: HalfspaceSystem, n: Optional[int] = None) -> bool:
    """Ehrhart–Macdonald: (−1)^n ehr(−t) must equal the strict count, t = 1..n+1."""
    if n is None:
        n = system.n
    ehr = ehrhart_polynomial(system, n)
    sign = (-1) ** n
    return all(
        sign * poly_eval(ehr, -t) == count_points(system, t, strict=True)
        for t in range(1, n + 2)
    )


def gorenstein_index_by_counts(
    system: HalfspaceSystem, n: Optional[int] = None
) -> Optional[int]:
    """Smallest k with strict(t<k) = 0, strict(k) = 1, strict(k+t) = ehr(t) for t ≤ n.

    Returns None when no such k ≤ n+1 exists.  (The first interior point of
    any full-dimensional polytope here appears by dilate n+1, so the search
    range is complete.)
    """
    if n is None:
        n = system.n
    weak = [count_points(system, t) for t in range(n + 1)]
    for k in range(1, n + 2):
        if count_points(system, k - 1, strict=True) != 0:
            return None
        if count_points(system, k, strict=True) != 1:
            continue
        if all(
            count_points(system, k + t, strict=True) == weak[t] for t in range(n + 1)
        ):
            return k
    return None


def is_palindromic(hstar: Sequence[int]) -> bool:
    """h_j = h_{s−j} on the trimmed vector of degree s."""
    return list(hstar) == list(reversed(hstar))


def is_unimodal(hstar: Sequence[int]) -> bool:
    """Coefficients rise (weakly) then fall (weakly)."""
    i = 1
    while i < len(hstar) and hstar[i - 1] <= hstar[i]:
        i += 1
    while i < len(hstar) and hstar[i - 1] >= hstar[i]:
        i += 1
    return i == len(hstar)


def format_rational(value: Fraction) -> str:
    """Serialize a rational as "p" or "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def poly_to_json(coeffs: Sequence[Fraction | int]) -> list:
    return [
        c if isinstance(c, int) else format_rational(c) for c in coeffs
    ]
