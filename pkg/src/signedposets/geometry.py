"""Order cones and order polytopes of signed posets.

O_P = {x ∈ [−1,1]^n : ⟨α, x⟩ ≥ 0 for all α ∈ P}; K_P drops the cube.  The
irredundant description keeps only the minimal-representation rows plus the
cube bounds actually needed (pmax/nmax).  Lattice-point structure: the signed
filters {−1,0,1}^n are exactly the lattice points, and the vertices are the
filters whose active rows have full rank.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable

from .errors import InternalInconsistency
from .halfspaces import Halfspace, HalfspaceSystem, cube_rows
from .linalg import minimize, rank
from .posets import SignedPoset, from_generators, minimal_representation
from .roots import Root, inner_product


def _root_rows(roots: Iterable[Root], n: int) -> list[Halfspace]:
    return [
        Halfspace(alpha.vector(n), 0, f"root {alpha.token()}") for alpha in sorted(roots)
    ]


def order_polytope(p: SignedPoset) -> HalfspaceSystem:
    """Full H-description: every poset row plus all 2n cube rows."""
    return HalfspaceSystem(p.n, tuple(_root_rows(p.roots, p.n) + cube_rows(p.n)))


def order_cone(p: SignedPoset) -> HalfspaceSystem:
    """K_P: poset rows only (no cube)."""
    return HalfspaceSystem(p.n, tuple(_root_rows(p.roots, p.n)))


def pos_neg_max(p: SignedPoset) -> tuple[frozenset[int], frozenset[int]]:
    """Indices whose incident roots are all positive (pmax) resp. negative (nmax) there.

    Isolated indices are vacuously in both.
    """
    pmax, nmax = set(), set()
    for i in range(1, p.n + 1):
        signs = {alpha.sign_at(i) for alpha in p.roots} - {0}
        if -1 not in signs:
            pmax.add(i)
        if 1 not in signs:
            nmax.add(i)
    return frozenset(pmax), frozenset(nmax)


def order_polytope_irredundant(p: SignedPoset) -> HalfspaceSystem:
    """Minimal-representation rows plus x_i ≤ 1 for i ∈ pmax and x_i ≥ −1 for i ∈ nmax."""
    pmax, nmax = pos_neg_max(p)
    rows = _root_rows(minimal_representation(p), p.n)
    for i in range(1, p.n + 1):
        if i in pmax:
            upper = tuple(-1 if j == i else 0 for j in range(1, p.n + 1))
            rows.append(Halfspace(upper, -1, f"cube-upper({i})"))
        if i in nmax:
            lower = tuple(1 if j == i else 0 for j in range(1, p.n + 1))
            rows.append(Halfspace(lower, -1, f"cube-lower({i})"))
    return HalfspaceSystem(p.n, tuple(rows))


def row_is_necessary(system: HalfspaceSystem, index: int) -> bool:
    """Exact redundancy probe: can ⟨a, x⟩ go below b while all other rows hold?

    Minimizes the row's form subject to the remaining rows; the row is
    necessary iff the minimum is below b (or unbounded below).
    """
    row = system.rows[index]
    others = [(r.a, Fraction(r.b)) for i, r in enumerate(system.rows) if i != index]
    status, value, _ = minimize(row.a, others)
    if status == "unbounded":
        return True
    if status == "infeasible":  # pragma: no cover - systems here are nonempty
        return False
    return value < row.b


def signed_filters(p: SignedPoset) -> list[tuple[int, ...]]:
    """All x ∈ {−1,0,1}^n with ⟨α, x⟩ ≥ 0 for every α ∈ P, sorted.

    These are exactly the lattice points of O_P.
    """
    out = []
    for x in product((-1, 0, 1), repeat=p.n):
        if all(inner_product(alpha, x) >= 0 for alpha in p.roots):
            out.append(x)
    return sorted(out)


def vertices(p: SignedPoset) -> list[tuple[int, ...]]:
    """Filters at which the active rows of the full description have rank n."""
    system = order_polytope(p)
    out = []
    for x in signed_filters(p):
        active = [row.a for row in system.rows if row.evaluate(x) == row.b]
        if len(active) >= p.n and rank(active) == p.n:
            out.append(x)
    return out


def homogenized_poset(p: SignedPoset) -> SignedPoset:
    """P̂ on [n+1]: adjoin e_{n+1} ± e_i for every i, then close.

    The order cone of P̂ is the homogenization {(x, t) : t ≥ 0, x ∈ t·O_P}.
    """
    m = p.n + 1
    gens = list(p.roots)
    for i in range(1, p.n + 1):
        gens.append(Root.pair(i, 1, m, 1))
        gens.append(Root.pair(i, -1, m, 1))
    return from_generators(m, gens)


def interior_point(p: SignedPoset) -> tuple[Fraction, ...]:
    """A canonical rational point strictly inside O_P (so dim O_P = n always).

    Take the selected Jordan–Hölder representative ω and scale its one-line
    word: q = (ω(1), …, ω(n)) / (n+1).  Every poset row is strictly positive
    at q because ⟨α, ω⟩ ≥ 0 and the entries of ω have distinct absolute
    values (no cancellation to zero is possible), and |q_i| ≤ n/(n+1) < 1.
    """
    from .jordan import jh_representative

    omega = jh_representative(p)
    q = tuple(Fraction(v, p.n + 1) for v in omega.as_point())
    if not order_polytope(p).contains(q, strict=True):
        raise InternalInconsistency(
            f"constructed point {q} is not strictly interior to O_P for {p!r}"
        )
    return q
