"""Signed posets: positive-linear-closed, asymmetric subsets of B_n.

The closure operator plc(S) = cone(S) ∩ B_n is decided pointwise by exact
rational feasibility (is γ a nonnegative combination of S?), never by floating
point and never by an incomplete pairwise fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import AsymmetryViolation, CycleDetected, InternalInconsistency
from .linalg import nonneg_combination
from .roots import Root, all_roots


def cone_contains(gamma: Root, s: Iterable[Root], n: Optional[int] = None) -> bool:
    """Is γ a nonnegative rational combination of the roots in s?

    >>> from .roots import parse_root as r
    >>> cone_contains(r("+2"), {r("-1+2"), r("+1+2")})
    True
    >>> cone_contains(r("+1"), {r("-1+2"), r("+1+2")})
    False
    """
    s = list(s)
    if gamma in s:
        return True
    if not s:
        return False
    if n is None:
        n = max(gamma.max_index, max(alpha.max_index for alpha in s))
    vectors = [alpha.vector(n) for alpha in s]
    return nonneg_combination(vectors, gamma.vector(n)) is not None


def plc(s: Iterable[Root], n: int) -> frozenset[Root]:
    """Positive linear closure of s inside B_n: {γ ∈ B_n : γ ∈ cone(s)}."""
    s = frozenset(s)
    for alpha in s:
        if alpha.max_index > n:
            raise IndexError(f"root {alpha} does not fit in dimension {n}")
    out = set(s)
    for gamma in all_roots(n):
        if gamma not in out and cone_contains(gamma, s, n):
            out.add(gamma)
    return frozenset(out)


@dataclass(frozen=True)
class SignedPoset:
    """A signed poset: ground size n plus a closed asymmetric root set.

    The constructor checks asymmetry and index bounds (cheap); closure is the
    responsibility of the factory functions (`from_generators`) and is
    re-checkable via `is_closed`.
    """

    n: int
    roots: frozenset[Root]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground size must be positive")
        object.__setattr__(self, "roots", frozenset(self.roots))
        for alpha in self.roots:
            if alpha.max_index > self.n:
                raise IndexError(f"root {alpha} does not fit in dimension {self.n}")
            if -alpha in self.roots:
                raise AsymmetryViolation(alpha)

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots)

    def tokens(self) -> list[str]:
        return [alpha.token() for alpha in self.sorted_roots()]

    def __contains__(self, alpha: Root) -> bool:
        return alpha in self.roots

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return f"SignedPoset(n={self.n}, {{{' '.join(self.tokens())}}})"


def is_closed(p: SignedPoset) -> bool:
    """Does plc fix the root set?  (Definitional check, LP-backed.)"""
    return plc(p.roots, p.n) == p.roots


def from_generators(n: int, generators: Iterable[Root]) -> SignedPoset:
    """Close the generators and validate asymmetry of the closure.

    Raises AsymmetryViolation when the closure contains some ±α pair — the
    generators then span no signed poset.  Asymmetry is checked *after*
    closing, since closing can surface new contradictions.
    """
    closure = plc(generators, n)
    for alpha in closure:
        if -alpha in closure:
            raise AsymmetryViolation(alpha)
    return SignedPoset(n, closure)


def minimal_representation(p: SignedPoset) -> frozenset[Root]:
    """The unique minimal subset M ⊆ P with plc(M) = P.

    M consists of the roots that are not nonnegative combinations of the
    others.  That plc(M) = P again is guaranteed by the theory; it is
    re-verified here and a failure raises InternalInconsistency.
    """
    roots = p.sorted_roots()
    m = frozenset(
        alpha
        for alpha in roots
        if not cone_contains(alpha, [b for b in roots if b != alpha], p.n)
    )
    # plc(M) ⊆ P holds automatically (M ⊆ P and P is closed), so the
    # postcondition reduces to P ∖ M ⊆ cone(M).
    m_list = sorted(m)
    for alpha in roots:
        if alpha not in m and not cone_contains(alpha, m_list, p.n):
            raise InternalInconsistency(
                f"minimal representation of {p!r} does not regenerate {alpha}"
            )
    return m


def embed_classical_poset(
    n: int, relations: Iterable[tuple[int, int]]
) -> SignedPoset:
    """Embed a partial order on [n] as the signed poset {e_j − e_i : i < j in Π}.

    `relations` lists ordered pairs (i, j) meaning i < j in the order; they may
    or may not already be transitively closed.  CycleDetected if the relation
    has a directed cycle.
    """
    rel = set(relations)
    for i, j in rel:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"relation ({i},{j}) out of range for [{n}]")
    # Transitive closure, then the irreflexivity check that rules out cycles.
    changed = True
    while changed:
        changed = False
        for i, j in list(rel):
            for k, l in list(rel):
                if j == k and (i, l) not in rel:
                    rel.add((i, l))
                    changed = True
    for i, j in rel:
        if i == j:
            raise CycleDetected(f"element {i} is below itself")
    gens = []
    for i, j in rel:
        lo, hi = min(i, j), max(i, j)
        # e_j − e_i: sign +1 at j, −1 at i.
        gens.append(Root.pair(lo, 1 if lo == j else -1, hi, 1 if hi == j else -1))
    return from_generators(n, gens)


def classical_relations(p: SignedPoset) -> set[tuple[int, int]]:
    """The pairs (i, j) with e_j − e_i ∈ P (inverse view of embed_classical_poset)."""
    out = set()
    for alpha in p.roots:
        if len(alpha.entries) == 2:
            (i, si), (j, sj) = alpha.entries
            if si == -1 and sj == 1:
                out.add((i, j))
            elif si == 1 and sj == -1:
                out.add((j, i))
    return out


@dataclass(frozen=True)
class BidirectedEdge:
    """An edge of the bidirected-graph view: its root, endpoints, incidence signs."""

    endpoints: tuple[int, ...]
    signs: tuple[int, ...]
    minimal: bool
    root: Root


@dataclass(frozen=True)
class BidirectedGraph:
    n: int
    edges: tuple[BidirectedEdge, ...]


def to_bidirected_graph(p: SignedPoset) -> BidirectedGraph:
    """One edge per root: ±e_j is a loop on j, two-index roots join their support.

    The incidence sign at a vertex is the root's coefficient sign there;
    `minimal` flags membership in the minimal representation (non-minimal
    edges render dotted in DOT output).
    """
    minimal = minimal_representation(p)
    edges = tuple(
        BidirectedEdge(
            endpoints=alpha.support,
            signs=tuple(s for _, s in alpha.entries),
            minimal=alpha in minimal,
            root=alpha,
        )
        for alpha in p.sorted_roots()
    )
    return BidirectedGraph(p.n, edges)


def bidirected_dot(graph: BidirectedGraph) -> str:
    """Render the bidirected graph in DOT; incidence signs become head/tail labels."""
    lines = ["graph signed_poset {", "  node [shape=circle];"]
    for v in range(1, graph.n + 1):
        lines.append(f"  {v};")
    for e in graph.edges:
        style = "solid" if e.minimal else "dotted"
        if len(e.endpoints) == 1:
            (v,) = e.endpoints
            (s,) = e.signs
            label = "+" if s > 0 else "-"
            lines.append(
                f'  {v} -- {v} [style={style}, label="{label}"];'
            )
        else:
            u, v = e.endpoints
            su, sv = ("+" if s > 0 else "-" for s in e.signs)
            lines.append(
                f'  {u} -- {v} [style={style}, taillabel="{su}", headlabel="{sv}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
