"""Jordan–Hölder sets, natural labelings, descents, and the simplex triangulation.

JH(P) is the set of signed permutations whose one-line word, read as an
integer vector, weakly satisfies every poset inequality.  It is never empty,
indexes the unimodular simplices Δ_σ triangulating O_P, and its natural
descent statistic generates h*.

The half-open cells are taken with respect to the reference point
p = (1, 2, …, n)/(n+1): a facet is removed exactly where NatDes says so, and
the generic beyond-facet construction is kept as a slow debug oracle for that
characterization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InternalInconsistency
from .linalg import det
from .perms import SignedPermutation, act_poset, enumerate_signed_permutations
from .posets import SignedPoset
from .roots import inner_product


@dataclass(frozen=True)
class DescentData:
    natdes_set: frozenset[int]

    @property
    def natdes(self) -> int:
        return len(self.natdes_set)


def natdes(sigma: SignedPermutation) -> DescentData:
    """Descents of σ with the convention σ(0) = 0.

    >>> natdes(SignedPermutation((-1, 2))).natdes_set
    frozenset({0})
    >>> natdes(SignedPermutation((-1, -2))).natdes
    2
    """
    word = (0,) + sigma.images
    return DescentData(
        frozenset(i for i in range(sigma.n) if word[i] > word[i + 1])
    )


def jordan_holder(p: SignedPoset) -> list[SignedPermutation]:
    """All ω with ⟨α, (ω(1),…,ω(n))⟩ ≥ 0 for every α ∈ P, ascending lex.

    Nonempty for every signed poset; an empty result would contradict
    full-dimensionality of the order cone and raises InternalInconsistency.
    """
    roots = p.sorted_roots()
    out = [
        omega
        for omega in enumerate_signed_permutations(p.n)
        if all(inner_product(alpha, omega.as_point()) >= 0 for alpha in roots)
    ]
    if not out:
        raise InternalInconsistency(f"empty Jordan–Hölder set for {p!r}")
    return out


def jh_representative(p: SignedPoset) -> SignedPermutation:
    """The canonical (lexicographically greatest) element of JH(P)."""
    return max(jordan_holder(p))


def is_naturally_labeled(p: SignedPoset) -> bool:
    """Does the identity lie in JH(P)?  Tests id only — no scan."""
    ident = tuple(range(1, p.n + 1))
    return all(inner_product(alpha, ident) >= 0 for alpha in p.roots)


def naturalize(p: SignedPoset) -> tuple[SignedPermutation, SignedPoset]:
    """A witness ω ∈ JH(P) and the naturally labeled poset ωP.

    Applying any ω ∈ JH(P) to P produces a naturally labeled poset, because
    ⟨ωα, (1,…,n)⟩ = ⟨α, (ω(1),…,ω(n))⟩ ≥ 0 for all α ∈ P.  The canonical
    representative is used; the postcondition is re-checked and a failure
    raises InternalInconsistency.
    """
    omega = jh_representative(p)
    image = act_poset(omega, p)
    if not is_naturally_labeled(image):
        raise InternalInconsistency(
            f"act_poset({omega!r}, P) is not naturally labeled for {p!r}"
        )
    return omega, image


@dataclass(frozen=True)
class SimplexCell:
    """Δ_σ = {0 ≤ ε_1 x_{π_1} ≤ … ≤ ε_n x_{π_n} ≤ 1}, half-opened along NatDes."""

    sigma: SignedPermutation
    strict_positions: frozenset[int]

    @property
    def n(self) -> int:
        return self.sigma.n


def cell(sigma: SignedPermutation) -> SimplexCell:
    return SimplexCell(sigma, natdes(sigma).natdes_set)


def _chain_values(sigma: SignedPermutation, x: Sequence) -> list:
    pi, eps = sigma.pi, sigma.eps
    return [eps[i] * x[pi[i] - 1] for i in range(sigma.n)]


def closed_cell_contains(sigma: SignedPermutation, x: Sequence, t: int = 1) -> bool:
    """Membership in the closed simplex t·Δ_σ."""
    values = _chain_values(sigma, x)
    previous = 0
    for value in values:
        if value < previous:
            return False
        previous = value
    return values[-1] <= t


def half_open_contains(cell_: SimplexCell, x: Sequence, t: int = 1) -> bool:
    """Membership in the half-open cell t·ℍ_pΔ_σ.

    Position 0 governs 0 vs ε_1x_{π_1}; position i ≥ 1 governs the step from
    ε_ix_{π_i} to ε_{i+1}x_{π_{i+1}}; the top bound ≤ t is always weak.
    """
    values = _chain_values(cell_.sigma, x)
    previous = 0
    for i, value in enumerate(values):
        if value < previous or (value == previous and i in cell_.strict_positions):
            return False
        previous = value
    return values[-1] <= t


def cell_vertices(sigma: SignedPermutation) -> list[tuple[int, ...]]:
    """The n+1 vertices of Δ_σ: 0 and the partial sums of ε_ie_{π_i} from the top."""
    pi, eps = sigma.pi, sigma.eps
    out = [tuple([0] * sigma.n)]
    current = [0] * sigma.n
    for i in range(sigma.n - 1, -1, -1):
        current[pi[i] - 1] = eps[i]
        out.append(tuple(current))
    return out


def cell_determinant(sigma: SignedPermutation) -> int:
    """Determinant of the edge-vector matrix of Δ_σ (±1: the cells are unimodular)."""
    verts = cell_vertices(sigma)
    edges = [
        [b - a for a, b in zip(verts[i], verts[i + 1])] for i in range(sigma.n)
    ]
    value = det(edges)
    if value.denominator != 1:  # pragma: no cover - integer matrix
        raise InternalInconsistency("non-integer determinant of an integer matrix")
    return int(value)


def reference_point(n: int) -> tuple[Fraction, ...]:
    """p = (1/(n+1), …, n/(n+1)), the half-opening viewpoint."""
    return tuple(Fraction(i, n + 1) for i in range(1, n + 1))


def half_open_contains_generic(
    sigma: SignedPermutation, x: Sequence, t: int = 1, q: Sequence | None = None
) -> bool:
    """Debug oracle: half-open membership via the literal beyond-facet rule.

    A facet row of Δ_σ is removed iff the viewpoint q violates it; membership
    then requires x to satisfy removed rows strictly and kept rows weakly,
    all at dilate t.  Raises ValueError if q lies on a facet hyperplane
    (non-generic).
    """
    n = sigma.n
    if q is None:
        q = reference_point(n)
    values_x = _chain_values(sigma, x)
    values_q = _chain_values(sigma, q)
    # Facet forms, written as (value at x, value at q, dilate-scaling of rhs):
    rows = [(values_x[0], values_q[0])]
    rows += [
        (values_x[i + 1] - values_x[i], values_q[i + 1] - values_q[i])
        for i in range(n - 1)
    ]
    for vx, vq in rows:
        if vq == 0:
            raise ValueError("viewpoint is not generic for this cell")
        if vx < 0 or (vx == 0 and vq < 0):
            return False
    # Top facet ε_n x_{π_n} ≤ t (q is compared at the unit dilate).
    top_x, top_q = values_x[-1], values_q[-1]
    if top_q == 1:
        raise ValueError("viewpoint is not generic for this cell")
    if top_x > t or (top_x == t and top_q > 1):
        return False
    return True


def chamber(sigma: SignedPermutation) -> SimplexCell:
    """The triangulation cell whose interior contains (σ(1),…,σ(n))/(n+1).

    The window data of that cell reads off σ⁻¹: chain position k holds
    coordinate |σ⁻¹(k)| with the sign of σ⁻¹(k).  This is the inversion that
    matches cells of O_P with members of JH(P): σ ∈ JH(P) exactly when
    chamber(σ) ⊆ O_P.  (At n ≤ 2 every JH set happens to be closed under
    inverses, so the distinction is invisible in small examples.)
    """
    return cell(sigma.inverse())


def hstar_by_descents(p: SignedPoset) -> tuple[int, ...]:
    """h* of O_P as a descent generating polynomial over JH of a naturalization.

    h*(z) = Σ_{σ ∈ JH(P′)} z^{natdes(σ⁻¹)} with P′ = naturalize(P): the cell
    of O_{P′} owned by σ is chamber(σ), whose half-open version misses
    natdes(σ⁻¹) facets.  Taking descents of σ itself instead agrees up to
    n = 2 but diverges at n = 3 (e.g. P = {e3}), where only the inverse
    statistic matches the lattice-point count.  h* is an isomorphism
    invariant, so the choice of naturalization does not matter.
    """
    _, image = naturalize(p)
    counts = Counter(natdes(tau.inverse()).natdes for tau in jordan_holder(image))
    degree = max(counts)
    return tuple(counts.get(j, 0) for j in range(degree + 1))
