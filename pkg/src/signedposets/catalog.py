"""Exhaustive catalogs of signed posets on small ground sets.

Strategy: walk the 3^(n²) asymmetric assignments (each antipodal root pair
is absent, positive, or negative) as bitmasks over the 2n² roots, discard
anything whose pairwise positive-linear closure already escapes the set, and
confirm the survivors with the exact LP test.  The pairwise tables are sound
pruning only — every reported poset passes the full closure check.

For n ≥ 4 the assignment walk is hopeless (3^16 ≈ 43M); behind ``force``
we instead grow closed sets one generator at a time, which reaches every
closed set because plc is a closure operator.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .perms import act, enumerate_signed_permutations
from .posets import SignedPoset, cone_contains, plc
from .roots import Root, all_roots


def _root_index(n: int) -> tuple[list[Root], dict[Root, int]]:
    roots = all_roots(n)
    return roots, {alpha: i for i, alpha in enumerate(roots)}


def _pair_closure_masks(n: int) -> dict[tuple[int, int], int]:
    """closure[(i, j)] = bitmask of roots inside cone(root_i, root_j)."""
    roots, index = _root_index(n)
    masks: dict[tuple[int, int], int] = {}
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if roots[i] == -roots[j]:
                continue  # never co-resident in an asymmetric set
            mask = 0
            pair = [roots[i], roots[j]]
            for k, gamma in enumerate(roots):
                if k in (i, j) or cone_contains(gamma, pair, n):
                    mask |= 1 << k
            masks[(i, j)] = mask
    return masks


def _mask_to_poset(mask: int, roots: list[Root], n: int) -> SignedPoset:
    return SignedPoset(n, frozenset(roots[k] for k in range(len(roots)) if mask >> k & 1))


def _poset_to_mask(p: SignedPoset, index: dict[Root, int]) -> int:
    mask = 0
    for alpha in p.roots:
        mask |= 1 << index[alpha]
    return mask


def _confirm_closed(mask: int, roots: list[Root], n: int) -> bool:
    members = [roots[k] for k in range(len(roots)) if mask >> k & 1]
    for k, gamma in enumerate(roots):
        if mask >> k & 1:
            continue
        if cone_contains(gamma, members, n):
            return False
    return True


def iter_signed_posets(n: int, force: bool = False) -> Iterator[SignedPoset]:
    """Yield every signed poset on [n], smallest masks first within the walk.

    Raises ValueError for n ≥ 4 unless ``force`` is set.
    """
    if n >= 4 and not force:
        raise ValueError(
            f"full enumeration at n={n} walks 3^{n * n} assignments; pass force=True"
        )
    if n >= 4:
        yield from _iter_by_growing(n)
        return

    roots, _ = _root_index(n)
    pair_masks = _pair_closure_masks(n)
    pairs = []
    for a in range(1, n + 1):
        pairs.append((Root.unit(a, 1), Root.unit(a, -1)))
        for b in range(a + 1, n + 1):
            pairs.append((Root.pair(a, 1, b, 1), Root.pair(a, -1, b, -1)))
            pairs.append((Root.pair(a, 1, b, -1), Root.pair(a, -1, b, 1)))
    index = {alpha: i for i, alpha in enumerate(roots)}
    pair_bits = [(1 << index[pos], 1 << index[neg]) for pos, neg in pairs]

    for choice in product((0, 1, 2), repeat=len(pairs)):
        mask = 0
        for c, (pos_bit, neg_bit) in zip(choice, pair_bits):
            if c == 1:
                mask |= pos_bit
            elif c == 2:
                mask |= neg_bit
        members = [k for k in range(len(roots)) if mask >> k & 1]
        ok = True
        for ai in range(len(members)):
            for bi in range(ai + 1, len(members)):
                i, j = members[ai], members[bi]
                if pair_masks[(i, j)] & ~mask:
                    ok = False
                    break
            if not ok:
                break
        if ok and _confirm_closed(mask, roots, n):
            yield _mask_to_poset(mask, roots, n)


def _iter_by_growing(n: int) -> Iterator[SignedPoset]:
    """Grow closed sets one root at a time; reaches every closed set."""
    roots, index = _root_index(n)
    seen = {0}
    frontier = [frozenset()]
    yield SignedPoset(n, frozenset())
    while frontier:
        next_frontier = []
        for current in frontier:
            for alpha in roots:
                if alpha in current or -alpha in current:
                    continue
                closure = plc(current | {alpha}, n)
                if any(-beta in closure for beta in closure):
                    continue
                mask = 0
                for beta in closure:
                    mask |= 1 << index[beta]
                if mask in seen:
                    continue
                seen.add(mask)
                next_frontier.append(closure)
                yield SignedPoset(n, closure)
        frontier = next_frontier


def _group_root_permutations(n: int) -> list[tuple[int, ...]]:
    """For each signed permutation ω, the induced permutation of root indices."""
    roots, index = _root_index(n)
    perms = []
    for omega in enumerate_signed_permutations(n):
        perms.append(tuple(index[act(omega, alpha)] for alpha in roots))
    return perms


def canonical_mask(mask: int, root_perms: list[tuple[int, ...]]) -> int:
    best = None
    for perm in root_perms:
        image = 0
        rest = mask
        while rest:
            k = (rest & -rest).bit_length() - 1
            image |= 1 << perm[k]
            rest &= rest - 1
        if best is None or image < best:
            best = image
    return best if best is not None else 0


def canonical_form(p: SignedPoset) -> SignedPoset:
    """The orbit representative with the smallest bitmask over sorted roots."""
    roots, index = _root_index(p.n)
    perms = _group_root_permutations(p.n)
    mask = canonical_mask(_poset_to_mask(p, index), perms)
    return _mask_to_poset(mask, roots, p.n)


def enumerate_signed_posets(
    n: int, up_to_iso: bool = False, force: bool = False
) -> list[SignedPoset]:
    """The catalog, sorted by size then by sorted root list.

    With ``up_to_iso`` each isomorphism class appears once, represented by
    its canonical form.
    """
    if up_to_iso:
        roots, index = _root_index(n)
        perms = _group_root_permutations(n)
        reps = set()
        for p in iter_signed_posets(n, force=force):
            reps.add(canonical_mask(_poset_to_mask(p, index), perms))
        posets = [_mask_to_poset(mask, roots, n) for mask in sorted(reps)]
    else:
        posets = list(iter_signed_posets(n, force=force))
    return sorted(posets, key=lambda p: (len(p.roots), p.sorted_roots()))


def census(n: int, force: bool = False) -> dict:
    """Counts by size, plus the up-to-isomorphism totals."""
    all_posets = enumerate_signed_posets(n, force=force)
    by_size: dict[int, int] = {}
    for p in all_posets:
        by_size[len(p.roots)] = by_size.get(len(p.roots), 0) + 1
    classes = enumerate_signed_posets(n, up_to_iso=True, force=force)
    return {
        "n": n,
        "total": len(all_posets),
        "by_size": {str(k): by_size[k] for k in sorted(by_size)},
        "isomorphism_classes": len(classes),
    }


def naturally_labeled_count(n: int, force: bool = False) -> int:
    from .jordan import is_naturally_labeled

    return sum(1 for p in iter_signed_posets(n, force=force) if is_naturally_labeled(p))
