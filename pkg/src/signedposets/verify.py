"""Cross-oracle verification suites.

Every structural claim the library makes is re-checked here by an
independent route: descent-counted h* against lattice-point-counted h*,
LP-certified irredundancy against brute lattice scans, the half-open
triangulation against plain point membership, Fischer gradedness against
counting Gorenstein indices, chain-polytope reflexivity against shifted
interior counts.  A failed check is report content; the library itself only
raises when its own postconditions break.

`verify_poset` runs the battery on one poset; `verify_catalog` sweeps every
signed poset on [n] and adds the catalog-level properties (isomorphism
invariance, the maximal-chain non-sufficiency witness).
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional

from .catalog import iter_signed_posets
from .chains import (
    chain_polytope,
    enumerate_chains,
    is_reflexive,
    verify_antichain_characterization,
)
from .ehrhart import (
    count_points,
    ehrhart_polynomial,
    gorenstein_index_by_counts,
    hstar_from_counts,
    is_palindromic,
    is_unimodal,
    reciprocity_check,
)
from .errors import SignedPosetError
from .geometry import (
    homogenized_poset,
    interior_point,
    order_cone,
    order_polytope,
    order_polytope_irredundant,
    row_is_necessary,
    signed_filters,
    vertices,
)
from .gorenstein import (
    canonical_interior_point,
    check_fischer_symmetry,
    fischer_halfspaces,
    fischer_representation,
    gorenstein_index_from_grading,
    is_graded,
)
from .halfspaces import Halfspace, HalfspaceSystem, cube_rows, dedupe_rows
from .jordan import (
    cell,
    cell_determinant,
    half_open_contains,
    half_open_contains_generic,
    hstar_by_descents,
    jordan_holder,
    naturalize,
)
from .perms import act_poset, enumerate_signed_permutations
from .posets import SignedPoset, cone_contains, minimal_representation, plc, to_bidirected_graph


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: dict


@dataclass(frozen=True)
class PosetReport:
    n: int
    tokens: tuple[str, ...]
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "roots": list(self.tokens),
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def pad_equal(a, b) -> bool:
    """Coefficientwise equality of two h*-tuples up to trailing zeros."""
    width = max(len(a), len(b))
    return tuple(a) + (0,) * (width - len(a)) == tuple(b) + (0,) * (width - len(b))


def _lattice_points(system: HalfspaceSystem, t: int) -> list[tuple[int, ...]]:
    return [
        x
        for x in product(range(-t, t + 1), repeat=system.n)
        if system.contains(x, t)
    ]


def check_minimal_representation(p: SignedPoset, t_max: int = 3) -> CheckResult:
    m = minimal_representation(p)
    regenerated = plc(m, p.n) == p.roots
    irredundant = all(not cone_contains(alpha, m - {alpha}, p.n) for alpha in m)
    graph = to_bidirected_graph(p)
    marked = sum(1 for e in graph.edges if e.minimal)
    return CheckResult(
        "minimal-representation",
        regenerated and irredundant and marked == len(m),
        {"poset_size": len(p.roots), "minrep_size": len(m)},
    )


def check_jordan_holder(p: SignedPoset, t_max: int = 3) -> CheckResult:
    jh = jordan_holder(p)
    omega, image = naturalize(p)
    image_jh = jordan_holder(image)
    identity_ok = image.n == p.n and any(tau.is_identity() for tau in image_jh)
    return CheckResult(
        "jordan-holder",
        len(jh) >= 1 and identity_ok and len(image_jh) == len(jh),
        {"jh_size": len(jh), "omega": list(omega.images)},
    )


def check_interior_point(p: SignedPoset, t_max: int = 3) -> CheckResult:
    q = interior_point(p)
    ok = order_polytope(p).contains(q, strict=True)
    return CheckResult(
        "interior-point", ok, {"q": [str(c) for c in q]}
    )


def check_hstar_oracles(p: SignedPoset, t_max: int = 3) -> CheckResult:
    by_desc = hstar_by_descents(p)
    by_count = hstar_from_counts(order_polytope(p), p.n)
    jh_size = len(jordan_holder(p))
    passed = (
        pad_equal(by_desc, by_count)
        and sum(by_desc) == jh_size
        and by_desc[0] == 1
    )
    return CheckResult(
        "hstar-oracles",
        passed,
        {"by_descents": list(by_desc), "by_counts": list(by_count), "jh_size": jh_size},
    )


def check_ehrhart_reciprocity(p: SignedPoset, t_max: int = 3) -> CheckResult:
    system = order_polytope(p)
    ehr = ehrhart_polynomial(system, p.n)
    degree_ok = len(ehr) == p.n + 1 and ehr[-1] > 0
    return CheckResult(
        "ehrhart-reciprocity",
        degree_ok and reciprocity_check(system, p.n),
        {"degree": len(ehr) - 1},
    )


def check_filters_vertices(p: SignedPoset, t_max: int = 3) -> CheckResult:
    filters = signed_filters(p)
    verts = vertices(p)
    counted = count_points(order_polytope(p), 1)
    # vertices ⊆ filters certifies conv(filters) = O_P: the hull of any
    # subset of O_P containing all vertices is O_P itself.
    passed = (
        counted == len(filters)
        and set(verts) <= set(filters)
        and len(verts) >= p.n + 1
    )
    return CheckResult(
        "filters-vertices",
        passed,
        {"filters": len(filters), "vertices": len(verts), "counted": counted},
    )


def check_irredundant_description(p: SignedPoset, t_max: int = 3) -> CheckResult:
    full = order_polytope(p)
    irr = order_polytope_irredundant(p)
    same_points = all(
        count_points(full, t) == count_points(irr, t) for t in range(1, t_max + 1)
    )
    all_needed = all(row_is_necessary(irr, i) for i in range(len(irr.rows)))
    return CheckResult(
        "irredundant-description",
        same_points and all_needed and len(irr.rows) <= len(full.rows),
        {"full_rows": len(full.rows), "irredundant_rows": len(irr.rows)},
    )


def check_triangulation(p: SignedPoset, t_max: int = 3) -> CheckResult:
    """Half-open cells of the naturalized image partition every dilate."""
    _, image = naturalize(p)
    system = order_polytope(image)
    jh = jordan_holder(image)
    windows = [sigma.inverse() for sigma in jh]  # chamber(σ) reads off σ⁻¹
    cells = [cell(tau) for tau in windows]
    unimodular = all(cell_determinant(tau) in (1, -1) for tau in windows)

    partition_ok = True
    oracle_ok = True
    bad: Optional[dict] = None
    for t in range(1, t_max + 1):
        for x in _lattice_points(system, t):
            owners = sum(1 for c in cells if half_open_contains(c, x, t))
            if owners != 1:
                partition_ok = False
                bad = {"t": t, "x": list(x), "owners": owners}
                break
            if t <= 2:
                for tau, c in zip(windows, cells):
                    if half_open_contains(c, x, t) != half_open_contains_generic(
                        tau, x, t
                    ):
                        oracle_ok = False
                        bad = {"t": t, "x": list(x), "window": list(tau.images)}
                        break
            if not oracle_ok:
                break
        if not (partition_ok and oracle_ok):
            break

    strict_hist = Counter(len(c.strict_positions) for c in cells)
    width = max(strict_hist) + 1 if strict_hist else 1
    image_hstar = tuple(strict_hist.get(j, 0) for j in range(width))
    hstar_ok = pad_equal(image_hstar, hstar_by_descents(p))

    detail = {"cells": len(jh), "unimodular": unimodular}
    if bad:
        detail["counterexample"] = bad
    return CheckResult(
        "triangulation",
        unimodular and partition_ok and oracle_ok and hstar_ok,
        detail,
    )


def check_gorenstein_triple(p: SignedPoset, t_max: int = 3) -> CheckResult:
    system = order_polytope(p)
    q = fischer_representation(p)
    symmetric = check_fischer_symmetry(q)
    report = is_graded(q)
    k_count = gorenstein_index_by_counts(system, p.n)
    palindromic = is_palindromic(hstar_from_counts(system, p.n))

    agree = report.graded == (k_count is not None) == palindromic
    detail = {
        "graded": report.graded,
        "counting_index": k_count,
        "palindromic": palindromic,
        "fischer_symmetric": symmetric,
    }
    passed = agree and symmetric
    if report.graded and k_count is not None:
        k_grad = gorenstein_index_from_grading(report)
        z = canonical_interior_point(report, p.n)
        unique_interior = count_points(system, k_count, strict=True) == 1
        z_interior = system.contains(z, t=k_count, strict=True)
        detail.update(
            {"grading_index": k_grad, "canonical_point": list(z)}
        )
        passed = passed and k_grad == k_count and unique_interior and z_interior
    return CheckResult("gorenstein-triple", passed, detail)


def check_hstar_unimodal_when_gorenstein(p: SignedPoset, t_max: int = 3) -> CheckResult:
    system = order_polytope(p)
    hstar = hstar_from_counts(system, p.n)
    palindromic = is_palindromic(hstar)
    unimodal = is_unimodal(hstar) if palindromic else True
    return CheckResult(
        "hstar-unimodal-when-gorenstein",
        unimodal,
        {"hstar": list(hstar), "applicable": palindromic},
    )


def check_fischer_halfspaces(p: SignedPoset, t_max: int = 3) -> CheckResult:
    """Ĝ(P)'s relation rows carve out the same polytope as O_P."""
    system = order_polytope(p)
    fh = fischer_halfspaces(fischer_representation(p))
    grid_ok = all(
        fh.contains(x) == system.contains(x)
        for x in product((-1, 0, 1), repeat=p.n)
    )
    counts_ok = count_points(fh, 2) == count_points(system, 2)
    return CheckResult(
        "fischer-halfspaces",
        grid_ok and counts_ok,
        {"rows": len(fh.rows)},
    )


def check_chain_polytope(p: SignedPoset, t_max: int = 3) -> CheckResult:
    cp = chain_polytope(p)
    rows_ok = is_reflexive(cp)
    shifted_ok = all(
        count_points(cp, t + 1, strict=True) == count_points(cp, t)
        for t in range(0, t_max + 1)
    )
    origin_ok = cp.contains((0,) * p.n, strict=True)
    anti = verify_antichain_characterization(p)
    return CheckResult(
        "chain-polytope",
        rows_ok
        and shifted_ok
        and origin_ok
        and anti["match"]
        and reciprocity_check(cp, p.n),
        {
            "rows": len(cp.rows),
            "antichains": anti["antichain_count"],
            "reflexive_rows": rows_ok,
            "reflexive_counts": shifted_ok,
        },
    )


def check_homogenization(p: SignedPoset, t_max: int = 3) -> CheckResult:
    lifted = homogenized_poset(p)
    kc = order_cone(lifted)
    system = order_polytope(p)
    grid_ok = all(
        system.contains(x)
        == all(row.evaluate((*x, 1)) >= row.b for row in kc.rows)
        for x in product((-1, 0, 1), repeat=p.n)
    )
    return CheckResult(
        "homogenization",
        p.roots <= lifted.roots and grid_ok,
        {"lifted_size": len(lifted.roots)},
    )


ALL_CHECKS: tuple[tuple[str, Callable[[SignedPoset, int], CheckResult]], ...] = (
    ("minimal-representation", check_minimal_representation),
    ("jordan-holder", check_jordan_holder),
    ("interior-point", check_interior_point),
    ("hstar-oracles", check_hstar_oracles),
    ("ehrhart-reciprocity", check_ehrhart_reciprocity),
    ("filters-vertices", check_filters_vertices),
    ("irredundant-description", check_irredundant_description),
    ("triangulation", check_triangulation),
    ("gorenstein-triple", check_gorenstein_triple),
    ("hstar-unimodal-when-gorenstein", check_hstar_unimodal_when_gorenstein),
    ("fischer-halfspaces", check_fischer_halfspaces),
    ("chain-polytope", check_chain_polytope),
    ("homogenization", check_homogenization),
)


def verify_poset(p: SignedPoset, t_max: int = 3) -> PosetReport:
    results = []
    for name, fn in ALL_CHECKS:
        try:
            results.append(fn(p, t_max))
        except SignedPosetError as exc:
            results.append(
                CheckResult(name, False, {"exception": type(exc).__name__, "message": str(exc)})
            )
    return PosetReport(p.n, tuple(p.tokens()), tuple(results))


def _window_of(sub, sup) -> bool:
    m = len(sub.c)
    for offset in range(len(sup.c) - m + 1):
        if (
            sup.c[offset : offset + m] == sub.c
            and sup.s[offset : offset + m - 1] == sub.s
        ):
            return True
    return False


def subchain_sufficiency_witness(n: int = 3, force: bool = False) -> Optional[dict]:
    """A poset where dropping rows of non-maximal chains changes C_P.

    Classically maximal chains suffice; the signed analogue fails.  Keeps the
    cube (singleton chains) and the rows of window-maximal chains, then asks
    the LP whether any dropped row still cuts.  Returns the first witness.
    """
    for p in iter_signed_posets(n, force=force):
        chains = enumerate_chains(p)
        long_chains = [c for c in chains if len(c.c) >= 2]
        if not any(len(c.c) >= 3 for c in long_chains):
            continue
        maximal = [
            c
            for c in long_chains
            if not any(
                len(d.c) > len(c.c) and _window_of(c, d) for d in long_chains
            )
        ]
        dropped = [c for c in long_chains if c not in maximal]
        if not dropped:
            continue
        kept = list(cube_rows(p.n))
        for chain in maximal:
            w = chain.coefficients(p.n)
            kept.append(Halfspace(w, -1, "max-chain"))
            kept.append(Halfspace(tuple(-x for x in w), -1, "max-chain"))
        kept = list(dedupe_rows(kept))
        kept_keys = {(row.a, row.b) for row in kept}
        for chain in dropped:
            w = chain.coefficients(p.n)
            for a in (w, tuple(-x for x in w)):
                if (a, -1) in kept_keys:
                    continue
                trial = HalfspaceSystem(
                    p.n, tuple(kept) + (Halfspace(a, -1, "dropped"),)
                )
                if row_is_necessary(trial, len(kept)):
                    return {
                        "poset": p.tokens(),
                        "chain": chain.to_json_dict(),
                        "row": list(a),
                        "kept_rows": len(kept),
                    }
    return None


def isomorphism_invariance_report(n: int = 2) -> dict:
    """h* and the Gorenstein flag across every group action on every poset."""
    group = enumerate_signed_permutations(n)
    failures = []
    total = 0
    for p in iter_signed_posets(n):
        total += 1
        base_h = hstar_by_descents(p)
        base_g = is_graded(fischer_representation(p)).graded
        for omega in group:
            q = act_poset(omega, p)
            h = hstar_by_descents(q)
            g = is_graded(fischer_representation(q)).graded
            if not pad_equal(h, base_h) or g != base_g:
                failures.append(
                    {
                        "poset": p.tokens(),
                        "omega": list(omega.images),
                        "hstar": list(h),
                        "expected": list(base_h),
                    }
                )
    return {
        "n": n,
        "group_order": len(group),
        "posets": total,
        "invariant": not failures,
        "failures": failures[:10],
    }


@dataclass(frozen=True)
class CatalogReport:
    n: int
    poset_count: int
    check_passes: dict
    failures: tuple
    extras: dict
    elapsed_s: float

    @property
    def passed(self) -> bool:
        if any(not extra_ok for extra_ok in self._extra_flags()):
            return False
        return not self.failures

    def _extra_flags(self) -> list[bool]:
        flags = []
        if "isomorphism_invariance" in self.extras:
            flags.append(self.extras["isomorphism_invariance"]["invariant"])
        if "subchain_witness" in self.extras:
            flags.append(self.extras["subchain_witness"] is not None)
        return flags

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "posets": self.poset_count,
            "passed": self.passed,
            "check_passes": self.check_passes,
            "failures": [
                {"roots": list(tokens), "check": name, "detail": detail}
                for tokens, name, detail in self.failures
            ],
            "extras": self.extras,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def verify_catalog(
    n: int,
    t_max: int = 3,
    force: bool = False,
    log: Optional[Callable[[str], None]] = None,
) -> CatalogReport:
    start = time.monotonic()
    passes: Counter = Counter()
    failures: list[tuple[tuple[str, ...], str, dict]] = []
    total = 0
    for p in iter_signed_posets(n, force=force):
        total += 1
        report = verify_poset(p, t_max)
        for c in report.checks:
            if c.passed:
                passes[c.name] += 1
            elif len(failures) < 25:
                failures.append((report.tokens, c.name, c.detail))
        if log and total % 500 == 0:
            log(f"verified {total} posets on [{n}] ...")

    extras: dict = {}
    if n <= 2:
        extras["isomorphism_invariance"] = isomorphism_invariance_report(n)
    if n >= 3:
        extras["subchain_witness"] = subchain_sufficiency_witness(n, force=force)
    return CatalogReport(
        n, total, dict(sorted(passes.items())), tuple(failures), extras, time.monotonic() - start
    )
