"""The cross-oracle verification layer itself."""

from signedposets.posets import from_generators
from signedposets.roots import parse_root
from signedposets.verify import (
    ALL_CHECKS,
    isomorphism_invariance_report,
    pad_equal,
    subchain_sufficiency_witness,
    verify_catalog,
    verify_poset,
)


def mk(n, tokens):
    return from_generators(n, [parse_root(t) for t in tokens])


def test_check_names():
    assert [name for name, _ in ALL_CHECKS] == [
        "minimal-representation",
        "jordan-holder",
        "interior-point",
        "hstar-oracles",
        "ehrhart-reciprocity",
        "filters-vertices",
        "irredundant-description",
        "triangulation",
        "gorenstein-triple",
        "hstar-unimodal-when-gorenstein",
        "fischer-halfspaces",
        "chain-polytope",
        "homogenization",
    ]


def test_pad_equal():
    assert pad_equal((1, 2), (1, 2, 0, 0))
    assert pad_equal((), (0,))
    assert not pad_equal((1, 2), (1, 2, 1))


def test_verify_poset_all_checks_pass():
    report = verify_poset(mk(2, ["-1+2", "+1+2"]))
    assert report.passed
    assert report.failures() == []
    assert len(report.checks) == len(ALL_CHECKS)
    doc = report.to_json_dict()
    assert doc["passed"] is True
    assert doc["roots"] == ["-1+2", "+1+2", "+2"]
    assert {c["name"] for c in doc["checks"]} == {name for name, _ in ALL_CHECKS}
    assert all(isinstance(c["detail"], dict) for c in doc["checks"])


def test_verify_catalog_n1():
    report = verify_catalog(1)
    assert report.passed
    assert report.poset_count == 3
    assert set(report.check_passes) == {name for name, _ in ALL_CHECKS}
    assert all(v == 3 for v in report.check_passes.values())
    doc = report.to_json_dict()
    assert doc["posets"] == 3 and doc["failures"] == []


def test_isomorphism_invariance_report():
    report = isomorphism_invariance_report(1)
    assert report == {
        "n": 1,
        "group_order": 2,
        "posets": 3,
        "invariant": True,
        "failures": [],
    }


def test_subchain_witness_found_at_rank_3():
    witness = subchain_sufficiency_witness(3)
    assert witness is not None
    assert witness["poset"] == ["+1-2", "+1-3", "+2-3"]
    assert witness["chain"] == {"C": [1, 2], "S": [1], "witness": ["+1-2"]}
    assert witness["row"] == [1, 1, 0]
    assert witness["kept_rows"] == 10


def test_verify_reports_exceptions_as_failures():
    # a deliberately un-closed poset trips the Fischer cycle detector inside
    # one of the checks and must surface as a failed CheckResult, not a crash
    from signedposets.posets import SignedPoset

    bad = SignedPoset(
        3,
        frozenset(
            {parse_root("-1+2"), parse_root("-2+3"), parse_root("+1-3")}
        ),
    )
    report = verify_poset(bad)
    assert not report.passed
    names = {c.name for c in report.failures()}
    assert "gorenstein-triple" in names or "fischer-halfspaces" in names
