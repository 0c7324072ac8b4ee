import pytest
from hypothesis import given
from hypothesis import strategies as st

from signedposets.roots import (
    Root,
    all_roots,
    antipodal_pairs,
    from_vector,
    inner_product,
    parse_root,
)


def test_token_grammar():
    assert parse_root("+2") == Root.unit(2)
    assert parse_root("-1") == Root.unit(1, -1)
    assert parse_root("-1+2") == Root.pair(1, -1, 2, 1)
    assert parse_root("+1-3") == Root.pair(1, 1, 3, -1)
    assert parse_root("-2-5") == Root.pair(2, -1, 5, -1)


def test_token_rejects_garbage():
    for bad in ["", "1", "+0", "+1+1", "+2+1", "e1", "+1 -2", "+1+2+3"]:
        with pytest.raises(ValueError):
            parse_root(bad)


def test_vector_and_back():
    alpha = parse_root("-1+3")
    assert alpha.vector(3) == (-1, 0, 1)
    assert alpha.vector(4) == (-1, 0, 1, 0)
    assert from_vector((-1, 0, 1, 0)) == alpha
    assert from_vector((0, 1)) == Root.unit(2)


def test_from_vector_rejects_nonroots():
    for vec in [(0, 0), (2, 0), (1, 1, 1), (1, -2)]:
        with pytest.raises(ValueError):
            from_vector(vec)


def test_root_system_size():
    # |B_n| = 2n^2: 2n units and 4*C(n,2) two-index roots
    for n in (1, 2, 3, 4):
        roots = all_roots(n)
        assert len(roots) == 2 * n * n
        assert len(set(roots)) == len(roots)
        assert len(list(antipodal_pairs(n))) == n * n


def test_antipodal_pairs_partition():
    pairs = list(antipodal_pairs(3))
    flat = {r for pair in pairs for r in pair}
    assert flat == set(all_roots(3))
    for alpha, beta in pairs:
        assert beta == -alpha


roots_st = st.one_of(
    st.builds(
        Root.unit,
        st.integers(min_value=1, max_value=5),
        st.sampled_from([1, -1]),
    ),
    st.tuples(
        st.integers(min_value=1, max_value=4),
        st.sampled_from([1, -1]),
        st.integers(min_value=1, max_value=4),
        st.sampled_from([1, -1]),
    )
    .filter(lambda t: t[0] < t[2])
    .map(lambda t: Root.pair(*t)),
)


@given(roots_st)
def test_token_round_trip(alpha):
    assert parse_root(alpha.token()) == alpha


@given(roots_st)
def test_negation_involution(alpha):
    assert -(-alpha) == alpha
    assert (-alpha).support == alpha.support


@given(roots_st)
def test_vector_matches_sign_at(alpha):
    n = alpha.max_index
    vec = alpha.vector(n)
    assert all(vec[i - 1] == alpha.sign_at(i) for i in range(1, n + 1))


def test_inner_product():
    alpha = parse_root("-1+2")
    assert inner_product(alpha, (3, 5)) == 2
    assert inner_product(Root.unit(2, -1), (7, 4)) == -4
