import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowtrees import (
    AdjacentClash,
    ColorOutOfRange,
    MissingPair,
    NotAPermutation,
    SchemaError,
    SelfLoop,
    parse_coloring,
    permute_coloring,
    permuted_round_robin,
    round_robin,
    serialize_coloring,
    validate_proper,
)


def raw_table(coloring):
    return {(u, v): c for u, v, c in coloring.edges()}


def test_round_robin_m2_table():
    c = round_robin(2)
    classes = {0: set(), 1: set(), 2: set()}
    for u, v, col in c.edges():
        classes[col].add((u, v))
    assert classes[0] == {(0, 3), (1, 2)}
    assert classes[1] == {(1, 3), (0, 2)}
    assert classes[2] == {(2, 3), (0, 1)}


def test_round_robin_m1_single_edge():
    c = round_robin(1)
    assert list(c.edges()) == [(0, 1, 0)]


def test_color_of_examples():
    c = round_robin(2)
    assert c.color_of(0, 1) == 2
    assert c.color_of(3, 1) == 1


def test_color_of_symmetric():
    c = round_robin(3)
    for u in range(6):
        for v in range(6):
            if u != v:
                assert c.color_of(u, v) == c.color_of(v, u)


def test_color_of_self_loop():
    with pytest.raises(SelfLoop):
        round_robin(2).color_of(1, 1)


def test_partner_examples():
    c = round_robin(2)
    assert c.partner(0, 1) == 2
    assert c.partner(1, 3) == 1


@pytest.mark.parametrize("m", [1, 2, 5])
def test_partner_is_fixed_point_free_involution(m):
    c = round_robin(m)
    for color in range(c.n_colors):
        for v in range(c.n):
            w = c.partner(color, v)
            assert w != v
            assert c.partner(color, w) == v
            assert c.color_of(v, w) == color


@pytest.mark.parametrize("m", [1, 2, 5, 8])
def test_every_color_class_has_m_edges(m):
    c = round_robin(m)
    counts = {}
    for _, _, col in c.edges():
        counts[col] = counts.get(col, 0) + 1
    assert set(counts) == set(range(2 * m - 1))
    assert all(k == m for k in counts.values())


@pytest.mark.parametrize("m", list(range(1, 11)))
def test_round_robin_validates(m):
    c = round_robin(m)
    again = validate_proper(raw_table(c), m)
    assert again == c


def test_validate_rejects_adjacent_clash():
    c = round_robin(2)
    table = raw_table(c)
    # force two edges of color 0 at vertex 0
    table[(0, 1)] = 0
    table[(0, 2)] = 0
    table[(1, 2)] = 2
    table[(1, 3)] = 1
    with pytest.raises(AdjacentClash) as err:
        validate_proper(table, 2)
    assert err.value.vertex == 0
    assert err.value.color == 0


def test_validate_rejects_missing_pair():
    table = raw_table(round_robin(2))
    del table[(1, 2)]
    with pytest.raises(MissingPair):
        validate_proper(table, 2)


def test_validate_rejects_color_out_of_range():
    table = raw_table(round_robin(2))
    table[(1, 2)] = 3
    with pytest.raises(ColorOutOfRange):
        validate_proper(table, 2)


def test_validate_accepts_either_orientation():
    table = {(v, u): c for u, v, c in round_robin(2).edges()}
    assert validate_proper(table, 2) == round_robin(2)


def test_permute_identity():
    c = round_robin(3)
    assert permute_coloring(c, range(6), range(5)) == c


def test_permute_then_inverse_is_identity():
    c = round_robin(4)
    vp = [3, 1, 0, 2, 7, 6, 5, 4]
    cp = [2, 0, 1, 4, 3, 6, 5]
    vp_inv = [vp.index(i) for i in range(8)]
    cp_inv = [cp.index(i) for i in range(7)]
    once = permute_coloring(c, vp, cp)
    assert permute_coloring(once, vp_inv, cp_inv) == c


def test_permute_rejects_non_permutation():
    c = round_robin(2)
    with pytest.raises(NotAPermutation):
        permute_coloring(c, [0, 0, 1, 2], range(3))
    with pytest.raises(NotAPermutation):
        permute_coloring(c, range(4), [0, 1, 1])


@settings(max_examples=40, deadline=None)
@given(m=st.integers(min_value=2, max_value=10), seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_permuted_round_robin_stays_proper(m, seed):
    c = permuted_round_robin(m, seed)
    # revalidation from the raw table is the properness oracle
    assert validate_proper(raw_table(c), m) == c


def test_permuted_round_robin_is_seed_deterministic():
    assert permuted_round_robin(6, 42) == permuted_round_robin(6, 42)
    assert serialize_coloring(permuted_round_robin(6, 42)) == serialize_coloring(
        permuted_round_robin(6, 42)
    )


@pytest.mark.parametrize("m", [1, 2, 5])
def test_serialize_parse_roundtrip(m):
    c = round_robin(m)
    data = serialize_coloring(c)
    assert parse_coloring(data) == c
    # canonical form is a fixed point
    assert serialize_coloring(parse_coloring(data)) == data


def test_parse_rejects_odd_n():
    with pytest.raises(SchemaError):
        parse_coloring(json.dumps({"n": 5, "edges": []}))


def test_parse_rejects_duplicate_pair():
    doc = json.loads(serialize_coloring(round_robin(2)))
    doc["edges"].append(doc["edges"][0])
    with pytest.raises(SchemaError):
        parse_coloring(json.dumps(doc))


def test_parse_rejects_unordered_pair():
    with pytest.raises(SchemaError):
        parse_coloring(json.dumps({"n": 2, "edges": [[1, 0, 0]]}))


def test_parse_rejects_malformed_json():
    with pytest.raises(json.JSONDecodeError):
        parse_coloring(b"{not json")


def test_parse_applies_properness_validation():
    doc = json.loads(serialize_coloring(round_robin(2)))
    doc["edges"] = [[u, v, 0] for u, v, _ in (tuple(e) for e in doc["edges"])]
    with pytest.raises(AdjacentClash):
        parse_coloring(json.dumps(doc))


def test_digest_is_stable_and_distinguishes():
    a = round_robin(3)
    assert a.digest() == round_robin(3).digest()
    assert a.digest() != permuted_round_robin(3, 1).digest()
