"""Finite poset builders, duality, embedding search, serialization."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poset_ramsey.posets import (
    ChainCover,
    Poset,
    are_isomorphic,
    check_chain_cover,
    dilworth_cover,
    find_poset_copy,
    glue,
    make_antichain,
    make_boolean_poset,
    make_chain,
    make_complete_multipartite,
    make_spindle,
    max_antichain,
    poset_from_json,
    poset_from_json_dict,
    poset_to_dot,
    poset_to_json,
    poset_to_json_dict,
    transitive_reduction,
)

from conftest import brute_has_copy_in_masks, random_poset


def _posets_strategy(max_size: int = 6):
    return st.builds(
        lambda seed, size: random_poset(random.Random(seed), size),
        st.integers(0, 2**32 - 1),
        st.integers(1, max_size),
    )


# ---------------------------------------------------------------- builders


def test_chain_is_total_order():
    c = make_chain(4)
    assert c.size == 4
    for i in range(4):
        for j in range(4):
            assert c.lt(i, j) == (i < j)


def test_antichain_has_no_relations():
    a = make_antichain(5)
    assert a.size == 5
    assert a.relation_count == 0


def test_chain_and_antichain_size_bounds():
    assert make_chain(0).size == 0
    assert make_antichain(0).size == 0
    with pytest.raises(ValueError):
        make_chain(-1)
    with pytest.raises(ValueError):
        make_antichain(-1)


def test_boolean_poset_order_is_containment():
    b = make_boolean_poset(3)
    assert b.size == 8
    for x in range(8):
        for y in range(8):
            assert b.lt(x, y) == (x != y and x & y == x)


def test_complete_multipartite_layers():
    p = make_complete_multipartite((3, 4, 2))
    assert p.size == 9
    # consecutive elements share a layer iff incomparable
    layers = [0] * 3 + [1] * 4 + [2] * 2
    for i in range(9):
        for j in range(9):
            assert p.lt(i, j) == (layers[i] < layers[j])


def test_spindle_shape():
    p = make_spindle((1, 2, 1))
    assert p.size == 4
    assert len(p.minimal_elements()) == 1
    assert len(p.maximal_elements()) == 1
    # the two middles are mutually incomparable
    mids = [v for v in range(4) if v not in p.minimal_elements() and v not in p.maximal_elements()]
    assert len(mids) == 2
    assert not p.comparable(mids[0], mids[1])


def test_spindle_rejects_empty_middle():
    with pytest.raises(ValueError):
        make_spindle((1, 0, 1))


def test_poset_validation_rejects_reflexive_mask():
    with pytest.raises(ValueError):
        Poset(2, (0b01, 0b00))


def test_poset_validation_rejects_cycle():
    with pytest.raises(ValueError):
        Poset(2, (0b10, 0b01))


def test_poset_validation_rejects_missing_transitivity():
    # 0 < 1 < 2 without 0 < 2
    with pytest.raises(ValueError):
        Poset(3, (0b010, 0b100, 0b000))


def test_heights_and_extremes():
    p = make_spindle((1, 2, 1))
    assert sorted(p.heights) == [0, 1, 1, 2]
    b = make_boolean_poset(2)
    assert b.heights == (0, 1, 1, 2)
    assert b.minimal_elements() == (0,)
    assert b.maximal_elements() == (3,)


def test_restrict_keeps_induced_order():
    b = make_boolean_poset(2)
    sub = b.restrict((0, 1, 3))
    assert are_isomorphic(sub, make_chain(3))


# ------------------------------------------------------------------- glue


def test_glue_of_two_chains_is_longer_chain():
    g = glue(make_chain(2), make_chain(3))
    assert are_isomorphic(g, make_chain(4))


def test_glue_identifies_max_with_min():
    p = glue(make_boolean_poset(1), make_boolean_poset(1))
    assert are_isomorphic(p, make_chain(3))


def test_glue_requires_unique_extremes():
    with pytest.raises(ValueError):
        glue(make_antichain(2), make_chain(2))
    with pytest.raises(ValueError):
        glue(make_chain(2), make_antichain(2))


def test_glue_size_is_sum_minus_one():
    p1 = make_complete_multipartite((1, 2, 1))
    p2 = make_chain(3)
    assert glue(p1, p2).size == p1.size + p2.size - 1


# -------------------------------------------------- antichains and covers


def test_max_antichain_frozen_values():
    assert len(max_antichain(make_complete_multipartite((3, 4, 2)))) == 4
    assert len(max_antichain(make_chain(5))) == 1
    assert len(max_antichain(make_antichain(4))) == 4
    assert len(max_antichain(make_boolean_poset(3))) == 3


def test_dilworth_cover_on_diamond():
    b = make_boolean_poset(2)
    cover = dilworth_cover(b)
    assert check_chain_cover(b, cover) == []
    assert len(cover.chains) == 2


def test_check_chain_cover_flags_problems():
    b = make_boolean_poset(2)
    missing = ChainCover(((0, 1, 3),))
    assert any("cover" in s or "element" in s for s in check_chain_cover(b, missing))
    overlap = ChainCover(((0, 1, 3), (0, 2, 3)))
    assert check_chain_cover(b, overlap) != []
    not_chain = ChainCover(((0, 1, 3), (2,), (1,)))
    assert check_chain_cover(b, not_chain) != []


@settings(max_examples=60, deadline=None)
@given(_posets_strategy())
def test_dilworth_duality(p: Poset):
    """Max antichain size equals min chain cover size, antichain is valid."""
    anti = max_antichain(p)
    for a in anti:
        for b in anti:
            if a != b:
                assert not p.comparable(a, b)
    cover = dilworth_cover(p)
    assert check_chain_cover(p, cover) == []
    assert len(cover.chains) == len(anti)


# ------------------------------------------------------- embedding search


def test_find_poset_copy_in_boolean_lattice():
    b = make_boolean_poset(2)
    emb = find_poset_copy(make_chain(3), b)
    assert emb is not None
    i0, i1, i2 = emb.images
    assert b.lt(i0, i1) and b.lt(i1, i2)
    assert find_poset_copy(make_antichain(3), b) is None
    assert find_poset_copy(make_antichain(2), b) is not None


def test_find_poset_copy_agrees_with_brute_force():
    rng = random.Random(7)
    big = make_boolean_poset(4)
    targets = [make_chain(2), make_chain(3), make_antichain(2), make_boolean_poset(1)]
    for trial in range(60):
        hosts = sorted(rng.sample(range(16), rng.randint(2, 8)))
        sub = big.restrict(hosts)
        for target in targets:
            got = find_poset_copy(target, sub)
            want = brute_has_copy_in_masks(target, hosts)
            assert (got is not None) == want
            if got is not None:
                masks = [hosts[i] for i in got.images]
                for i in range(target.size):
                    for j in range(target.size):
                        if i == j:
                            continue
                        a, b = masks[i], masks[j]
                        assert target.lt(i, j) == (a != b and a & b == a)


# ------------------------------------------------------------ isomorphism


def test_are_isomorphic_basic():
    assert are_isomorphic(make_chain(3), make_chain(3))
    assert not are_isomorphic(make_chain(3), make_antichain(3))
    assert not are_isomorphic(make_chain(3), make_chain(4))
    assert are_isomorphic(make_boolean_poset(2), make_complete_multipartite((1, 2, 1)))


@settings(max_examples=40, deadline=None)
@given(_posets_strategy(5), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabeling(p: Poset, rnd):
    perm = list(range(p.size))
    rnd.shuffle(perm)
    up = [0] * p.size
    for i in range(p.size):
        rest = p.up[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            up[perm[i]] |= 1 << perm[j]
    assert are_isomorphic(p, Poset(p.size, tuple(up)))


# ---------------------------------------------------------- serialization


def test_json_round_trip_exact():
    for p in (make_chain(3), make_antichain(3), make_boolean_poset(2),
              make_spindle((2, 3, 1)), make_complete_multipartite((3, 4, 2))):
        q = poset_from_json(poset_to_json(p))
        assert q.size == p.size and q.up == p.up


@settings(max_examples=60, deadline=None)
@given(_posets_strategy())
def test_json_round_trip_random(p: Poset):
    assert poset_from_json_dict(poset_to_json_dict(p)).up == p.up


def test_json_rejects_cycles_and_garbage():
    with pytest.raises(ValueError):
        poset_from_json_dict({"size": 2, "relations": [[0, 1], [1, 0]]})
    with pytest.raises(ValueError):
        poset_from_json_dict({"size": 2})
    with pytest.raises(ValueError):
        poset_from_json_dict({"size": 2, "relations": [[0, 5]]})
    with pytest.raises(ValueError):
        poset_from_json_dict({"size": 2, "relations": [[0, True]]})
    with pytest.raises(ValueError):
        poset_from_json("not json at all {")


def test_transitive_reduction_counts():
    assert len(transitive_reduction(make_chain(3))) == 2
    assert len(transitive_reduction(make_boolean_poset(2))) == 4
    assert transitive_reduction(make_antichain(4)) == []


@settings(max_examples=60, deadline=None)
@given(_posets_strategy())
def test_reduction_closure_restores_order(p: Poset):
    """Re-closing the reduction gives back the original relation."""
    up = [0] * p.size
    for a, b in transitive_reduction(p):
        up[a] |= 1 << b
    changed = True
    while changed:
        changed = False
        for i in range(p.size):
            acc = up[i]
            rest = up[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    assert tuple(up) == p.up


def test_dot_output_edges():
    assert poset_to_dot(make_chain(2)).count("->") == 1
    assert poset_to_dot(make_antichain(3)).count("->") == 0
    assert poset_to_dot(make_boolean_poset(2)).count("->") == 4
    assert "rankdir=BT" in poset_to_dot(make_chain(2))
