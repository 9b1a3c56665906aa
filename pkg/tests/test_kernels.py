"""Pure-Python and compiled kernels must be drop-in twins.

Every test that exercises both backends demands bit-for-bit identical
results, including visited node counts, so either backend can stand in for
the other without changing observable behavior anywhere upstream.
"""

from __future__ import annotations

import random

import pytest

from poset_ramsey._kernels import STATUS_BUDGET, STATUS_FOUND, STATUS_NONE, STATUS_TIMEOUT, available_backends
from poset_ramsey.posets import (
    make_antichain,
    make_boolean_poset,
    make_chain,
    make_complete_multipartite,
    make_spindle,
)
from poset_ramsey.search import boolean_relation_masks, ground_permutation_tables

from conftest import brute_has_copy_in_masks

BACKENDS = available_backends()

pairwise = pytest.mark.skipif(
    len(BACKENDS) < 2,
    reason="compiled backend unavailable; nothing to compare against",
)


def _relations(p):
    return list(p.down), list(p.up)


def _search_args(p, n, N, symmetry=False, max_nodes=1 << 30, time_limit=0.0):
    p_below, p_above = _relations(p)
    q_below, q_above = boolean_relation_masks(n)
    tables = ground_permutation_tables(N) if symmetry else []
    return (
        N,
        p_below,
        p_above,
        p.maximal_elements(),
        q_below,
        q_above,
        (1 << n) - 1,
        tables,
        max_nodes,
        time_limit,
    )


# ------------------------------------------------------- find_induced_copy


def test_find_induced_copy_against_brute_force():
    rng = random.Random(11)
    targets = [make_chain(2), make_chain(3), make_antichain(2),
               make_antichain(3), make_boolean_poset(1), make_spindle((1, 2, 1))]
    for backend in BACKENDS.values():
        for trial in range(60):
            hosts = sorted(rng.sample(range(16), rng.randint(1, 9)))
            for target in targets:
                below, above = _relations(target)
                got = backend.find_induced_copy(below, above, hosts)
                assert (got is not None) == brute_has_copy_in_masks(target, hosts)
                if got is not None:
                    assert len(set(got)) == target.size
                    for i in range(target.size):
                        assert got[i] in hosts
                        for j in range(target.size):
                            if i != j:
                                a, b = got[i], got[j]
                                assert target.lt(i, j) == (a != b and a & b == a)


def test_find_induced_copy_empty_target():
    for backend in BACKENDS.values():
        assert backend.find_induced_copy([], [], [0, 1]) == []


def test_find_induced_copy_anchor_is_respected():
    chain = make_chain(3)
    below, above = _relations(chain)
    hosts = [0b00, 0b01, 0b11, 0b10]
    for backend in BACKENDS.values():
        # anchor the middle chain element at mask 0b01
        got = backend.find_induced_copy(below, above, hosts, 1, 0b01)
        assert got is not None and got[1] == 0b01
        # mask 0b10 has nothing below it among the hosts
        assert backend.find_induced_copy(below, above, hosts, 2, 0b10) is None


@pairwise
def test_find_induced_copy_backends_agree():
    rng = random.Random(23)
    pure, compiled = BACKENDS["pure-python"], BACKENDS["compiled"]
    targets = [make_chain(3), make_antichain(3), make_boolean_poset(2), make_spindle((1, 2, 1))]
    for trial in range(120):
        hosts = sorted(rng.sample(range(32), rng.randint(1, 12)))
        target = targets[trial % len(targets)]
        below, above = _relations(target)
        anchor_idx = -1
        anchor_mask = 0
        if trial % 3 == 0:
            anchor_idx = rng.randrange(target.size)
            anchor_mask = rng.choice(hosts)
        a = pure.find_induced_copy(below, above, hosts, anchor_idx, anchor_mask)
        b = compiled.find_induced_copy(below, above, hosts, anchor_idx, anchor_mask)
        assert a == b


# ---------------------------------------------------------- witness_search


def _grid():
    yield make_chain(2), 1, 1, False
    yield make_chain(2), 1, 2, False
    yield make_chain(3), 1, 2, False
    yield make_chain(3), 2, 3, False
    yield make_antichain(2), 1, 2, False
    yield make_antichain(2), 2, 3, False
    yield make_antichain(3), 1, 3, False
    yield make_boolean_poset(1), 1, 1, False
    yield make_boolean_poset(1), 1, 2, False
    yield make_boolean_poset(1), 2, 2, False
    yield make_boolean_poset(1), 2, 3, True
    yield make_chain(3), 2, 3, True
    yield make_antichain(2), 2, 3, True
    yield make_spindle((1, 2, 1)), 1, 3, True


@pairwise
def test_witness_search_backends_agree_exactly():
    pure, compiled = BACKENDS["pure-python"], BACKENDS["compiled"]
    for p, n, N, symmetry in _grid():
        args = _search_args(p, n, N, symmetry)
        assert pure.witness_search(*args) == compiled.witness_search(*args)


@pairwise
def test_witness_search_backends_agree_under_budget():
    pure, compiled = BACKENDS["pure-python"], BACKENDS["compiled"]
    for max_nodes in (1, 2, 7, 50):
        args = _search_args(make_chain(3), 2, 4, max_nodes=max_nodes)
        a = pure.witness_search(*args)
        b = compiled.witness_search(*args)
        assert a == b
        if a[0] == STATUS_BUDGET:
            assert a[2] >= max_nodes


def test_witness_search_frozen_node_counts():
    """Node totals are part of the kernel contract; drift means the search
    order changed, which would silently break witness reproducibility."""
    expected = {
        (0, False): 17,      # Q1 vs Q1 scan at N=1..2
        (1, True): 63,       # Q1 vs Q2, symmetry on
    }
    for backend in BACKENDS.values():
        q1 = make_boolean_poset(1)
        status, bits, nodes = backend.witness_search(*_search_args(q1, 1, 1))
        total = nodes
        status2, _, nodes2 = backend.witness_search(*_search_args(q1, 1, 2))
        total += nodes2
        assert (status, status2) == (STATUS_FOUND, STATUS_NONE)
        assert total == expected[(0, False)]

        s1, _, n1 = backend.witness_search(*_search_args(q1, 2, 2, symmetry=True))
        s2, _, n2 = backend.witness_search(*_search_args(q1, 2, 3, symmetry=True))
        assert (s1, s2) == (STATUS_FOUND, STATUS_NONE)
        assert n1 + n2 == expected[(1, True)]


def test_witness_search_wide_witness_bits():
    """Found-witness masks must stay exact past any C integer width.

    K_{3,4,2} vs Q_1 stays witnessed at N=5 and N=6, and the least witness
    is everything-but-bottom blue, so the packed mask exercises vertex
    indices 31 and 63 (the 32-bit and 64-bit edges).  The pure twin has no
    width edges, so it only runs the cheap N=5 case."""
    k342 = make_complete_multipartite((3, 4, 2))
    cases = [(name, backend, 5) for name, backend in BACKENDS.items()]
    if "compiled" in BACKENDS:
        cases.append(("compiled", BACKENDS["compiled"], 6))
    for name, backend, N in cases:
        status, bits, nodes = backend.witness_search(*_search_args(k342, 1, N))
        assert status == STATUS_FOUND, name
        assert bits == (1 << (1 << N)) - 2, name
        assert nodes == (1 << N) * 2 - 1, name


def test_witness_search_statuses():
    for backend in BACKENDS.values():
        args = _search_args(make_chain(2), 1, 1)
        status, bits, nodes = backend.witness_search(*args)
        assert status == STATUS_FOUND and bits == 2

        args = _search_args(make_boolean_poset(1), 1, 2)
        status, bits, nodes = backend.witness_search(*args)
        assert status == STATUS_NONE and bits == 0

        args = _search_args(make_chain(3), 2, 4, max_nodes=1)
        status, _, nodes = backend.witness_search(*args)
        assert status == STATUS_BUDGET and nodes >= 1

        args = _search_args(make_chain(3), 2, 4, time_limit=1e-9)
        status, _, nodes = backend.witness_search(*args)
        assert status == STATUS_TIMEOUT


def test_symmetry_tables_do_not_change_results():
    for backend in BACKENDS.values():
        for p, n, N, _ in _grid():
            if N > 3:
                continue
            plain = backend.witness_search(*_search_args(p, n, N, symmetry=False))
            pruned = backend.witness_search(*_search_args(p, n, N, symmetry=True))
            # statuses and witness bits agree; node counts may differ
            assert plain[0] == pruned[0]
            assert plain[1] == pruned[1]
            assert pruned[2] <= plain[2]
