"""Shared brute-force oracles for the test suite.

Everything here is deliberately naive and independent of the package's
search code: embeddings by trying every injection, witnesses by enumerating
every coloring.  Slow on purpose; keep the sizes tiny.
"""

from __future__ import annotations

import random
from itertools import permutations, product

from poset_ramsey.lattice import Coloring
from poset_ramsey.posets import Poset


def brute_has_copy_in_masks(target: Poset, hosts: list[int]) -> bool:
    """Does any injection of the target into the host masks preserve and
    reflect strict containment?  Tries every permutation, no pruning."""
    for images in permutations(hosts, target.size):
        ok = True
        for i in range(target.size):
            for j in range(target.size):
                if i == j:
                    continue
                want = target.lt(i, j)
                got = images[i] != images[j] and (images[i] & images[j]) == images[i]
                if want != got:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def brute_has_colored_copy(target: Poset, coloring: Coloring, blue: bool) -> bool:
    hosts = coloring.blue_vertices() if blue else coloring.red_vertices()
    return brute_has_copy_in_masks(target, hosts)


def brute_is_witness(coloring: Coloring, p: Poset, q: Poset) -> bool:
    if brute_has_colored_copy(p, coloring, blue=True):
        return False
    return not brute_has_colored_copy(q, coloring, blue=False)


def all_colorings_lex(dim: int):
    """Every coloring of the dimension-dim lattice, least color string first.

    The color string reads vertex 0 leftmost with red (0) below blue (1), so
    itertools.product with vertex 0 as the slowest position enumerates in
    exactly that order.
    """
    volume = 1 << dim
    for colors in product((0, 1), repeat=volume):
        bits = 0
        for v, c in enumerate(colors):
            bits |= c << v
        yield Coloring(dim, bits)


def brute_first_witness(p: Poset, q: Poset, dim: int) -> Coloring | None:
    for coloring in all_colorings_lex(dim):
        if brute_is_witness(coloring, p, q):
            return coloring
    return None


def brute_ramsey(p: Poset, q_of, n: int, n_max: int) -> int | None:
    """Least N in n..n_max admitting no witness; q_of(n) builds the red target."""
    q = q_of(n)
    for N in range(n, n_max + 1):
        if brute_first_witness(p, q, N) is None:
            return N
    return None


def random_poset(rng: random.Random, size: int) -> Poset:
    """Random partial order on ``size`` elements via a random DAG's closure."""
    labels = list(range(size))
    rng.shuffle(labels)
    up = [0] * size
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < 0.4:
                up[labels[i]] |= 1 << labels[j]
    # transitive closure, iterated until stable
    changed = True
    while changed:
        changed = False
        for i in range(size):
            acc = up[i]
            rest = up[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    return Poset(size, tuple(up))
