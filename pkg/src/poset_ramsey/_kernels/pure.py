"""Pure-Python search kernels; behavioral twin of the compiled extension.

Both backends implement the same two primitives with identical semantics,
visit order, and node accounting, so either can be selected at import time
and the test suite can compare them output-for-output.

Relation encoding: a target poset on m <= 64 elements arrives as two mask
arrays, below[i] (elements strictly under i) and above[i] (strictly over i).
Host vertices are lattice masks ordered by set inclusion; they must be
passed strictly ascending.
"""

from __future__ import annotations

import time
from bisect import bisect_left
from typing import Sequence

BACKEND_NAME = "pure-python"

STATUS_NONE = 0
STATUS_FOUND = 1
STATUS_BUDGET = 2
STATUS_TIMEOUT = 3


def find_induced_copy(
    below: Sequence[int],
    above: Sequence[int],
    hosts: Sequence[int],
    anchor_idx: int = -1,
    anchor_mask: int = 0,
) -> list[int] | None:
    """First induced embedding of the target into the host vertices, or None.

    Elements are assigned in index order (the anchored element, if any, is
    fixed first) and candidates are tried in ascending host order, so the
    returned image list is deterministic.
    """
    m = len(below)
    if m == 0:
        return []
    if len(hosts) < m:
        return None
    images = [0] * m
    assigned = [False] * m
    if anchor_idx >= 0:
        pos = bisect_left(hosts, anchor_mask)
        if pos == len(hosts) or hosts[pos] != anchor_mask:
            return None
        images[anchor_idx] = anchor_mask
        assigned[anchor_idx] = True
    order = [i for i in range(m) if i != anchor_idx]

    def consistent(e: int, h: int) -> bool:
        be = below[e]
        ae = above[e]
        for f in range(m):
            if not assigned[f] or f == e:
                continue
            g = images[f]
            if g == h:
                return False
            below_holds = (g & h) == g  # g proper subset of h once g != h
            above_holds = (h & g) == h
            if bool((be >> f) & 1) != below_holds:
                return False
            if bool((ae >> f) & 1) != above_holds:
                return False
        return True

    def assign(pos: int) -> bool:
        if pos == len(order):
            return True
        e = order[pos]
        for h in hosts:
            if consistent(e, h):
                images[e] = h
                assigned[e] = True
                if assign(pos + 1):
                    return True
                assigned[e] = False
        return False

    return list(images) if assign(0) else None


def witness_search(
    num_bits: int,
    p_below: Sequence[int],
    p_above: Sequence[int],
    p_max_elems: Sequence[int],
    q_below: Sequence[int],
    q_above: Sequence[int],
    q_top: int,
    perm_tables: Sequence[Sequence[int]],
    max_nodes: int,
    time_limit: float,
) -> tuple[int, int, int]:
    """Exhaustive coloring search: (status, witness bits, nodes visited).

    Vertices are colored in ascending mask order, red before blue, so the
    first witness reached is the least color string.  On coloring a vertex,
    only copies whose top image is that vertex are checked (every newly
    completed copy has its largest mask there); a full verification still
    runs at each leaf.  Non-empty ``perm_tables`` (vertex relabelings from
    ground-set permutations) restrict the search to colorings that are
    least within their orbit's explored prefix.
    """
    volume = 1 << num_bits
    colors = [-1] * volume
    blue: list[int] = []
    red: list[int] = []
    nodes = 0
    deadline = time.monotonic() + time_limit if time_limit > 0 else None

    def canonical(v: int) -> bool:
        for table in perm_tables:
            for m in range(v + 1):
                u = table[m]
                if u > v:
                    break
                a = colors[u]
                b = colors[m]
                if a != b:
                    if a < b:
                        return False
                    break
        return True

    class _Stop(Exception):
        def __init__(self, status: int):
            self.status = status

    def assign(v: int) -> bool:
        nonlocal nodes
        if v == volume:
            if find_induced_copy(p_below, p_above, blue) is not None:
                return False
            if find_induced_copy(q_below, q_above, red) is not None:
                return False
            return True
        for c in (0, 1):
            nodes += 1
            if nodes > max_nodes:
                raise _Stop(STATUS_BUDGET)
            if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
                raise _Stop(STATUS_TIMEOUT)
            colors[v] = c
            if c == 1:
                blue.append(v)
                ok = True
                for e in p_max_elems:
                    if find_induced_copy(p_below, p_above, blue, e, v) is not None:
                        ok = False
                        break
            else:
                red.append(v)
                ok = find_induced_copy(q_below, q_above, red, q_top, v) is None
            if ok and perm_tables:
                ok = canonical(v)
            if ok and assign(v + 1):
                return True
            (blue if c == 1 else red).pop()
            colors[v] = -1
        return False

    try:
        if assign(0):
            bits = 0
            for v in blue:
                bits |= 1 << v
            return STATUS_FOUND, bits, nodes
        return STATUS_NONE, 0, nodes
    except _Stop as stop:
        return stop.status, 0, nodes
