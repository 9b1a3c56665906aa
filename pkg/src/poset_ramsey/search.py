"""Colored-copy search, witness search, and exact Ramsey values at small scale.

A witness against R(P, Q_n) <= N is a coloring of the dimension-N lattice
with no blue induced copy of P and no red induced copy of the dimension-n
lattice.  ``ramsey_exact`` scans N upward from n; the first N admitting no
witness is the exact value, since a witness at N restricts to one at N-1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Literal

from poset_ramsey import _kernels
from poset_ramsey.errors import SearchBudgetExceeded
from poset_ramsey.lattice import Coloring
from poset_ramsey.posets import Embedding, Poset

#: Default cap on backtracking nodes per witness search.
DEFAULT_NODE_BUDGET = 1 << 26

#: Ground-set permutation tables grow as N! * 2^N; past this they cost more
#: than the search they would prune.
MAX_SYMMETRY_DIMENSION = 6

#: Relation masks are machine words in the kernels.
MAX_TARGET_SIZE = 64

Color = Literal["blue", "red"]


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock caps for one witness search."""

    max_nodes: int = DEFAULT_NODE_BUDGET
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError("node budget must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive when given")


def _relation_arrays(p: Poset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if p.size > MAX_TARGET_SIZE:
        raise ValueError(f"target posets are capped at {MAX_TARGET_SIZE} elements")
    return p.down, p.up


def boolean_relation_masks(n: int) -> tuple[list[int], list[int]]:
    """below/above masks of the dimension-n lattice poset (element i = mask i)."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if (1 << n) > MAX_TARGET_SIZE:
        raise ValueError(f"lattice targets are capped at dimension {MAX_TARGET_SIZE.bit_length() - 1}")
    size = 1 << n
    below = [0] * size
    above = [0] * size
    for i in range(size):
        for j in range(size):
            if i != j and (i & j) == i:
                above[i] |= 1 << j
                below[j] |= 1 << i
    return below, above


def _colored_hosts(coloring: Coloring, color: Color) -> list[int]:
    if color == "blue":
        return coloring.blue_vertices()
    if color == "red":
        return coloring.red_vertices()
    raise ValueError(f"color must be 'blue' or 'red', not {color!r}")


def find_colored_copy(
    target: Poset,
    coloring: Coloring,
    color: Color,
    anchor: tuple[int, int] | None = None,
) -> Embedding | None:
    """First induced copy of ``target`` among the vertices of one color.

    ``anchor`` fixes (target element index, vertex mask); the anchor vertex
    must already have the requested color.
    """
    below, above = _relation_arrays(target)
    anchor_idx, anchor_mask = -1, 0
    if anchor is not None:
        anchor_idx, anchor_mask = anchor
        if not 0 <= anchor_idx < target.size:
            raise ValueError(f"anchor element {anchor_idx} outside the target")
        is_blue = coloring.is_blue(anchor_mask)
        if (color == "blue") != is_blue:
            raise ValueError("anchor vertex does not have the requested color")
    hosts = _colored_hosts(coloring, color)
    images = _kernels.find_induced_copy(below, above, hosts, anchor_idx, anchor_mask)
    return None if images is None else Embedding(tuple(images))


def check_colored_embedding(
    target: Poset, coloring: Coloring, color: Color, embedding: Embedding
) -> list[str]:
    """Re-verification from first principles: colors, injectivity, induced order."""
    problems = []
    images = embedding.images
    if len(images) != target.size:
        problems.append("image count differs from target size")
        return problems
    want_blue = color == "blue"
    for i, v in enumerate(images):
        if v < 0 or v >> coloring.dim:
            problems.append(f"image of {i} outside the lattice")
            return problems
        if coloring.is_blue(v) != want_blue:
            problems.append(f"image of {i} is not {color}")
    if len(set(images)) != len(images):
        problems.append("images are not distinct")
    for i in range(target.size):
        for j in range(target.size):
            if i == j:
                continue
            want = target.lt(i, j)
            got = (images[i] & images[j]) == images[i] and images[i] != images[j]
            if want != got:
                problems.append(f"pair ({i}, {j}) breaks induced order")
    return problems


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of checking a would-be witness coloring."""

    ok: bool
    violation_color: Color | None = None
    violation: Embedding | None = None


def verify_witness(coloring: Coloring, p: Poset, n: int) -> VerifyResult:
    """Check that a coloring avoids blue copies of p and red dimension-n lattices."""
    blue_copy = find_colored_copy(p, coloring, "blue")
    if blue_copy is not None:
        return VerifyResult(False, "blue", blue_copy)
    below, above = boolean_relation_masks(n)
    images = _kernels.find_induced_copy(below, above, coloring.red_vertices())
    if images is not None:
        return VerifyResult(False, "red", Embedding(tuple(images)))
    return VerifyResult(True)


def ground_permutation_tables(num_bits: int) -> list[list[int]]:
    """Vertex relabeling maps induced by non-identity ground-set permutations.

    The battery is closed under inversion, so the orientation of each table
    is immaterial to the lex-least pruning test.
    """
    if num_bits > MAX_SYMMETRY_DIMENSION:
        raise ValueError(
            f"symmetry reduction is capped at dimension {MAX_SYMMETRY_DIMENSION}"
        )
    tables = []
    identity = tuple(range(num_bits))
    for perm in permutations(range(num_bits)):
        if perm == identity:
            continue
        table = []
        for v in range(1 << num_bits):
            image = 0
            rest = v
            while rest:
                b = (rest & -rest).bit_length() - 1
                image |= 1 << perm[b]
                rest &= rest - 1
            table.append(image)
        tables.append(table)
    return tables


def _find_witness_counted(
    p: Poset,
    n: int,
    N: int,
    symmetry: bool,
    budget: SearchBudget,
) -> tuple[Coloring | None, int]:
    if p.size == 0:
        raise ValueError("target poset must be nonempty")
    if n < 0 or N < 0:
        raise ValueError("dimensions must be nonnegative")
    p_below, p_above = _relation_arrays(p)
    q_below, q_above = boolean_relation_masks(n)
    tables = ground_permutation_tables(N) if symmetry else []
    status, bits, nodes = _kernels.witness_search(
        N,
        p_below,
        p_above,
        p.maximal_elements(),
        q_below,
        q_above,
        (1 << n) - 1,
        tables,
        budget.max_nodes,
        budget.time_limit or 0.0,
    )
    if status == _kernels.STATUS_BUDGET:
        raise SearchBudgetExceeded("nodes", nodes)
    if status == _kernels.STATUS_TIMEOUT:
        raise SearchBudgetExceeded("time", nodes)
    if status == _kernels.STATUS_FOUND:
        return Coloring(N, bits), nodes
    return None, nodes


def find_witness(
    p: Poset,
    n: int,
    N: int,
    symmetry: bool = False,
    budget: SearchBudget | None = None,
) -> Coloring | None:
    """Least witness coloring of the dimension-N lattice, or None if none exists.

    "Least" orders colorings as color strings in vertex order with red below
    blue.  With ``symmetry`` the search skips colorings that are not minimal
    within their ground-set-permutation orbit; the verdict and the returned
    witness are unchanged because the least witness is orbit-minimal.
    Raises :class:`SearchBudgetExceeded` when the budget runs out first.
    """
    witness, _ = _find_witness_counted(p, n, N, symmetry, budget or SearchBudget())
    return witness


@dataclass(frozen=True)
class RamseyResult:
    """Outcome of an upward scan for R(P, Q_n).

    status "exact": ``value`` is the Ramsey number and a verified witness is
    stored for every N from n up to value-1.  status "lower_bound": every
    scanned N had a witness, so R >= lower_bound.  status "inconclusive":
    the budget ran out at ``inconclusive_at`` before a verdict.
    """

    status: Literal["exact", "lower_bound", "inconclusive"]
    lower_bound: int
    value: int | None = None
    witnesses: dict[int, Coloring] = field(default_factory=dict)
    inconclusive_at: int | None = None
    nodes_used: int = 0


def ramsey_exact(
    p: Poset,
    n: int,
    n_max: int,
    symmetry: bool = False,
    budget: SearchBudget | None = None,
) -> RamseyResult:
    """Scan N = n, n+1, ..., n_max for the least witness-free dimension.

    Witnesses found along the way are re-verified before being stored, so an
    "exact" result carries a complete certificate trail.
    """
    if n_max < n:
        raise ValueError("scan ceiling must be at least n")
    budget = budget or SearchBudget()
    witnesses: dict[int, Coloring] = {}
    total_nodes = 0
    for N in range(n, n_max + 1):
        try:
            witness, nodes = _find_witness_counted(p, n, N, symmetry, budget)
        except SearchBudgetExceeded as exc:
            return RamseyResult(
                status="inconclusive",
                lower_bound=N,
                witnesses=witnesses,
                inconclusive_at=N,
                nodes_used=total_nodes + exc.nodes,
            )
        total_nodes += nodes
        if witness is None:
            return RamseyResult(
                status="exact",
                lower_bound=N,
                value=N,
                witnesses=witnesses,
                nodes_used=total_nodes,
            )
        check = verify_witness(witness, p, n)
        if not check.ok:
            raise AssertionError("search returned a coloring that fails verification")
        witnesses[N] = witness
    return RamseyResult(
        status="lower_bound",
        lower_bound=n_max + 1,
        witnesses=witnesses,
        nodes_used=total_nodes,
    )
