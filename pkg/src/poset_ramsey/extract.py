"""Certificate-producing procedures behind the upper-bound arguments.

Three pipelines, each emitting a certificate that an independent checker
re-verifies from lattice primitives alone:

  * the chain-or-red dichotomy: every coloring of a split lattice yields a
    blue prefix chain for a given Y-ordering or a red copy of the full
    X-dimensional lattice;
  * the chain family / pigeonhole / Dilworth pipeline: many orderings give
    many blue chains, shared end vertices give a class, and the class either
    contains a blue spindle or forces a counting contradiction;
  * the clear-vertex classification used when bounds compose under gluing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from poset_ramsey.errors import InvariantViolation
from poset_ramsey.lattice import (
    Coloring,
    GroundSplit,
    YOrdering,
    pair_leq,
    prefix_mask,
)
from poset_ramsey.posets import (
    ChainCover,
    Embedding,
    Poset,
    SpindleSpec,
    check_chain_cover,
    dilworth_cover,
    find_poset_copy,
    make_boolean_poset,
    make_spindle,
    max_antichain,
    poset_from_json_dict,
    poset_to_json_dict,
)
from poset_ramsey.search import check_colored_embedding, find_colored_copy, verify_witness


# ---------------------------------------------------------------------------
# Certificate types


@dataclass(frozen=True)
class BlueChainCert:
    """Blue chain whose i-th vertex has Y-part equal to the ordering's i-prefix.

    ``vertices[i]`` is the mask X_i | Y(i); the X-parts are nested upward, so
    consecutive vertices differ by one Y bit plus possibly some X bits.
    """

    split: GroundSplit
    ordering: YOrdering
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class RedQnCert:
    """Red copy of the dimension-``dimension`` lattice; images[i] hosts mask i."""

    split: GroundSplit
    dimension: int
    images: tuple[int, ...]


@dataclass(frozen=True)
class ChainFamily:
    """One blue prefix chain per Y-ordering, in the order the orderings came."""

    split: GroundSplit
    entries: tuple[tuple[YOrdering, BlueChainCert], ...]


@dataclass(frozen=True)
class EndClass:
    """Sub-family of chains agreeing on the end vertices at the given indices.

    ``indices`` lists the fixed chain positions (low r and high t); the entry
    at ``end_vertices[j]`` is the shared mask at position ``indices[j]``.
    ``member_positions`` points back into the originating family.
    """

    indices: tuple[int, ...]
    end_vertices: tuple[int, ...]
    members: tuple[tuple[YOrdering, BlueChainCert], ...]
    member_positions: tuple[int, ...]

    def end_vertex(self, index: int) -> int:
        return self.end_vertices[self.indices.index(index)]


@dataclass(frozen=True)
class SpindleCert:
    """Blue realization of an r-chain / s-antichain / t-chain stack."""

    split: GroundSplit
    shape: SpindleSpec
    lower: tuple[int, ...]
    middle: tuple[int, ...]
    upper: tuple[int, ...]

    def all_vertices(self) -> tuple[int, ...]:
        return self.lower + self.middle + self.upper


@dataclass(frozen=True)
class ContradictionReport:
    """Pigeonhole collision: two family members with identical chain labelings.

    Each member chain is labeled by the cover chain owning its vertex at each
    level; with at most c cover chains there are only c^(k+1) labels, so a
    large enough class repeats one.  Equal labels force equal Y-parts at
    every level (a chain of masks has at most one Y-part per cardinality),
    which pins both members to the same ordering prefix tower.
    """

    split: GroundSplit
    orderings: tuple[tuple[int, ...], ...]
    member_chains: tuple[tuple[int, ...], ...]
    cover_chains: tuple[tuple[int, ...], ...]
    y_restrictions: tuple[tuple[tuple[int, int], ...], ...]
    labels: tuple[tuple[int, ...], ...]
    pair: tuple[int, int]


@dataclass(frozen=True)
class ClearClassification:
    """Per-blue-vertex clear flags plus the derived green/yellow split.

    ``blue[i]`` is the i-th blue vertex; ``p1_clear[i]`` means no blue copy
    of the first poset has that vertex as the image of its unique maximum,
    ``p2_clear[i]`` the same with the second poset's unique minimum.  Green
    is blue-and-p1_clear; yellow is every other vertex of the lattice.
    """

    dim: int
    blue: tuple[int, ...]
    p1_clear: tuple[bool, ...]
    p2_clear: tuple[bool, ...]
    green: tuple[int, ...]
    yellow: tuple[int, ...]


@dataclass(frozen=True)
class WitnessCert:
    """Claim that a coloring avoids blue ``target`` and red lattice copies."""

    dim: int
    target_dimension: int
    target: Poset


Certificate = (
    BlueChainCert | RedQnCert | SpindleCert | ContradictionReport | WitnessCert
)


# ---------------------------------------------------------------------------
# Chain-or-red dichotomy


def find_blue_prefix_chain(
    coloring: Coloring, g: GroundSplit, pi: YOrdering
) -> BlueChainCert | None:
    """Least blue chain (X_0|Y(0)), ..., (X_k|Y(k)) with nested X-parts.

    Level sets are pruned top-down: an X-part survives at level i only if it
    is blue there and some superset survives at level i+1.  The surviving
    sets make the left-to-right smallest-first extraction backtrack-free, so
    the returned X-tuple is the lexicographic minimum among valid towers.
    """
    if coloring.dim != g.total:
        raise ValueError("coloring dimension differs from the ground split")
    if pi.split != g:
        raise ValueError("ordering belongs to a different ground split")
    x_count = 1 << g.n
    feasible: list[bytearray] = [bytearray(x_count) for _ in range(g.k + 1)]
    above: bytearray | None = None
    for level in range(g.k, -1, -1):
        y_part = prefix_mask(pi, level)
        cur = feasible[level]
        for x in range(x_count):
            if coloring.is_blue(x | y_part):
                cur[x] = 1
        if above is not None:
            # Superset reachability: closed[x] = some superset feasible above.
            closed = bytearray(above)
            for b in range(g.n):
                bit = 1 << b
                for x in range(x_count):
                    if not x & bit and closed[x | bit]:
                        closed[x] = 1
            for x in range(x_count):
                cur[x] &= closed[x]
        above = cur
    first = next((x for x in range(x_count) if feasible[0][x]), None)
    if first is None:
        return None
    xs = [first]
    for level in range(1, g.k + 1):
        cur = feasible[level]
        prev = xs[-1]
        xs.append(next(x for x in range(x_count) if (prev & x) == prev and cur[x]))
    vertices = tuple(x | prefix_mask(pi, i) for i, x in enumerate(xs))
    return BlueChainCert(split=g, ordering=pi, vertices=vertices)


def chain_or_red(
    coloring: Coloring, g: GroundSplit, pi: YOrdering
) -> BlueChainCert | RedQnCert:
    """Blue prefix chain for ``pi`` if one exists, else a red lattice copy.

    Both searches are complete, so coming up empty on both is impossible for
    a genuine coloring and raises :class:`InvariantViolation`.
    """
    chain = find_blue_prefix_chain(coloring, g, pi)
    if chain is not None:
        return chain
    red = find_colored_copy(make_boolean_poset(g.n), coloring, "red")
    if red is not None:
        return RedQnCert(split=g, dimension=g.n, images=red.images)
    raise InvariantViolation(
        "no blue prefix chain and no red lattice copy: "
        "corrupted coloring or implementation bug"
    )


def collect_chain_family(
    coloring: Coloring, g: GroundSplit, orderings: Sequence[YOrdering]
) -> ChainFamily | RedQnCert:
    """One blue chain per ordering, short-circuiting on the first red copy.

    Orderings are evaluated in index order, so the red certificate (when any
    ordering produces one) is always the lowest-index one.
    """
    if len(set(o.order for o in orderings)) != len(orderings):
        raise ValueError("orderings must be pairwise distinct")
    entries = []
    for pi in orderings:
        cert = chain_or_red(coloring, g, pi)
        if isinstance(cert, RedQnCert):
            return cert
        entries.append((pi, cert))
    return ChainFamily(split=g, entries=tuple(entries))


# ---------------------------------------------------------------------------
# Pigeonhole end classes and the spindle / cover dichotomy


def end_indices(k: int, r: int, t: int) -> tuple[int, ...]:
    """Chain positions fixed by a class: the bottom r and the top t plus one."""
    if r < 0 or t < 0:
        raise ValueError("r and t must be nonnegative")
    if r + t > k + 1:
        raise ValueError("r + t exceeds the chain length")
    return tuple(range(r)) + tuple(range(k - t + 1, k + 1))


def pigeonhole_end_classes(family: ChainFamily, r: int, t: int) -> list[EndClass]:
    """Partition of the family by end-vertex tuples, largest class first.

    Ties keep first-appearance order, so the result is deterministic.
    """
    indices = end_indices(family.split.k, r, t)
    groups: dict[tuple[int, ...], list[int]] = {}
    for j, (_, cert) in enumerate(family.entries):
        key = tuple(cert.vertices[i] for i in indices)
        groups.setdefault(key, []).append(j)
    classes = [
        EndClass(
            indices=indices,
            end_vertices=key,
            members=tuple(family.entries[j] for j in positions),
            member_positions=tuple(positions),
        )
        for key, positions in groups.items()
    ]
    classes.sort(key=lambda c: -len(c.members))
    return classes


def class_induced_poset(cls: EndClass) -> tuple[Poset, tuple[int, ...]]:
    """Poset induced by all member-chain vertices, with its mask table.

    Vertices shared between chains are deduplicated; element i of the poset
    is ``masks[i]`` and the order is strict mask containment.
    """
    masks = tuple(sorted({v for _, cert in cls.members for v in cert.vertices}))
    up = []
    for a in masks:
        bits = 0
        for j, b in enumerate(masks):
            if a != b and pair_leq(a, b):
                bits |= 1 << j
        up.append(bits)
    return Poset(len(masks), tuple(up)), masks


def assemble_spindle(
    cls: EndClass, shape: SpindleSpec, g: GroundSplit
) -> SpindleCert | ChainCover:
    """Spindle from an s-antichain in the class poset, or its Dilworth cover.

    The class's fixed end vertices provide the lower and upper chains; any
    s-antichain consists of non-end vertices (ends are comparable to the
    whole class poset) and those sit strictly between the two chains.  When
    the maximum antichain is smaller than s the minimum chain cover comes
    back instead: it has at most s-1 chains and feeds the counting
    contradiction.
    """
    if not cls.members:
        raise ValueError("class has no members")
    if cls.indices != end_indices(g.k, shape.r, shape.t):
        raise ValueError("class end indices do not match the requested shape")
    poset, masks = class_induced_poset(cls)
    lower = tuple(cls.end_vertices[: shape.r])
    upper = tuple(cls.end_vertices[shape.r :])
    if shape.s == 1:
        ends = set(cls.end_vertices)
        middle = next((m for m in masks if m not in ends), None)
        if middle is None:
            raise ValueError("no middle vertex available for a one-element layer")
        return SpindleCert(
            split=g, shape=shape, lower=lower, middle=(middle,), upper=upper
        )
    antichain = max_antichain(poset)
    if len(antichain) >= shape.s:
        middle = tuple(sorted(masks[i] for i in antichain)[: shape.s])
        return SpindleCert(
            split=g, shape=shape, lower=lower, middle=middle, upper=upper
        )
    return dilworth_cover(poset)


def chain_y_restrictions(
    chain_masks: Sequence[int], g: GroundSplit
) -> tuple[tuple[int, int], ...]:
    """Pairs (cardinality, Y-part) realized along one chain of masks.

    Masks on a chain with equally sized Y-parts have equal Y-parts, so each
    cardinality occurs at most once; a violation means the input was not a
    chain and raises :class:`InvariantViolation`.
    """
    by_size: dict[int, int] = {}
    for mask in chain_masks:
        y_part = mask & g.y_mask
        size = y_part.bit_count()
        if size in by_size and by_size[size] != y_part:
            raise InvariantViolation(
                f"two different {size}-bit Y-parts on one chain"
            )
        by_size[size] = y_part
    return tuple(sorted(by_size.items()))


def distinctness_contradiction(
    cls: EndClass, cover: ChainCover, g: GroundSplit
) -> ContradictionReport:
    """Labeling collision proving the class poset cannot cover this many chains.

    Each member is labeled, level by level, with the cover chain owning its
    vertex; a cover with c chains admits c^(k+1) labels, so a class larger
    than that repeats one.  The colliding pair then shares all Y-parts, which
    determines the ordering prefix tower twice over.
    """
    poset, masks = class_induced_poset(cls)
    problems = check_chain_cover(poset, cover)
    if problems:
        raise ValueError("cover does not partition the class poset: " + problems[0])
    c = len(cover.chains)
    k = g.k
    if len(cls.members) <= c ** (k + 1):
        raise ValueError(
            f"pigeonhole needs more than {c}^{k + 1} members, "
            f"got {len(cls.members)}"
        )
    owner = [0] * poset.size
    for ci, chain in enumerate(cover.chains):
        for e in chain:
            owner[e] = ci
    index_of = {m: i for i, m in enumerate(masks)}
    cover_masks = tuple(tuple(masks[e] for e in chain) for chain in cover.chains)
    restrictions = tuple(chain_y_restrictions(chain, g) for chain in cover_masks)
    labels = tuple(
        tuple(owner[index_of[v]] for v in cert.vertices) for _, cert in cls.members
    )
    first_seen: dict[tuple[int, ...], int] = {}
    pair = None
    for j, label in enumerate(labels):
        if label in first_seen:
            pair = (first_seen[label], j)
            break
        first_seen[label] = j
    if pair is None:
        raise InvariantViolation("no label collision despite pigeonhole bound")
    return ContradictionReport(
        split=g,
        orderings=tuple(pi.order for pi, _ in cls.members),
        member_chains=tuple(cert.vertices for _, cert in cls.members),
        cover_chains=cover_masks,
        y_restrictions=restrictions,
        labels=labels,
        pair=pair,
    )


# ---------------------------------------------------------------------------
# Clear-vertex classification


def classify_clear(
    coloring: Coloring, g: GroundSplit, p1: Poset, p2: Poset
) -> ClearClassification:
    """Flag blue vertices that top no blue p1 copy / bottom no blue p2 copy.

    Requires p1 to have a unique maximum and p2 a unique minimum, since the
    flags anchor exactly those elements.
    """
    if coloring.dim != g.total:
        raise ValueError("coloring dimension differs from the ground split")
    p1_max = p1.maximal_elements()
    p2_min = p2.minimal_elements()
    if len(p1_max) != 1:
        raise ValueError("first poset must have a unique maximal element")
    if len(p2_min) != 1:
        raise ValueError("second poset must have a unique minimal element")
    blue = tuple(coloring.blue_vertices())
    p1_clear = tuple(
        find_colored_copy(p1, coloring, "blue", anchor=(p1_max[0], v)) is None
        for v in blue
    )
    p2_clear = tuple(
        find_colored_copy(p2, coloring, "blue", anchor=(p2_min[0], v)) is None
        for v in blue
    )
    green = tuple(v for v, clear in zip(blue, p1_clear) if clear)
    green_set = set(green)
    yellow = tuple(
        v for v in range(coloring.vertex_count) if v not in green_set
    )
    return ClearClassification(
        dim=coloring.dim,
        blue=blue,
        p1_clear=p1_clear,
        p2_clear=p2_clear,
        green=green,
        yellow=yellow,
    )


# ---------------------------------------------------------------------------
# Independent checkers (lattice primitives only, no search state)


def check_blue_chain(cert: BlueChainCert, coloring: Coloring) -> list[str]:
    problems = []
    g = cert.split
    if coloring.dim != g.total:
        return ["coloring dimension differs from the certificate split"]
    if cert.ordering.split != g:
        problems.append("ordering belongs to a different ground split")
        return problems
    if len(cert.vertices) != g.k + 1:
        problems.append(f"expected {g.k + 1} vertices, got {len(cert.vertices)}")
        return problems
    for i, v in enumerate(cert.vertices):
        if v < 0 or v >> g.total:
            problems.append(f"vertex {i} outside the lattice")
            return problems
        if not coloring.is_blue(v):
            problems.append(f"vertex {i} is not blue")
        if v & g.y_mask != prefix_mask(cert.ordering, i):
            problems.append(f"vertex {i} has the wrong Y-part")
    for i in range(g.k):
        a, b = cert.vertices[i], cert.vertices[i + 1]
        if not (pair_leq(a, b) and a != b):
            problems.append(f"vertices {i} and {i + 1} do not ascend")
        if not pair_leq(a & g.x_mask, b & g.x_mask):
            problems.append(f"X-parts {i} and {i + 1} are not nested")
    return problems


def check_red_qn(cert: RedQnCert, coloring: Coloring) -> list[str]:
    if coloring.dim != cert.split.total:
        return ["coloring dimension differs from the certificate split"]
    # reject before building a lattice a hostile certificate could inflate
    if not 0 <= cert.dimension <= coloring.dim:
        return ["claimed lattice dimension does not fit inside the host"]
    target = make_boolean_poset(cert.dimension)
    return check_colored_embedding(target, coloring, "red", Embedding(cert.images))


def check_spindle(cert: SpindleCert, coloring: Coloring) -> list[str]:
    problems = []
    g = cert.split
    if coloring.dim != g.total:
        return ["coloring dimension differs from the certificate split"]
    shape = cert.shape
    if len(cert.lower) != shape.r:
        problems.append(f"expected {shape.r} lower vertices, got {len(cert.lower)}")
    if len(cert.middle) != shape.s:
        problems.append(f"expected {shape.s} middle vertices, got {len(cert.middle)}")
    if len(cert.upper) != shape.t:
        problems.append(f"expected {shape.t} upper vertices, got {len(cert.upper)}")
    if problems:
        return problems
    vertices = cert.all_vertices()
    for v in vertices:
        if v < 0 or v >> g.total:
            return [f"vertex {v} outside the lattice"]
        if not coloring.is_blue(v):
            problems.append(f"vertex {v} is not blue")
    if len(set(vertices)) != len(vertices):
        problems.append("vertices are not distinct")
    for chain in (cert.lower, cert.upper):
        for a, b in zip(chain, chain[1:]):
            if not (pair_leq(a, b) and a != b):
                problems.append(f"chain vertices {a} and {b} do not ascend")
    for a in cert.lower:
        for m in cert.middle:
            if not (pair_leq(a, m) and a != m):
                problems.append(f"lower vertex {a} is not strictly below middle {m}")
    for m in cert.middle:
        for b in cert.upper:
            if not (pair_leq(m, b) and m != b):
                problems.append(f"middle vertex {m} is not strictly below upper {b}")
    for a in cert.lower:
        for b in cert.upper:
            if not (pair_leq(a, b) and a != b):
                problems.append(f"lower vertex {a} is not strictly below upper {b}")
    for i, a in enumerate(cert.middle):
        for b in cert.middle[i + 1 :]:
            if pair_leq(a, b) or pair_leq(b, a):
                problems.append(f"middle vertices {a} and {b} are comparable")
    if problems:
        return problems
    # Restriction check: the induced poset on the vertices hosts the shape.
    masks = sorted(vertices)
    up = []
    for a in masks:
        bits = 0
        for j, b in enumerate(masks):
            if a != b and pair_leq(a, b):
                bits |= 1 << j
        up.append(bits)
    induced = Poset(len(masks), tuple(up))
    if find_poset_copy(make_spindle(shape), induced) is None:
        problems.append("induced poset does not realize the spindle shape")
    return problems


def check_contradiction(report: ContradictionReport, coloring: Coloring) -> list[str]:
    problems = []
    g = report.split
    if coloring.dim != g.total:
        return ["coloring dimension differs from the certificate split"]
    counts = {
        len(report.orderings),
        len(report.member_chains),
        len(report.labels),
    }
    if len(counts) != 1:
        return ["member field lengths disagree"]
    member_vertices = {v for chain in report.member_chains for v in chain}
    for j, (order, chain) in enumerate(zip(report.orderings, report.member_chains)):
        try:
            pi = YOrdering(g, tuple(order))
        except ValueError as exc:
            problems.append(f"member {j} ordering invalid: {exc}")
            continue
        if len(chain) != g.k + 1:
            problems.append(f"member {j} chain length is not k+1")
            continue
        for i, v in enumerate(chain):
            if v < 0 or v >> g.total:
                problems.append(f"member {j} vertex {i} outside the lattice")
                break
            if not coloring.is_blue(v):
                problems.append(f"member {j} vertex {i} is not blue")
            if v & g.y_mask != prefix_mask(pi, i):
                problems.append(f"member {j} vertex {i} has the wrong Y-part")
    owner: dict[int, int] = {}
    for ci, chain in enumerate(report.cover_chains):
        for a, b in zip(chain, chain[1:]):
            if not (pair_leq(a, b) and a != b):
                problems.append(f"cover chain {ci} does not ascend at {a}, {b}")
        for v in chain:
            if v in owner:
                problems.append(f"vertex {v} appears in two cover chains")
            owner[v] = ci
    if member_vertices - owner.keys():
        problems.append("cover chains miss some member vertices")
    if problems:
        return problems
    for ci, chain in enumerate(report.cover_chains):
        try:
            expected = chain_y_restrictions(chain, g)
        except InvariantViolation as exc:
            return [f"cover chain {ci}: {exc}"]
        if expected != report.y_restrictions[ci]:
            problems.append(f"cover chain {ci} Y-restrictions disagree")
    for j, chain in enumerate(report.member_chains):
        expected_label = tuple(owner[v] for v in chain)
        if expected_label != report.labels[j]:
            problems.append(f"member {j} label does not match the cover")
    j1, j2 = report.pair
    if not (0 <= j1 < len(report.labels) and 0 <= j2 < len(report.labels)):
        return problems + ["collision pair out of range"]
    if j1 == j2:
        problems.append("collision pair names one member twice")
    if report.labels[j1] != report.labels[j2]:
        problems.append("collision pair labelings differ")
    for i, (a, b) in enumerate(
        zip(report.member_chains[j1], report.member_chains[j2])
    ):
        if a & g.y_mask != b & g.y_mask:
            problems.append(f"collision pair Y-parts differ at level {i}")
    return problems


def check_witness(cert: WitnessCert, coloring: Coloring) -> list[str]:
    if coloring.dim != cert.dim:
        return ["coloring dimension differs from the certificate"]
    if not 0 <= cert.target_dimension <= coloring.dim:
        return ["claimed lattice dimension does not fit inside the host"]
    result = verify_witness(coloring, cert.target, cert.target_dimension)
    if result.ok:
        return []
    return [
        f"coloring contains a {result.violation_color} copy at "
        f"{list(result.violation.images)}"
    ]


def verify_certificate(cert: Certificate, coloring: Coloring) -> list[str]:
    """Problems list from the checker matching the certificate type."""
    if isinstance(cert, BlueChainCert):
        return check_blue_chain(cert, coloring)
    if isinstance(cert, RedQnCert):
        return check_red_qn(cert, coloring)
    if isinstance(cert, SpindleCert):
        return check_spindle(cert, coloring)
    if isinstance(cert, ContradictionReport):
        return check_contradiction(cert, coloring)
    if isinstance(cert, WitnessCert):
        return check_witness(cert, coloring)
    raise TypeError(f"not a certificate: {type(cert).__name__}")


# ---------------------------------------------------------------------------
# JSON round trip


def certificate_to_json_dict(cert: Certificate) -> dict:
    if isinstance(cert, BlueChainCert):
        return {
            "kind": "blue_chain",
            "ground": {"n": cert.split.n, "k": cert.split.k},
            "ordering": list(cert.ordering.order),
            "vertices": list(cert.vertices),
        }
    if isinstance(cert, RedQnCert):
        return {
            "kind": "red_qn",
            "ground": {"n": cert.split.n, "k": cert.split.k},
            "target_dimension": cert.dimension,
            "images": list(cert.images),
        }
    if isinstance(cert, SpindleCert):
        return {
            "kind": "spindle",
            "ground": {"n": cert.split.n, "k": cert.split.k},
            "shape": {"r": cert.shape.r, "s": cert.shape.s, "t": cert.shape.t},
            "lower": list(cert.lower),
            "middle": list(cert.middle),
            "upper": list(cert.upper),
        }
    if isinstance(cert, ContradictionReport):
        return {
            "kind": "contradiction",
            "ground": {"n": cert.split.n, "k": cert.split.k},
            "orderings": [list(o) for o in cert.orderings],
            "member_chains": [list(c) for c in cert.member_chains],
            "cover_chains": [list(c) for c in cert.cover_chains],
            "y_restrictions": [
                [[size, mask] for size, mask in chain]
                for chain in cert.y_restrictions
            ],
            "labels": [list(label) for label in cert.labels],
            "pair": list(cert.pair),
        }
    if isinstance(cert, WitnessCert):
        return {
            "kind": "witness",
            "dim": cert.dim,
            "target_dimension": cert.target_dimension,
            "target": poset_to_json_dict(cert.target),
        }
    raise TypeError(f"not a certificate: {type(cert).__name__}")


def _require(data: dict, key: str, kind: str) -> object:
    if key not in data:
        raise ValueError(f"{kind} certificate is missing {key!r}")
    return data[key]


def _int_list(value: object, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise ValueError(f"{what} must be a list of integers")
    return tuple(value)


def _ground(data: dict, kind: str) -> GroundSplit:
    raw = _require(data, "ground", kind)
    if not isinstance(raw, dict):
        raise ValueError("ground must be an object with n and k")
    n, k = raw.get("n"), raw.get("k")
    if not isinstance(n, int) or not isinstance(k, int):
        raise ValueError("ground must carry integer n and k")
    return GroundSplit(n, k)


def certificate_from_json_dict(data: object) -> Certificate:
    if not isinstance(data, dict):
        raise ValueError("certificate must be a JSON object")
    kind = data.get("kind")
    if kind == "blue_chain":
        g = _ground(data, kind)
        ordering = YOrdering(g, _int_list(_require(data, "ordering", kind), "ordering"))
        return BlueChainCert(
            split=g,
            ordering=ordering,
            vertices=_int_list(_require(data, "vertices", kind), "vertices"),
        )
    if kind == "red_qn":
        g = _ground(data, kind)
        dim = _require(data, "target_dimension", kind)
        if not isinstance(dim, int) or dim < 0:
            raise ValueError("target_dimension must be a nonnegative integer")
        return RedQnCert(
            split=g,
            dimension=dim,
            images=_int_list(_require(data, "images", kind), "images"),
        )
    if kind == "spindle":
        g = _ground(data, kind)
        raw_shape = _require(data, "shape", kind)
        if not isinstance(raw_shape, dict) or not all(
            isinstance(raw_shape.get(f), int) for f in ("r", "s", "t")
        ):
            raise ValueError("shape must carry integer r, s, t")
        shape = SpindleSpec(raw_shape["r"], raw_shape["s"], raw_shape["t"])
        return SpindleCert(
            split=g,
            shape=shape,
            lower=_int_list(_require(data, "lower", kind), "lower"),
            middle=_int_list(_require(data, "middle", kind), "middle"),
            upper=_int_list(_require(data, "upper", kind), "upper"),
        )
    if kind == "contradiction":
        g = _ground(data, kind)
        orderings = _require(data, "orderings", kind)
        member_chains = _require(data, "member_chains", kind)
        cover_chains = _require(data, "cover_chains", kind)
        restrictions = _require(data, "y_restrictions", kind)
        labels = _require(data, "labels", kind)
        pair = _int_list(_require(data, "pair", kind), "pair")
        for name, value in (
            ("orderings", orderings),
            ("member_chains", member_chains),
            ("cover_chains", cover_chains),
            ("labels", labels),
        ):
            if not isinstance(value, list):
                raise ValueError(f"{name} must be a list")
        if not isinstance(restrictions, list):
            raise ValueError("y_restrictions must be a list")
        if len(pair) != 2:
            raise ValueError("pair must hold exactly two member indexes")
        parsed_restrictions = []
        for chain in restrictions:
            if not isinstance(chain, list):
                raise ValueError("y_restrictions entries must be lists")
            pairs = []
            for item in chain:
                entry = _int_list(item, "y_restriction entry")
                if len(entry) != 2:
                    raise ValueError("y_restriction entries must be [size, mask]")
                pairs.append((entry[0], entry[1]))
            parsed_restrictions.append(tuple(pairs))
        return ContradictionReport(
            split=g,
            orderings=tuple(_int_list(o, "ordering") for o in orderings),
            member_chains=tuple(_int_list(c, "member chain") for c in member_chains),
            cover_chains=tuple(_int_list(c, "cover chain") for c in cover_chains),
            y_restrictions=tuple(parsed_restrictions),
            labels=tuple(_int_list(label, "label") for label in labels),
            pair=(pair[0], pair[1]),
        )
    if kind == "witness":
        dim = _require(data, "dim", kind)
        target_dim = _require(data, "target_dimension", kind)
        if not isinstance(dim, int) or dim < 0:
            raise ValueError("dim must be a nonnegative integer")
        if not isinstance(target_dim, int) or target_dim < 0:
            raise ValueError("target_dimension must be a nonnegative integer")
        return WitnessCert(
            dim=dim,
            target_dimension=target_dim,
            target=poset_from_json_dict(_require(data, "target", kind)),
        )
    raise ValueError(f"unknown certificate kind: {kind!r}")


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_json_dict(cert), indent=2) + "\n"


def certificate_from_json(text: str) -> Certificate:
    return certificate_from_json_dict(json.loads(text))
