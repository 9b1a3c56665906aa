"""Boolean lattices over a split ground set, and their two-colorings.

A vertex of the lattice over X u Y is a subset of the ground set, stored as
an integer bitmask: X occupies bit positions 0..n-1, Y occupies n..n+k-1.
The order is set inclusion.  A coloring assigns blue (bit 1) or red (bit 0)
to every vertex; colorings are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Sequence

#: Full-coloring materialization cap: 2^24 vertices is a 2 MB bit array.
MAX_COLORING_DIMENSION = 24

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GroundSplit:
    """Ground set sizes: n bits of X (positions 0..n-1), k bits of Y (n..n+k-1)."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 0:
            raise ValueError("part sizes must be nonnegative")
        if self.n + self.k > 64:
            raise ValueError("ground set does not fit the 64-bit mask width")

    @property
    def total(self) -> int:
        return self.n + self.k

    @property
    def x_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def y_mask(self) -> int:
        return ((1 << self.k) - 1) << self.n

    def y_positions(self) -> range:
        return range(self.n, self.n + self.k)


def split_parts(vertex: int, split: GroundSplit) -> tuple[int, int]:
    """Decompose a vertex mask into its (X part, Y part)."""
    if vertex < 0 or vertex >> split.total:
        raise ValueError("vertex mask outside the ground set")
    return vertex & split.x_mask, vertex & split.y_mask


def pair_leq(a: int, b: int) -> bool:
    """Lattice order: a <= b exactly when a's bits are a subset of b's."""
    return (a & b) == a


@dataclass(frozen=True)
class YOrdering:
    """A linear ordering (y_1, ..., y_k) of the Y bit positions."""

    split: GroundSplit
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(self.split.y_positions()):
            raise ValueError("order must be a permutation of the Y bit positions")

    @property
    def k(self) -> int:
        return self.split.k


def prefix_mask(pi: YOrdering, i: int) -> int:
    """Mask of {y_1, ..., y_i}; i = 0 gives the empty set."""
    if not 0 <= i <= pi.k:
        raise ValueError(f"prefix length {i} outside 0..{pi.k}")
    mask = 0
    for b in pi.order[:i]:
        mask |= 1 << b
    return mask


def all_orderings(split: GroundSplit) -> Iterator[YOrdering]:
    """All k! orderings of Y, lexicographically by position tuple."""
    for perm in permutations(split.y_positions()):
        yield YOrdering(split, perm)


class Coloring:
    """Blue/red coloring of all 2^dim vertices; bit v set = vertex v is blue."""

    __slots__ = ("dim", "bits")

    def __init__(self, dim: int, bits: int, *, max_dimension: int = MAX_COLORING_DIMENSION):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        if dim > max_dimension:
            raise ValueError(f"dimension {dim} exceeds the materialization cap {max_dimension}")
        if bits < 0 or bits >> (1 << dim):
            raise ValueError("color bits outside the vertex range")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("colorings are immutable")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Coloring)
            and self.dim == other.dim
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.bits))

    def __repr__(self) -> str:
        return f"Coloring(dim={self.dim}, blue={self.blue_count()})"

    @property
    def vertex_count(self) -> int:
        return 1 << self.dim

    def is_blue(self, vertex: int) -> bool:
        if vertex < 0 or vertex >> self.dim:
            raise ValueError("vertex outside the lattice")
        return bool((self.bits >> vertex) & 1)

    def blue_count(self) -> int:
        return self.bits.bit_count()

    def blue_vertices(self) -> list[int]:
        return [v for v in range(self.vertex_count) if (self.bits >> v) & 1]

    def red_vertices(self) -> list[int]:
        return [v for v in range(self.vertex_count) if not (self.bits >> v) & 1]


def coloring_from_blue_set(dim: int, blue: Sequence[int]) -> Coloring:
    bits = 0
    for v in blue:
        if v < 0 or v >> dim:
            raise ValueError(f"vertex {v} outside the lattice")
        bits |= 1 << v
    return Coloring(dim, bits)


def layered_coloring(split: GroundSplit, blue_sizes: Sequence[int]) -> Coloring:
    """Blue exactly the vertices whose popcount is in ``blue_sizes``."""
    total = split.total
    size_set = set(blue_sizes)
    if not size_set <= set(range(total + 1)):
        raise ValueError(f"layer indices must lie in 0..{total}")
    bits = 0
    for v in range(1 << total):
        if v.bit_count() in size_set:
            bits |= 1 << v
    return Coloring(total, bits)


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 stream: returns (output, next state).

    The generator is fixed so that seeds reproduce across implementations:
    state advances by 0x9E3779B97F4A7C15; the output mixes the new state by
    xor-shift 30 / multiply 0xBF58476D1CE4E5B9, xor-shift 27 / multiply
    0x94D049BB133111EB, xor-shift 31.  All arithmetic is modulo 2^64.
    """
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31), state


def random_coloring(
    split: GroundSplit, seed: int, blue_probability: Fraction | float = Fraction(1, 2)
) -> Coloring:
    """Seeded random coloring; vertex masks are drawn in ascending order.

    Vertex v is blue when the v-th splitmix64 output is below
    floor(blue_probability * 2^64), so equal seeds give identical colorings
    everywhere.
    """
    p = Fraction(blue_probability)
    if p < 0 or p > 1:
        raise ValueError("blue probability must lie in [0, 1]")
    threshold = (p.numerator << 64) // p.denominator
    state = seed & _MASK64
    bits = 0
    for v in range(1 << split.total):
        out, state = _splitmix64(state)
        if out < threshold:
            bits |= 1 << v
    return Coloring(split.total, bits)


_HEADER_PREFIX = "poset-ramsey-coloring v1 N="


def coloring_to_text(coloring: Coloring) -> str:
    """File form: header line, then the color bits hex-encoded.

    Vertex 0 comes first, little-endian within bytes: vertex v sits at bit
    v % 8 of byte v // 8.
    """
    nbytes = ((1 << coloring.dim) + 7) // 8
    payload = coloring.bits.to_bytes(nbytes, "little").hex()
    return f"{_HEADER_PREFIX}{coloring.dim}\n{payload}\n"


def coloring_from_text(text: str) -> Coloring:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_HEADER_PREFIX):
        raise ValueError(f"missing coloring header '{_HEADER_PREFIX}<dim>' on line 1")
    try:
        dim = int(lines[0][len(_HEADER_PREFIX):])
    except ValueError:
        raise ValueError("coloring header dimension is not an integer") from None
    if dim < 0 or dim > MAX_COLORING_DIMENSION:
        raise ValueError(f"coloring dimension {dim} outside 0..{MAX_COLORING_DIMENSION}")
    payload = "".join(lines[1:]).strip()
    nbytes = ((1 << dim) + 7) // 8
    try:
        raw = bytes.fromhex(payload)
    except ValueError:
        raise ValueError("coloring payload is not valid hex") from None
    if len(raw) != nbytes:
        raise ValueError(
            f"coloring payload holds {len(raw)} bytes, dimension {dim} needs {nbytes}"
        )
    bits = int.from_bytes(raw, "little")
    if bits >> (1 << dim):
        raise ValueError("coloring payload sets bits beyond the vertex range")
    return Coloring(dim, bits)


def write_coloring(path: str, coloring: Coloring) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(coloring_to_text(coloring))


def read_coloring(path: str) -> Coloring:
    with open(path, "r", encoding="ascii") as fh:
        return coloring_from_text(fh.read())
