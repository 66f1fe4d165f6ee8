"""Fixed-universe vertex sets stored as integer bitmasks.

A VertexSet is an immutable subset of {0, ..., universe - 1}.  All set
algebra stays inside one universe; mixing universes is an error.  The
`bits` field is a plain int, so hot loops can work on raw masks and wrap
results back into VertexSet at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Practical cap, far beyond what the exhaustive pipelines can touch.
MAX_UNIVERSE = 512


@dataclass(frozen=True, slots=True)
class VertexSet:
    universe: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.universe <= MAX_UNIVERSE:
            raise ValueError(f"universe size {self.universe} out of range 0..{MAX_UNIVERSE}")
        if not 0 <= self.bits < (1 << self.universe):
            raise ValueError("bits outside the universe")

    @classmethod
    def empty(cls, universe: int) -> VertexSet:
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: int) -> VertexSet:
        return cls(universe, (1 << universe) - 1)

    @classmethod
    def of(cls, universe: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < universe:
                raise ValueError(f"vertex {v} outside universe 0..{universe - 1}")
            bits |= 1 << v
        return cls(universe, bits)

    def _same_universe(self, other: VertexSet) -> None:
        if self.universe != other.universe:
            raise ValueError("universe mismatch")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def union(self, other: VertexSet) -> VertexSet:
        self._same_universe(other)
        return VertexSet(self.universe, self.bits | other.bits)

    def intersection(self, other: VertexSet) -> VertexSet:
        self._same_universe(other)
        return VertexSet(self.universe, self.bits & other.bits)

    def difference(self, other: VertexSet) -> VertexSet:
        self._same_universe(other)
        return VertexSet(self.universe, self.bits & ~other.bits)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def complement(self) -> VertexSet:
        return VertexSet(self.universe, self.bits ^ (1 << self.universe) - 1)

    def isdisjoint(self, other: VertexSet) -> bool:
        self._same_universe(other)
        return self.bits & other.bits == 0

    def issubset(self, other: VertexSet) -> bool:
        self._same_universe(other)
        return self.bits & ~other.bits == 0

    def with_vertex(self, v: int) -> VertexSet:
        if not 0 <= v < self.universe:
            raise ValueError(f"vertex {v} outside universe 0..{self.universe - 1}")
        return VertexSet(self.universe, self.bits | 1 << v)

    def without_vertex(self, v: int) -> VertexSet:
        if not 0 <= v < self.universe:
            raise ValueError(f"vertex {v} outside universe 0..{self.universe - 1}")
        return VertexSet(self.universe, self.bits & ~(1 << v))

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.universe}, {{{', '.join(map(str, self))}}})"
