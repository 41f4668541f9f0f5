"""Shared data models: Coxeter graphs, words, FC elements, heaps and diagrams."""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

INFINITY = math.inf


class Family(Enum):
    AFFINE_D = "D"
    AFFINE_B = "B"
    GENERIC = "G"


@dataclass(frozen=True)
class CoxeterGraph:
    """A Coxeter graph given by its bond matrix.

    For the affine families `n` is the parameter of the type, so AFFINE_D
    with parameter n has generators 0..n+2 and AFFINE_B has 0..n+1. Generic
    graphs carry n = rank.
    """

    family: Family
    n: int
    bond: tuple[tuple[int | float, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.bond)

    @property
    def generators(self) -> range:
        return range(self.rank)

    def m(self, s: int, t: int) -> int | float:
        """Get the bond m(s, t)."""
        return self.bond[s][t]

    def commute(self, s: int, t: int) -> bool:
        """Check whether two distinct generators commute."""
        return s != t and self.bond[s][t] == 2

    def neighbors(self, s: int) -> frozenset[int]:
        """Get the generators joined to s by a bond of 3 or more."""
        return frozenset(t for t in self.generators if t != s and self.bond[s][t] >= 3)

    @property
    def label(self) -> str:
        if self.family is Family.AFFINE_D:
            return f"D~{self.n + 2}"
        if self.family is Family.AFFINE_B:
            return f"B~{self.n + 1}"
        return f"G{self.rank}"


@dataclass(frozen=True)
class Word:
    """A finite sequence of generator indices of a graph."""

    graph: CoxeterGraph
    letters: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class FcElement:
    """An FC element stored as its Cartier-Foata layers.

    Each layer is a sorted tuple of pairwise commuting generators and every
    generator of a layer is blocked by a generator of the previous one.
    """

    graph: CoxeterGraph
    layers: tuple[tuple[int, ...], ...]

    @cached_property
    def word(self) -> tuple[int, ...]:
        """The reduced expression read layer by layer."""
        return tuple(s for layer in self.layers for s in layer)

    @property
    def length(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def is_identity(self) -> bool:
        return not self.layers


@dataclass(frozen=True)
class Heap:
    """Labeled poset on the letter occurrences of an FC element.

    Occurrences are numbered in the order of the layer-by-layer reading;
    `covers` holds the Hasse diagram of the order.
    """

    labels: tuple[int, ...]
    covers: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.labels)


class Face(Enum):
    NORTH = "N"
    SOUTH = "S"


@dataclass(frozen=True)
class Endpoint:
    face: Face
    index: int

    def sort_key(self) -> tuple[int, int]:
        return (0 if self.face is Face.NORTH else 1, self.index)

    @property
    def label(self) -> str:
        return f"{self.face.value}{self.index}"


@dataclass(frozen=True)
class Decoration:
    """A decoration symbol, "b" or "w".

    `height` is the composition layer that produced it. It only matters to
    the strip test of the rewriting rules and is ignored by equality.
    """

    symbol: str
    height: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Edge:
    """An edge between two endpoints with its decorations in reading order.

    Propagating edges read north to south, the others from the lower index.
    """

    start: Endpoint
    end: Endpoint
    decorations: tuple[Decoration, ...] = ()

    @property
    def propagating(self) -> bool:
        return self.start.face is not self.end.face

    @property
    def word(self) -> str:
        return "".join(d.symbol for d in self.decorations)


@dataclass(frozen=True)
class Loop:
    decorations: tuple[Decoration, ...] = ()

    @property
    def word(self) -> str:
        return "".join(d.symbol for d in self.decorations)


@dataclass(frozen=True, eq=False)
class DecoratedDiagram:
    """A monomial delta^delta_exp * D of the decorated Temperley-Lieb algebra.

    `depth` counts the composition layers stacked so far and, like decoration
    heights, does not take part in equality. When a_value is 1 the diagram
    also compares by `strips`, the north-to-south order of its decorations.
    """

    k: int
    edges: tuple[Edge, ...]
    loops: tuple[Loop, ...] = ()
    delta_exp: int = 0
    depth: int = 0

    @property
    def a_value(self) -> int:
        return sum(
            1 for e in self.edges if e.start.face is Face.NORTH and e.end.face is Face.NORTH
        )

    @cached_property
    def strips(self) -> tuple[tuple[str, ...], ...]:
        """Decorations grouped into maximal same-symbol runs, north to south.

        Each run holds the sorted labels of its decorations: "N1-N2:b" for an
        edge, "L(bw):b" for a loop. Empty unless a_value is 1.
        """
        if self.a_value != 1:
            return ()
        items: list[tuple[int, str, str]] = []
        for edge in self.edges:
            owner = f"{edge.start.label}-{edge.end.label}"
            items += [(d.height, d.symbol, f"{owner}:{d.symbol}") for d in edge.decorations]
        for loop in self.loops:
            owner = f"L({loop.word})"
            items += [(d.height, d.symbol, f"{owner}:{d.symbol}") for d in loop.decorations]
        items.sort(key=lambda item: item[0])
        runs: list[list[str]] = []
        current = None
        for _, symbol, label in items:
            if symbol != current:
                runs.append([])
                current = symbol
            runs[-1].append(label)
        return tuple(tuple(sorted(run)) for run in runs)

    def _key(self) -> tuple:
        return (self.k, self.edges, self.loops, self.delta_exp, self.strips)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecoratedDiagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())
