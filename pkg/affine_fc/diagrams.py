"""Decorated Temperley-Lieb diagrams of type D~ and the diagram side of the a-function."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import replace

from .errors import InvalidGenerator, RankMismatch, WrongFamily
from .model import (
    DecoratedDiagram,
    Decoration,
    Edge,
    Endpoint,
    Face,
    Family,
    FcElement,
    Loop,
)
from .rewriting import canonicalize

logger = logging.getLogger(__name__)

North = Face.NORTH
South = Face.SOUTH


def identity_diagram(k: int) -> DecoratedDiagram:
    edges = tuple(Edge(Endpoint(North, j), Endpoint(South, j)) for j in range(1, k + 1))
    return DecoratedDiagram(k, edges)


def simple_diagram(i: int, n: int) -> DecoratedDiagram:
    """Build D_i on k = n+2 nodes.

    D_0 and D_1 pair nodes 1,2 (D_0 decorated with "b"), D_(n+1) and D_(n+2)
    pair nodes n+1,n+2 (D_(n+2) decorated with "w"), D_i pairs i,i+1 otherwise.
    """
    k = n + 2
    if not 0 <= i <= n + 2:
        raise InvalidGenerator(f"simple diagram index {i} is not in 0..{n + 2}")
    if i == 0:
        left, decorations = 1, (Decoration("b"),)
    elif i == n + 2:
        left, decorations = n + 1, (Decoration("w"),)
    else:
        left, decorations = i, ()

    edges = [
        Edge(Endpoint(North, left), Endpoint(North, left + 1), decorations),
        Edge(Endpoint(South, left), Endpoint(South, left + 1), decorations),
    ]
    edges += [
        Edge(Endpoint(North, j), Endpoint(South, j))
        for j in range(1, k + 1)
        if j not in (left, left + 1)
    ]
    edges.sort(key=lambda e: (e.start.sort_key(), e.end.sort_key()))
    return DecoratedDiagram(k, tuple(edges), depth=1)


def _ends(diagram: DecoratedDiagram, offset: int = 0) -> dict[Endpoint, tuple[Endpoint, tuple]]:
    """Map each endpoint to its partner and the decorations read walking towards it."""
    ends = {}
    for edge in diagram.edges:
        decorations = _shifted(edge.decorations, offset)
        ends[edge.start] = (edge.end, decorations)
        ends[edge.end] = (edge.start, decorations[::-1])
    return ends


def _shifted(decorations: Sequence[Decoration], offset: int) -> tuple[Decoration, ...]:
    if not offset:
        return tuple(decorations)
    return tuple(replace(d, height=d.height + offset) for d in decorations)


def _oriented(start: Endpoint, end: Endpoint, decorations: tuple[Decoration, ...]) -> Edge:
    if start.face is not end.face:
        flip = start.face is South
    else:
        flip = start.index > end.index
    if flip:
        return Edge(end, start, decorations[::-1])
    return Edge(start, end, decorations)


def stack(
    top: DecoratedDiagram, bottom: DecoratedDiagram, offset: int | None = None
) -> DecoratedDiagram:
    """Put top above bottom and follow every path through the middle row, without rewriting.

    Heights of the bottom decorations are raised by `offset`, which defaults
    to the depth of top.
    """
    if top.k != bottom.k:
        raise RankMismatch(f"cannot compose diagrams on {top.k} and {bottom.k} nodes")
    k = top.k
    offset = top.depth if offset is None else offset
    upper = _ends(top)
    lower = _ends(bottom, offset)
    crossed: set[int] = set()

    def walk(in_upper: bool, point: Endpoint, stop: int | None = None):
        decorations: list[Decoration] = []
        while True:
            other, pieces = (upper if in_upper else lower)[point]
            decorations.extend(pieces)
            if other.face is (North if in_upper else South):
                return other, decorations
            crossed.add(other.index)
            if other.index == stop:
                return None, decorations
            in_upper = not in_upper
            point = Endpoint(South if in_upper else North, other.index)

    edges = []
    done: set[Endpoint] = set()
    for face in (North, South):
        for j in range(1, k + 1):
            start = Endpoint(face, j)
            if start in done:
                continue
            end, decorations = walk(face is North, start)
            done.update((start, end))
            edges.append(_oriented(start, end, tuple(decorations)))

    loops = list(top.loops)
    loops += [Loop(_shifted(loop.decorations, offset)) for loop in bottom.loops]
    for j in range(1, k + 1):
        if j not in crossed:
            crossed.add(j)
            _, decorations = walk(True, Endpoint(South, j), stop=j)
            loops.append(Loop(tuple(decorations)))

    edges.sort(key=lambda e: (e.start.sort_key(), e.end.sort_key()))
    return DecoratedDiagram(
        k,
        tuple(edges),
        tuple(loops),
        top.delta_exp + bottom.delta_exp,
        max(top.depth, offset + bottom.depth),
    )


def compose(top: DecoratedDiagram, bottom: DecoratedDiagram) -> DecoratedDiagram:
    """Product top * bottom in canonical form; the north face is the north face of top."""
    return canonicalize(stack(top, bottom))


def raw_product(letters: Iterable[int], n: int) -> DecoratedDiagram:
    """Stack the simple diagrams of a word, one height per letter, without rewriting."""
    product = identity_diagram(n + 2)
    for s in letters:
        product = stack(product, simple_diagram(s, n))
    return product


def diagram_of(fc: FcElement) -> DecoratedDiagram:
    """Compute D_w for an FC element of D~, one composition layer per normal form layer."""
    if fc.graph.family is not Family.AFFINE_D:
        raise WrongFamily(f"diagrams are defined on D~ only, got {fc.graph.label}")
    n = fc.graph.n
    result = identity_diagram(n + 2)
    for layer in fc.layers:
        piece = identity_diagram(n + 2)
        for s in layer:
            piece = stack(piece, simple_diagram(s, n), offset=0)
        result = compose(result, canonicalize(piece))
    logger.debug("%s: a=%d, %d loop(s)", fc.layers, result.a_value, len(result.loops))
    return result


def a_value(diagram: DecoratedDiagram) -> int:
    """Number of edges joining two north nodes."""
    return diagram.a_value


def loop_census(diagram: DecoratedDiagram) -> dict[str, int]:
    census = {"b": 0, "w": 0, "bw": 0}
    for loop in diagram.loops:
        if loop.word in census:
            census[loop.word] += 1
    return census


def a_tilde(diagram: DecoratedDiagram) -> int:
    """Diagram side of the width of a heap.

    a + #L(b) + #L(w) when a > 1; when a = 1, 1 plus one if any single-symbol loop exists.
    """
    a = diagram.a_value
    census = loop_census(diagram)
    if a > 1:
        return a + census["b"] + census["w"]
    if a == 1:
        return 1 + (0 if census["b"] == census["w"] == 0 else 1)
    return 0


def has_left_descent_diagrammatic(diagram: DecoratedDiagram, i: int) -> bool:
    """Check D_i * D == delta * D."""
    product = compose(simple_diagram(i, diagram.k - 2), diagram)
    return product == replace(diagram, delta_exp=diagram.delta_exp + 1)
