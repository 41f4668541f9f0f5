"""Canonical forms of raw decorated diagrams.

Three rules are applied until none fires, in this priority:
- cancel: two adjacent equal symbols on an edge, or cyclically adjacent on a loop, vanish
- delete: an undecorated loop is removed for a factor delta
- absorb: a loop carrying a single symbol removes that symbol from another component

With exactly one north cup (a-value 1) cancel and absorb only act inside a strip:
no symbol of the opposite kind may sit at a height between the two symbols.
"""

import logging
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, replace
from enum import Enum

from .errors import InvalidParameter, NonPlanarInput
from .model import DecoratedDiagram, Decoration, Edge, Endpoint, Face, Loop

logger = logging.getLogger(__name__)

SYMBOLS = ("b", "w")
OPPOSITE = {"b": "w", "w": "b"}


class Rule(Enum):
    CANCEL = "cancel"
    DELETE = "delete"
    ABSORB = "absorb"


@dataclass
class _Component:
    decorations: list[Decoration]
    edge: Edge | None = None

    @property
    def is_loop(self) -> bool:
        return self.edge is None


@dataclass(frozen=True)
class _Instance:
    rule: Rule
    component: int
    positions: tuple[int, ...] = ()


def _boundary_position(point: Endpoint, k: int) -> int:
    # circular order N1..Nk, Sk..S1
    return point.index - 1 if point.face is Face.NORTH else 2 * k - point.index


def is_planar(edges: Sequence[Edge], k: int) -> bool:
    """Check that the edges pair all 2k endpoints without two of them interleaving."""
    partner: dict[int, int] = {}
    for edge in edges:
        for point in (edge.start, edge.end):
            if not 1 <= point.index <= k:
                return False
        a, b = _boundary_position(edge.start, k), _boundary_position(edge.end, k)
        if a == b or a in partner or b in partner:
            return False
        partner[a], partner[b] = b, a
    if len(partner) != 2 * k:
        return False

    open_positions: list[int] = []
    for position in range(2 * k):
        if partner[position] > position:
            open_positions.append(position)
        elif open_positions.pop() != partner[position]:
            return False
    return True


def _same_strip(components: list[_Component], a_value: int, symbol: str, h1: int, h2: int) -> bool:
    if a_value != 1:
        return True
    low, high = min(h1, h2), max(h1, h2)
    opposite = OPPOSITE[symbol]
    return not any(
        d.symbol == opposite and low <= d.height <= high
        for component in components
        for d in component.decorations
    )


def _instances(components: list[_Component], a_value: int) -> Iterator[_Instance]:
    """Yield every applicable rule instance, highest priority first."""
    for index, component in enumerate(components):
        decorations = component.decorations
        size = len(decorations)
        pairs = [(p, p + 1) for p in range(size - 1)]
        if component.is_loop and size > 2:
            pairs.append((size - 1, 0))
        for p, q in pairs:
            first, second = decorations[p], decorations[q]
            if first.symbol == second.symbol and _same_strip(
                components, a_value, first.symbol, first.height, second.height
            ):
                yield _Instance(Rule.CANCEL, index, (p, q))

    for index, component in enumerate(components):
        if component.is_loop and not component.decorations:
            yield _Instance(Rule.DELETE, index)

    for absorber_index, absorber in enumerate(components):
        if not absorber.is_loop or len(absorber.decorations) != 1:
            continue
        (marker,) = absorber.decorations
        for index, component in enumerate(components):
            if index == absorber_index:
                continue
            for position, decoration in enumerate(component.decorations):
                if decoration.symbol == marker.symbol and _same_strip(
                    components, a_value, marker.symbol, marker.height, decoration.height
                ):
                    yield _Instance(Rule.ABSORB, index, (position,))


def _apply(components: list[_Component], instance: _Instance) -> int:
    """Apply one rule instance in place; return the delta exponent it extracts."""
    if instance.rule is Rule.DELETE:
        del components[instance.component]
        return 1
    decorations = components[instance.component].decorations
    for position in sorted(instance.positions, reverse=True):
        del decorations[position]
    return 0


def canonical_loop(decorations: Sequence[Decoration]) -> Loop:
    """Pick the least rotation or reflection of a loop word as its reading."""
    if not decorations:
        return Loop(())
    candidates = []
    for sequence in (list(decorations), list(decorations)[::-1]):
        for r in range(len(sequence)):
            rotated = tuple(sequence[r:] + sequence[:r])
            candidates.append(("".join(d.symbol for d in rotated), rotated))
    return Loop(min(candidates, key=lambda c: c[0])[1])


def canonicalize(raw: DecoratedDiagram, rng: random.Random | None = None) -> DecoratedDiagram:
    """Rewrite a raw diagram to its canonical form.

    Args:
        raw: Diagram with arbitrary decoration words and raw loops.
        rng: If given, each step applies a rule instance picked at random among
            all applicable ones instead of the first one in priority order.

    Returns:
        The canonical diagram; heights are carried over for later products.
    """
    if not is_planar(raw.edges, raw.k):
        raise NonPlanarInput(f"edges of a diagram on {raw.k} nodes do not form a planar pairing")

    components = [_Component(list(edge.decorations), edge) for edge in raw.edges]
    components += [_Component(list(loop.decorations)) for loop in raw.loops]
    for component in components:
        for decoration in component.decorations:
            if decoration.symbol not in SYMBOLS:
                raise InvalidParameter(f"unknown decoration {decoration.symbol!r}")

    a_value = raw.a_value
    delta_exp = raw.delta_exp
    steps = 0
    while True:
        if rng is None:
            instance = next(_instances(components, a_value), None)
        else:
            found = list(_instances(components, a_value))
            instance = rng.choice(found) if found else None
        if instance is None:
            break
        delta_exp += _apply(components, instance)
        steps += 1
    logger.debug("canonicalized a diagram on %d nodes in %d rewrite(s)", raw.k, steps)

    edges = sorted(
        (replace(c.edge, decorations=tuple(c.decorations)) for c in components if c.edge),
        key=lambda e: (e.start.sort_key(), e.end.sort_key()),
    )
    loops = sorted(
        (canonical_loop(c.decorations) for c in components if c.is_loop), key=lambda x: x.word
    )
    return DecoratedDiagram(raw.k, tuple(edges), tuple(loops), delta_exp, raw.depth)
