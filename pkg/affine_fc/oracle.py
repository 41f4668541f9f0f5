"""Enumeration of FC elements and brute-force oracles for the property checks."""

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache

import networkx as nx

from . import config
from .coxeter import cfnf, identity, is_fully_commutative, make_word
from .errors import BudgetExceeded, ExpressionGuardExceeded, InvalidParameter
from .model import CoxeterGraph, FcElement, Heap, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationConfig:
    graph: CoxeterGraph
    max_length: int
    budget: int | None = None

    def __post_init__(self):
        if self.max_length < 0:
            raise InvalidParameter(f"max_length must be non-negative, got {self.max_length}")


def enumerate_fc(cfg: EnumerationConfig) -> Iterator[FcElement]:
    """Yield every FC element of length at most cfg.max_length once, shortest first.

    Each length is obtained by extending the previous one on the right by every
    generator, keeping FC words and deduplicating by normal form.
    """
    graph = cfg.graph
    budget = config.element_budget() if cfg.budget is None else cfg.budget
    frontier = [identity(graph)]
    total = 1
    yield frontier[0]
    for length in range(1, cfg.max_length + 1):
        found: dict[FcElement, None] = {}
        for fc in frontier:
            for s in graph.generators:
                word = make_word(graph, (*fc.word, s))
                if is_fully_commutative(word):
                    found.setdefault(cfnf(word))
        frontier = sorted(found, key=lambda x: x.layers)
        total += len(frontier)
        if total > budget:
            raise BudgetExceeded(f"more than {budget} elements up to length {length}")
        logger.debug("%s: %d element(s) of length %d", graph.label, len(frontier), length)
        if not frontier:
            break
        yield from frontier
    logger.info("%s: enumerated %d element(s) up to length %d", graph.label, total, cfg.max_length)


def fc_elements(graph: CoxeterGraph, max_length: int) -> list[FcElement]:
    return list(enumerate_fc(EnumerationConfig(graph, max_length)))


def commutation_class(graph: CoxeterGraph, letters: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All words reachable from letters by swapping adjacent commuting generators."""
    seen = {letters}
    stack = [letters]
    while stack:
        current = stack.pop()
        for i in range(len(current) - 1):
            if graph.commute(current[i], current[i + 1]):
                swapped = current[:i] + (current[i + 1], current[i]) + current[i + 2 :]
                if swapped not in seen:
                    seen.add(swapped)
                    stack.append(swapped)
    return seen


def all_reduced_expressions(fc: FcElement, guard: int | None = None) -> set[Word]:
    """Every reduced expression of fc, as the commutation class of its normal form word."""
    guard = config.expression_guard() if guard is None else guard
    if fc.length > guard:
        raise ExpressionGuardExceeded(
            f"length {fc.length} is above the expression guard {guard}"
        )
    return {Word(fc.graph, letters) for letters in commutation_class(fc.graph, fc.word)}


def _predecessors(heap: Heap) -> list[int]:
    masks = [0] * heap.size
    for low, high in heap.covers:
        masks[high] |= 1 << low
    return masks


def linear_extensions(heap: Heap) -> Iterator[tuple[int, ...]]:
    """Yield the label sequences of all linear extensions of a heap."""
    masks = _predecessors(heap)
    full = (1 << heap.size) - 1

    def extend(used: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if used == full:
            yield tuple(prefix)
            return
        for v in range(heap.size):
            if not used >> v & 1 and masks[v] & used == masks[v]:
                prefix.append(heap.labels[v])
                yield from extend(used | 1 << v, prefix)
                prefix.pop()

    yield from extend(0, [])


def linear_extension_count(heap: Heap) -> int:
    """Count linear extensions by dynamic programming over order ideals."""
    masks = _predecessors(heap)
    full = (1 << heap.size) - 1

    @cache
    def count(used: int) -> int:
        if used == full:
            return 1
        return sum(
            count(used | 1 << v)
            for v in range(heap.size)
            if not used >> v & 1 and masks[v] & used == masks[v]
        )

    return count(0)


def max_antichain_brute(heap: Heap) -> int:
    """Largest set of pairwise incomparable occurrences, by trying every subset."""
    order = nx.DiGraph()
    order.add_nodes_from(range(heap.size))
    order.add_edges_from(heap.covers)
    closure = nx.transitive_closure_dag(order)
    for size in range(heap.size, 0, -1):
        for subset in itertools.combinations(range(heap.size), size):
            if not any(
                closure.has_edge(a, b) or closure.has_edge(b, a)
                for a, b in itertools.combinations(subset, 2)
            ):
                return size
    return 0


def _pair_factors(letters: tuple[int, ...], pair: tuple[int, int]) -> int:
    count = 0
    i = 0
    while i < len(letters) - 1:
        if {letters[i], letters[i + 1]} == set(pair):
            count += 1
            i += 2
        else:
            i += 1
    return count


def fork_factors_brute(fc: FcElement, pair: tuple[int, int]) -> int:
    """Maximal number of disjoint adjacent `pair` factors over all reduced expressions."""
    return max(_pair_factors(word.letters, pair) for word in all_reduced_expressions(fc))


def word_level_counts(graph: CoxeterGraph, max_length: int) -> dict[int, int]:
    """Number of FC elements per length, counted as commutation classes of FC words.

    Independent of the normal form code: words are extended letter by letter and
    each class is represented by its lexicographically least word.
    """
    counts = {0: 1}
    words = {()}
    for length in range(1, max_length + 1):
        extended = set()
        for letters in words:
            for s in graph.generators:
                candidate = (*letters, s)
                if is_fully_commutative(make_word(graph, candidate)):
                    extended.add(candidate)
        words = extended
        counts[length] = len({min(commutation_class(graph, w)) for w in words})
    return counts
