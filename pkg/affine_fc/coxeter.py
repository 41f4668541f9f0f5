"""Coxeter graphs, the FC test, Cartier-Foata normal forms, heaps and statistics."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from .errors import (
    IllegalMove,
    InvalidGenerator,
    InvalidParameter,
    NotFullyCommutative,
    NotReduced,
    WrongFamily,
)
from .model import INFINITY, CoxeterGraph, FcElement, Family, Heap, Word
from .utils import format_letters


def build_graph(family: Family, n: int) -> CoxeterGraph:
    """Build the Coxeter graph of type D~(n+2) or B~(n+1).

    Args:
        family: AFFINE_D or AFFINE_B.
        n: Parameter of the type, at least 2.

    Returns:
        The graph with its full bond matrix.
    """
    if family is Family.GENERIC:
        raise WrongFamily("generic graphs are built with generic_graph()")
    if n < 2:
        raise InvalidParameter(f"n must be at least 2, got {n}")

    rank = n + 3 if family is Family.AFFINE_D else n + 2
    bond = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]

    def join(i: int, j: int, m: int = 3) -> None:
        bond[i][j] = bond[j][i] = m

    join(0, 2)
    join(1, 2)
    for i in range(2, n):
        join(i, i + 1)
    if family is Family.AFFINE_D:
        join(n, n + 1)
        join(n, n + 2)
    else:
        join(n, n + 1, 4)
    return CoxeterGraph(family, n, tuple(tuple(row) for row in bond))


def generic_graph(bond: Sequence[Sequence[int | float]]) -> CoxeterGraph:
    """Wrap an arbitrary symmetric bond matrix; use INFINITY for unbounded bonds."""
    rank = len(bond)
    for i in range(rank):
        if len(bond[i]) != rank:
            raise InvalidParameter("bond matrix must be square")
        for j in range(rank):
            m = bond[i][j]
            if m != bond[j][i]:
                raise InvalidParameter(f"bond matrix is not symmetric at ({i}, {j})")
            if (m == 1) != (i == j) or (m != INFINITY and m < 1):
                raise InvalidParameter(f"invalid bond m({i},{j}) = {m}")
    return CoxeterGraph(Family.GENERIC, rank, tuple(tuple(row) for row in bond))


def make_word(graph: CoxeterGraph, letters: Iterable[int]) -> Word:
    """Validate letters against the graph and wrap them in a Word."""
    letters = tuple(letters)
    for s in letters:
        if not 0 <= s < graph.rank:
            raise InvalidGenerator(f"generator {s} is not in 0..{graph.rank - 1} for {graph.label}")
    return Word(graph, letters)


class Verdict(Enum):
    OK = "ok"
    BRAID = "braid"
    NOT_REDUCED = "not-reduced"


@dataclass(frozen=True)
class FcVerdict:
    """Outcome of the FC test; truthy iff the word is a reduced FC expression."""

    reason: Verdict
    detail: str = ""

    @property
    def fully_commutative(self) -> bool:
        return self.reason is Verdict.OK

    def __bool__(self) -> bool:
        return self.fully_commutative


def _order_masks(graph: CoxeterGraph, letters: Sequence[int]) -> tuple[list[int], list[int]]:
    """Bitmasks of the occurrences below and above each occurrence in the heap of a word."""
    r = len(letters)
    below = [0] * r
    for k, s in enumerate(letters):
        mask = 1 << k
        for j in range(k):
            if not graph.commute(letters[j], s):
                mask |= below[j]
        below[k] = mask
    above = [0] * r
    for k in range(r - 1, -1, -1):
        mask = 1 << k
        for j in range(k + 1, r):
            if not graph.commute(letters[k], letters[j]):
                mask |= above[j]
        above[k] = mask
    return below, above


def is_fully_commutative(word: Word) -> FcVerdict:
    """Stembridge's test on the heap of a word.

    The word is a reduced expression of an FC element iff its heap has no
    convex chain of two equal labels and no convex alternating chain of
    length m(s, t) for a finite bond m(s, t) >= 3.
    """
    graph, letters = word.graph, word.letters
    below, above = _order_masks(graph, letters)

    last_seen: dict[int, int] = {}
    for k, s in enumerate(letters):
        j = last_seen.get(s)
        if j is not None and above[j] & below[k] == (1 << j) | (1 << k):
            return FcVerdict(Verdict.NOT_REDUCED, f"letters {j} and {k} ({s}) cancel")
        last_seen[s] = k

    present = sorted(set(letters))
    for a, s in enumerate(present):
        for t in present[a + 1 :]:
            m = graph.m(s, t)
            if m < 3 or m == INFINITY:
                continue
            chain = [k for k, x in enumerate(letters) if x in (s, t)]
            for start in range(len(chain) - m + 1):
                window = chain[start : start + m]
                if any(letters[window[i]] == letters[window[i + 1]] for i in range(m - 1)):
                    continue
                mask = 0
                for k in window:
                    mask |= 1 << k
                if above[window[0]] & below[window[-1]] == mask:
                    return FcVerdict(Verdict.BRAID, f"braid factor [{s} {t}]_{m} at {window}")
    return FcVerdict(Verdict.OK)


def cfnf(word: Word) -> FcElement:
    """Compute the Cartier-Foata normal form of a reduced FC expression."""
    verdict = is_fully_commutative(word)
    if verdict.reason is Verdict.NOT_REDUCED:
        raise NotReduced(f"word {format_letters(word.letters)} is not reduced: {verdict.detail}")
    if verdict.reason is Verdict.BRAID:
        raise NotFullyCommutative(
            f"word {format_letters(word.letters)} is not fully commutative: {verdict.detail}"
        )
    return _layers_of(word.graph, word.letters)


def _layers_of(graph: CoxeterGraph, letters: Sequence[int]) -> FcElement:
    """Stack letters into layers; each piece lands just above the highest piece it touches."""
    levels: list[int] = []
    for k, s in enumerate(letters):
        level = 0
        for j in range(k):
            if not graph.commute(letters[j], s):
                level = max(level, levels[j] + 1)
        levels.append(level)
    layers: list[list[int]] = [[] for _ in range(max(levels, default=-1) + 1)]
    for s, level in zip(letters, levels):
        layers[level].append(s)
    return FcElement(graph, tuple(tuple(sorted(layer)) for layer in layers))


def identity(graph: CoxeterGraph) -> FcElement:
    return FcElement(graph, ())


def element(graph: CoxeterGraph, letters: Iterable[int]) -> FcElement:
    """Shortcut: validate letters and return their normal form."""
    return cfnf(make_word(graph, letters))


def heap_of(fc: FcElement) -> Heap:
    """Build the heap of an FC element, keeping only its covering relations."""
    letters = fc.word
    order = nx.DiGraph()
    order.add_nodes_from(range(len(letters)))
    for k, s in enumerate(letters):
        for j in range(k):
            if not fc.graph.commute(letters[j], s):
                order.add_edge(j, k)
    hasse = nx.transitive_reduction(order)
    return Heap(labels=letters, covers=frozenset(hasse.edges()))


def left_descents(fc: FcElement) -> frozenset[int]:
    return frozenset(fc.layers[0]) if fc.layers else frozenset()


def right_descents(fc: FcElement) -> frozenset[int]:
    return left_descents(inverse(fc))


def inverse(fc: FcElement) -> FcElement:
    return _layers_of(fc.graph, fc.word[::-1])


def support(fc: FcElement) -> frozenset[int]:
    return frozenset(fc.word)


def has_complete_support(fc: FcElement) -> bool:
    return len(support(fc)) == fc.graph.rank


def drop_left(fc: FcElement, s: int) -> FcElement:
    """Return s*fc for a left descent s."""
    if s not in left_descents(fc):
        raise IllegalMove(f"{s} is not a left descent of {fc.layers}")
    letters = list(fc.word)
    letters.remove(s)
    return _layers_of(fc.graph, letters)


def drop_right(fc: FcElement, s: int) -> FcElement:
    """Return fc*s for a right descent s."""
    return inverse(drop_left(inverse(fc), s))


def left_quotient(fc: FcElement, letters: Sequence[int]) -> FcElement | None:
    """Remove the prefix `letters` from fc, or return None if it is not a prefix."""
    current = fc
    for s in letters:
        if s not in left_descents(current):
            return None
        current = drop_left(current, s)
    return current


def is_prefix(fc: FcElement, letters: Sequence[int]) -> bool:
    return left_quotient(fc, letters) is not None


def remainders(fc: FcElement) -> Iterator[FcElement]:
    """Yield x^-1 * fc for every prefix x of fc (order ideals of the heap)."""
    seen = {fc}
    stack = [fc]
    while stack:
        current = stack.pop()
        yield current
        for s in sorted(left_descents(current)):
            rest = drop_left(current, s)
            if rest not in seen:
                seen.add(rest)
                stack.append(rest)


def prefixes(fc: FcElement) -> Iterator[FcElement]:
    """Yield every prefix x of fc, i.e. fc = x * y with lengths adding up."""
    for rest in remainders(inverse(fc)):
        yield inverse(rest)


def is_factor(fc: FcElement, z: FcElement) -> bool:
    """Check whether z = x * fc * y with lengths adding up."""
    if fc.length > z.length:
        return False
    return any(
        rest.length >= fc.length and is_prefix(rest, fc.word) for rest in remainders(z)
    )


def _require_d(fc: FcElement) -> None:
    if fc.graph.family is not Family.AFFINE_D:
        raise WrongFamily(f"f statistics are defined on D~ only, got {fc.graph.label}")


def _fork_blocks(letters: Sequence[int], pair: tuple[int, int], separator: int) -> int:
    """Count blocks between separator occurrences that hold both fork generators."""
    count = 0
    block: set[int] = set()
    for s in letters:
        if s == separator:
            count += len(block) == 2
            block = set()
        elif s in pair:
            block.add(s)
    return count + (len(block) == 2)


def f_bullet(fc: FcElement) -> int:
    """Maximal number of s0 s1 factors over the reduced expressions of fc."""
    _require_d(fc)
    return _fork_blocks(fc.word, (0, 1), 2)


def f_circ(fc: FcElement) -> int:
    """Maximal number of s(n+1) s(n+2) factors over the reduced expressions of fc."""
    _require_d(fc)
    n = fc.graph.n
    return _fork_blocks(fc.word, (n + 1, n + 2), n)


def n_value(fc: FcElement) -> int:
    """Size of a maximum antichain of the heap (Dilworth via bipartite matching)."""
    letters = fc.word
    r = len(letters)
    if r == 0:
        return 0
    below, _ = _order_masks(fc.graph, letters)
    split = nx.Graph()
    tops = [("out", j) for j in range(r)]
    split.add_nodes_from(tops, bipartite=0)
    split.add_nodes_from((("in", k) for k in range(r)), bipartite=1)
    for k in range(r):
        for j in range(k):
            if below[k] >> j & 1:
                split.add_edge(("out", j), ("in", k))
    matching = nx.bipartite.hopcroft_karp_matching(split, top_nodes=tops)
    return r - len(matching) // 2
