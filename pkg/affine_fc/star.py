"""Star and weak star reductions, irreducible families and the map from B~ to D~.

Capabilities:
- list the legal (weak) star moves of an FC element and apply them
- reduce to an irreducible element under a policy, or list every trace
- classify irreducible elements of D~ and B~ (CC, zigzags, candies)
- embed FC(B~(n+1)) into FC(D~(n+2))
- decide whether an element is a weak zigzag
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from . import config
from .coxeter import (
    build_graph,
    cfnf,
    drop_left,
    drop_right,
    inverse,
    is_factor,
    is_fully_commutative,
    left_descents,
    make_word,
    right_descents,
)
from .errors import (
    ClassificationGap,
    IllegalMove,
    NotIrreducible,
    TraceCapExceeded,
    WrongFamily,
)
from .model import CoxeterGraph, FcElement, Family

logger = logging.getLogger(__name__)


class Side(Enum):
    LEFT = "L"
    RIGHT = "R"


class Mode(Enum):
    STAR = "star"
    WEAK = "weak"


class Policy(Enum):
    FIRST = "first"
    LEFT = "left"
    RIGHT = "right"
    RIGHT_FIRST = "rightfirst"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class StarMove:
    """Removal of the descent s on one side, witnessed by t with m(s, t) >= 3."""

    side: Side
    s: int
    t: int
    weak: bool

    def sort_key(self) -> tuple[int, int, int]:
        return (0 if self.side is Side.LEFT else 1, self.s, self.t)


@dataclass(frozen=True)
class TraceStep:
    move: StarMove
    result: FcElement


@dataclass(frozen=True)
class ReductionTrace:
    start: FcElement
    steps: tuple[TraceStep, ...]
    end: FcElement

    def __len__(self) -> int:
        return len(self.steps)


class IrreducibleClassD(Enum):
    CC = "CC"
    CZ = "CZ"
    CANDY = "Candy"


class IrreducibleClassBStar(Enum):
    CC = "CC"
    CANDY = "Candy"
    CZ_BULLET = "CZbullet"


class IrreducibleClassBWeak(Enum):
    CC_W = "CCw"
    CANDY = "Candy"
    LEFT_CANDY = "LeftCandy"
    CZ = "CZ"


@dataclass(frozen=True)
class Classification:
    family: IrreducibleClassD | IrreducibleClassBStar | IrreducibleClassBWeak
    params: dict[str, int] = field(default_factory=dict)


def _left_moves(fc: FcElement) -> list[StarMove]:
    graph = fc.graph
    moves = []
    for s in sorted(left_descents(fc)):
        shorter = left_descents(drop_left(fc, s))
        for t in sorted(shorter):
            if graph.m(s, t) >= 3:
                weak = not is_fully_commutative(make_word(graph, (t, *fc.word)))
                moves.append(StarMove(Side.LEFT, s, t, weak))
    return moves


@lru_cache(maxsize=1 << 16)
def available_moves(fc: FcElement, mode: Mode = Mode.STAR) -> tuple[StarMove, ...]:
    """All legal moves, left before right, then by (s, t).

    Right moves of w are the left moves of w^-1 read on the other side.
    """
    moves = _left_moves(fc)
    moves += [
        StarMove(Side.RIGHT, m.s, m.t, m.weak) for m in _left_moves(inverse(fc))
    ]
    if mode is Mode.WEAK:
        moves = [m for m in moves if m.weak]
    return tuple(sorted(moves, key=StarMove.sort_key))


def is_irreducible(fc: FcElement, mode: Mode = Mode.STAR) -> bool:
    return not available_moves(fc, mode)


def _apply(fc: FcElement, move: StarMove) -> FcElement:
    if move.side is Side.LEFT:
        return drop_left(fc, move.s)
    return drop_right(fc, move.s)


def apply_move(fc: FcElement, move: StarMove) -> FcElement:
    """Apply a move after checking it is legal; a weak move must really be weak."""
    for legal in available_moves(fc, Mode.STAR):
        if (legal.side, legal.s, legal.t) == (move.side, move.s, move.t):
            if move.weak and not legal.weak:
                raise IllegalMove(f"{_describe(move)} is a star move but not a weak one")
            return _apply(fc, move)
    raise IllegalMove(f"{_describe(move)} is not a legal move")


def _describe(move: StarMove) -> str:
    kind = "weak star" if move.weak else "star"
    return f"{kind} move side={move.side.value} s={move.s} t={move.t}"


def _pick(moves: tuple[StarMove, ...], policy: Policy) -> StarMove | None:
    left = [m for m in moves if m.side is Side.LEFT]
    right = [m for m in moves if m.side is Side.RIGHT]
    if policy is Policy.FIRST:
        candidates = left + right
    elif policy is Policy.RIGHT_FIRST:
        candidates = right + left
    elif policy is Policy.LEFT:
        candidates = left
    else:
        candidates = right
    return candidates[0] if candidates else None


def reduce_to_irreducible(
    fc: FcElement,
    mode: Mode = Mode.STAR,
    policy: Policy = Policy.FIRST,
    cap: int | None = None,
) -> ReductionTrace | list[ReductionTrace]:
    """Reduce fc until no move of the requested kind remains.

    Args:
        fc: Start element.
        mode: STAR or WEAK moves.
        policy: Which move to take at each step. EXHAUSTIVE returns every trace.
        cap: Maximum number of traces for EXHAUSTIVE; defaults to the configured cap.

    Returns:
        One trace, or the list of all traces in move order for EXHAUSTIVE.
    """
    if policy is Policy.EXHAUSTIVE:
        return _all_traces(fc, mode, config.trace_cap() if cap is None else cap)

    steps = []
    current = fc
    while (move := _pick(available_moves(current, mode), policy)) is not None:
        current = _apply(current, move)
        steps.append(TraceStep(move, current))
    logger.debug("%s: %d %s move(s) to %s", fc.layers, len(steps), mode.value, current.layers)
    return ReductionTrace(fc, tuple(steps), current)


def _all_traces(fc: FcElement, mode: Mode, cap: int) -> list[ReductionTrace]:
    traces: list[ReductionTrace] = []
    steps: list[TraceStep] = []

    def walk(current: FcElement) -> None:
        moves = available_moves(current, mode)
        if not moves:
            traces.append(ReductionTrace(fc, tuple(steps), current))
            if len(traces) > cap:
                raise TraceCapExceeded(f"more than {cap} traces from {fc.word}")
            return
        for move in moves:
            result = _apply(current, move)
            steps.append(TraceStep(move, result))
            walk(result)
            steps.pop()

    walk(fc)
    logger.debug("%s: %d trace(s)", fc.layers, len(traces))
    return traces


def reduction_endpoints(
    fc: FcElement, mode: Mode = Mode.STAR, sides: frozenset[Side] = frozenset(Side)
) -> dict[FcElement, frozenset[int]]:
    """Map each reachable irreducible endpoint to the set of trace lengths reaching it.

    Only moves on `sides` are used, so a one-sided call stops at one-sided
    irreducibles. Intermediate elements are memoized, so this stays cheap where
    the number of traces explodes.
    """
    memo: dict[FcElement, dict[FcElement, frozenset[int]]] = {}

    def visit(current: FcElement) -> dict[FcElement, frozenset[int]]:
        if current in memo:
            return memo[current]
        moves = [m for m in available_moves(current, mode) if m.side in sides]
        if not moves:
            found = {current: frozenset({0})}
        else:
            found = {}
            for move in moves:
                for end, depths in visit(_apply(current, move)).items():
                    found[end] = found.get(end, frozenset()) | {d + 1 for d in depths}
        memo[current] = found
        return found

    return visit(fc)


@dataclass(frozen=True)
class Zigzag:
    form: int
    k: int
    h: int
    element: FcElement


def _zigzag_pieces(graph: CoxeterGraph):
    n = graph.n
    if graph.family is Family.AFFINE_D:
        a = tuple(range(2, n + 3))
        heads = ((0, 1), (n + 2, n + 1))
    elif graph.family is Family.AFFINE_B:
        a = tuple(range(2, n + 2))
        heads = ((0, 1), (n + 1,))
    else:
        raise WrongFamily(f"zigzags are defined on D~ and B~ only, got {graph.label}")
    b = tuple(range(n, -1, -1))
    return heads, a, b


@lru_cache(maxsize=64)
def complete_zigzags(graph: CoxeterGraph, max_length: int) -> tuple[Zigzag, ...]:
    """All complete zigzags of length at most max_length, by form, then k, then h."""
    heads, a, b = _zigzag_pieces(graph)
    found = []
    for form, head, first, second in ((1, heads[0], a, b), (2, heads[1], b, a)):
        k = 0
        while len(head) + k * len(a + b) <= max_length:
            for h in (0, 1):
                if k + h == 0:
                    continue
                letters = head + (first + second) * k + first * h
                if len(letters) <= max_length:
                    found.append(Zigzag(form, k, h, cfnf(make_word(graph, letters))))
            k += 1
    return tuple(found)


def zigzag_parameters(fc: FcElement) -> dict[str, int] | None:
    """Form, k and h of a complete zigzag, or None."""
    for zigzag in complete_zigzags(fc.graph, fc.length):
        if zigzag.element == fc:
            return {"form": zigzag.form, "k": zigzag.k, "h": zigzag.h}
    return None


def is_completely_commutative(fc: FcElement) -> bool:
    return len(fc.layers) <= 1


def is_weak_completely_commutative(fc: FcElement) -> bool:
    """Membership in CC_w of B~: CC, or s_n s_(n+1) v / s_(n+1) s_n v with v far from the end."""
    if is_completely_commutative(fc):
        return True
    if fc.graph.family is not Family.AFFINE_B or len(fc.layers) != 2:
        return False
    n = fc.graph.n
    first, second = fc.layers
    if second == (n + 1,) and n in first:
        rest = set(first) - {n}
    elif second == (n,) and n + 1 in first:
        rest = set(first) - {n + 1}
    else:
        return False
    return not rest & (fc.graph.neighbors(n) | {n, n + 1})


def _candy_shape(graph: CoxeterGraph, left_only: bool):
    n = graph.n
    if graph.family is Family.AFFINE_D:
        if n % 2 or left_only:
            return None
        return set(range(3, n, 2)), set(range(2, n + 1, 2)), (n + 1, n + 2)
    if graph.family is Family.AFFINE_B:
        if left_only and n % 2 == 1:
            return set(range(3, n + 1, 2)), set(range(2, n + 2, 2)), None
        if not left_only and n % 2 == 0:
            return set(range(3, n + 2, 2)), set(range(2, n + 1, 2)), None
        return None
    raise WrongFamily(f"candies are defined on D~ and B~ only, got {graph.label}")


def _candy_match(fc: FcElement, left_only: bool) -> dict[str, int] | None:
    shape = _candy_shape(fc.graph, left_only)
    m = len(fc.layers) - 1
    if shape is None or m < 2 or m % 2:
        return None
    core, odd, right_fork = shape
    previous: tuple[int, int | None] | None = None
    params: dict[str, int] = {"m": m}
    for index, layer in enumerate(fc.layers):
        layer = set(layer)
        if index % 2:
            if layer != odd:
                return None
            continue
        extra = layer - core
        if not core <= layer:
            return None
        x = extra & {0, 1}
        y = extra & set(right_fork or ())
        wanted = 1 + (right_fork is not None)
        if len(x) != 1 or len(extra) != wanted or (right_fork and len(y) != 1):
            return None
        current = (x.pop(), y.pop() if y else None)
        if previous is not None and (
            current[0] == previous[0] or (right_fork and current[1] == previous[1])
        ):
            return None
        if previous is None:
            params["x0"] = current[0]
            if right_fork:
                params["y0"] = current[1]
        previous = current
    return params


def candy_parameters(fc: FcElement) -> dict[str, int] | None:
    """m, x0 (and y0 in D~) of a candy, or None."""
    return _candy_match(fc, left_only=False)


def left_candy_parameters(fc: FcElement) -> dict[str, int] | None:
    """m and x0 of a left candy of B~ with n odd, or None."""
    if fc.graph.family is not Family.AFFINE_B:
        return None
    return _candy_match(fc, left_only=True)


def candy(
    graph: CoxeterGraph, m: int, x0: int, y0: int | None = None, left: bool = False
) -> FcElement:
    """Build the candy (or B~ left candy) with m+1 layers starting from x0 and y0."""
    shape = _candy_shape(graph, left)
    if shape is None:
        raise WrongFamily(f"no {'left ' if left else ''}candy exists in {graph.label}")
    core, odd, right_fork = shape
    letters: list[int] = []
    x, y = x0, y0
    for index in range(m + 1):
        if index % 2:
            letters += sorted(odd)
            continue
        extra = {x} | ({y} if right_fork else set())
        letters += sorted(core | extra)
        x = 1 - x
        if right_fork:
            y = right_fork[0] + right_fork[1] - y
    return cfnf(make_word(graph, letters))


def _require(fc: FcElement, family: Family) -> None:
    if fc.graph.family is not family:
        raise WrongFamily(f"expected a {family.value}~ element, got {fc.graph.label}")


def classify_irreducible_D(fc: FcElement) -> Classification:
    """Place a star irreducible element of D~ in CC, CZ or Candy."""
    _require(fc, Family.AFFINE_D)
    if not is_irreducible(fc, Mode.STAR):
        raise NotIrreducible(f"{fc.layers} admits a star reduction")
    if is_completely_commutative(fc):
        return Classification(IrreducibleClassD.CC, {"length": fc.length})
    if (params := zigzag_parameters(fc)) is not None:
        return Classification(IrreducibleClassD.CZ, params)
    if (params := candy_parameters(fc)) is not None:
        return Classification(IrreducibleClassD.CANDY, params)
    raise ClassificationGap(f"irreducible element {fc.layers} matches no family")


def classify_irreducible_B(fc: FcElement, mode: Mode = Mode.STAR) -> Classification:
    """Place a (weak) star irreducible element of B~ in its family."""
    _require(fc, Family.AFFINE_B)
    if not is_irreducible(fc, mode):
        raise NotIrreducible(f"{fc.layers} admits a {mode.value} reduction")

    if mode is Mode.STAR:
        if is_completely_commutative(fc):
            return Classification(IrreducibleClassBStar.CC, {"length": fc.length})
        if (params := candy_parameters(fc)) is not None:
            return Classification(IrreducibleClassBStar.CANDY, params)
        params = zigzag_parameters(fc)
        if params is not None and left_descents(fc) == right_descents(fc) == {0, 1}:
            return Classification(IrreducibleClassBStar.CZ_BULLET, params)
    else:
        if is_weak_completely_commutative(fc):
            return Classification(IrreducibleClassBWeak.CC_W, {"length": fc.length})
        if (params := candy_parameters(fc)) is not None:
            return Classification(IrreducibleClassBWeak.CANDY, params)
        if (params := left_candy_parameters(fc)) is not None:
            return Classification(IrreducibleClassBWeak.LEFT_CANDY, params)
        if (params := zigzag_parameters(fc)) is not None:
            return Classification(IrreducibleClassBWeak.CZ, params)
    raise ClassificationGap(f"{mode.value} irreducible element {fc.layers} matches no family")


@dataclass
class _ChainEntry:
    generator: int
    label: int
    separated: bool = False


def phi(fc: FcElement) -> FcElement:
    """Embed an FC element of B~(n+1) into D~(n+2).

    Walking the chain of s_n and s_(n+1) occurrences, an s_(n+1) that closes
    a factor s_(n+1) s_n s_(n+1) takes the other fork label, and an s_(n+1)
    enclosed in a factor s_n s_(n+1) s_n is doubled into s_(n+1) s_(n+2).
    """
    _require(fc, Family.AFFINE_B)
    n = fc.graph.n
    hi, lo = n + 1, n
    blockers = fc.graph.neighbors(lo) - {hi}
    out: list[int] = []
    chain: list[_ChainEntry] = []
    for s in fc.word:
        if s == hi:
            label = hi
            if len(chain) >= 2 and chain[-1].generator == lo and chain[-2].generator == hi:
                label = 2 * n + 3 - chain[-2].label
            chain.append(_ChainEntry(hi, label))
            out.append(label)
        elif s == lo:
            if (
                len(chain) >= 2
                and chain[-1].generator == hi
                and chain[-2].generator == lo
                and not chain[-2].separated
            ):
                out.append(n + 2)
            chain.append(_ChainEntry(lo, lo))
            out.append(lo)
        else:
            if s in blockers:
                for entry in reversed(chain):
                    if entry.generator == lo:
                        entry.separated = True
                        break
            out.append(s)
    return cfnf(make_word(build_graph(Family.AFFINE_D, n), out))


def is_weak_zigzag(fc: FcElement) -> bool:
    """Check whether fc is outside CC and a factor of a complete zigzag.

    Zigzags up to one full period plus the fork head longer than fc are searched.
    """
    if fc.graph.family not in (Family.AFFINE_D, Family.AFFINE_B):
        raise WrongFamily(f"zigzags are defined on D~ and B~ only, got {fc.graph.label}")
    if is_completely_commutative(fc):
        return False
    bound = fc.length + 2 * (fc.graph.n + 1) + 2
    return any(is_factor(fc, zigzag.element) for zigzag in complete_zigzags(fc.graph, bound))


def matching_families(fc: FcElement, mode: Mode = Mode.STAR) -> list[Enum]:
    """Every irreducible family whose pattern fc matches, irreducible or not.

    The families are disjoint, so an irreducible element matches exactly one.
    """
    family = fc.graph.family
    found: list[Enum] = []
    if family is Family.AFFINE_D:
        if is_completely_commutative(fc):
            found.append(IrreducibleClassD.CC)
        if zigzag_parameters(fc) is not None:
            found.append(IrreducibleClassD.CZ)
        if candy_parameters(fc) is not None:
            found.append(IrreducibleClassD.CANDY)
    elif family is Family.AFFINE_B and mode is Mode.STAR:
        if is_completely_commutative(fc):
            found.append(IrreducibleClassBStar.CC)
        if candy_parameters(fc) is not None:
            found.append(IrreducibleClassBStar.CANDY)
        params = zigzag_parameters(fc)
        if params is not None and left_descents(fc) == right_descents(fc) == {0, 1}:
            found.append(IrreducibleClassBStar.CZ_BULLET)
    elif family is Family.AFFINE_B:
        if is_weak_completely_commutative(fc):
            found.append(IrreducibleClassBWeak.CC_W)
        if candy_parameters(fc) is not None:
            found.append(IrreducibleClassBWeak.CANDY)
        if left_candy_parameters(fc) is not None:
            found.append(IrreducibleClassBWeak.LEFT_CANDY)
        if zigzag_parameters(fc) is not None:
            found.append(IrreducibleClassBWeak.CZ)
    else:
        raise WrongFamily(f"irreducible families exist on D~ and B~ only, got {fc.graph.label}")
    return found
