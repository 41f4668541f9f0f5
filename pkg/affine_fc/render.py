"""JSON and ASCII renderings of elements, heaps, traces and diagrams.

The JSON forms of elements and diagrams can be read back with `fc_from_dict`
and `diagram_from_dict`.
"""

from .coxeter import build_graph, element
from .diagrams import loop_census
from .errors import InvalidParameter
from .model import (
    CoxeterGraph,
    DecoratedDiagram,
    Decoration,
    Edge,
    Endpoint,
    Face,
    Family,
    FcElement,
    Loop,
)
from .star import Classification, ReductionTrace
from .utils import format_layers

LEGEND = "legend: b = black decoration (•), w = white decoration (◦)"


def fc_to_dict(fc: FcElement) -> dict:
    return {
        "family": fc.graph.family.value,
        "n": fc.graph.n,
        "layers": [list(layer) for layer in fc.layers],
    }


def fc_from_dict(data: dict) -> FcElement:
    """Read an element back; the layers must already be its normal form."""
    try:
        graph = build_graph(Family(data["family"]), data["n"])
        layers = [list(layer) for layer in data["layers"]]
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidParameter(f"not an element: {data!r}") from e
    fc = element(graph, (s for layer in layers for s in layer))
    if fc_to_dict(fc)["layers"] != layers:
        raise InvalidParameter(f"layers {layers} are not a Cartier-Foata normal form")
    return fc

def _column(graph: CoxeterGraph, s: int) -> int:
    # the fork generators share the outer columns
    if s <= 1:
        return 0
    if graph.family is Family.AFFINE_D and s > graph.n:
        return graph.n
    return min(s - 1, graph.n)


def heap_ascii(fc: FcElement) -> str:
    """Draw the heap one layer per row, one column per generator, forks fused.

    A layer holding both s0 and s1 shows the fused mark "01".
    """
    graph = fc.graph
    width = graph.n + 1
    rows = []
    for layer in fc.layers:
        cells = [""] * width
        for s in layer:
            cells[_column(graph, s)] += str(s)
        rows.append(" ".join(f"{cell or '.':>3}" for cell in cells))
    return "\n".join(rows) if rows else "e"


def trace_to_dict(trace: ReductionTrace) -> dict:
    return {
        "start": fc_to_dict(trace.start),
        "steps": [
            {
                "side": step.move.side.value,
                "s": step.move.s,
                "t": step.move.t,
                "weak": step.move.weak,
                "result": fc_to_dict(step.result),
            }
            for step in trace.steps
        ],
        "end": fc_to_dict(trace.end),
    }


def trace_ascii(trace: ReductionTrace) -> str:
    lines = [f"start {format_layers(trace.start.layers)}"]
    for step in trace.steps:
        move = step.move
        mark = "*" if move.weak else " "
        result = format_layers(step.result.layers)
        lines.append(f"  {move.side.value}{mark} s={move.s} t={move.t} -> {result}")
    lines.append(f"end   {format_layers(trace.end.layers)} ({len(trace)} step(s))")
    return "\n".join(lines)


def classification_to_dict(classification: Classification) -> dict:
    return {"class": classification.family.value, "params": dict(classification.params)}


def diagram_to_dict(diagram: DecoratedDiagram) -> dict:
    """JSON form of a diagram.

    A diagram with a single north cup also lists its decoration runs, north
    to south, under "strips".
    """
    data = {
        "k": diagram.k,
        "edges": [
            {
                "from": [edge.start.face.value, edge.start.index],
                "to": [edge.end.face.value, edge.end.index],
                "dec": edge.word,
            }
            for edge in diagram.edges
        ],
        "loops": loop_census(diagram),
        "delta": diagram.delta_exp,
    }
    if diagram.strips:
        data["strips"] = [list(run) for run in diagram.strips]
    return data


def _decorations(owner: str, word: str, heights: dict[str, list[int]]) -> tuple[Decoration, ...]:
    decorations = []
    for symbol in word:
        if symbol not in "bw":
            raise InvalidParameter(f"unknown decoration {symbol!r} on {owner}")
        queue = heights.get(f"{owner}:{symbol}")
        decorations.append(Decoration(symbol, queue.pop(0) if queue else 0))
    return tuple(decorations)


def diagram_from_dict(data: dict) -> DecoratedDiagram:
    """Read a diagram back from its JSON form.

    Each decoration named in "strips" gets the index of its run as height, so
    the result compares equal to the diagram that was written.
    """
    try:
        strips = data.get("strips", [])
        heights: dict[str, list[int]] = {}
        for level, run in enumerate(strips):
            for label in run:
                heights.setdefault(label, []).append(level)
        edges = []
        for item in data["edges"]:
            start = Endpoint(Face(item["from"][0]), item["from"][1])
            end = Endpoint(Face(item["to"][0]), item["to"][1])
            owner = f"{start.label}-{end.label}"
            edges.append(Edge(start, end, _decorations(owner, item["dec"], heights)))
        loops = [
            Loop(_decorations(f"L({word})", word, heights))
            for word in sorted(data["loops"])
            for _ in range(data["loops"][word])
        ]
        return DecoratedDiagram(
            data["k"], tuple(edges), tuple(loops), data["delta"], depth=len(strips)
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise InvalidParameter(f"not a diagram: {data!r}") from e


def diagram_ascii(diagram: DecoratedDiagram) -> str:
    data = diagram_to_dict(diagram)
    lines = [f"k={diagram.k} a={diagram.a_value} delta^{diagram.delta_exp}"]
    for edge in data["edges"]:
        start = f"{edge['from'][0]}{edge['from'][1]}"
        end = f"{edge['to'][0]}{edge['to'][1]}"
        lines.append(f"  {start:>4} -{edge['dec'] or '-'}- {end}")
    loops = data["loops"]
    lines.append(f"loops: b={loops['b']} w={loops['w']} bw={loops['bw']}")
    lines.append(LEGEND)
    return "\n".join(lines)
