"""Named verification suites run over enumerated FC elements.

Each suite compares a library computation with an independent oracle or with
a stated structural property and records every counterexample it meets.
"""

import logging
import random
from collections import defaultdict
from dataclasses import asdict, dataclass, field, replace

from . import config
from .coxeter import (
    build_graph,
    cfnf,
    element,
    f_bullet,
    f_circ,
    heap_of,
    inverse,
    left_descents,
    n_value,
)
from .diagrams import (
    a_tilde,
    a_value,
    compose,
    diagram_of,
    has_left_descent_diagrammatic,
    loop_census,
    raw_product,
    simple_diagram,
)
from .errors import AffineFcError, UnknownSuite, WrongFamily
from .model import FcElement, Family
from .oracle import (
    all_reduced_expressions,
    fc_elements,
    fork_factors_brute,
    linear_extension_count,
    linear_extensions,
    max_antichain_brute,
)
from .rewriting import canonicalize
from .star import (
    Mode,
    Policy,
    Side,
    StarMove,
    apply_move,
    candy,
    candy_parameters,
    classify_irreducible_B,
    classify_irreducible_D,
    is_irreducible,
    is_weak_zigzag,
    matching_families,
    phi,
    reduce_to_irreducible,
    reduction_endpoints,
)
from .utils import format_layers, format_letters
from .validation_common import CheckFailure

logger = logging.getLogger(__name__)

RANDOM_ORDERS = 100

# star moves taking w1 = (0 4)(3 5)(2 4 6 7)(1) of D~7 to s0 s3 s6 s7
W1_SEQUENCE = (
    (Side.LEFT, 4, 3),
    (Side.RIGHT, 1, 2),
    (Side.LEFT, 5, 6),
    (Side.RIGHT, 2, 0),
    (Side.RIGHT, 4, 3),
)

SUITES = {
    "cfnf-uniqueness": "check_cfnf_uniqueness",
    "heap-duality": "check_heap_duality",
    "f-statistics": "check_f_statistics",
    "antichain": "check_antichain",
    "trace-length": "check_trace_length",
    "classification-D": "check_classification_d",
    "classification-B": "check_classification_b",
    "phi": "check_phi",
    "relations": "check_relations",
    "loop-census": "check_loop_census",
    "descents": "check_descents",
    "faithfulness": "check_faithfulness",
    "a-function": "check_a_function",
    "confluence": "check_confluence",
    "worked-examples": "check_worked_examples",
}


@dataclass(frozen=True)
class SuiteConfig:
    family: Family = Family.AFFINE_D
    n: int = 2
    max_length: int = 8
    seed: int = field(default_factory=config.default_seed)
    samples: int = 200

    @property
    def graph(self):
        return build_graph(self.family, self.n)

    def to_dict(self) -> dict:
        values = asdict(self)
        values["family"] = self.family.value
        return values


@dataclass
class SuiteReport:
    suite: str
    config: SuiteConfig
    checked: int
    failures: list[CheckFailure]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config.to_dict(),
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
        }


class SuiteRunner:
    def __init__(self, name: str, cfg: SuiteConfig):
        self.name = name
        self.config = cfg
        self.checked = 0
        self.failures: list[CheckFailure] = []
        self._elements: list[FcElement] | None = None

    def elements(self) -> list[FcElement]:
        if self._elements is None:
            self._elements = fc_elements(self.config.graph, self.config.max_length)
        return self._elements

    def fail(self, check: str, fc: FcElement | str, message: str):
        word = fc if isinstance(fc, str) else format_letters(fc.word)
        self.failures.append(CheckFailure(self.name, check, word, message))

    def require(self, family: Family):
        if self.config.family is not family:
            raise WrongFamily(f"suite {self.name} runs on {family.value}~ only")

    def expect(self, check: str, fc: FcElement | str, actual, expected):
        self.checked += 1
        if actual != expected:
            self.fail(check, fc, f"expected {expected!r}, got {actual!r}")

    def check_cfnf_uniqueness(self):
        """Every reduced expression of an element has the same normal form."""
        guard = config.expression_guard()
        for fc in self.elements():
            if fc.length > guard:
                continue
            self.checked += 1
            expressions = all_reduced_expressions(fc)
            for word in expressions:
                if cfnf(word) != fc:
                    self.fail("cfnf", fc, f"{format_letters(word.letters)} has another normal form")
                    break
            count = linear_extension_count(heap_of(fc))
            if count != len(expressions):
                self.fail("count", fc, f"{len(expressions)} expressions, {count} linear extensions")

    def check_heap_duality(self):
        """Reduced expressions are exactly the linear extensions of the heap."""
        guard = config.expression_guard()
        for fc in self.elements():
            if fc.length > guard:
                continue
            words = {word.letters for word in all_reduced_expressions(fc)}
            self.expect("linear-extensions", fc, set(linear_extensions(heap_of(fc))) == words, True)

    def check_f_statistics(self):
        self.require(Family.AFFINE_D)
        n = self.config.n
        guard = config.expression_guard()
        for fc in self.elements():
            if fc.length > guard:
                continue
            self.expect("f-bullet", fc, f_bullet(fc), fork_factors_brute(fc, (0, 1)))
            self.expect("f-circ", fc, f_circ(fc), fork_factors_brute(fc, (n + 1, n + 2)))
            self.expect("f-bullet-inverse", fc, f_bullet(inverse(fc)), f_bullet(fc))
            self.expect("f-circ-inverse", fc, f_circ(inverse(fc)), f_circ(fc))

    def check_antichain(self):
        for fc in self.elements():
            self.expect("width", fc, n_value(fc), max_antichain_brute(heap_of(fc)))

    def check_trace_length(self):
        """All traces end at one depth; one-sided traces end at one element."""
        modes = (Mode.STAR,) if self.config.family is Family.AFFINE_D else tuple(Mode)
        for fc in self.elements():
            for mode in modes:
                ends = reduction_endpoints(fc, mode)
                depths = set().union(*ends.values())
                self.expect(f"depth-{mode.value}", fc, len(depths), 1)
                for side in Side:
                    one_sided = reduction_endpoints(fc, mode, frozenset({side}))
                    self.expect(f"endpoint-{mode.value}-{side.value}", fc, len(one_sided), 1)

    def _check_partition(self, mode: Mode):
        for fc in self.elements():
            self.checked += 1
            families = matching_families(fc, mode)
            irreducible = is_irreducible(fc, mode)
            if irreducible and len(families) != 1:
                names = [f.value for f in families]
                self.fail(f"partition-{mode.value}", fc, f"irreducible, matches {names}")
            elif not irreducible and families:
                self.fail(f"partition-{mode.value}", fc, f"reducible, matches {families[0].value}")
            if irreducible:
                try:
                    if self.config.family is Family.AFFINE_D:
                        classify_irreducible_D(fc)
                    else:
                        classify_irreducible_B(fc, mode)
                except AffineFcError as e:
                    self.fail(f"classify-{mode.value}", fc, str(e))

    def check_classification_d(self):
        self.require(Family.AFFINE_D)
        self._check_partition(Mode.STAR)
        if self.config.n % 2:
            for fc in self.elements():
                if candy_parameters(fc) is not None:
                    self.fail("candy-parity", fc, "candy found for odd n")

    def check_classification_b(self):
        self.require(Family.AFFINE_B)
        self._check_partition(Mode.STAR)
        self._check_partition(Mode.WEAK)

    def check_phi(self):
        """The embedding is injective and keeps irreducibility, weak zigzags and candies."""
        self.require(Family.AFFINE_B)
        images: dict[FcElement, FcElement] = {}
        for fc in self.elements():
            image = phi(fc)
            if image in images:
                self.fail("injective", fc, f"same image as {format_letters(images[image].word)}")
            images[image] = fc
            self.expect("irreducible", fc, is_irreducible(image), is_irreducible(fc))
            self.expect("weak-zigzag", fc, is_weak_zigzag(image), is_weak_zigzag(fc))
            self.expect(
                "candy", fc, candy_parameters(image) is not None, candy_parameters(fc) is not None
            )

    def check_relations(self):
        """Generator relations of the diagram algebra and associativity of products."""
        self.require(Family.AFFINE_D)
        graph = self.config.graph
        n = self.config.n
        simple = [simple_diagram(i, n) for i in graph.generators]
        for i in graph.generators:
            d = simple[i]
            self.expect("square", f"{i} {i}", compose(d, d), replace(d, delta_exp=1))
            for j in graph.generators:
                if j == i:
                    continue
                label = f"{i} {j}"
                if graph.m(i, j) == 2:
                    self.expect("commute", label, compose(d, simple[j]), compose(simple[j], d))
                elif graph.m(i, j) == 3:
                    self.expect("braid", label, compose(d, compose(simple[j], d)), d)

        rng = random.Random(self.config.seed)
        elements = self.elements()
        for _ in range(self.config.samples):
            x, y, z = (rng.choice(elements) for _ in range(3))
            a, b, c = diagram_of(x), diagram_of(y), diagram_of(z)
            label = " | ".join(format_letters(e.word) for e in (x, y, z))
            self.expect("associative", label, compose(compose(a, b), c), compose(a, compose(b, c)))

    def check_loop_census(self):
        self.require(Family.AFFINE_D)
        for fc in self.elements():
            d = diagram_of(fc)
            census = loop_census(d)
            self.expect("delta", fc, d.delta_exp, 0)
            self.expect("undecorated", fc, any(not loop.word for loop in d.loops), False)
            self.expect("loops-b", fc, census["b"], f_bullet(fc))
            self.expect("loops-w", fc, census["w"], f_circ(fc))

        n = self.config.n
        if n % 2:
            return
        graph = self.config.graph
        for m in range(2, self.config.max_length + 1, 2):
            for x0 in (0, 1):
                for y0 in (n + 1, n + 2):
                    fc = candy(graph, m, x0, y0)
                    if fc.length > self.config.max_length:
                        continue
                    expected = {"b": 0, "w": 0, "bw": m // 2}
                    self.expect("candy-loops", fc, loop_census(diagram_of(fc)), expected)

    def check_descents(self):
        self.require(Family.AFFINE_D)
        for fc in self.elements():
            d = diagram_of(fc)
            descents = left_descents(fc)
            for i in fc.graph.generators:
                self.expect(f"descent-{i}", fc, has_left_descent_diagrammatic(d, i), i in descents)

    def check_faithfulness(self):
        self.require(Family.AFFINE_D)
        seen: dict = {}
        for fc in self.elements():
            self.checked += 1
            d = diagram_of(fc)
            if d in seen:
                self.fail("injective", fc, f"same diagram as {format_letters(seen[d].word)}")
            seen[d] = fc
        logger.info("%d distinct diagram(s) for %d element(s)", len(seen), len(self.elements()))

    def check_a_function(self):
        self.require(Family.AFFINE_D)
        for fc in self.elements():
            self.expect("a-tilde", fc, a_tilde(diagram_of(fc)), n_value(fc))

    def check_confluence(self):
        """Random rule orders reach the canonical form of the priority order."""
        self.require(Family.AFFINE_D)
        rng = random.Random(self.config.seed)
        elements = self.elements()
        for index in range(self.config.samples):
            fc = rng.choice(elements)
            raw = raw_product(fc.word, self.config.n)
            expected = canonicalize(raw)
            self.checked += 1
            for order in range(RANDOM_ORDERS):
                order_rng = random.Random(self.config.seed + index * RANDOM_ORDERS + order)
                if canonicalize(raw, order_rng) != expected:
                    self.fail("confluence", fc, f"random order {order} reached another form")
                    break

    def check_worked_examples(self):
        """Worked examples of the reduction theory and of the a-function."""
        d7 = build_graph(Family.AFFINE_D, 5)
        w1 = element(d7, (0, 4, 3, 5, 2, 4, 6, 7, 1))
        self.expect("w1-cfnf", "w1", format_layers(w1.layers), "(0 4)(3 5)(2 4 6 7)(1)")
        self.expect("w1-descents", "w1", left_descents(w1), frozenset({0, 4}))

        current = w1
        for side, s, t in W1_SEQUENCE:
            current = apply_move(current, StarMove(side, s, t, False))
        self.expect("w1-sequence", "w1", format_layers(current.layers), "(0 3 6 7)")
        first = reduce_to_irreducible(w1, policy=Policy.FIRST)
        self.expect("w1-first", "w1", format_layers(first.end.layers), "(1 4 6 7)")
        right_first = reduce_to_irreducible(w1, policy=Policy.RIGHT_FIRST)
        self.expect("w1-rightfirst", "w1", format_layers(right_first.end.layers), "(0 3 6 7)")

        b6 = build_graph(Family.AFFINE_B, 5)
        w2 = element(b6, (3, 2, 4, 1, 3, 5, 2, 4, 6, 0, 3, 5, 2, 6))
        self.expect("w2-cfnf", "w2", format_layers(w2.layers), "(3)(2 4)(1 3 5)(2 4 6)(0 3 5)(2 6)")
        weak_ends = {format_layers(e.layers) for e in reduction_endpoints(w2, Mode.WEAK)}
        self.expect("w2-weak", "w2", weak_ends, {"(1 3 5)(2 4 6)(0 3 5)"})
        star_ends = {format_layers(e.layers) for e in reduction_endpoints(w2, Mode.STAR)}
        self.expect("w2-star", "w2", "(2 4 6)" in star_ends, True)
        phi_w2 = element(d7, (3, 2, 4, 1, 3, 5, 2, 4, 6, 0, 3, 5, 2, 7))
        self.expect("w2-phi", "w2", phi(w2), phi_w2)

        d10 = build_graph(Family.AFFINE_D, 8)
        w = element(d10, (0, 3, 5, 9, 1, 2, 4, 6, 8, 3, 5, 7, 10))
        v = element(d10, (0, 5, 9, 1, 10))
        self.expect("f-w", "w", (f_bullet(w), f_circ(w)), (1, 0))
        self.expect("f-v", "v", (f_bullet(v), f_circ(v)), (1, 1))

        s0s1 = element(build_graph(Family.AFFINE_D, 2), (0, 1))
        diagram = diagram_of(s0s1)
        self.expect("width-s0s1", "0 1", n_value(s0s1), 2)
        self.expect("a-s0s1", "0 1", a_value(diagram), 1)
        self.expect("a-tilde-s0s1", "0 1", a_tilde(diagram), 2)


def run_suite(name: str, cfg: SuiteConfig) -> SuiteReport:
    """Run one named suite.

    Raises:
        UnknownSuite: If no suite has this name.
    """
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    runner = SuiteRunner(name, cfg)
    logger.info("running %s on %s up to length %d", name, cfg.graph.label, cfg.max_length)
    getattr(runner, SUITES[name])()
    return SuiteReport(name, cfg, runner.checked, runner.failures)


def print_report(report: SuiteReport):
    """Print a report with its failures grouped by check."""
    print(f"Suite {report.suite} on {report.config.graph.label}: {report.checked} check(s)")
    if report.passed:
        print(f"✓ No failures in {report.suite}")
        return

    print(f"\n⚠ Found {len(report.failures)} failure(s) in {report.suite}:\n")
    by_check = defaultdict(list)
    for failure in report.failures:
        by_check[failure.check].append(failure)

    for check, failures in sorted(by_check.items()):
        print(f"{check.upper().replace('-', ' ')} ({len(failures)}):")
        for failure in failures:
            print(f"  [{failure.word}]")
            print(f"    {failure.message[:200]}")
        print()
