"""
WildColor Verification Service
==============================

High-level service running the verification sweeps behind `wildcolor
verify`: oracle equivalence, identity grids, sneaky-graph reconstruction
and the recurrence checks. Every sweep returns a VerificationSummary;
disagreements become FAIL lines, never exceptions.
"""

from math import comb
from typing import Callable, List, Optional

from wildcolor.core.config import BudgetSettings, VerificationSettings, settings
from wildcolor.core.exceptions import CapacityError, VerificationError
from wildcolor.core.logging import get_logger
from wildcolor.engine.chi import ChiEngine, chromatic_polynomial
from wildcolor.engine.oracles import count_bruteforce, count_subset_expansion, independence_sum
from wildcolor.engine.wildcard import chi_wildcard
from wildcolor.graphs.corpus import random_multigraphs, simple_graphs
from wildcolor.graphs.multigraph import (
    MultiGraph,
    complete_graph,
    cycle_graph,
    path_graph,
    sneaky_graph,
)
from wildcolor.models.schemas import (
    CheckResult,
    ColoringParams,
    IdentityId,
    SeqParams,
    VerificationSummary,
    WildcardMode,
)
from wildcolor.sequences.crosscheck import cross_check_graphs
from wildcolor.sequences.generators import a_seq, b_seq
from wildcolor.sequences.identities import ANY_K_IDENTITIES, verify_identity
from wildcolor.sequences.recurrence import hankel_det_B, minimal_recurrence

logger = get_logger(__name__)

K_ONE_IDENTITIES = (
    IdentityId.T1_1,
    IdentityId.T1_2,
    IdentityId.T1_3,
    IdentityId.T1_4,
    IdentityId.T1_5,
    IdentityId.P1,
)
CLASSIC_IDENTITIES = (
    IdentityId.C1,
    IdentityId.C2,
    IdentityId.C3,
    IdentityId.C4,
    IdentityId.C5,
    IdentityId.FL,
    IdentityId.PELL,
)

# classical chromatic polynomials, coefficient of x^i at index i
_CHROMATIC = {
    "K3": (complete_graph(3), (0, 2, -3, 1)),
    "C4": (cycle_graph(4), (0, -3, 6, -4, 1)),
}


class VerificationService:
    """
    Service running the verification sweeps.

    One ChiEngine is shared by every sweep. Its memo is cleared when a
    sweep starts, so repeated subgraphs are computed once per sweep and
    the memo never outlives one.
    """

    def __init__(
        self,
        engine: Optional[ChiEngine] = None,
        budget: Optional[BudgetSettings] = None,
        options: Optional[VerificationSettings] = None,
    ):
        self.engine = engine or ChiEngine()
        self.budget = budget or settings.budget
        self.options = options or settings.verification
        self.logger = get_logger("service.verification")

    def _reset_memo(self) -> None:
        if self.engine.memo_size:
            self.logger.debug("Clearing chi memo", extra={"memo_size": self.engine.memo_size})
        self.engine.clear()

    # =====================
    # Oracle equivalence
    # =====================

    def _within_budget(
        self, oracle: Callable[..., int], graph: MultiGraph, params: ColoringParams
    ) -> Optional[int]:
        try:
            return oracle(graph, params, self.budget)
        except CapacityError:
            return None

    def _oracle_sweep(
        self,
        name: str,
        graphs: List[MultiGraph],
        grid: List[ColoringParams],
    ) -> CheckResult:
        """Compare chi with every oracle the budget allows; cells no oracle fits are skipped"""
        checked = skipped = 0
        for index, graph in enumerate(graphs):
            chi = self.engine.compute(graph)
            for params in grid:
                symbolic = chi.evaluate(params.k, params.ell)
                counts = {
                    "brute": self._within_budget(count_bruteforce, graph, params),
                    "subset": self._within_budget(count_subset_expansion, graph, params),
                }
                counts = {oracle: value for oracle, value in counts.items() if value is not None}
                if not counts:
                    skipped += 1
                    continue
                checked += 1
                if any(value != symbolic for value in counts.values()):
                    found = " ".join(f"{oracle}={value}" for oracle, value in counts.items())
                    detail = (
                        f"graph#{index} {graph!r} k={params.k} l={params.ell}: "
                        f"chi={symbolic} {found}"
                    )
                    self.logger.warning("oracle mismatch", extra={"check": name, "graph": index})
                    return CheckResult(
                        name=name, passed=False, checked=checked, skipped=skipped, detail=detail
                    )
        if skipped:
            self.logger.info("cells over budget", extra={"check": name, "skipped": skipped})
        return CheckResult(name=name, passed=True, checked=checked, skipped=skipped)

    def _wildcard_sweep(self, graphs: List[MultiGraph]) -> CheckResult:
        checked = 0
        for index, graph in enumerate(graphs):
            expected = self.engine.compute(graph).substitute(x=1)
            foci: List = list(graph.vertices()) + sorted(set(graph.edges))
            for f in foci:
                mode = WildcardMode.VERTEX if isinstance(f, int) else WildcardMode.EDGE
                got = chi_wildcard(graph, f, mode, self.engine)
                checked += 1
                if got != expected:
                    return CheckResult(
                        name="wildcard",
                        passed=False,
                        checked=checked,
                        detail=f"graph#{index} {graph!r} {mode.value} {f}: {got} != {expected}",
                    )
        return CheckResult(name="wildcard", passed=True, checked=checked)

    def _specialization_sweep(self, graphs: List[MultiGraph], ell_max: int) -> List[CheckResult]:
        chromatic = CheckResult(name="chromatic", passed=True)
        named = [(label, graph, coeffs) for label, (graph, coeffs) in _CHROMATIC.items()]
        for n in range(1, 7):
            # P_n: x (x-1)^(n-1)
            coeffs = [0] * (n + 1)
            for i in range(n):
                coeffs[i + 1] = (-1) ** (n - 1 - i) * comb(n - 1, i)
            named.append((f"P{n}", path_graph(n), tuple(coeffs)))
        for label, graph, coeffs in named:
            poly = chromatic_polynomial(graph, self.engine)
            got = tuple(poly.coefficient(i, 0) for i in range(len(coeffs)))
            chromatic.checked += 1
            if got != coeffs or poly.degree_x() != len(coeffs) - 1:
                chromatic.passed = False
                chromatic.detail = f"{label}: {poly}"
                break

        independence = CheckResult(name="independence", passed=True)
        for index, graph in enumerate(graphs):
            chi = self.engine.compute(graph)
            for ell in range(ell_max + 1):
                independence.checked += 1
                if chi.evaluate(1, ell) != independence_sum(graph, ell, self.budget):
                    independence.passed = False
                    independence.detail = f"graph#{index} {graph!r} l={ell}"
                    return [chromatic, independence]
        return [chromatic, independence]

    def verify_oracles(
        self,
        max_vertices: Optional[int] = None,
        max_edges: Optional[int] = None,
        kl_max: int = 3,
        random_count: Optional[int] = None,
        simple_max_vertices: int = 5,
    ) -> VerificationSummary:
        """
        Symbolic chi against both counting oracles.

        Args:
            max_vertices: Vertex cap for random multigraphs
            max_edges: Edge cap for random multigraphs
            kl_max: (k, l) range [0, kl_max]^2 without (0, 0)
            random_count: Number of random multigraphs
            simple_max_vertices: Every simple graph up to this size is checked

        Returns:
            Summary with oracle, wildcard and specialization checks
        """
        max_vertices = self.options.random_max_vertices if max_vertices is None else max_vertices
        max_edges = self.options.random_max_edges if max_edges is None else max_edges
        random_count = self.options.random_graphs if random_count is None else random_count
        grid = ColoringParams.grid(kl_max)

        self.logger.info(
            "Starting oracle sweep",
            extra={"max_vertices": max_vertices, "max_edges": max_edges, "kl_max": kl_max},
        )
        self._reset_memo()
        corpus = simple_graphs(simple_max_vertices)
        randoms = random_multigraphs(
            random_count,
            max_vertices,
            max_edges,
            self.options.random_seed,
        )

        summary = VerificationSummary(title="oracle")
        summary.add(self._oracle_sweep("oracle:simple", corpus, grid))
        summary.add(self._oracle_sweep("oracle:random", randoms, grid))
        summary.add(self._wildcard_sweep(corpus))
        for result in self._specialization_sweep(corpus, kl_max):
            summary.add(result)

        self.logger.info(
            "Oracle sweep completed",
            extra={"ok": summary.ok, "checked": summary.checked},
        )
        return summary

    # =====================
    # Identities
    # =====================

    def verify_identities(
        self, ell: int = 1, max_index: int = 20, k_max: int = 4
    ) -> VerificationSummary:
        """k = 1 identities at (1, l), the cycle identities over k, and the classical ones"""
        summary = VerificationSummary(title="identities")
        self.logger.info("Starting identity sweep", extra={"l": ell, "max": max_index})

        k1 = SeqParams.of(1, ell)
        for identity in K_ONE_IDENTITIES + (IdentityId.L3_3,):
            summary.add(verify_identity(identity, k1, max_index).as_check())
        for k in range(k_max + 1):
            if k + ell == 0:
                continue
            params = SeqParams.of(k, ell)
            for identity in ANY_K_IDENTITIES:
                summary.add(verify_identity(identity, params, max_index).as_check())
            if k <= 1:
                summary.add(verify_identity(IdentityId.L3_4, params, max_index).as_check())
        for identity in CLASSIC_IDENTITIES:
            summary.add(verify_identity(identity, max_index=max_index).as_check())

        self.logger.info(
            "Identity sweep completed",
            extra={"ok": summary.ok, "checked": summary.checked},
        )
        return summary

    # =====================
    # Sneaky graphs
    # =====================

    def verify_sneaky(self, r: int, s: int, t: int, ell: int) -> VerificationSummary:
        """
        chi_G(1, l) of sneaky(r, s, t) by counting, by both wildcard
        rules and by each side of the proof-step equation.
        """
        self._reset_memo()
        graph = sneaky_graph(r, s, t)
        params = ColoringParams.of(1, ell)
        a = a_seq(SeqParams.of(1, ell), r + s + t + 1)

        budget = self.budget
        fits = params.colors <= budget.bruteforce_max_colors
        if graph.n <= budget.bruteforce_max_vertices and fits:
            counted = count_bruteforce(graph, params, self.budget)
            oracle = "brute"
        else:
            counted = count_subset_expansion(graph, params, self.budget)
            oracle = "subset"

        chord_end = r + s + 1
        polys = {
            "vertex": chi_wildcard(graph, chord_end, WildcardMode.VERTEX, self.engine),
            "edge": chi_wildcard(graph, (r, chord_end), WildcardMode.EDGE, self.engine),
            "chi": self.engine.compute(graph),
        }
        candidates = {name: poly.evaluate(1, ell) for name, poly in polys.items()}
        candidates["P1.lhs"] = ell * a[r + s] * a[t] + ell ** 3 * a[r - 1] * a[s - 1] * a[t - 1]
        candidates["P1.rhs"] = a[r + s + t + 1] - ell ** 4 * a[r - 2] * a[s - 2] * a[t - 1]

        summary = VerificationSummary(title="sneaky")
        label = f"sneaky({r},{s},{t})[l={ell}]"
        for name, value in candidates.items():
            passed = value == counted
            summary.add(
                CheckResult(
                    name=f"{label}:{name}",
                    passed=passed,
                    checked=1,
                    detail=None if passed else f"{name}={value} {oracle}={counted}",
                )
            )
        self.logger.info(
            "Sneaky check completed",
            extra={"r": r, "s": s, "t": t, "l": ell, "ok": summary.ok},
        )
        return summary

    # =====================
    # Recurrences
    # =====================

    def verify_recurrences(
        self, kl_max: int = 4, terms: Optional[int] = None, max_n: int = 10
    ) -> VerificationSummary:
        """Cross-check, determinant closed form and the minimal-order dichotomy per (k, l)"""
        terms = self.options.recurrence_terms if terms is None else terms
        max_order = self.options.max_recurrence_order
        max_n = min(max_n, self.budget.crosscheck_max_n)
        self._reset_memo()
        summary = VerificationSummary(title="recurrences")
        self.logger.info("Starting recurrence sweep", extra={"kl_max": kl_max, "terms": terms})

        for p in ColoringParams.grid(kl_max):
            params = SeqParams.of(p.k, p.ell)
            label = f"[k={p.k},l={p.ell}]"

            try:
                report = cross_check_graphs(params, max_n, self.engine, self.budget)
                summary.add(
                    CheckResult(name=f"crosscheck{label}", passed=True, checked=report.checked)
                )
            except VerificationError as exc:
                summary.add(
                    CheckResult(name=f"crosscheck{label}", passed=False, detail=exc.message)
                )

            det, closed = hankel_det_B(params)
            summary.add(
                CheckResult(
                    name=f"detB{label}",
                    passed=det == closed,
                    checked=1,
                    detail=None if det == closed else f"det={det} closed={closed}",
                )
            )

            recurrence = minimal_recurrence(b_seq(params, terms), max_order)
            expect_short = p.k in (0, 1) or p.ell == 0
            expected = "<=2" if expect_short else "3"
            order = recurrence.order if recurrence else None
            passed = order is not None and (order <= 2) == expect_short
            summary.add(
                CheckResult(
                    name=f"minimal{label}",
                    passed=passed,
                    checked=1,
                    detail=None if passed else f"order={order} expected {expected}",
                )
            )

        self.logger.info(
            "Recurrence sweep completed",
            extra={"ok": summary.ok, "checked": summary.checked},
        )
        return summary

