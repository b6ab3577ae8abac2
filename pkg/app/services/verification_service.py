"""
Verification suites: each runs one family of exhaustive or formula checks and
returns a machine-readable VerificationReport
"""
from itertools import combinations
from typing import Callable, Dict, List, Optional
import logging

from app.core.config import settings
from app.core.counting import ensure_at_least
from app.models.graph import Graph
from app.models.schemas import EdgeRemovalEffect, VerificationReport, VerificationSuite
from app.services.closed_form_service import closed_form_service
from app.services.enumeration_service import enumeration_service
from app.services.extremal_service import MAX_COUNTEREXAMPLES, extremal_service
from app.services.family_service import family_service
from app.services.good_graph_service import good_graph_service
from app.services.graph6_service import graph6_service
from app.services.sigma_service import sigma_service

logger = logging.getLogger(__name__)

DEFAULT_MAX_N: Dict[VerificationSuite, int] = {
    VerificationSuite.CLOSED_FORMS: 14,
    VerificationSuite.RECURSION: 7,
    VerificationSuite.MIN_BOUND: 7,
    VerificationSuite.H_FAMILY: 7,
}

# Smallest max_n for which a range-based suite examines at least one graph
MIN_MAX_N: Dict[VerificationSuite, int] = {
    VerificationSuite.CLOSED_FORMS: 1,
    VerificationSuite.RECURSION: 0,
    VerificationSuite.MIN_BOUND: 1,
    VerificationSuite.H_FAMILY: 1,
}

PATH_CONVOLUTION_MAX_N = 40
PATH_EXACTNESS_MAX_N = 10_000
CLOSURE_SAMPLE_ORDER = 5


class VerificationService:
    """Dispatches verification suites"""

    def __init__(self):
        self._suites: Dict[VerificationSuite, Callable[..., VerificationReport]] = {
            VerificationSuite.CLOSED_FORMS: self.verify_closed_forms,
            VerificationSuite.MIN_BOUND: self.verify_min_bound,
            VerificationSuite.MAX_BOUND: self.verify_max_bound,
            VerificationSuite.H_FAMILY: self.verify_h_family,
            VerificationSuite.RECURSION: self.verify_recursion,
        }

    def run(
        self,
        suite: VerificationSuite,
        max_n: Optional[int] = None,
        n: Optional[int] = None,
        jobs: Optional[int] = None
    ) -> VerificationReport:
        """
        Run one suite

        Args:
            suite: which suite
            max_n: upper order for range-based suites
            n: single order (max-bound only; other suites treat it as max_n)
            jobs: worker processes for enumeration

        Returns:
            Report whose `passed` is true iff every check passed
        """
        logger.info(f"Running verification suite '{suite.value}'")
        if suite == VerificationSuite.MAX_BOUND:
            report = self.verify_max_bound(max_n=max_n, n=n, jobs=jobs)
        else:
            limit = max_n if max_n is not None else n
            if limit is None:
                limit = DEFAULT_MAX_N[suite]
            ensure_at_least(f"{suite.value} max_n", limit, MIN_MAX_N[suite])
            report = self._suites[suite](limit, jobs=jobs)

        if report.passed:
            logger.info(f"Suite '{suite.value}' passed {len(report.checks)} checks")
        else:
            failed = [check.name for check in report.checks if not check.passed]
            logger.warning(f"Suite '{suite.value}' failed: {', '.join(failed)}")
        return report

    # ==================== Suites ====================

    def verify_closed_forms(self, max_n: int, jobs: Optional[int] = None) -> VerificationReport:
        report = VerificationReport(suite=VerificationSuite.CLOSED_FORMS.value, parameters={"max_n": max_n})

        sigma1_failures: List[str] = []
        sigma0_failures: List[str] = []
        checked = 0
        for spec in family_service.instances(max_n):
            graph = family_service.construct(spec)
            checked += 1
            if closed_form_service.sigma1_family(spec) != sigma_service.sigma_k_brute(graph, 1):
                sigma1_failures.append(str(spec))
            if closed_form_service.sigma0_family(spec) != sigma_service.sigma_k_brute(graph, 0):
                sigma0_failures.append(str(spec))
        report.add("sigma1-family-vs-oracle", not sigma1_failures, checked=checked,
                   counterexamples=sigma1_failures[:MAX_COUNTEREXAMPLES],
                   detail=f"every family instance of order <= {max_n}")
        report.add("sigma0-family-vs-oracle", not sigma0_failures, checked=checked,
                   counterexamples=sigma0_failures[:MAX_COUNTEREXAMPLES])

        convolution = [
            f"path:{n}" for n in range(1, PATH_CONVOLUTION_MAX_N + 1)
            if closed_form_service.sigma1_path(n) != closed_form_service.sigma1_path_convolution(n)
        ]
        report.add("path-convolution", not convolution, checked=PATH_CONVOLUTION_MAX_N,
                   counterexamples=convolution)

        inexact = [
            str(n) for n in range(1, PATH_EXACTNESS_MAX_N + 1)
            if not closed_form_service.path_division_is_exact(n)
        ]
        report.add("path-division-exact", not inexact, checked=PATH_EXACTNESS_MAX_N,
                   counterexamples=inexact[:MAX_COUNTEREXAMPLES])

        orders = range(3, max(max_n, 8) + 1)
        wrong = [
            str(n) for n in orders
            if closed_form_service.complete_graph_is_not_extremal(n) != (n >= 7)
        ]
        report.add("complete-graph-not-extremal", not wrong, checked=len(orders),
                   counterexamples=wrong, detail="σ1(U_n) > σ1(K_n) exactly for n >= 7")
        return report

    def verify_recursion(self, max_n: int, jobs: Optional[int] = None) -> VerificationReport:
        report = VerificationReport(suite=VerificationSuite.RECURSION.value, parameters={"max_n": max_n})

        oracle_failures: List[str] = []
        total_failures: List[str] = []
        removal_failures: List[str] = []
        checked = 0
        for n in range(0, max_n + 1):
            for graph in enumeration_service.enumerate_graphs(n, jobs=jobs):
                checked += 1
                profile = sigma_service.sigma_profile(graph)
                label = graph6_service.emit(graph)
                if sigma_service.sigma_pair(graph) != (profile[0], profile[1] if len(profile) > 1 else 0):
                    oracle_failures.append(label)
                if sum(profile) != 1 << n:
                    total_failures.append(label)
                if graph.size and n <= 6:
                    value = sigma_service.sigma1(graph)
                    if any(sigma_service.sigma1(graph.delete_vertices(1 << v)) >= value for v in range(n)):
                        removal_failures.append(label)

        report.add("recursion-vs-oracle", not oracle_failures, checked=checked,
                   counterexamples=oracle_failures[:MAX_COUNTEREXAMPLES],
                   detail=f"σ0 and σ1 on every class of order <= {max_n}")
        report.add("profile-sums-to-2^n", not total_failures, checked=checked,
                   counterexamples=total_failures[:MAX_COUNTEREXAMPLES])
        report.add("vertex-removal-decreases", not removal_failures, checked=checked,
                   counterexamples=removal_failures[:MAX_COUNTEREXAMPLES])

        witnesses = [
            ("K3", family_service.complete(3), (0, 1), EdgeRemovalEffect.DECREASE),
            ("P3", family_service.path(3), (0, 1), EdgeRemovalEffect.UNCHANGED),
            ("P4", family_service.path(4), (1, 2), EdgeRemovalEffect.INCREASE),
        ]
        wrong = []
        effects = {}
        for name, graph, (u, v), expected in witnesses:
            effect, before, after = sigma_service.edge_removal_effect(graph, u, v)
            effects[name] = [before, after]
            if effect != expected:
                wrong.append(name)
        report.add("edge-removal-witnesses", not wrong, checked=len(witnesses),
                   counterexamples=wrong, values=effects)
        return report

    def verify_min_bound(self, max_n: int, jobs: Optional[int] = None) -> VerificationReport:
        report = extremal_service.verify_min_bound(max_n, jobs=jobs)
        if max_n >= 2:
            report.extend(extremal_service.verify_star_minimum(max_n, jobs=jobs), prefix="star-minimum/")
        return report

    def verify_max_bound(
        self,
        max_n: Optional[int] = None,
        n: Optional[int] = None,
        jobs: Optional[int] = None
    ) -> VerificationReport:
        if n is not None:
            orders = [n]
        else:
            upper = max_n if max_n is not None else settings.MAX_BOUND_MAX_N
            ensure_at_least("upper-bound order", upper, settings.MAX_BOUND_MIN_N, "MAX_BOUND_MIN_N")
            orders = list(range(settings.MAX_BOUND_MIN_N, upper + 1))
        return extremal_service.verify_max_bound(orders, jobs=jobs)

    def verify_h_family(self, max_n: int, jobs: Optional[int] = None) -> VerificationReport:
        report = VerificationReport(suite=VerificationSuite.H_FAMILY.value, parameters={"max_n": max_n})

        result = good_graph_service.verify_H_characterization(max_n)
        report.add(
            "closure-equals-good-graphs",
            result.equal,
            checked=result.good_size,
            counterexamples=result.missing_from_closure + result.extra_in_closure,
            detail=f"closure {result.closure_size}, good {result.good_size}",
            missing=result.missing_from_closure,
            extra=result.extra_in_closure,
        )

        sample = good_graph_service.members_as_list(min(CLOSURE_SAMPLE_ORDER, max_n))
        pairs = list(combinations(sample, 2)) + [(g, g) for g in sample]
        not_closed = [
            f"{graph6_service.emit(g)}+{graph6_service.emit(h)}"
            for g, h in pairs if not good_graph_service.is_good(g.join(h))
        ]
        report.add("join-closed", not not_closed, checked=len(pairs),
                   counterexamples=not_closed[:MAX_COUNTEREXAMPLES])

        not_extended = [
            f"{graph6_service.emit(g)}+E{ell}"
            for g in sample for ell in (1, 2, 3)
            if not good_graph_service.is_good(g.join(Graph.edgeless(ell)))
        ]
        report.add("edgeless-join-closed", not not_extended, checked=3 * len(sample),
                   counterexamples=not_extended[:MAX_COUNTEREXAMPLES])

        members = good_graph_service.members_as_list(max_n)
        not_tight = [graph6_service.emit(g) for g in members if sigma_service.sigma1(g) != g.size]
        report.add("members-meet-lower-bound", not not_tight, checked=len(members),
                   counterexamples=not_tight[:MAX_COUNTEREXAMPLES], detail="σ1 = m on every member")
        return report


# Global instance
verification_service = VerificationService()
