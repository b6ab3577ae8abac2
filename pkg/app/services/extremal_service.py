"""
σ1 distributions over isomorphism classes and the exhaustive checks of the
lower bound σ1 >= m and the upper bound σ1 <= 27 * 2^(n-6)
"""
from typing import Iterable, List, Optional, Sequence, Set, Tuple
import logging

from app.core.config import settings
from app.core.counting import ensure_at_least, ensure_within
from app.core.exceptions import GuardExceededError
from app.models.graph import Graph
from app.models.schemas import (
    CyclePairValue,
    DistributionEntry,
    DistributionFilter,
    FamilySpec,
    FilterKind,
    GraphFamily,
    SigmaDistribution,
    VerificationReport,
)
from app.services.canonical_service import CanonicalCode, canonical_service
from app.services.closed_form_service import closed_form_service
from app.services.enumeration_service import enumeration_service
from app.services.family_service import family_service
from app.services.good_graph_service import good_graph_service
from app.services.graph6_service import graph6_service
from app.services.sigma_service import sigma_service

logger = logging.getLogger(__name__)

# Cycle pairs whose σ1 values bound the disconnected cases of the upper bound
CYCLE_PAIRS: Tuple[Tuple[int, int], ...] = ((3, 4), (4, 4), (3, 5), (4, 5), (3, 6), (4, 6), (5, 5))

MAX_COUNTEREXAMPLES = 20


def max_bound(n: int) -> int:
    """27 * 2^(n-6), the exact form of (27/64) * 2^n"""
    return 27 << (n - 6)


class ExtremalService:
    """Distributions and bound verification over exhaustive enumerations"""

    def sigma1_distribution(
        self,
        n: int,
        graph_filter: Optional[DistributionFilter] = None,
        jobs: Optional[int] = None
    ) -> SigmaDistribution:
        graph_filter = graph_filter or DistributionFilter()
        entries = [
            DistributionEntry(
                canonical=code.hex(),
                graph6=graph6_service.emit(graph),
                n=graph.n,
                m=graph.size,
                sigma1=sigma_service.sigma1(graph),
            )
            for code, graph in enumeration_service.enumerate_classes(n, graph_filter, jobs)
        ]
        logger.info(f"σ1 distribution for n={n} ({graph_filter}): {len(entries)} classes")
        return SigmaDistribution(n=n, filter=graph_filter, entries=entries)

    def verify_min_bound(self, n_max: int, jobs: Optional[int] = None) -> VerificationReport:
        """
        Every connected graph has σ1 >= m, with equality exactly for good graphs

        Raises:
            GuardExceededError: n_max above MIN_BOUND_MAX_N or below 1
        """
        ensure_at_least("lower-bound order", n_max, 1)
        ensure_within("lower-bound order", n_max, settings.MIN_BOUND_MAX_N, "MIN_BOUND_MAX_N")
        report = VerificationReport(suite="min-bound", parameters={"max_n": n_max})
        connected = DistributionFilter(kind=FilterKind.CONNECTED)

        below: List[str] = []
        mismatched: List[str] = []
        checked = 0
        equality = 0
        for n in range(1, n_max + 1):
            for _, graph in enumeration_service.enumerate_classes(n, connected, jobs):
                checked += 1
                value = sigma_service.sigma1(graph)
                tight = value == graph.size
                equality += tight
                if value < graph.size:
                    below.append(graph6_service.emit(graph))
                if tight != good_graph_service.is_good(graph):
                    mismatched.append(graph6_service.emit(graph))

        report.add(
            "sigma1-at-least-size",
            not below,
            checked=checked,
            counterexamples=below[:MAX_COUNTEREXAMPLES],
            detail=f"{checked} connected graphs of order <= {n_max}",
        )
        report.add(
            "equality-iff-good",
            not mismatched,
            checked=checked,
            counterexamples=mismatched[:MAX_COUNTEREXAMPLES],
            detail=f"{equality} graphs meet σ1 = m",
            equality_count=equality,
        )
        return report

    def verify_star_minimum(self, n_max: int, jobs: Optional[int] = None) -> VerificationReport:
        """
        Among connected graphs, and among trees, of order n >= 2 the minimum
        σ1 is n - 1 and only the star reaches it
        """
        ensure_at_least("star-minimum order", n_max, 2)
        ensure_within("star-minimum order", n_max, settings.MIN_BOUND_MAX_N, "MIN_BOUND_MAX_N")
        report = VerificationReport(suite="star-minimum", parameters={"max_n": n_max})
        connected = DistributionFilter(kind=FilterKind.CONNECTED)
        for n in range(2, n_max + 1):
            star = canonical_service.canonical_code(family_service.star(n))
            classes = enumeration_service.enumerate_classes(n, connected, jobs)
            trees = [(code, graph) for code, graph in classes if graph.size == n - 1]
            for label, pool in (("connected", classes), ("trees", trees)):
                values = [(sigma_service.sigma1(graph), code) for code, graph in pool]
                minimum = min(value for value, _ in values)
                minimizers = [code for value, code in values if value == minimum]
                report.add(
                    f"{label}-order-{n}",
                    minimum == n - 1 and minimizers == [star],
                    checked=len(values),
                    counterexamples=[code.hex() for code in minimizers if code != star],
                    detail=f"minimum σ1 = {minimum}, expected {n - 1}",
                    minimum=minimum,
                )
        return report

    def expected_maximizers(self, n: int) -> Set[CanonicalCode]:
        """3K2 ∪ (n-6)K1, plus 4K2 ∪ (n-8)K1 from n = 8"""
        expected = {canonical_service.canonical_code(family_service.matching(3, n - 6))}
        if n >= 8:
            expected.add(canonical_service.canonical_code(family_service.matching(4, n - 8)))
        return expected

    def verify_max_bound(self, orders: Iterable[int], jobs: Optional[int] = None) -> VerificationReport:
        """
        σ1 <= 27 * 2^(n-6) over every graph of order n, with the expected
        equality set

        Raises:
            GuardExceededError: an order outside MAX_BOUND_MIN_N..MAX_BOUND_MAX_N,
                or no order at all
        """
        orders = sorted(set(orders))
        if not orders:
            raise GuardExceededError("upper-bound order count", 0, 1, below=True)
        for n in orders:
            if n < settings.MAX_BOUND_MIN_N:
                raise GuardExceededError("upper-bound order", n, settings.MAX_BOUND_MIN_N, "MAX_BOUND_MIN_N", below=True)
            ensure_within("upper-bound order", n, settings.MAX_BOUND_MAX_N, "MAX_BOUND_MAX_N")

        report = VerificationReport(suite="max-bound", parameters={"orders": orders})
        for n in orders:
            bound = max_bound(n)
            distribution = self.sigma1_distribution(n, jobs=jobs)
            over = [e.graph6 for e in distribution.entries if e.sigma1 > bound]
            report.add(
                f"bound-order-{n}",
                not over,
                checked=len(distribution.entries),
                counterexamples=over[:MAX_COUNTEREXAMPLES],
                detail=f"max σ1 = {distribution.max_value()}, bound {bound}",
                bound=bound,
                max_value=distribution.max_value(),
            )

            attaining = {bytes.fromhex(e.canonical) for e in distribution.entries if e.sigma1 == bound}
            expected = self.expected_maximizers(n)
            maximizers = [e.graph6 for e in distribution.entries if e.sigma1 == bound]
            report.add(
                f"equality-order-{n}",
                attaining == expected,
                checked=len(distribution.entries),
                counterexamples=[code.hex() for code in sorted(attaining ^ expected)],
                detail=f"{len(attaining)} graph(s) reach the bound",
                maximizers=maximizers,
            )

        pairs = self.cycle_pair_values()
        report.add(
            "cycle-pairs",
            all(pair.agrees for pair in pairs),
            checked=len(pairs),
            counterexamples=[pair.label for pair in pairs if not pair.agrees],
            values={pair.label: pair.recursion for pair in pairs},
        )
        return report

    def cycle_pair_values(self, pairs: Sequence[Tuple[int, int]] = CYCLE_PAIRS) -> List[CyclePairValue]:
        """σ1(C_a ∪ C_b) by recursion on the union and by the closed-form union rule"""
        values = []
        for a, b in pairs:
            union = family_service.cycle(a).disjoint_union(family_service.cycle(b))
            closed = closed_form_service.sigma1_union_of_families(
                [FamilySpec.of(GraphFamily.CYCLE, a), FamilySpec.of(GraphFamily.CYCLE, b)]
            )
            values.append(CyclePairValue(a=a, b=b, recursion=sigma_service.sigma1(union), closed_form=closed))
        return values


# Global instance
extremal_service = ExtremalService()
