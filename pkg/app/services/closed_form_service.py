"""
Exact closed forms for σ0 and σ1 of the named families

Golden-ratio expressions are evaluated through the integer Fibonacci and
Lucas sequences: (α^k - β^k)/√5 = F(k) and α^k + β^k = L(k).
"""
from functools import lru_cache
from math import comb
from typing import Iterable, Tuple
import logging

from app.core.counting import Count, checked_count, exact_div
from app.core.exceptions import GraphError
from app.models.schemas import FamilySpec, GraphFamily

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def fibonacci_lucas(k: int) -> Tuple[int, int]:
    """
    (F(k), L(k)) by fast doubling

    F(0)=0, F(1)=1; L(0)=2, L(1)=1.
    """
    if k < 0:
        raise GraphError(f"Fibonacci index must be non-negative, got {k}")
    f, g = 0, 1  # F(j), F(j+1)
    for bit in bin(k)[2:]:
        f, g = f * (2 * g - f), f * f + g * g
        if bit == "1":
            f, g = g, f + g
    return f, 2 * g - f


def _sigma0_path(t: int) -> int:
    return 1 if t <= 0 else fibonacci_lucas(t + 2)[0]


def _sigma1_path(n: int) -> int:
    if n <= 0:
        return 0
    fib_prev, _ = fibonacci_lucas(n - 1)
    _, lucas = fibonacci_lucas(n)
    return exact_div((n - 1) * lucas + 2 * fib_prev, 5)


class ClosedFormService:
    """Evaluates the family formulas in exact integers"""

    def sigma0_path(self, t: int) -> Count:
        """σ0(P_t); 1 for t <= 0"""
        return checked_count(_sigma0_path(t))

    def sigma1_path(self, n: int) -> Count:
        """σ1(P_n) = ((n-1)L(n) + 2F(n-1)) / 5; 0 for n <= 0"""
        return checked_count(_sigma1_path(n))

    def path_division_is_exact(self, n: int) -> bool:
        """(n-1)L(n) + 2F(n-1) is a multiple of 5; unchecked width"""
        fib_prev, _ = fibonacci_lucas(n - 1)
        _, lucas = fibonacci_lucas(n)
        return ((n - 1) * lucas + 2 * fib_prev) % 5 == 0

    def sigma1_path_convolution(self, n: int) -> Count:
        """σ1(P_n) as the sum over edges of σ0 of the two leftover paths"""
        total = sum(_sigma0_path(i - 2) * _sigma0_path(n - i - 2) for i in range(1, n))
        return checked_count(total)

    def sigma1_family(self, spec: FamilySpec) -> Count:
        """
        σ1 of a family member from its closed form

        Args:
            spec: validated family spec

        Returns:
            Exact count; equals the recursion on construct(spec)
        """
        p0, p1 = _sigma0_path, _sigma1_path
        family = spec.family
        if family == GraphFamily.PATH:
            value = p1(spec.param("n"))
        elif family == GraphFamily.CYCLE:
            n = spec.param("n")
            value = n * p0(n - 4)
        elif family == GraphFamily.COMPLETE:
            value = comb(spec.param("n"), 2)
        elif family == GraphFamily.STAR:
            value = spec.param("n") - 1
        elif family == GraphFamily.COMPLETE_BIPARTITE:
            value = spec.param("r") * spec.param("s")
        elif family == GraphFamily.WHEEL:
            n = spec.param("n")
            value = (n - 1) * (1 + fibonacci_lucas(n - 3)[0])
        elif family == GraphFamily.UNICYCLIC_STAR:
            n = spec.param("n")
            value = n - 1 + 2 ** (n - 3)
        elif family == GraphFamily.BROOM:
            n, k = spec.params
            value = p1(k - 1) * 2 ** (n - k) + p1(k - 2) + p0(k - 3) + (n - k) * p0(k - 2)
        elif family == GraphFamily.LOLLIPOP:
            n, k = spec.params
            value = (
                (n - k + 1) * p1(k - 1)
                + comb(n - k, 2) * p0(k - 1)
                + p1(k - 2)
                + p0(k - 3)
                + (n - k) * p0(k - 2)
            )
        elif family == GraphFamily.TADPOLE:
            n, k = spec.params
            j = n - k
            value = (
                p1(k - 1) * p0(j) + p1(j) * p0(k - 1)
                + p1(k - 2) * p0(j - 2) + p1(j - 2) * p0(k - 2)
                + p0(k - 3) * p0(j - 2)
                + 2 * p0(k - 2) * p0(j - 3)
            )
        elif family == GraphFamily.MATCHING:
            m, r = spec.params
            value = m * 3 ** (m - 1) * 2 ** r if m else 0
        elif family == GraphFamily.EDGELESS:
            value = 0
        else:
            raise ValueError(f"No σ1 closed form for family: {family}")
        return checked_count(value)

    def sigma0_family(self, spec: FamilySpec) -> Count:
        """σ0 (Merrifield-Simmons index) of a family member"""
        p0 = _sigma0_path
        family = spec.family
        if family == GraphFamily.PATH:
            value = p0(spec.param("n"))
        elif family == GraphFamily.CYCLE:
            value = fibonacci_lucas(spec.param("n"))[1]
        elif family == GraphFamily.COMPLETE:
            value = spec.param("n") + 1
        elif family == GraphFamily.STAR:
            value = 2 ** (spec.param("n") - 1) + 1
        elif family == GraphFamily.COMPLETE_BIPARTITE:
            value = 2 ** spec.param("r") + 2 ** spec.param("s") - 1
        elif family == GraphFamily.WHEEL:
            value = fibonacci_lucas(spec.param("n") - 1)[1] + 1
        elif family == GraphFamily.UNICYCLIC_STAR:
            value = 3 * 2 ** (spec.param("n") - 3) + 1
        elif family == GraphFamily.BROOM:
            n, k = spec.params
            value = p0(k - 1) * 2 ** (n - k) + p0(k - 2)
        elif family == GraphFamily.LOLLIPOP:
            n, k = spec.params
            value = p0(k - 1) * (n - k + 1) + p0(k - 2)
        elif family == GraphFamily.TADPOLE:
            n, k = spec.params
            value = p0(k - 1) * p0(n - k) + p0(k - 2) * p0(n - k - 2)
        elif family == GraphFamily.MATCHING:
            m, r = spec.params
            value = 3 ** m * 2 ** r
        elif family == GraphFamily.EDGELESS:
            value = 2 ** spec.param("n")
        else:
            raise ValueError(f"No σ0 closed form for family: {family}")
        return checked_count(value)

    def sigma1_union_of_families(self, specs: Iterable[FamilySpec]) -> Count:
        """σ1 of the disjoint union, folding the union rule over closed forms"""
        s0, s1 = 1, 0
        for spec in specs:
            c0, c1 = self.sigma0_family(spec), self.sigma1_family(spec)
            s0, s1 = s0 * c0, s1 * c0 + s0 * c1
        return checked_count(s1)

    def complete_graph_is_not_extremal(self, n: int) -> bool:
        """σ1(U_n) > σ1(K_n), true exactly from n = 7 on"""
        unicyclic = self.sigma1_family(FamilySpec.of(GraphFamily.UNICYCLIC_STAR, n))
        complete = self.sigma1_family(FamilySpec.of(GraphFamily.COMPLETE, n))
        return unicyclic > complete


# Global instance
closed_form_service = ClosedFormService()
