"""
Pydantic models for family specs, requests, reports and distributions
"""
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from typing import Any, Dict, List, Optional, Tuple
from enum import Enum

from app.core.exceptions import GraphError
from app.models.graph import MAX_ORDER, Graph


# ==================== Enums ====================

class GraphFamily(str, Enum):
    """Named parametric graph families"""
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete-bipartite"
    WHEEL = "wheel"
    BROOM = "broom"
    LOLLIPOP = "lollipop"
    TADPOLE = "tadpole"
    UNICYCLIC_STAR = "unicyclic-star"
    MATCHING = "matching"  # mK2 ∪ rK1
    EDGELESS = "edgeless"


class FilterKind(str, Enum):
    ALL = "all"
    CONNECTED = "connected"
    SIZE = "size"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    TSV = "tsv"


class VerificationSuite(str, Enum):
    CLOSED_FORMS = "closed-forms"
    MIN_BOUND = "min-bound"
    MAX_BOUND = "max-bound"
    H_FAMILY = "h-family"
    RECURSION = "recursion"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class EdgeRemovalEffect(str, Enum):
    DECREASE = "decrease"
    UNCHANGED = "unchanged"
    INCREASE = "increase"


# ==================== Family specs ====================

# Parameter names per family, in grammar order
FAMILY_PARAMETERS: Dict[GraphFamily, Tuple[str, ...]] = {
    GraphFamily.PATH: ("n",),
    GraphFamily.CYCLE: ("n",),
    GraphFamily.COMPLETE: ("n",),
    GraphFamily.STAR: ("n",),
    GraphFamily.COMPLETE_BIPARTITE: ("r", "s"),
    GraphFamily.WHEEL: ("n",),
    GraphFamily.BROOM: ("n", "k"),
    GraphFamily.LOLLIPOP: ("n", "k"),
    GraphFamily.TADPOLE: ("n", "k"),
    GraphFamily.UNICYCLIC_STAR: ("n",),
    GraphFamily.MATCHING: ("m", "r"),
    GraphFamily.EDGELESS: ("n",),
}

FAMILY_ALIASES: Dict[str, GraphFamily] = {
    "bipartite": GraphFamily.COMPLETE_BIPARTITE,
    "kbip": GraphFamily.COMPLETE_BIPARTITE,
    "unicyclic": GraphFamily.UNICYCLIC_STAR,
    "empty": GraphFamily.EDGELESS,
}


class FamilySpec(BaseModel):
    """
    Tagged description of a named graph family

    Examples:
        FamilySpec.of(GraphFamily.BROOM, 7, 3)
        FamilySpec.parse("broom:7:3")
    """
    model_config = ConfigDict(frozen=True)

    family: GraphFamily = Field(..., description="Family tag")
    params: Tuple[int, ...] = Field(..., description="Parameters in grammar order")

    @model_validator(mode='after')
    def validate_parameters(self):
        names = FAMILY_PARAMETERS[self.family]
        if len(self.params) != len(names):
            raise ValueError(
                f"{self.family.value} takes {len(names)} parameter(s) {names}, got {len(self.params)}"
            )
        p = dict(zip(names, self.params))
        family = self.family
        if family == GraphFamily.EDGELESS:
            _require(p["n"] >= 0, "edgeless requires n >= 0")
        elif family in (GraphFamily.PATH, GraphFamily.COMPLETE, GraphFamily.STAR):
            _require(p["n"] >= 1, f"{family.value} requires n >= 1")
        elif family == GraphFamily.CYCLE:
            _require(p["n"] >= 3, "cycle requires n >= 3")
        elif family == GraphFamily.WHEEL:
            _require(p["n"] >= 4, "wheel requires n >= 4")
        elif family == GraphFamily.UNICYCLIC_STAR:
            _require(p["n"] >= 3, "unicyclic-star requires n >= 3")
        elif family == GraphFamily.COMPLETE_BIPARTITE:
            _require(p["r"] >= 1 and p["s"] >= 1, "complete-bipartite requires r, s >= 1")
        elif family == GraphFamily.MATCHING:
            _require(p["m"] >= 0 and p["r"] >= 0, "matching requires m, r >= 0")
        elif family in (GraphFamily.BROOM, GraphFamily.LOLLIPOP):
            _require(p["k"] >= 2, f"{family.value} requires k >= 2")
            _require(p["n"] >= p["k"], f"{family.value} requires n >= k")
        elif family == GraphFamily.TADPOLE:
            _require(p["k"] >= 2, "tadpole requires k >= 2")
            _require(p["n"] - p["k"] >= 2, "tadpole requires n - k >= 2")
        _require(self.order <= MAX_ORDER, f"order {self.order} exceeds the {MAX_ORDER}-vertex cap")
        return self

    @classmethod
    def of(cls, family: GraphFamily, *params: int) -> "FamilySpec":
        return cls(family=family, params=tuple(params))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """
        Parse the `name:param[:param]` mini-grammar

        Raises:
            GraphError: unknown family, non-integer or invalid parameters
        """
        name, *raw = text.strip().lower().split(":")
        try:
            family = FAMILY_ALIASES.get(name) or GraphFamily(name)
        except ValueError:
            known = ", ".join(f.value for f in GraphFamily)
            raise GraphError(f"Unknown family '{name}' (known: {known})")
        try:
            params = tuple(int(value) for value in raw)
        except ValueError:
            raise GraphError(f"Family parameters must be integers: '{text}'")
        try:
            return cls(family=family, params=params)
        except ValidationError as e:
            messages = "; ".join(err["msg"] for err in e.errors())
            raise GraphError(f"Invalid family spec '{text}': {messages}")

    def param(self, name: str) -> int:
        return self.params[FAMILY_PARAMETERS[self.family].index(name)]

    @property
    def order(self) -> int:
        if self.family == GraphFamily.COMPLETE_BIPARTITE:
            return self.params[0] + self.params[1]
        if self.family == GraphFamily.MATCHING:
            return 2 * self.params[0] + self.params[1]
        return self.params[0]

    def __str__(self) -> str:
        return ":".join([self.family.value, *(str(p) for p in self.params)])


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


# ==================== Good graphs ====================

class GoodnessReport(BaseModel):
    """Result of checking every edge of a graph for goodness"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    graph: Graph = Field(..., exclude=True, description="Graph that was checked")
    bad_edges: List[Tuple[int, int]] = Field(default_factory=list, description="Edges that are not good")
    is_connected: bool = Field(..., description="Whether the graph is connected")
    is_good: bool = Field(..., description="Connected and every edge good")


class HCharacterizationResult(BaseModel):
    """Comparison of the join closure against the good graphs found by enumeration"""
    max_order: int
    equal: bool
    closure_size: int = Field(..., description="Members produced by the join closure")
    good_size: int = Field(..., description="Good graphs found by exhaustive filtering")
    missing_from_closure: List[str] = Field(default_factory=list, description="graph6 of good graphs the closure missed")
    extra_in_closure: List[str] = Field(default_factory=list, description="graph6 of closure members that are not good")


# ==================== Distributions ====================

class DistributionFilter(BaseModel):
    """Which isomorphism classes a distribution covers"""
    model_config = ConfigDict(frozen=True)

    kind: FilterKind = FilterKind.ALL
    size: Optional[int] = Field(None, ge=0, description="Edge count for kind=size")

    @model_validator(mode='after')
    def validate_size(self):
        if (self.kind == FilterKind.SIZE) != (self.size is not None):
            raise ValueError("size must be given exactly when kind is 'size'")
        return self

    @classmethod
    def parse(cls, text: str) -> "DistributionFilter":
        """Accepts `all`, `connected` or `size:m`"""
        kind, _, size = text.strip().lower().partition(":")
        try:
            if kind == FilterKind.SIZE.value:
                return cls(kind=FilterKind.SIZE, size=int(size))
            return cls(kind=FilterKind(kind))
        except ValueError:
            raise GraphError(f"Invalid filter '{text}' (use all, connected or size:m)")

    def accepts(self, graph: Graph) -> bool:
        if self.kind == FilterKind.CONNECTED:
            return graph.is_connected
        if self.kind == FilterKind.SIZE:
            return graph.size == self.size
        return True

    def __str__(self) -> str:
        return f"size:{self.size}" if self.kind == FilterKind.SIZE else self.kind.value


class DistributionEntry(BaseModel):
    """One isomorphism class with its σ1 value"""
    canonical: str = Field(..., description="Canonical code (hex)")
    graph6: str = Field(..., description="graph6 of the canonical representative")
    n: int
    m: int
    sigma1: int


class CyclePairValue(BaseModel):
    """σ1(C_a ∪ C_b) by the recursion and by the closed-form union rule"""
    a: int
    b: int
    recursion: int
    closed_form: int

    @property
    def agrees(self) -> bool:
        return self.recursion == self.closed_form

    @property
    def label(self) -> str:
        return f"C{self.a}∪C{self.b}"


class SigmaDistribution(BaseModel):
    """σ1 over every isomorphism class of order n passing a filter"""
    n: int
    filter: DistributionFilter = Field(default_factory=DistributionFilter)
    entries: List[DistributionEntry] = Field(default_factory=list)

    def values(self) -> List[int]:
        return sorted(entry.sigma1 for entry in self.entries)

    def max_value(self) -> int:
        return max((entry.sigma1 for entry in self.entries), default=0)

    def maximizers(self) -> List[DistributionEntry]:
        best = self.max_value()
        return [entry for entry in self.entries if entry.sigma1 == best]

    def sorted_rows(self) -> List[DistributionEntry]:
        """Rows ordered by (σ1, canonical code)"""
        return sorted(self.entries, key=lambda e: (e.sigma1, e.canonical))


# ==================== Verification reports ====================

class CheckResult(BaseModel):
    """One named check inside a verification report"""
    name: str = Field(..., description="Check identifier")
    status: CheckStatus = Field(..., description="pass or fail")
    checked: int = Field(default=0, description="Number of instances examined")
    counterexamples: List[str] = Field(default_factory=list, description="Failing instances (graph6 or spec)")
    detail: Optional[str] = Field(None, description="Human-readable summary")
    data: Dict[str, Any] = Field(default_factory=dict, description="Extra machine-readable values")

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


class VerificationReport(BaseModel):
    """Machine-readable result of a verification suite"""
    suite: str = Field(..., description="Suite or operation name")
    parameters: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(
        self,
        name: str,
        ok: bool,
        checked: int = 0,
        counterexamples: Optional[List[str]] = None,
        detail: Optional[str] = None,
        **data: Any
    ) -> CheckResult:
        check = CheckResult(
            name=name,
            status=CheckStatus.PASS if ok else CheckStatus.FAIL,
            checked=checked,
            counterexamples=counterexamples or [],
            detail=detail,
            data=data,
        )
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for check in other.checks:
            self.checks.append(check.model_copy(update={"name": f"{prefix}{check.name}"}))

    def summary(self) -> Dict[str, Any]:
        data = self.model_dump(mode="json")
        data["passed"] = self.passed
        return data


# ==================== Compute requests ====================

class ComputeRequest(BaseModel):
    """Request model for σ_k of one graph"""
    graph6: Optional[str] = Field(None, description="graph6 encoding")
    family: Optional[str] = Field(None, description="Family spec, e.g. 'broom:7:3'")
    k: int = Field(default=1, ge=0, description="Number of induced edges")

    @model_validator(mode='after')
    def validate_single_source(self):
        if (self.graph6 is None) == (self.family is None):
            raise ValueError("Provide exactly one of graph6 or family")
        return self

    class Config:
        json_schema_extra = {
            "example": {"family": "path:4", "k": 1}
        }


class ComputeResult(BaseModel):
    """σ_k of one graph"""
    source: str = Field(..., description="Input as given")
    graph6: str
    n: int
    m: int
    k: int
    value: int


class CommandSpec(BaseModel):
    """Validated CLI invocation"""
    subcommand: str
    graph6: Optional[str] = None
    family: Optional[str] = None
    file: Optional[str] = Field(None, description="Path of a graph6-per-line file, '-' for stdin")
    output_format: OutputFormat = OutputFormat.TABLE
    jobs: int = Field(default=1, ge=1)

    @field_validator("graph6", "family", "file")
    @classmethod
    def blank_to_none(cls, v: Optional[str]) -> Optional[str]:
        return v if v is None or v.strip() else None

    @model_validator(mode='after')
    def validate_sources(self):
        given = [s for s in (self.graph6, self.family, self.file) if s is not None]
        if len(given) > 1:
            raise ValueError("Give exactly one of --graph6, --family, --file")
        return self

    @property
    def reads_stdin(self) -> bool:
        return self.graph6 is None and self.family is None and self.file in (None, "-")
