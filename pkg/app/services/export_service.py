"""
Service for rendering results as a human table, JSON or TSV
"""
from typing import Any, Callable, Dict, List, Sequence
import json
import logging

from app.models.schemas import ComputeResult, OutputFormat, SigmaDistribution, VerificationReport

logger = logging.getLogger(__name__)


def _table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _tsv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    return "\n".join("\t".join(str(c) for c in row) for row in [header, *rows])


class ExportService:
    """Renders compute results, distributions and verification reports"""

    def _dispatch(self, format: OutputFormat, renderers: Dict[OutputFormat, Callable[[], str]]) -> str:
        try:
            return renderers[format]()
        except KeyError:
            raise ValueError(f"Unsupported output format: {format}")

    # ==================== compute ====================

    def render_compute(self, results: List[ComputeResult], format: OutputFormat) -> str:
        """
        σ_k per input graph

        The table format prints bare values, one per line, when there is a
        single result.
        """
        header = ("graph6", "n", "m", "k", "sigma")
        rows = [(r.graph6, r.n, r.m, r.k, r.value) for r in results]

        def table() -> str:
            if len(results) == 1:
                return str(results[0].value)
            return _table(header, rows)

        return self._dispatch(format, {
            OutputFormat.TABLE: table,
            OutputFormat.JSON: lambda: json.dumps([r.model_dump() for r in results], indent=2),
            OutputFormat.TSV: lambda: _tsv(header, rows),
        })

    # ==================== tables ====================

    def render_distribution(self, distribution: SigmaDistribution, format: OutputFormat) -> str:
        """Rows (graph6, m, σ1) ordered by (σ1, canonical code)"""
        entries = distribution.sorted_rows()
        header = ("graph6", "m", "sigma1")
        rows = [(e.graph6, e.m, e.sigma1) for e in entries]

        def as_json() -> str:
            data = {
                "n": distribution.n,
                "filter": str(distribution.filter),
                "count": len(entries),
                "max": distribution.max_value(),
                "rows": [e.model_dump() for e in entries],
            }
            return json.dumps(data, indent=2, ensure_ascii=False)

        def table() -> str:
            footer = f"\n{len(entries)} classes, max σ1 = {distribution.max_value()}"
            return _table(header, rows) + footer

        return self._dispatch(format, {
            OutputFormat.TABLE: table,
            OutputFormat.JSON: as_json,
            OutputFormat.TSV: lambda: _tsv(header, rows),
        })

    # ==================== reports ====================

    def render_report(self, report: VerificationReport, format: OutputFormat) -> str:
        header = ("check", "status", "checked", "counterexamples")
        rows = [
            (c.name, c.status.value, c.checked, ",".join(c.counterexamples) or "-")
            for c in report.checks
        ]

        def table() -> str:
            verdict = "PASS" if report.passed else "FAIL"
            return f"{report.suite}: {verdict}\n" + _table(header, rows)

        return self._dispatch(format, {
            OutputFormat.TABLE: table,
            OutputFormat.JSON: lambda: json.dumps(report.summary(), indent=2, ensure_ascii=False),
            OutputFormat.TSV: lambda: _tsv(header, rows),
        })


# Global instance
export_service = ExportService()
