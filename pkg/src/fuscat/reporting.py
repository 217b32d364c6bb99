"""Structured verification reports with a JSON machine format.

Every verifier in the package returns a :class:`ReportDocument`, a named list
of :class:`CheckResult` rows.  The machine format is plain JSON and round
trips exactly: ``parse_report(report.to_json()) == report``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError

__all__ = [
    "CheckResult",
    "ReportDocument",
    "parse_report",
    "render_table",
    "matrix_to_json",
]


@dataclass(frozen=True)
class CheckResult:
    """One named check: a residual compared against a threshold.

    ``residual`` and ``threshold`` are plain floats; boolean checks encode as
    residual 0.0 or 1.0 against threshold 0.5.
    """

    name: str
    residual: float
    threshold: float
    passed: bool
    detail: str = ""

    def __post_init__(self):
        object.__setattr__(self, "residual", float(self.residual))
        object.__setattr__(self, "threshold", float(self.threshold))
        object.__setattr__(self, "passed", bool(self.passed))


@dataclass(frozen=True)
class ReportDocument:
    """A verification outcome: overall verdict plus per-check rows.

    Attributes
    ----------
    kind : str
        Machine tag of the producing verifier, e.g. ``"category_check"``.
    name : str
        Name of the object that was checked.
    passed : bool
        Conjunction of all check verdicts (and any extra conditions the
        producer imposed).
    checks : list of CheckResult
    data : dict
        Extra JSON-compatible payload (matrices, spectra, tables).  Keys must
        be strings; complex entries are encoded as ``[re, im]`` pairs by the
        producer, see :func:`matrix_to_json`.
    """

    kind: str
    name: str
    passed: bool
    checks: list[CheckResult] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.passed))

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "name": self.name,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "residual": c.residual,
                    "threshold": c.threshold,
                    "passed": c.passed,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
            "data": self.data,
        }
        return json.dumps(doc, indent=2, sort_keys=True)


def parse_report(text: str) -> ReportDocument:
    """Inverse of :meth:`ReportDocument.to_json`."""
    try:
        doc = json.loads(text)
        checks = [
            CheckResult(
                name=c["name"],
                residual=c["residual"],
                threshold=c["threshold"],
                passed=c["passed"],
                detail=c.get("detail", ""),
            )
            for c in doc["checks"]
        ]
        return ReportDocument(
            kind=doc["kind"],
            name=doc["name"],
            passed=doc["passed"],
            checks=checks,
            data=doc.get("data", {}),
        )
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"not a valid report document: {exc}") from None


def matrix_to_json(mat) -> list:
    """Encode a real or complex matrix as nested lists, complex as [re, im]."""
    import numpy as np

    mat = np.asarray(mat)
    if np.iscomplexobj(mat):
        return [[[float(v.real), float(v.imag)] for v in row] for row in mat]
    return [[float(v) for v in row] for row in mat]


def render_table(report: ReportDocument) -> str:
    """Human-readable fixed-width rendering of a report."""
    lines = [f"{report.kind}: {report.name}"]
    if report.checks:
        name_w = max(len(c.name) for c in report.checks)
        for c in report.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(
                f"  {c.name:<{name_w}}  residual {c.residual:.3e}"
                f"  (tol {c.threshold:.1e})  {status}"
                + (f"  {c.detail}" if c.detail else "")
            )
    for key, val in report.data.items():
        if isinstance(val, (str, int, float)):
            lines.append(f"  {key}: {val}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)
