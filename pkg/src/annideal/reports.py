"""Machine-readable verification outcomes and their aggregation."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

PASS = "PASS"
FAIL = "FAIL"
NO_PREDICTION = "NoPrediction"
INCONSISTENT = "InconsistentPresentation"


@dataclass
class VerificationReport:
    """Outcome of one checked claim at one parameter point.

    ``runtime_ms`` is informational and excluded from serialisation by
    default so that reports are byte-identical across runs.
    """

    claim: str
    instance: str
    expected: str
    computed: str
    verdict: str
    runtime_ms: int | None = None

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL

    def sort_key(self):
        return (self.claim, self.instance)

    def to_dict(self, include_timings: bool = False) -> dict:
        d = {
            "claim": self.claim,
            "instance": self.instance,
            "expected": self.expected,
            "computed": self.computed,
            "verdict": self.verdict,
        }
        if include_timings and self.runtime_ms is not None:
            d["runtime_ms"] = self.runtime_ms
        return d

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), sort_keys=True)


def passed(report: VerificationReport) -> bool:
    return report.verdict == PASS


def aggregate(reports) -> dict[str, Counter]:
    by_claim: dict[str, Counter] = {}
    for r in reports:
        by_claim.setdefault(r.claim, Counter())[r.verdict] += 1
    return by_claim


def jsonl(reports, include_timings: bool = False) -> str:
    lines = [r.to_json(include_timings) for r in sorted(reports, key=lambda r: r.sort_key())]
    return "\n".join(lines) + ("\n" if lines else "")


def markdown_summary(reports) -> str:
    by_claim = aggregate(reports)
    total = Counter(r.verdict for r in reports)
    out = ["# Verification summary", ""]
    out.append("| claim | PASS | FAIL | other |")
    out.append("|---|---|---|---|")
    for claim in sorted(by_claim):
        c = by_claim[claim]
        other = sum(v for k, v in c.items() if k not in (PASS, FAIL))
        out.append(f"| {claim} | {c.get(PASS, 0)} | {c.get(FAIL, 0)} | {other} |")
    out.append("")
    out.append(
        f"Total: {total.get(PASS, 0)} PASS, {total.get(FAIL, 0)} FAIL, "
        f"{sum(v for k, v in total.items() if k not in (PASS, FAIL))} other."
    )
    out.append("")
    return "\n".join(out)
