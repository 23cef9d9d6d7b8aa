"""Rendering of verification reports as text or JSON lines."""

from __future__ import annotations

import json
from fractions import Fraction

from .interval import Interval
from .radical import RadicalSum, decimal
from .verify import VerifyReport


def _round(x: Fraction, digits: int) -> str:
    return decimal(RadicalSum.rational(x), digits)


def render_value(value, digits: int) -> tuple[str, str]:
    """``(exact form, decimal)`` for a radical sum or a certified interval."""
    if isinstance(value, Interval):
        return f"[{value.lo}, {value.hi}]", _round(value.midpoint, digits)
    value = RadicalSum.coerce(value)
    return str(value), decimal(value, digits)


def _summary_line(rep: VerifyReport) -> str:
    return f"{len(rep.violations)} violations / {rep.scanned} scanned"


def _text_value(value, digits: int) -> str:
    if isinstance(value, Interval):
        return f"{value} ~ {_round(value.midpoint, digits)}"
    exact, dec = render_value(value, digits)
    return f"{exact} ~ {dec}"


def render_text(rep: VerifyReport, digits: int = 6) -> str:
    lines = [_summary_line(rep)]
    if not rep.violations and rep.suite != "conjecture":
        return lines[0] + "\n"
    lines.append(f"suite: {rep.suite}")
    if rep.sources:
        lines.append("sources: " + "; ".join(rep.sources))
    lines.append(f"skipped: {rep.skipped} (bad inputs: {rep.bad_inputs})")
    lines.append("checks:")
    for check, (applied, bad) in rep.check_tally().items():
        extra = f", {rep.uncovered[check]} outside the classified cases" if rep.uncovered[check] else ""
        lines.append(f"  {check}: {applied} applied, {bad} violations{extra}")
    if rep.suite == "conjecture":
        lines.append("extremes:")
        for key, ext in sorted(rep.extremes.items()):
            lines.append(f"  {key} = {_text_value(ext.value, digits)} at {ext.witness}")
        classes = ", ".join(sorted(rep.equality_classes, key=lambda c: int(c[1:]))) or "none"
        lines.append(f"  equality: {len(rep.equality_witnesses)} witnesses, classes {classes}")
    if rep.violations:
        lines.append("violations:")
        for v in rep.violations:
            kind = "hard" if v.hard else "report-only"
            where = f" ({v.origin})" if v.origin else ""
            detail = f" [{v.detail}]" if v.detail else ""
            lines.append(f"  {kind} {v.check} {v.graph6}{where}: margin {_text_value(v.margin, digits)}{detail}")
    return "\n".join(lines) + "\n"


def _records(rep: VerifyReport, digits: int):
    for v in rep.violations:
        exact, dec = render_value(v.margin, digits)
        yield {
            "type": "violation",
            "suite": rep.suite,
            "graph6": v.graph6,
            "check": v.check,
            "hard": v.hard,
            "margin": exact,
            "decimal": dec,
            "origin": v.origin,
            "detail": v.detail,
        }
    summary = {
        "type": "summary",
        "suite": rep.suite,
        "summary": _summary_line(rep),
        "sources": rep.sources,
        "scanned": rep.scanned,
        "skipped": rep.skipped,
        "bad_inputs": rep.bad_inputs,
        "violations": len(rep.violations),
        "hard_violations": len(rep.hard_violations),
        "passed": rep.passed,
        "checks": {c: {"applied": a, "violations": b} for c, (a, b) in rep.check_tally().items()},
        "uncovered": dict(sorted(rep.uncovered.items())),
    }
    if rep.suite == "conjecture":
        extremes = {}
        for key, ext in sorted(rep.extremes.items()):
            exact, dec = render_value(ext.value, digits)
            extremes[key] = {"witness": ext.witness, "value": exact, "decimal": dec}
        summary["extremes"] = extremes
        summary["equality_classes"] = sorted(rep.equality_classes, key=lambda c: int(c[1:]))
        summary["equality_witnesses"] = rep.equality_witnesses
    yield summary


def render_records(rep: VerifyReport, digits: int = 6) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in _records(rep, digits))


def render_report(rep: VerifyReport, fmt: str = "text", digits: int = 6) -> bytes:
    if fmt == "text":
        return render_text(rep, digits).encode("utf-8")
    if fmt == "records":
        return render_records(rep, digits).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")
