"""Structured results for the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


PASS = "pass"
FAIL = "fail"
SHORT = "insufficient-precision"


@dataclass
class CheckResult:
    """One verified identity: id, the identity it checks, and the outcome.

    ``witness`` is filled on failure with the first counterexample found;
    ``note`` carries extra detail such as the order actually achieved when
    the precision budget did not reach the requested test order, or a
    rendered value worth surfacing (the antipode-square shifts, say).
    ``millis`` is wall time; reports zero it unless timing is requested so
    identical runs serialize identically.
    """

    check_id: str
    identity: str
    status: str
    witness: str | None = None
    millis: int = 0
    note: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def as_dict(self, with_timing: bool = False) -> dict:
        d = {
            "check_id": self.check_id,
            "paper_eq": self.identity,
            "status": self.status,
            "witness": self.witness,
            "millis": self.millis if with_timing else 0,
        }
        if self.note:
            d["note"] = self.note
        return d


def render_text(results, with_timing: bool = False) -> str:
    lines = []
    for r in results:
        mark = {"pass": "ok  ", "fail": "FAIL", SHORT: "PREC"}[r.status]
        line = f"{mark}  {r.check_id:<34} {r.identity}"
        if with_timing:
            line += f"  [{r.millis} ms]"
        if r.note:
            line += f"\n      note: {r.note}"
        if r.witness:
            line += f"\n      witness: {r.witness}"
        lines.append(line)
    n_fail = sum(1 for r in results if r.status == FAIL)
    n_short = sum(1 for r in results if r.status == SHORT)
    lines.append(f"-- {len(results)} checks: {len(results) - n_fail - n_short} passed, "
                 f"{n_fail} failed, {n_short} lacked precision")
    return "\n".join(lines)


def render_json(results, with_timing: bool = False) -> str:
    return json.dumps([r.as_dict(with_timing) for r in results], indent=2)


def worst_status(results) -> str:
    statuses = {r.status for r in results}
    if FAIL in statuses:
        return FAIL
    if SHORT in statuses:
        return SHORT
    return PASS
