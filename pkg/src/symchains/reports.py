"""Verification reports shared by the structural verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a structural check.

    ``failures`` holds (kind, witness) pairs and the report is ok exactly
    when that list is empty.  ``element_count`` and ``chain_count`` record
    how much was examined, so callers can audit coverage claims instead of
    trusting a bare boolean.
    """

    ok: bool
    element_count: int
    chain_count: int
    failures: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if self.ok != (not self.failures):
            raise ValueError("ok must mirror an empty failure list")

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "element_count": self.element_count,
            "chain_count": self.chain_count,
            "failures": [list(item) for item in self.failures],
        }


def report(element_count: int, chain_count: int,
           failures: Iterable[tuple[str, str]]) -> VerificationReport:
    collected = tuple(failures)
    return VerificationReport(not collected, element_count, chain_count, collected)
