"""Shared result record for executable law checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class LawReport:
    """Outcome of one identity check.

    ``passed`` is equivalent to |left - right| <= tolerance; exact paths use
    tolerance 0 on rational values.  ``witness`` records the point/level/seed
    at which a failing comparison occurred.
    """
    law: str
    inputs: str
    passed: bool
    left: Any = None
    right: Any = None
    tolerance: Any = 0
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed
