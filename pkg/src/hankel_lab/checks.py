"""A labelled pair of exactly computed values that are supposed to agree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable


@dataclass(frozen=True)
class Check:
    label: str
    lhs: Any
    rhs: Any

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def all_ok(checks: Iterable[Check]) -> bool:
    return all(c.ok for c in checks)


def first_failure(checks: Iterable[Check]) -> Check | None:
    return next((c for c in checks if not c.ok), None)
