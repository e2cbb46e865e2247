"""Structured check reports and the CLI report schema."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass
class CheckReport:
    """Named conditions, each ``pass``, ``fail`` or ``not-applicable``."""

    name: str
    checks: dict[str, str] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    def record(self, condition: str, ok: bool | None) -> bool | None:
        self.checks[condition] = NA if ok is None else (PASS if ok else FAIL)
        return ok

    @property
    def passed(self) -> bool:
        return all(v != FAIL for v in self.checks.values())

    @property
    def applicable(self) -> bool:
        return any(v != NA for v in self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v == FAIL]

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Report:
    """What every CLI command emits (``--json`` serializes it verbatim)."""

    command: str
    input_digest: str = ""
    invariant_factors: list[int] = field(default_factory=list)
    exponent: int | None = None
    order: int | None = None
    checks: list[dict[str, str]] = field(default_factory=list)
    timing: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def set_group(self, group) -> None:
        self.invariant_factors = list(group.invariant_factors)
        self.exponent = group.exponent
        self.order = group.order

    def add_check(self, name: str, status: str) -> None:
        self.checks.append({"name": name, "status": status})

    @property
    def passed(self) -> bool:
        return all(c["status"] != FAIL for c in self.checks)

    def to_json(self, **kwargs) -> str:
        return json.dumps(asdict(self), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))
