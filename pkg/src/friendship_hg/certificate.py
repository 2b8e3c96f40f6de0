"""Verdict records shared by every checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
ERROR = "ERROR"


@dataclass
class Certificate:
    check: str
    verdict: str
    witness: dict[str, Any] | None = None
    stats: dict[str, Any] = field(default_factory=dict)
    input_sha256: str | None = None
    # Python-side result objects (decomposition, extracted system, ...); never serialised.
    payload: Any = field(default=None, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "verdict": self.verdict,
            "witness": self.witness,
            "stats": self.stats,
            "input_sha256": self.input_sha256,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
