"""
Check Results
Boolean verdicts that carry the first counterexample found
"""

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class CheckResult:
    """Outcome of an exhaustive or sampled check; `witness` explains a failure or certifies a success"""

    ok: bool
    witness: Optional[Any] = None
    checked: int = 0
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok
