from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Optional


@dataclass
class VerificationReport:
    """Outcome of checking one identity at one parameter tuple.

    ``difference`` is ``lhs - rhs``: a :class:`~qshuffle.words.FreeElement`
    for plain identities, a :class:`~qshuffle.series.TruncatedSeries` for
    generating-function identities.  It is empty exactly when the check passes.
    """

    id: str
    params: List[int]
    difference: Any
    lhs_terms: int = 0
    rhs_terms: int = 0
    millis: float = 0.0
    note: Optional[str] = field(default=None)

    @property
    def passed(self) -> bool:
        return self.difference.is_zero()

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": list(self.params),
            "verdict": self.verdict,
            "difference": self.difference.to_json(),
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "millis": round(self.millis, 3),
        }

    def line(self) -> str:
        params = ",".join(str(p) for p in self.params)
        return f"{self.verdict.upper():4} {self.id}[{params}]  lhs={self.lhs_terms} rhs={self.rhs_terms}  {self.millis:.1f} ms"
