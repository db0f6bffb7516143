"""Three-valued verdicts shared by every relation check.

The same vocabulary is used by the scanner, the relation checks, geometry and the CLI, so
all of them serialize to one JSON shape and map to one exit-code taxonomy.
"""

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"

    @property
    def exit_code(self) -> int:
        return {"holds": 0, "fails": 1, "inconclusive": 5}[self.value]


def jsonable(value: Any) -> Any:
    """Convert numbers and containers into JSON-friendly values.

    Fractions with denominator 1 and Python ints stay integers unless they are too large to be
    useful as JSON numbers, in which case they are rendered as decimal strings. Other fractions
    become ``"p/q"`` strings and infinities become ``"inf"`` / ``"-inf"``.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return jsonable(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return value if abs(value) < 2**63 else str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return value
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    try:
        return float(value)
    except (TypeError, ValueError):
        return str(value)


@dataclass
class Verdict:
    """Outcome of a relation check.

    Attributes
    ----------
    relation : str
        Name of the relation that was checked (``majorize``, ``trump``, ...).
    status : Status
        Holds, Fails or Inconclusive.
    witness : Optional[float]
        Parameter (r or p) at which a failure was observed, when one exists.
    reason : str
        Human-readable explanation, mainly for short-circuit outcomes.
    margins : list
        Partial-sum or functional margins supporting the verdict.
    exact : bool
        True when the verdict was obtained in exact rational arithmetic.
    padded : bool
        True when the inputs were zero-padded to a common dimension.
    details : dict
        Relation-specific extras (scan reports, exact products, ...).

    """

    relation: str
    status: Status
    witness: Optional[float] = None
    reason: str = ""
    margins: List[Any] = field(default_factory=list)
    exact: bool = False
    padded: bool = False
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def inconclusive(self) -> bool:
        return self.status is Status.INCONCLUSIVE

    def to_dict(self) -> Dict[str, Any]:
        out_dc = {
            "relation": self.relation,
            "status": self.status.value,
            "witness": jsonable(self.witness),
            "margins": jsonable(self.margins),
            "exact": self.exact,
            "padded": self.padded,
        }
        if self.reason:
            out_dc["reason"] = self.reason
        if self.details:
            out_dc["details"] = jsonable(self.details)
        return out_dc


@dataclass
class MajorizationVerdict(Verdict):
    """Partial-sum verdict for majorization and its weak variants.

    ``margins`` are descending prefix differences Σy↓ − Σx↓; ``ascending_margins`` are
    Σx↑ − Σy↑. ``first_violation_k`` is 1-based and refers to ``convention``.
    """

    first_violation_k: Optional[int] = None
    ascending_margins: List[Any] = field(default_factory=list)
    convention: str = "descending"

    def to_dict(self) -> Dict[str, Any]:
        out_dc = super().to_dict()
        out_dc["first_violation_k"] = self.first_violation_k
        out_dc["ascending_margins"] = jsonable(self.ascending_margins)
        out_dc["convention"] = self.convention
        return out_dc


@dataclass
class PowerVerdict(Verdict):
    """Verdict of a power-majorization check.

    ``boundary_equalities`` maps ``"0"`` and ``"1"`` to the functional gaps at those
    parameters, where power majorization forces equality of the power sums themselves.
    """

    strict: bool = False
    boundary_equalities: Dict[str, float] = field(default_factory=dict)
    min_gap: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        out_dc = super().to_dict()
        out_dc["strict"] = self.strict
        out_dc["boundary_equalities"] = jsonable(self.boundary_equalities)
        out_dc["min_gap"] = jsonable(self.min_gap)
        return out_dc
