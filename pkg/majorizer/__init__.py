"""
majorizer
Majorization, power majorization, trumping and catalyst search for finite non-negative vectors.
"""

from .catalysis import (
    Catalyst,
    CatalystSearchReport,
    SearchConfig,
    check_catalyst,
    check_weak_catalyst,
    search_catalyst,
    violation,
)
from .errors import (
    DomainError,
    InputError,
    MajorizerError,
    PreconditionError,
    ReportError,
    UndefinedGapError,
)
from .functionals import (
    ScanConfig,
    ScanReport,
    TurgutReport,
    dominance_scan,
    gap,
    klimesh_f,
    power_mean,
    scan_strict_dominance,
    tail_signs,
    turgut_conditions,
)
from .schema import validate_report
from .relations import (
    integer_trump_certificate,
    majorize,
    power_majorize,
    power_majorize_via_klimesh,
    submajorize,
    supermajorize,
    trumped,
)
from .vectors import DVector, ProbVector, entropy, normalize_pair, sort_asc, sort_desc, tensor
from .verdicts import MajorizationVerdict, PowerVerdict, Status, Verdict

__all__ = [
    "Catalyst",
    "CatalystSearchReport",
    "SearchConfig",
    "check_catalyst",
    "check_weak_catalyst",
    "search_catalyst",
    "violation",
    "DomainError",
    "InputError",
    "MajorizerError",
    "PreconditionError",
    "ReportError",
    "UndefinedGapError",
    "ScanConfig",
    "ScanReport",
    "TurgutReport",
    "dominance_scan",
    "gap",
    "klimesh_f",
    "power_mean",
    "scan_strict_dominance",
    "tail_signs",
    "turgut_conditions",
    "integer_trump_certificate",
    "majorize",
    "power_majorize",
    "power_majorize_via_klimesh",
    "submajorize",
    "supermajorize",
    "trumped",
    "validate_report",
    "DVector",
    "ProbVector",
    "entropy",
    "normalize_pair",
    "sort_asc",
    "sort_desc",
    "tensor",
    "MajorizationVerdict",
    "PowerVerdict",
    "Status",
    "Verdict",
]
