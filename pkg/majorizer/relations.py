"""
relations.py
User-facing relation checks: majorization and its weak variants, power majorization,
trumping and the exact integer trumping certificate.

Every check first brings the pair to a fixed point of ``normalize_pair`` so that vectors of
different dimensions (or with matched zeros) are compared on a common footing.
"""

import math
from itertools import accumulate
from typing import List, Optional, Sequence, Tuple

from .errors import DomainError, PreconditionError
from .functionals import ScanConfig, dominance_scan, scan_strict_dominance
from .utils.utils import get_logger
from .vectors import DVector, normalized_pair_fixpoint
from .verdicts import MajorizationVerdict, PowerVerdict, Status, Verdict

logger = get_logger(__name__)

FLOAT_TOL = 1e-12
LOW_DIM = 3


# **********************************
# Helpers
# **********************************


def _tolerance(x: DVector, y: DVector) -> float:
    """Absolute tolerance for partial sums: 0 in exact mode, 1e-12 relative otherwise."""
    if x.exact and y.exact:
        return 0
    scale = max(float(x.total), float(y.total))
    return FLOAT_TOL * (scale if scale > 0 else 1.0)


def totals_equal(x: DVector, y: DVector) -> bool:
    """Whether Σx = Σy, exactly or within the relative float tolerance."""
    diff = x.total - y.total
    return abs(diff) <= _tolerance(x, y)


def _differences(upper: Sequence, lower: Sequence) -> List:
    """Prefix sums of ``upper`` minus prefix sums of ``lower``."""
    return [u - w for u, w in zip(accumulate(upper), accumulate(lower))]


def _first_negative(margins: Sequence, tol) -> Optional[int]:
    for k, m in enumerate(margins, start=1):
        if m < -tol:
            return k
    return None


def _prepare(x: DVector, y: DVector) -> Tuple[DVector, DVector, bool, bool]:
    x, y, padded = normalized_pair_fixpoint(x, y)
    return x, y, padded, x.exact and y.exact


# **********************************
# Majorization
# **********************************


def majorize(x: DVector, y: DVector) -> MajorizationVerdict:
    """Check x ≺ y: descending prefix sums of x bounded by those of y, equal totals.

    Args:
        x : Candidate majorized vector.
        y : Candidate majorizing vector.

    Returns:
        A :class:`MajorizationVerdict` with descending margins Σy↓ − Σx↓, ascending margins
        Σx↑ − Σy↑ and, on failure, the 1-based index of the first violated prefix.

    """
    x, y, padded, exact = _prepare(x, y)
    tol = _tolerance(x, y)
    margins = _differences(y.desc, x.desc)
    ascending = _differences(x.asc, y.asc)
    k = _first_negative(margins, tol)
    if k is None and abs(margins[-1]) > tol:
        k = len(margins)
    status = Status.HOLDS if k is None else Status.FAILS
    reason = ""
    if abs(margins[-1]) > tol:
        reason = "totals differ"
    logger.debug("majorize d=%d exact=%s -> %s (k=%s)", x.dim, exact, status.value, k)
    return MajorizationVerdict(
        relation="majorize",
        status=status,
        reason=reason,
        margins=margins,
        exact=exact,
        padded=padded,
        first_violation_k=k,
        ascending_margins=ascending,
    )


def submajorize(x: DVector, y: DVector) -> MajorizationVerdict:
    """Check x ≺_w y: every descending prefix inequality, totals unconstrained."""
    x, y, padded, exact = _prepare(x, y)
    margins = _differences(y.desc, x.desc)
    k = _first_negative(margins, _tolerance(x, y))
    return MajorizationVerdict(
        relation="submajorize",
        status=Status.HOLDS if k is None else Status.FAILS,
        margins=margins,
        exact=exact,
        padded=padded,
        first_violation_k=k,
        ascending_margins=_differences(x.asc, y.asc),
    )


def supermajorize(x: DVector, y: DVector) -> MajorizationVerdict:
    """Check x ≺^w y: Σ_k x↑ ≥ Σ_k y↑ for every k, totals unconstrained.

    ``first_violation_k`` refers to the ascending convention.
    """
    x, y, padded, exact = _prepare(x, y)
    ascending = _differences(x.asc, y.asc)
    k = _first_negative(ascending, _tolerance(x, y))
    return MajorizationVerdict(
        relation="supermajorize",
        status=Status.HOLDS if k is None else Status.FAILS,
        margins=_differences(y.desc, x.desc),
        exact=exact,
        padded=padded,
        first_violation_k=k,
        ascending_margins=ascending,
        convention="ascending",
    )


# **********************************
# Power majorization
# **********************************


def _power_verdict(
    relation: str, x: DVector, y: DVector, cfg: Optional[ScanConfig], evaluator: str
) -> PowerVerdict:
    cfg = cfg or ScanConfig()
    x, y, padded, exact = _prepare(x, y)
    if not (x.is_positive and y.is_positive):
        raise DomainError("Power majorization needs strictly positive components")
    if not totals_equal(x, y):
        return PowerVerdict(
            relation=relation,
            status=Status.FAILS,
            witness=1.0,
            reason="totals differ, so the p = 1 equality fails",
            exact=exact,
            padded=padded,
        )
    report = dominance_scan(x, y, cfg, strict=False, evaluator=evaluator)
    strict = (
        report.status is Status.HOLDS
        and report.interior_min is not None
        and report.interior_min > cfg.margin_tol
    )
    return PowerVerdict(
        relation=relation,
        status=report.status,
        witness=report.witness_r,
        reason=report.reason,
        margins=[report.min_gap],
        exact=exact,
        padded=padded,
        details={"scan": report.to_dict()},
        strict=strict,
        boundary_equalities=report.boundary_gaps,
        min_gap=report.min_gap,
    )


def power_majorize(
    x: DVector, y: DVector, cfg: Optional[ScanConfig] = None
) -> PowerVerdict:
    """Check x ⪯_p y: Σx^p ≤ Σy^p for p ≥ 1 and p ≤ 0, reversed on [0, 1].

    The power sums are compared directly through ψ(p) = (Σy^p/Σx^p − 1)/(p(p−1)), which is
    non-negative for every p exactly when the three-regime family holds. ``strict`` is set
    when ψ stays above the margin away from p ∈ {0, 1}.

    Raises:
        DomainError: some component is zero.

    """
    return _power_verdict("power", x, y, cfg, evaluator="power")


def power_majorize_via_klimesh(
    x: DVector, y: DVector, cfg: Optional[ScanConfig] = None
) -> PowerVerdict:
    """Decide x ⪯_p y as non-strict dominance f_r(x) ≤ f_r(y) for all real r."""
    return _power_verdict("power-klimesh", x, y, cfg, evaluator="log")


# **********************************
# Trumping
# **********************************


def trumped(x: DVector, y: DVector, cfg: Optional[ScanConfig] = None) -> Verdict:
    """Check x ≺_T y, i.e. x ⊗ z ≺ y ⊗ z for some catalyst z.

    For d ≤ 3 trumping coincides with majorization; above that the verdict comes from the
    strict dominance scan of Klimesh's functionals.

    Args:
        x : Candidate trumped vector.
        y : Candidate trumping vector.
        cfg : Scanner settings.

    Returns:
        A :class:`Verdict`; unequal totals fail immediately with an explanatory reason.

    Raises:
        PreconditionError: both vectors contain zeros.

    """
    if x.has_zeros and y.has_zeros:
        raise PreconditionError(
            "Both vectors contain zeros; delete matched zeros with normalize_pair first"
        )
    cfg = cfg or ScanConfig()
    x, y, padded, exact = _prepare(x, y)

    def verdict(status, **kwargs):
        return Verdict(relation="trump", status=status, exact=exact, padded=padded, **kwargs)

    if not totals_equal(x, y):
        return verdict(Status.FAILS, reason="totals differ; trumping requires equal sums")
    if x.asc == y.asc:
        return verdict(Status.HOLDS, reason="sorted vectors are equal")
    if x.has_zeros:
        return verdict(
            Status.FAILS, witness=0.0, reason="f_0(x) is infinite while f_0(y) is finite"
        )
    if x.dim <= LOW_DIM:
        mv = majorize(x, y)
        return verdict(
            mv.status,
            reason=f"d <= {LOW_DIM}: trumping coincides with majorization",
            margins=mv.margins,
            details={"majorization": mv.to_dict()},
        )
    report = scan_strict_dominance(x, y, cfg)
    logger.debug("trumped d=%d -> %s (min %.3e)", x.dim, report.status.value, report.min_gap)
    return verdict(
        report.status,
        witness=report.witness_r,
        reason=report.reason,
        margins=[report.min_gap],
        details={"scan": report.to_dict()},
    )


def _self_power_product(v: DVector) -> int:
    return math.prod(int(c) ** int(c) for c in v.components)


def integer_trump_certificate(
    x: DVector, y: DVector, cfg: Optional[ScanConfig] = None
) -> Verdict:
    """Certify x ≺_T y for positive integer vectors.

    Holds when x is strictly power majorized by y and both Πx ≠ Πy and Πx^x ≠ Πy^y, the
    products being compared exactly as Python integers. For d ≤ 3 the certificate defers
    to majorization.

    Raises:
        DomainError: a component is not a positive integer.
        PreconditionError: the dimensions differ.

    """
    for v in (x, y):
        if not (v.is_integral and v.is_positive):
            raise DomainError("The integer certificate needs positive integer components")
    if x.dim != y.dim:
        raise PreconditionError("The integer certificate needs vectors of equal dimension")
    products = {
        "prod_x": math.prod(int(c) for c in x.components),
        "prod_y": math.prod(int(c) for c in y.components),
        "self_power_x": _self_power_product(x),
        "self_power_y": _self_power_product(y),
    }

    def verdict(status, **kwargs):
        return Verdict(
            relation="certificate", status=status, exact=True, details=dict(products), **kwargs
        )

    if x.asc == y.asc:
        return verdict(Status.INCONCLUSIVE, reason="certificate inapplicable: equal products")
    if x.dim <= LOW_DIM:
        mv = majorize(x, y)
        return verdict(
            mv.status,
            reason=f"d <= {LOW_DIM}: certificate defers to majorization",
            margins=mv.margins,
        )
    if products["prod_x"] == products["prod_y"]:
        return verdict(Status.INCONCLUSIVE, reason="certificate inapplicable: Πx = Πy")
    if products["self_power_x"] == products["self_power_y"]:
        return verdict(Status.INCONCLUSIVE, reason="certificate inapplicable: Πx^x = Πy^y")

    pv = power_majorize(x, y, cfg)
    if pv.holds and pv.strict:
        return verdict(Status.HOLDS, margins=pv.margins)
    if pv.fails:
        return verdict(
            Status.FAILS, witness=pv.witness, reason="not power majorized", margins=pv.margins
        )
    return verdict(
        Status.INCONCLUSIVE,
        reason=pv.reason or "power majorization is not strict",
        margins=pv.margins,
    )
