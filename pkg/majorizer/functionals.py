"""
functionals.py
Klimesh's functionals f_r, Turgut's power means A_ν, the gap between two vectors and the
adaptive scanner deciding dominance for every real parameter.

The scanner works on the normalized gap

    φ(r) = L(r) / (r (r − 1)),    L(r) = ln Σ y_i^r − ln Σ x_i^r,

which has the sign of f_r(y) − f_r(x) for every r ∉ {0, 1}. φ is analytic, and its values at
r = 0 and r = 1 are the limits gap(0)/d and Σy ln y/Σy − Σx ln x/Σx, so one smooth function
carries all five branches of f_r and strict margins stay meaningful next to r = 0 and r = 1.
"""

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import logsumexp, xlogy

from .errors import DomainError, PreconditionError, UndefinedGapError
from .utils.utils import env_float, env_int, get_logger
from .vectors import DVector, entropy, normalized_pair_fixpoint
from .verdicts import Status, jsonable

logger = get_logger(__name__)

ExtendedReal = float
INFINITY: ExtendedReal = math.inf

# |r| (resp. |r − 1|) below which the removable value is used directly
_REMOVABLE_EPS = 1e-12
# ν-grids for the power-mean conditions stay this far from ν = 1
_NU_EXCLUSION = 1e-6
# |ν| below which the power mean uses its second-order cumulant expansion
_NU_SERIES = 1e-6
_MAX_BRACKETS = 16
# samples closer than this to r ∈ {0, 1} do not count towards strictness
_INTERIOR_GAP = 1e-3


@dataclass(frozen=True)
class ScanConfig:
    """Numerical settings of the dominance scanner.

    Parameters
    ----------
    r_lo, r_hi : float
        Base scan window; extended automatically to the analytic tail cutoffs.
    grid_points : int
        Number of uniformly spaced samples over the base window.
    refine_tol : float
        Target bracket width of the golden-section refinement.
    margin_tol : float
        Values of φ within ±margin_tol are treated as numerically zero.
    max_refine_depth : int
        Maximum golden-section iterations per bracket.
    max_window : float
        Largest |r| the window may be extended to.
    extension_points : int
        Geometrically spaced samples added on each extended side.

    """

    r_lo: float = -60.0
    r_hi: float = 60.0
    grid_points: int = 2001
    refine_tol: float = 1e-10
    margin_tol: float = 1e-9
    max_refine_depth: int = 60
    max_window: float = 1e4
    extension_points: int = 400

    def __post_init__(self):
        if not (self.r_lo < 0 < 1 < self.r_hi):
            raise PreconditionError("ScanConfig requires r_lo < 0 < 1 < r_hi")
        if self.grid_points < 3:
            raise PreconditionError("ScanConfig.grid_points must be at least 3")
        if self.refine_tol <= 0 or self.margin_tol <= 0:
            raise PreconditionError("ScanConfig tolerances must be positive")
        if self.max_refine_depth < 1 or self.extension_points < 2:
            raise PreconditionError("ScanConfig depths and counts must be positive")
        if self.max_window < max(-self.r_lo, self.r_hi):
            raise PreconditionError("ScanConfig.max_window must cover the base window")

    @classmethod
    def from_env(cls, **overrides) -> "ScanConfig":
        """Build a configuration from ``MAJORIZER_*`` environment variables."""
        base = cls()
        cfg = cls(
            r_lo=env_float("R_LO", base.r_lo),
            r_hi=env_float("R_HI", base.r_hi),
            grid_points=env_int("GRID_POINTS", base.grid_points),
            refine_tol=env_float("REFINE_TOL", base.refine_tol),
            margin_tol=env_float("MARGIN_TOL", base.margin_tol),
            max_refine_depth=env_int("MAX_REFINE_DEPTH", base.max_refine_depth),
            max_window=env_float("MAX_WINDOW", base.max_window),
        )
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(cfg, **overrides) if overrides else cfg


@dataclass
class ScanReport:
    """Diagnostics of a dominance scan.

    Attributes
    ----------
    status : Status
        Holds, Fails or Inconclusive.
    witness_r : Optional[float]
        Parameter with a negative gap when ``status`` is Fails.
    min_gap : float
        Smallest normalized gap φ found outside the analytically certified tails.
    argmin_r : float
        Where ``min_gap`` was attained.
    tail_signs : (int, int)
        Sign of the gap as r → +∞ and r → −∞.
    tail_cutoffs : (float, float)
        Beyond ``cutoff_pos`` (and below ``−cutoff_neg``) the tail sign is certified.
    window : (float, float)
        The scanned interval.
    boundary_gaps : dict
        Raw gaps f_r(y) − f_r(x) at r = 0 and r = 1.
    samples : list of (r, φ)
    refinements : list of dict
        One entry per refined bracket (bracket, r, value, iterations).
    reason : str
    interior_min : Optional[float]
        Like ``min_gap`` but ignoring parameters within 1e-3 of 0 and 1.

    """

    status: Status
    witness_r: Optional[float]
    min_gap: float
    argmin_r: float
    tail_signs: Tuple[int, int]
    tail_cutoffs: Tuple[float, float]
    window: Tuple[float, float]
    boundary_gaps: Dict[str, float]
    samples: List[Tuple[float, float]] = field(default_factory=list)
    refinements: List[Dict] = field(default_factory=list)
    reason: str = ""
    interior_min: Optional[float] = None

    @property
    def verdict(self) -> Status:
        return self.status

    def to_dict(self, verbose: bool = False) -> Dict:
        out_dc = {
            "verdict": self.status.value,
            "witness_r": jsonable(self.witness_r),
            "min_gap": jsonable(self.min_gap),
            "argmin_r": jsonable(self.argmin_r),
            "tail_signs": list(self.tail_signs),
            "tail_cutoffs": jsonable(self.tail_cutoffs),
            "window": jsonable(self.window),
            "boundary_gaps": jsonable(self.boundary_gaps),
        }
        if self.reason:
            out_dc["reason"] = self.reason
        if verbose:
            out_dc["samples"] = jsonable(self.samples)
            out_dc["refinements"] = jsonable(self.refinements)
        return out_dc


@dataclass(frozen=True)
class TailInfo:
    sign_pos: int
    sign_neg: int
    cutoff_pos: float
    cutoff_neg: float


@dataclass
class TurgutReport:
    """Numerical check of the three power-mean/entropy conditions.

    ``conditions`` is (A_ν(x) > A_ν(y) for ν < 1, A_ν(x) < A_ν(y) for ν > 1, σ(x) > σ(y));
    a condition inside the ±margin band is reported False and sets ``inconclusive``.
    """

    conditions: Tuple[bool, bool, bool]
    inconclusive: bool
    minima: Dict[str, float]
    argmins: Dict[str, Optional[float]]

    @property
    def all_hold(self) -> bool:
        return all(self.conditions)

    def to_dict(self) -> Dict:
        return {
            "conditions": list(self.conditions),
            "inconclusive": self.inconclusive,
            "minima": jsonable(self.minima),
            "argmins": jsonable(self.argmins),
        }


# **********************************
# Functionals
# **********************************


def _log_power_sums(rs, v: np.ndarray) -> np.ndarray:
    """Vectorized ln Σ v_i^r with 0^r = 0 for r > 0 and +∞ for r ≤ 0 when v has a zero.

    Around r = 0 and r = 1 the sums are expanded with ``expm1``/``log1p`` so that differences
    of two such values keep full relative accuracy.
    """
    rs = np.atleast_1d(np.asarray(rs, dtype=np.float64))
    out = np.empty_like(rs)
    pos = v[v > 0]
    logs = np.log(pos)
    near0 = np.abs(rs) < 0.5
    near1 = np.abs(rs - 1.0) < 0.5
    far = ~(near0 | near1)
    if far.any():
        out[far] = logsumexp(np.outer(rs[far], logs), axis=1)
    if near0.any():
        e = np.expm1(np.outer(rs[near0], logs))
        out[near0] = math.log(pos.size) + np.log1p(e.mean(axis=1))
    if near1.any():
        total = float(pos.sum())
        e = np.expm1(np.outer(rs[near1] - 1.0, logs))
        out[near1] = math.log(total) + np.log1p(e @ (pos / total))
    if pos.size < v.size:
        out[rs <= 0] = np.inf
    return out


def _require_same_dim(x: DVector, y: DVector):
    if x.dim != y.dim:
        raise PreconditionError(
            f"Vectors have dimensions {x.dim} and {y.dim}; call normalize_pair first"
        )


def klimesh_f(r: float, x: DVector) -> ExtendedReal:
    """Evaluate Klimesh's functional f_r(x).

    Args:
        r : Real parameter.
        x : Non-negative vector.

    Returns:
        ln Σx^r (r > 1 or r < 0), Σ x ln x (r = 1), −ln Σx^r (0 < r < 1), −Σ ln x (r = 0),
        and +∞ for r ≤ 0 when some component is 0.

    """
    arr = x.array
    if r <= 0 and x.has_zeros:
        return INFINITY
    if r == 1:
        return float(math.fsum(xlogy(arr, arr)))
    if r == 0:
        return -float(math.fsum(np.log(arr)))
    value = float(_log_power_sums(r, arr)[0])
    return -value if 0 < r < 1 else value


def _log_power_means(nus, v: np.ndarray) -> np.ndarray:
    """Vectorized ln A_ν(v) for strictly positive v, computed from direct powers."""
    nus = np.atleast_1d(np.asarray(nus, dtype=np.float64))
    logs = np.log(v)
    kappa1 = logs.mean()
    kappa2 = logs.var()
    out = np.empty_like(nus)
    small = np.abs(nus) < _NU_SERIES
    out[small] = kappa1 + 0.5 * kappa2 * nus[small]
    big = ~small
    if big.any():
        nb = nus[big]
        # rescale by the entry dominating each power to keep v**ν finite
        scale = np.where(nb > 0, v.max(), v.min())
        ratios = v[None, :] / scale[:, None]
        means = np.mean(ratios ** nb[:, None], axis=1)
        out[big] = np.log(scale) + np.log(means) / nb
    return out


def power_mean(nu: float, x: DVector) -> float:
    """Return the power mean A_ν(x) = (Σx_i^ν / d)^(1/ν), geometric mean for ν = 0.

    Raises:
        DomainError: when ν ≤ 0 and some component is 0.

    """
    if nu <= 0 and x.has_zeros:
        raise DomainError(f"A_{nu} is undefined for vectors with zero components")
    arr = x.array
    if x.has_zeros:
        # ν > 0: zero entries contribute nothing to the power sum
        return float((np.mean(arr**nu)) ** (1.0 / nu))
    if nu == 0:
        return float(math.exp(np.log(arr).mean()))
    return float(math.exp(_log_power_means(nu, arr)[0]))


def gap(r: float, x: DVector, y: DVector) -> ExtendedReal:
    """Return f_r(y) − f_r(x) in extended-real arithmetic.

    Raises:
        UndefinedGapError: both values are infinite (both vectors contain zeros, r ≤ 0).

    """
    _require_same_dim(x, y)
    fx = klimesh_f(r, x)
    fy = klimesh_f(r, y)
    if math.isinf(fx) and math.isinf(fy):
        raise UndefinedGapError(
            f"f_{r} is infinite for both vectors; delete matched zeros with normalize_pair"
        )
    return fy - fx


def _phi(rs, xa: np.ndarray, ya: np.ndarray) -> np.ndarray:
    """Normalized gap φ(r) = L(r)/(r(r−1)) with its removable values at r = 0, 1."""
    rs = np.atleast_1d(np.asarray(rs, dtype=np.float64))
    lx = _log_power_sums(rs, xa)
    ly = _log_power_sums(rs, ya)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (ly - lx) / (rs * (rs - 1.0))
    at0 = np.abs(rs) < _REMOVABLE_EPS
    if at0.any():
        with np.errstate(divide="ignore"):
            phi0 = (np.log(xa).sum() - np.log(ya).sum()) / xa.size
        out[at0] = phi0
    at1 = np.abs(rs - 1.0) < _REMOVABLE_EPS
    if at1.any():
        out[at1] = xlogy(ya, ya).sum() / ya.sum() - xlogy(xa, xa).sum() / xa.sum()
    return out


# **********************************
# Tails
# **********************************


def _lex_tail(xs, ys, larger_wins: bool) -> Tuple[int, float]:
    """Sign and certification cutoff of the dominant-term expansion.

    Walks two sorted sequences to their first difference a = y_k, b = x_k. Beyond
    |r| > ln(d − k)/|ln(a/b)| (0-based k) the differing term dominates everything after it.
    """
    d = len(xs)
    for k, (b, a) in enumerate(zip(xs, ys)):
        if a == b:
            continue
        sign = 1 if (a > b) == larger_wins else -1
        lo, hi = (a, b) if a < b else (b, a)
        if lo == 0:
            return sign, 0.0
        ratio = math.log(float(hi)) - math.log(float(lo))
        count = d - k
        if count == 1:
            return sign, 0.0
        if ratio <= 0:
            return sign, INFINITY
        return sign, math.log(count) / ratio
    return 0, 0.0


def _tail_info(x: DVector, y: DVector) -> TailInfo:
    sign_pos, cut_pos = _lex_tail(x.desc, y.desc, larger_wins=True)
    sign_neg, cut_neg = _lex_tail(x.asc, y.asc, larger_wins=False)
    return TailInfo(sign_pos, sign_neg, cut_pos, cut_neg)


def tail_signs(x: DVector, y: DVector) -> Tuple[int, int]:
    """Return the signs of gap(r) as r → +∞ and r → −∞.

    Raises:
        DomainError: when a component is not strictly positive.

    """
    _require_same_dim(x, y)
    if not (x.is_positive and y.is_positive):
        raise DomainError("tail_signs requires strictly positive vectors")
    info = _tail_info(x, y)
    return info.sign_pos, info.sign_neg


# **********************************
# Scanner
# **********************************


@dataclass
class _ScanResult:
    rs: np.ndarray
    values: np.ndarray
    refinements: List[Dict]
    min_value: float
    argmin: float
    worst_value: float
    worst_r: float
    interior_min: float


def _grid(lo: float, hi: float, cfg: ScanConfig) -> np.ndarray:
    """Uniform grid over the base window plus geometric extensions out to ``lo``/``hi``."""
    base_lo, base_hi = max(lo, cfg.r_lo), min(hi, cfg.r_hi)
    parts = [np.linspace(base_lo, base_hi, cfg.grid_points)]
    if lo < cfg.r_lo:
        parts.append(-np.geomspace(-cfg.r_lo, -lo, cfg.extension_points))
    if hi > cfg.r_hi:
        parts.append(np.geomspace(cfg.r_hi, hi, cfg.extension_points))
    return np.unique(np.concatenate(parts))


def _refine(func: Callable, a: float, b: float, c: float, cfg: ScanConfig) -> Optional[Dict]:
    """Golden-section refinement of a bracketed local minimum."""

    def scalar(r):
        return float(func(np.array([r]))[0])

    xtol = cfg.refine_tol / max(2.0 * abs(b), 1.0)
    try:
        res = minimize_scalar(
            scalar,
            bracket=(a, b, c),
            method="golden",
            options={"xtol": xtol, "maxiter": cfg.max_refine_depth},
        )
    except ValueError:
        # non-strict bracket (plateau); the sample itself stands
        return None
    r_star = float(np.clip(res.x, a, c))
    return {
        "bracket": (a, c),
        "r": r_star,
        "value": scalar(r_star),
        "iterations": int(getattr(res, "nit", 0)),
    }


def _run_scan(
    func: Callable,
    lo: float,
    hi: float,
    cfg: ScanConfig,
    margin_lo: float,
    margin_hi: float,
    required=(),
) -> _ScanResult:
    """Sample ``func`` over [lo, hi], refine local minima and summarize.

    ``min_value`` is taken over [margin_lo, margin_hi]; outside it the sign is certified
    analytically and only failures (``worst_value``) matter.
    """
    rs = _grid(lo, hi, cfg)
    extra = [r for r in required if lo <= r <= hi]
    if extra:
        rs = np.unique(np.concatenate([rs, np.array(extra, dtype=np.float64)]))
    values = func(rs)
    finite = np.where(np.isnan(values), -np.inf, values)

    candidates = []
    for i in range(1, rs.size - 1):
        v = finite[i]
        if np.isfinite(v) and v <= finite[i - 1] and v <= finite[i + 1]:
            candidates.append((v, i))
    candidates.sort()
    refinements = []
    for _, i in candidates[:_MAX_BRACKETS]:
        ref = _refine(func, rs[i - 1], rs[i], rs[i + 1], cfg)
        if ref is not None:
            refinements.append(ref)

    all_r = np.concatenate([rs, np.array([ref["r"] for ref in refinements], dtype=np.float64)])
    all_v = np.concatenate(
        [finite, np.array([ref["value"] for ref in refinements], dtype=np.float64)]
    )
    worst = int(np.argmin(all_v))
    mask = (all_r >= margin_lo) & (all_r <= margin_hi)
    if mask.any():
        idx = np.flatnonzero(mask)[int(np.argmin(all_v[mask]))]
    else:
        idx = worst
    inner = mask & (np.abs(all_r) > _INTERIOR_GAP) & (np.abs(all_r - 1.0) > _INTERIOR_GAP)
    interior_min = float(all_v[inner].min()) if inner.any() else float(all_v[idx])
    logger.debug(
        "scan [%g, %g]: %d samples, %d refinements, min %.3e at %g",
        lo,
        hi,
        rs.size,
        len(refinements),
        all_v[idx],
        all_r[idx],
    )
    return _ScanResult(
        rs=rs,
        values=values,
        refinements=refinements,
        min_value=float(all_v[idx]),
        argmin=float(all_r[idx]),
        worst_value=float(all_v[worst]),
        worst_r=float(all_r[worst]),
        interior_min=interior_min,
    )


def _window(info: TailInfo, cfg: ScanConfig) -> Tuple[float, float, bool]:
    """Scan window reaching past both tail cutoffs, capped at ``max_window``."""
    want_hi = max(cfg.r_hi, max(info.cutoff_pos, 1.0) + 1.0)
    want_lo = min(cfg.r_lo, -(info.cutoff_neg + 1.0))
    covered = want_hi <= cfg.max_window and -want_lo <= cfg.max_window
    return max(want_lo, -cfg.max_window), min(want_hi, cfg.max_window), covered


def _check_pair(x: DVector, y: DVector):
    _require_same_dim(x, y)
    if not x.is_positive:
        raise PreconditionError("The first vector must have strictly positive components")


def _boundary_gaps(x: DVector, y: DVector) -> Dict[str, float]:
    return {"0": gap(0, x, y), "1": gap(1, x, y)}


def _tail_failure(info: TailInfo, strict: bool) -> Optional[Tuple[float, str]]:
    """Witness and reason when a tail sign alone decides failure."""
    bad_pos = info.sign_pos < 0 or (strict and info.sign_pos == 0)
    bad_neg = info.sign_neg < 0 or (strict and info.sign_neg == 0)
    if bad_pos and math.isfinite(info.cutoff_pos):
        return max(info.cutoff_pos, 1.0) + 1.0, "gap is negative as r -> +inf"
    if bad_neg and math.isfinite(info.cutoff_neg):
        return -(info.cutoff_neg + 1.0), "gap is negative as r -> -inf"
    return None


def dominance_scan(
    x: DVector,
    y: DVector,
    cfg: Optional[ScanConfig] = None,
    strict: bool = True,
    evaluator: str = "log",
) -> ScanReport:
    """Decide f_r(x) < f_r(y) (``strict``) or f_r(x) ≤ f_r(y) for every real r.

    Args:
        x : Strictly positive vector.
        y : Non-negative vector of the same dimension.
        cfg : Scanner settings.
        strict : Whether the dominance must be strict everywhere.
        evaluator : ``"log"`` scans φ built from log power sums; ``"power"`` scans
            ψ(p) = (Σy^p/Σx^p − 1)/(p(p−1)) built from direct powers. Both have the sign of
            the gap.

    Returns:
        A :class:`ScanReport`.

    """
    cfg = cfg or ScanConfig()
    _check_pair(x, y)
    if evaluator not in _EVALUATORS:
        raise PreconditionError(f"Unknown evaluator {evaluator!r}")
    info = _tail_info(x, y)
    boundary = _boundary_gaps(x, y)
    xa, ya = x.array, y.array
    evaluate = _EVALUATORS[evaluator]

    if x.asc == y.asc:
        status = Status.FAILS if strict else Status.HOLDS
        return ScanReport(
            status=status,
            witness_r=0.0 if strict else None,
            min_gap=0.0,
            argmin_r=0.0,
            tail_signs=(0, 0),
            tail_cutoffs=(0.0, 0.0),
            window=(cfg.r_lo, cfg.r_hi),
            boundary_gaps=boundary,
            reason="sorted vectors are equal; the gap vanishes identically",
        )

    lo, hi, covered = _window(info, cfg)
    tail = _tail_failure(info, strict)
    if tail is not None:
        witness, reason = tail
        value = float(evaluate(witness, xa, ya)[0])
        logger.debug("tail decides: %s (r=%g, phi=%.3e)", reason, witness, value)
        return ScanReport(
            status=Status.FAILS,
            witness_r=witness,
            min_gap=value,
            argmin_r=witness,
            tail_signs=(info.sign_pos, info.sign_neg),
            tail_cutoffs=(info.cutoff_pos, info.cutoff_neg),
            window=(lo, hi),
            boundary_gaps=boundary,
            reason=reason,
        )

    def func(rs):
        return evaluate(rs, xa, ya)

    margin_hi = max(info.cutoff_pos, 1.0) if info.sign_pos > 0 else hi
    margin_lo = -info.cutoff_neg if info.sign_neg > 0 else lo
    res = _run_scan(func, lo, hi, cfg, margin_lo, margin_hi, required=(0.0, 1.0))
    samples = list(zip(res.rs.tolist(), res.values.tolist()))

    witness = None
    reason = ""
    if res.worst_value < -cfg.margin_tol:
        status, witness = Status.FAILS, res.worst_r
    elif strict and res.min_value > cfg.margin_tol:
        status = Status.HOLDS
    elif not strict:
        status = Status.HOLDS
    else:
        status = Status.INCONCLUSIVE
        reason = f"minimum gap {res.min_value:.3e} is within the margin {cfg.margin_tol:g}"
    if status is Status.HOLDS and not covered:
        status = Status.INCONCLUSIVE
        reason = "tail cutoff lies beyond max_window; the far tail is not certified"

    return ScanReport(
        status=status,
        witness_r=witness,
        min_gap=res.min_value if status is not Status.FAILS else res.worst_value,
        argmin_r=res.argmin if status is not Status.FAILS else res.worst_r,
        tail_signs=(info.sign_pos, info.sign_neg),
        tail_cutoffs=(info.cutoff_pos, info.cutoff_neg),
        window=(lo, hi),
        boundary_gaps=boundary,
        samples=samples,
        refinements=res.refinements,
        reason=reason,
        interior_min=res.interior_min,
    )


def scan_strict_dominance(
    x: DVector, y: DVector, cfg: Optional[ScanConfig] = None
) -> ScanReport:
    """Decide numerically whether f_r(x) < f_r(y) for all real r.

    Raises:
        PreconditionError: x has a zero component, dimensions differ, or x↑ = y↑.

    """
    _check_pair(x, y)
    if x.asc == y.asc:
        raise PreconditionError("Strict dominance needs distinct sorted vectors")
    return dominance_scan(x, y, cfg, strict=True)


# **********************************
# Power-mean conditions
# **********************************


def _decide_region(res: _ScanResult, margin: float) -> Tuple[bool, bool]:
    """(condition holds, inside the margin band) for one scanned region."""
    if res.worst_value < -margin:
        return False, False
    if res.min_value > margin:
        return True, False
    return False, True


def turgut_conditions(
    x: DVector, y: DVector, cfg: Optional[ScanConfig] = None
) -> TurgutReport:
    """Check A_ν(x) > A_ν(y) for ν < 1, A_ν(x) < A_ν(y) for ν > 1 and σ(x) > σ(y).

    The ν-scans use the normalized differences (ln A_ν(x) − ln A_ν(y))/(1 − ν) and
    (ln A_ν(y) − ln A_ν(x))/(ν − 1) with the same grid, refinement and tail machinery as
    :func:`scan_strict_dominance`.

    Matched zeros are deleted with :func:`normalize_pair` first. Zeros left in y are
    rejected: A_ν(y) vanishes for ν ≤ 0 there, so use :func:`scan_strict_dominance` or
    ``trumped`` for such pairs.

    Raises:
        PreconditionError: x or y keeps a zero component after normalization, or x↑ = y↑.

    """
    cfg = cfg or ScanConfig()
    x, y, _ = normalized_pair_fixpoint(x, y)
    _check_pair(x, y)
    if x.asc == y.asc:
        raise PreconditionError("The power-mean conditions need distinct sorted vectors")
    if y.has_zeros:
        raise PreconditionError("Power means at ν ≤ 0 need a strictly positive second vector")
    info = _tail_info(x, y)
    lo, hi, covered = _window(info, cfg)
    xa, ya = x.array, y.array

    def below(nus):
        return (_log_power_means(nus, xa) - _log_power_means(nus, ya)) / (1.0 - nus)

    def above(nus):
        return (_log_power_means(nus, ya) - _log_power_means(nus, xa)) / (nus - 1.0)

    minima, argmins = {}, {}
    flags, bands = [], []

    if info.sign_neg <= 0:
        flags.append(False)
        bands.append(False)
        minima["below_one"], argmins["below_one"] = -INFINITY, None
    else:
        res = _run_scan(
            below, lo, 1.0 - _NU_EXCLUSION, cfg, -info.cutoff_neg, 1.0, required=(0.0,)
        )
        ok, band = _decide_region(res, cfg.margin_tol)
        flags.append(ok and covered)
        bands.append(band or (ok and not covered))
        minima["below_one"], argmins["below_one"] = res.min_value, res.argmin

    if info.sign_pos <= 0:
        flags.append(False)
        bands.append(False)
        minima["above_one"], argmins["above_one"] = -INFINITY, None
    else:
        res = _run_scan(above, 1.0 + _NU_EXCLUSION, hi, cfg, 1.0, max(info.cutoff_pos, 1.0))
        ok, band = _decide_region(res, cfg.margin_tol)
        flags.append(ok and covered)
        bands.append(band or (ok and not covered))
        minima["above_one"], argmins["above_one"] = res.min_value, res.argmin

    entropy_margin = (entropy(x) - entropy(y)) / float(x.total)
    flags.append(entropy_margin > cfg.margin_tol)
    bands.append(abs(entropy_margin) <= cfg.margin_tol)
    minima["entropy"], argmins["entropy"] = entropy_margin, 1.0

    return TurgutReport(
        conditions=tuple(flags),
        inconclusive=any(bands),
        minima=minima,
        argmins=argmins,
    )


# **********************************
# Direct power sums
# **********************************


def _psi(ps, xa: np.ndarray, ya: np.ndarray) -> np.ndarray:
    """ψ(p) = (Σy^p / Σx^p − 1)/(p(p−1)) from direct powers of strictly positive vectors.

    Both power sums are taken relative to m^p, with m the largest entry for p > 0 and the
    smallest for p < 0, so neither overflows and the ratio is scale-free.
    """
    ps = np.atleast_1d(np.asarray(ps, dtype=np.float64))
    both = np.concatenate([xa, ya])
    scale = np.where(ps > 0, both.max(), both.min())
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        sy = np.sum((ya[None, :] / scale[:, None]) ** ps[:, None], axis=1)
        sx = np.sum((xa[None, :] / scale[:, None]) ** ps[:, None], axis=1)
        out = (sy / sx - 1.0) / (ps * (ps - 1.0))
    at0 = np.abs(ps) < _REMOVABLE_EPS
    if at0.any():
        out[at0] = (np.log(xa).sum() - np.log(ya).sum()) / xa.size
    at1 = np.abs(ps - 1.0) < _REMOVABLE_EPS
    if at1.any():
        out[at1] = (xlogy(ya, ya).sum() - xlogy(xa, xa).sum()) / xa.sum()
    return out


_EVALUATORS = {"log": _phi, "power": _psi}
