"""
catalysis.py
Catalyst verification and search: given x and y, find z with x⊗z ≺ y⊗z, plus the weak
(sub/super) catalytic checks.

The search itself is a PocketFlow pipeline assembled in :mod:`majorizer.flows.catalyst_search`;
this module holds the domain types and the numeric pieces the pipeline nodes call.
"""

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Union

import numpy as np

from .errors import DomainError, PreconditionError
from .functionals import ScanConfig
from .relations import majorize, submajorize, supermajorize, totals_equal
from .utils.utils import env_float, env_int, get_logger
from .vectors import DVector, tensor
from .verdicts import Verdict, jsonable

logger = get_logger(__name__)

_MIN_STEP = 1e-12


@dataclass(frozen=True)
class Catalyst:
    """An auxiliary vector z with strictly positive components."""

    z: DVector

    def __post_init__(self):
        if not isinstance(self.z, DVector):
            object.__setattr__(self, "z", DVector(self.z))
        if not self.z.is_positive:
            raise DomainError("A catalyst needs strictly positive components")

    @property
    def dim(self) -> int:
        return self.z.dim

    def to_dict(self) -> Dict:
        return {"z": jsonable(self.z.to_list()), "dim": self.dim}


@dataclass(frozen=True)
class SearchConfig:
    """Settings of the randomized catalyst search.

    Parameters
    ----------
    max_dim : int
        Largest catalyst dimension tried.
    restarts_per_dim : int
        Seeded random starting points per dimension.
    seed : int
        Base seed; each restart draws from ``SeedSequence([seed, dim, restart])``.
    descent_iters : int
        Maximum sweeps of the coordinate descent per restart.
    step_init : float
        Initial multiplicative step; coordinates are scaled by (1 + step) or 1/(1 + step).
    step_decay : float
        Step factor applied after a sweep without improvement.
    violation_tol : float
        Largest accepted violation before the final recheck.
    prefix_slack : float
        Margin demanded on every non-final prefix during descent.

    """

    max_dim: int = 8
    restarts_per_dim: int = 64
    seed: int = 0
    descent_iters: int = 500
    step_init: float = 0.25
    step_decay: float = 0.5
    violation_tol: float = 0.0
    prefix_slack: float = 1e-9

    def __post_init__(self):
        if self.max_dim < 1:
            raise PreconditionError("SearchConfig.max_dim must be at least 1")
        if self.restarts_per_dim < 1:
            raise PreconditionError("SearchConfig.restarts_per_dim must be at least 1")
        if self.descent_iters < 1 or self.step_init <= 0:
            raise PreconditionError("SearchConfig descent settings must be positive")
        if not 0 < self.step_decay < 1:
            raise PreconditionError("SearchConfig.step_decay must lie in (0, 1)")
        if self.violation_tol < 0 or self.prefix_slack < 0:
            raise PreconditionError("SearchConfig tolerances must be non-negative")

    @classmethod
    def from_env(cls, **overrides) -> "SearchConfig":
        """Build a configuration from ``MAJORIZER_*`` environment variables."""
        base = cls()
        cfg = cls(
            max_dim=env_int("MAX_DIM", base.max_dim),
            restarts_per_dim=env_int("RESTARTS", base.restarts_per_dim),
            seed=env_int("SEED", base.seed),
            descent_iters=env_int("DESCENT_ITERS", base.descent_iters),
            step_init=env_float("STEP_INIT", base.step_init),
        )
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(cfg, **overrides) if overrides else cfg


@dataclass
class CatalystSearchReport:
    """Outcome of :func:`search_catalyst`.

    ``found`` is False both when the prefilter proves that no catalyst exists and when the
    search ran out of dimensions; only the former is a proof of non-existence.
    """

    found: bool
    catalyst: Optional[Catalyst]
    dim_tried: List[int] = field(default_factory=list)
    best_violation_per_dim: List[float] = field(default_factory=list)
    prefilter: Optional[Verdict] = None
    seeds_used: int = 0
    seed: int = 0
    reason: str = ""

    @property
    def prefilter_failed(self) -> bool:
        return self.prefilter is not None and self.prefilter.fails

    def to_dict(self) -> Dict:
        return {
            "found": self.found,
            "catalyst": self.catalyst.to_dict() if self.catalyst else None,
            "dim_tried": list(self.dim_tried),
            "best_violation_per_dim": jsonable(self.best_violation_per_dim),
            "prefilter": self.prefilter.to_dict() if self.prefilter else None,
            "seeds_used": self.seeds_used,
            "seed": self.seed,
            "reason": self.reason,
        }


# **********************************
# Checks
# **********************************


def _as_vector(z: Union[Catalyst, DVector]) -> DVector:
    return z.z if isinstance(z, Catalyst) else z


def _require_equal_totals(x: DVector, y: DVector):
    if not totals_equal(x, y):
        raise PreconditionError("Catalytic majorization needs vectors with equal totals")


def check_catalyst(x: DVector, y: DVector, z: Union[Catalyst, DVector]) -> bool:
    """Return whether x ⊗ z ≺ y ⊗ z.

    Raises:
        PreconditionError: Σx ≠ Σy.

    """
    _require_equal_totals(x, y)
    zv = _as_vector(z)
    return majorize(tensor(x, zv), tensor(y, zv)).holds


def violation(x: DVector, y: DVector, z: Union[Catalyst, DVector]):
    """Total shortfall Σ_k max(0, Σ_k (x⊗z)↓ − Σ_k (y⊗z)↓).

    Exact (``Fraction``) when all inputs are exact; otherwise a float in which margins within
    the majorization tolerance count as zero, so the value vanishes exactly when
    :func:`check_catalyst` is true.

    Raises:
        PreconditionError: Σx ≠ Σy.

    """
    _require_equal_totals(x, y)
    zv = _as_vector(z)
    verdict = majorize(tensor(x, zv), tensor(y, zv))
    if verdict.exact:
        return sum((-m for m in verdict.margins if m < 0), Fraction(0))
    if verdict.holds:
        return 0.0
    return math.fsum(-m for m in verdict.margins if m < 0)


def check_weak_catalyst(
    x: DVector, y: DVector, z: Union[Catalyst, DVector], mode: str = "sub"
) -> bool:
    """Return whether z is a sub- (``mode="sub"``) or super- (``"super"``) catalyst."""
    zv = _as_vector(z)
    if mode == "sub":
        return submajorize(tensor(x, zv), tensor(y, zv)).holds
    if mode == "super":
        return supermajorize(tensor(x, zv), tensor(y, zv)).holds
    raise PreconditionError(f"Unknown weak catalysis mode {mode!r}; use 'sub' or 'super'")


# **********************************
# Search primitives
# **********************************


def search_objective(xa: np.ndarray, ya: np.ndarray, za: np.ndarray, slack: float) -> float:
    """Shortfall of the sorted tensor prefix sums, demanding ``slack`` on each prefix.

    The full sum is left out: it is fixed by Σx = Σy and would only add rounding noise.
    """
    cx = np.cumsum(np.sort(np.outer(xa, za).ravel())[::-1])[:-1]
    cy = np.cumsum(np.sort(np.outer(ya, za).ravel())[::-1])[:-1]
    return float(np.maximum(slack - (cy - cx), 0.0).sum())


def draw_start(dim: int, restart: int, seed: int) -> np.ndarray:
    """Seeded point of the open simplex, sorted in non-increasing order."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, dim, restart]))
    return np.sort(rng.dirichlet(np.ones(dim)))[::-1]


def descend(xa: np.ndarray, ya: np.ndarray, z0: np.ndarray, cfg: SearchConfig) -> Dict:
    """Multiplicative coordinate descent on :func:`search_objective`.

    Each sweep tries z_i·(1 + step) and z_i/(1 + step) for every coordinate, renormalizing to
    Σz = 1; the step decays after a sweep without improvement.

    Returns:
        Dict with the final ``z`` (sorted, normalized), its ``objective``, the slack-free
        ``raw_violation`` and the number of ``sweeps``.

    """
    z = z0 / z0.sum()
    best = search_objective(xa, ya, z, cfg.prefix_slack)
    step = cfg.step_init
    sweeps = 0
    while sweeps < cfg.descent_iters and best > cfg.violation_tol and step >= _MIN_STEP:
        sweeps += 1
        improved = False
        for i in range(z.size):
            for factor in (1.0 + step, 1.0 / (1.0 + step)):
                trial = z.copy()
                trial[i] *= factor
                trial /= trial.sum()
                value = search_objective(xa, ya, trial, cfg.prefix_slack)
                if value < best:
                    z, best, improved = trial, value, True
        if not improved:
            step *= cfg.step_decay
    z = np.sort(z)[::-1]
    return {
        "z": z,
        "objective": best,
        "raw_violation": search_objective(xa, ya, z, 0.0),
        "sweeps": sweeps,
    }


def accept(x: DVector, y: DVector, za: np.ndarray) -> Optional[Catalyst]:
    """Recheck a float candidate at full precision and wrap it as a catalyst.

    With exact inputs the candidate is converted to the exact binary value of each float and
    checked in rational arithmetic.
    """
    if za.min() <= 0:
        return None
    if x.exact and y.exact:
        zv = DVector([Fraction(float(v)) for v in za], exact=True)
    else:
        zv = DVector(za, exact=False)
    if check_catalyst(x, y, zv):
        return Catalyst(zv)
    return None


def search_catalyst(
    x: DVector,
    y: DVector,
    cfg: Optional[SearchConfig] = None,
    scan_cfg: Optional[ScanConfig] = None,
) -> CatalystSearchReport:
    """Search for a catalyst of dimension at most ``cfg.max_dim``.

    Runs the trumping prefilter first; when it fails no search is attempted. Deterministic for
    a fixed seed.

    Raises:
        PreconditionError: Σx ≠ Σy.
        DomainError: x has a zero component.

    """
    from .flows.catalyst_search import start

    _require_equal_totals(x, y)
    if not x.is_positive:
        raise DomainError("The catalyst search needs a strictly positive first vector")
    return start(x, y, cfg or SearchConfig(), scan_cfg or ScanConfig())
