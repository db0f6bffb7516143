"""
geometry.py
Membership in S(y) ⊆ T(y) ⊆ P(y), extreme-point classification of P(y), boundary points,
the averaging path into T(y) and Rado's convex decomposition.

Public API:
 - in_S, in_T, in_P, contains_chain
 - classify_extreme_point, boundary_extreme_values, boundary_point
 - interior_path, rado_decompose
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, PreconditionError
from .functionals import ScanConfig, dominance_scan
from .relations import FLOAT_TOL, majorize, power_majorize, totals_equal, trumped
from .utils.utils import get_logger
from .vectors import DVector
from .verdicts import PowerVerdict, Status, Verdict, jsonable

logger = get_logger(__name__)

BISECTION_STEPS = 50


@dataclass
class MembershipReport:
    """The three memberships of x for a fixed y."""

    in_S: bool
    in_T: Verdict
    in_P: PowerVerdict

    @property
    def chain_consistent(self) -> bool:
        """False when S(y) ⊆ T(y) ⊆ P(y) is contradicted by the verdicts."""
        if self.in_S and self.in_T.fails:
            return False
        return not (self.in_T.holds and self.in_P.fails)

    def to_dict(self) -> Dict:
        return {
            "S": self.in_S,
            "T": self.in_T.status.value,
            "P": self.in_P.status.value,
            "chain_consistent": self.chain_consistent,
        }


@dataclass
class ExtremePointReport:
    """Both characterizations of an extreme point of P(y), evaluated independently.

    Attributes
    ----------
    in_P : PowerVerdict
    criterion_equality : Optional[float]
        A parameter r* with |f_r*(y) − f_r*(x)| numerically zero, if one was found.
    is_permutation_of_y : bool
    trumped_by_y : Verdict
    classified_extreme : bool
        True iff ``criterion_equality`` is present.
    inconclusive : bool
        The scan could not certify its window, or x does not touch the boundary and the
        trumping verdict is Inconclusive; the two criteria are not compared then.
    min_gap : float

    """

    in_P: PowerVerdict
    criterion_equality: Optional[float]
    is_permutation_of_y: bool
    trumped_by_y: Verdict
    classified_extreme: bool
    inconclusive: bool
    min_gap: float

    @property
    def criterion_permutation(self) -> bool:
        """Either x is not trumped by y or x is a permutation of y."""
        return self.is_permutation_of_y or not self.trumped_by_y.holds

    @property
    def agreement(self) -> Optional[bool]:
        if self.inconclusive:
            return None
        return self.classified_extreme == self.criterion_permutation

    def to_dict(self) -> Dict:
        return {
            "in_P": self.in_P.status.value,
            "criterion_equality": jsonable(self.criterion_equality),
            "is_permutation_of_y": self.is_permutation_of_y,
            "trumped_by_y": self.trumped_by_y.to_dict(),
            "classified_extreme": self.classified_extreme,
            "criterion_permutation": self.criterion_permutation,
            "agreement": self.agreement,
            "inconclusive": self.inconclusive,
            "min_gap": jsonable(self.min_gap),
        }


@dataclass
class ConvexDecomposition:
    """x written as Σ weight · (y permuted), permutations as index tuples.

    A term ``(w, perm)`` stands for the vector ``(y[perm[0]], ..., y[perm[d-1]])``.
    """

    terms: List[Tuple[object, Tuple[int, ...]]] = field(default_factory=list)
    reconstruction_error: float = 0.0
    exact: bool = False

    @property
    def weight_sum(self):
        return sum(w for w, _ in self.terms)

    def reconstruct(self, y: DVector) -> List:
        zero = Fraction(0) if self.exact else 0.0
        out_ls = [zero] * y.dim
        for w, perm in self.terms:
            for i, j in enumerate(perm):
                out_ls[i] += w * y.components[j]
        return out_ls

    def to_dict(self) -> Dict:
        return {
            "terms": [{"weight": jsonable(w), "permutation": list(p)} for w, p in self.terms],
            "reconstruction_error": self.reconstruction_error,
            "exact": self.exact,
        }


# **********************************
# Membership
# **********************************


def _require_positive(x: DVector, name: str = "x"):
    if not x.is_positive:
        raise DomainError(f"{name} must have strictly positive components")


def in_S(x: DVector, y: DVector) -> bool:
    """x ∈ S(y), i.e. x ≺ y."""
    _require_positive(x)
    return majorize(x, y).holds


def in_T(x: DVector, y: DVector, cfg: Optional[ScanConfig] = None) -> Verdict:
    """x ∈ T(y), i.e. x ≺_T y."""
    _require_positive(x)
    return trumped(x, y, cfg)


def in_P(x: DVector, y: DVector, cfg: Optional[ScanConfig] = None) -> PowerVerdict:
    """x ∈ P(y), i.e. x ⪯_p y."""
    _require_positive(x)
    return power_majorize(x, y, cfg)


def contains_chain(
    x: DVector, y: DVector, cfg: Optional[ScanConfig] = None
) -> MembershipReport:
    """Evaluate all three memberships at once."""
    return MembershipReport(in_S=in_S(x, y), in_T=in_T(x, y, cfg), in_P=in_P(x, y, cfg))


# **********************************
# Extreme points
# **********************************


def classify_extreme_point(
    x: DVector, y: DVector, cfg: Optional[ScanConfig] = None
) -> ExtremePointReport:
    """Classify x ∈ P(y) as an extreme point by two independent criteria.

    The equality criterion looks for r with f_r(x) = f_r(y) through the scanner minimum
    (r ∈ {0, 1} included); the permutation criterion asks whether x is a permutation of y
    or is not trumped by y.

    Raises:
        PreconditionError: x is not in P(y) or the dimensions differ.

    """
    cfg = cfg or ScanConfig()
    _require_positive(x)
    _require_positive(y, "y")
    if x.dim != y.dim:
        raise PreconditionError("classify_extreme_point needs vectors of equal dimension")
    pv = power_majorize(x, y, cfg)
    if pv.fails:
        raise PreconditionError("x is not in P(y)")
    is_perm = x.asc == y.asc
    tv = trumped(x, y, cfg)
    if is_perm:
        return ExtremePointReport(
            in_P=pv,
            criterion_equality=0.0,
            is_permutation_of_y=True,
            trumped_by_y=tv,
            classified_extreme=True,
            inconclusive=False,
            min_gap=0.0,
        )
    report = dominance_scan(x, y, cfg, strict=False)
    # x is in P(y), so a slightly negative minimum is rounding at a touching point
    hit = report.min_gap <= cfg.margin_tol
    logger.debug("extreme-point scan: min %.3e at r=%g", report.min_gap, report.argmin_r)
    return ExtremePointReport(
        in_P=pv,
        criterion_equality=report.argmin_r if hit else None,
        is_permutation_of_y=False,
        trumped_by_y=tv,
        classified_extreme=hit,
        inconclusive=report.status is Status.INCONCLUSIVE or (tv.inconclusive and not hit),
        min_gap=report.min_gap,
    )


def boundary_extreme_values(x: DVector, y: DVector) -> Tuple[bool, bool]:
    """Return (x_max == y_max, x_min == y_min), exactly or to relative 1e-12."""
    _require_positive(x)
    _require_positive(y, "y")

    def same(a, b) -> bool:
        if x.exact and y.exact:
            return a == b
        return math.isclose(float(a), float(b), rel_tol=FLOAT_TOL)

    return same(x.desc[0], y.desc[0]), same(x.asc[0], y.asc[0])


def boundary_point(
    y: DVector, direction: DVector, cfg: Optional[ScanConfig] = None
) -> DVector:
    """Bisect from the uniform vector towards ``direction`` onto the boundary of P(y).

    Args:
        y : Strictly positive vector.
        direction : A vector with Σ = Σy that is not in P(y).
        cfg : Scanner settings.

    Returns:
        The last point of the segment found inside P(y) (Holds or Inconclusive).

    Raises:
        PreconditionError: totals differ or ``direction`` already lies in P(y).

    """
    cfg = cfg or ScanConfig()
    _require_positive(y, "y")
    _require_positive(direction, "direction")
    if direction.dim != y.dim or not totals_equal(direction, y):
        raise PreconditionError("direction must match y in dimension and total")
    if not power_majorize(direction, y, cfg).fails:
        raise PreconditionError("direction must lie outside P(y)")
    centre = np.full(y.dim, float(y.total) / y.dim)
    target = direction.array

    def point(t: float) -> DVector:
        return DVector(centre + t * (target - centre), exact=False)

    lo, hi = 0.0, 1.0
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if power_majorize(point(mid), y, cfg).fails:
            hi = mid
        else:
            lo = mid
    logger.debug("boundary_point: t in [%.17g, %.17g]", lo, hi)
    return point(lo)


# **********************************
# Paths and decompositions
# **********************************


def interior_path(x: DVector, perm: Sequence[int], t) -> DVector:
    """Return t·x + (1 − t)·x′ with x′ = x permuted by ``perm``.

    Exact when x is exact and t is an ``int`` or ``Fraction``.

    Raises:
        DomainError: t is not in (0, 1).
        PreconditionError: the permutation leaves x unchanged.

    """
    if not 0 < t < 1:
        raise DomainError(f"t must lie strictly between 0 and 1, got {t!r}")
    moved = x.permuted(perm)
    if moved == x:
        raise PreconditionError("The permutation leaves x unchanged")
    exact = x.exact and isinstance(t, (int, Fraction))
    if exact:
        return DVector(
            [t * a + (1 - t) * b for a, b in zip(x.components, moved.components)], exact=True
        )
    return DVector(t * x.array + (1.0 - t) * moved.array, exact=False)


def _transform_chain(xs: List, ys: List, tol) -> List[Tuple[object, int, int]]:
    """T-transforms (λ, j, k) carrying the sorted y down to the sorted x.

    Each transform replaces v by λ·v + (1 − λ)·(v with entries j and k swapped) and makes
    at least one more coordinate agree with x, so at most d − 1 are needed.
    """
    d = len(xs)
    v = list(ys)
    chain = []
    for _ in range(d):
        js = [i for i in range(d) if v[i] > xs[i] + tol]
        if not js:
            break
        j = js[-1]
        ks = [i for i in range(j + 1, d) if v[i] < xs[i] - tol]
        if not ks:
            break
        k = ks[0]
        delta = min(v[j] - xs[j], xs[k] - v[k])
        lam = 1 - delta / (v[j] - v[k])
        if v[j] - xs[j] <= xs[k] - v[k]:
            v[j], v[k] = xs[j], v[k] + delta
        else:
            v[j], v[k] = v[j] - delta, xs[k]
        chain.append((lam, j, k))
    return chain


def rado_decompose(x: DVector, y: DVector) -> ConvexDecomposition:
    """Write x as a convex combination of permutations of y.

    Builds a chain of at most d − 1 two-coordinate averaging transforms from y↓ to x↓ and
    expands it into at most 2^(d−1) explicit (weight, permutation) terms. Exact when both
    vectors are exact.

    Raises:
        PreconditionError: x is not majorized by y, or the dimensions differ.

    """
    if x.dim != y.dim:
        raise PreconditionError("rado_decompose needs vectors of equal dimension")
    if not majorize(x, y).holds:
        raise PreconditionError("x is not majorized by y")
    exact = x.exact and y.exact
    d = x.dim
    px = sorted(range(d), key=lambda i: x.components[i], reverse=True)
    py = sorted(range(d), key=lambda i: y.components[i], reverse=True)
    xs = [x.components[i] for i in px]
    ys = [y.components[i] for i in py]
    scale = max(float(y.total), 1.0)
    chain = _transform_chain(xs, ys, 0 if exact else FLOAT_TOL * scale * 1e-3)

    one = Fraction(1) if exact else 1.0
    identity = tuple(range(d))
    terms = {identity: one}
    for lam, j, k in chain:
        tau = list(identity)
        tau[j], tau[k] = k, j
        expanded: Dict[Tuple[int, ...], object] = {}
        for sigma, w in terms.items():
            for weight, perm in ((w * lam, sigma), (w * (1 - lam), tuple(sigma[t] for t in tau))):
                if weight > 0:
                    expanded[perm] = expanded.get(perm, 0) + weight
        terms = expanded

    inv_px = [0] * d
    for pos, i in enumerate(px):
        inv_px[i] = pos
    merged: Dict[Tuple[int, ...], object] = {}
    for sigma, w in terms.items():
        # y[py][sigma][inv_px] as one index tuple into the original y
        pi = tuple(py[sigma[inv_px[i]]] for i in range(d))
        merged[pi] = merged.get(pi, 0) + w

    decomposition = ConvexDecomposition(terms=[(w, p) for p, w in merged.items()], exact=exact)
    rebuilt = decomposition.reconstruct(y)
    decomposition.reconstruction_error = max(
        float(abs(a - b)) for a, b in zip(rebuilt, x.components)
    )
    logger.debug(
        "rado_decompose d=%d: %d transforms, %d terms, error %.2e",
        d,
        len(chain),
        len(decomposition.terms),
        decomposition.reconstruction_error,
    )
    return decomposition


def sample_p_boundary(y: DVector, rng: np.random.Generator, cfg=None) -> Optional[DVector]:
    """Random boundary point of P(y) along a random direction, or None if none is outside."""
    d = y.dim
    total = float(y.total)
    for _ in range(8):
        w = rng.dirichlet(np.full(d, 0.3)) * total
        if w.min() <= 0:
            continue
        direction = DVector(w, exact=False)
        if power_majorize(direction, y, cfg).status is Status.FAILS:
            return boundary_point(y, direction, cfg)
    return None
