"""
families.py
Integer pair generators built from Bennett's inequality systems, midpoint Riemann sums of
power functions and the convex-interval inequality verifier.

Generators emit exact Python integers so that products such as Π x_i^{x_i} can be compared
without rounding.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Callable, List, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import simpson

from .errors import DomainError, PreconditionError
from .utils.utils import get_logger
from .vectors import DVector

logger = get_logger(__name__)

MONOTONE_TOL = 1e-13
QUAD_RTOL = 1e-10
QUAD_MAX_LEVEL = 20


@dataclass(frozen=True)
class BennettPair:
    """Trumping pair obtained by cross-multiplying the n-th Bennett inequality.

    Attributes
    ----------
    n : int
    x : DVector
        (2k−1)(n+1) for k = 1..n, each n+1 times, ascending.
    y : DVector
        (2k−1)n for k = 1..n+1, each n times, ascending.

    """

    n: int
    x: DVector
    y: DVector

    def to_dict(self):
        return {"n": self.n, "x": self.x.to_list(), "y": self.y.to_list()}


@dataclass(frozen=True)
class FlipPattern:
    held_prefixes: int
    flip_index: Optional[int]


def _require_index(n: int):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise PreconditionError(f"n must be a positive integer, got {n!r}")


def bennett_pair(n: int) -> BennettPair:
    """Generate the n-th Bennett pair; trumped but not majorized for n ≥ 2.

    Raises:
        PreconditionError: n < 1.

    """
    _require_index(n)
    n = int(n)
    x_ls = sorted((2 * k - 1) * (n + 1) for k in range(1, n + 1) for _ in range(n + 1))
    y_ls = sorted((2 * k - 1) * n for k in range(1, n + 2) for _ in range(n))
    if sum(x_ls) != sum(y_ls):
        raise RuntimeError(f"Bennett pair {n} has unequal totals")
    return BennettPair(n=n, x=DVector(x_ls, exact=True), y=DVector(y_ls, exact=True))


def bennett05_pair(n: int) -> Tuple[DVector, DVector]:
    """Generate the n-th pair of the non-example system, which is plainly majorized.

    x = {(2i−1)(2j−1) : i ∈ [1, n], j ∈ [n+2, 2n+2]},
    y = {(2i−1)(2j−1) : i ∈ [n+1, 2n], j ∈ [1, n+1]}, both ascending.

    Raises:
        PreconditionError: n < 1.

    """
    _require_index(n)
    n = int(n)
    x_ls = sorted(
        (2 * i - 1) * (2 * j - 1) for i in range(1, n + 1) for j in range(n + 2, 2 * n + 3)
    )
    y_ls = sorted(
        (2 * i - 1) * (2 * j - 1) for i in range(n + 1, 2 * n + 1) for j in range(1, n + 2)
    )
    if sum(x_ls) != sum(y_ls):
        raise RuntimeError(f"Non-example pair {n} has unequal totals")
    return DVector(x_ls, exact=True), DVector(y_ls, exact=True)


def flip_pattern(pair) -> FlipPattern:
    """Count the leading strict ascending inequalities Σ_k x↑ > Σ_k y↑ and find the first flip.

    Args:
        pair : A :class:`BennettPair` or an ``(x, y)`` tuple.

    Returns:
        ``FlipPattern(held_prefixes, flip_index)``; ``flip_index`` is the first 1-based k with
        Σ_k x↑ < Σ_k y↑, or None.

    """
    x, y = (pair.x, pair.y) if isinstance(pair, BennettPair) else pair
    xs = list(accumulate(x.as_exact().asc))
    ys = list(accumulate(y.as_exact().asc))
    held = 0
    for a, b in zip(xs, ys):
        if a <= b:
            break
        held += 1
    flip = next((k for k, (a, b) in enumerate(zip(xs, ys), start=1) if a < b), None)
    return FlipPattern(held_prefixes=held, flip_index=flip)


def bennett_term(p: float, n: int) -> float:
    """(1^p + 3^p + ... + (2n−1)^p) / n^(p+1)."""
    _require_index(n)
    return math.fsum(float(2 * k - 1) ** p for k in range(1, n + 1)) / float(n) ** (p + 1)


def nonexample_ratio(p: float, n: int) -> float:
    """(1^p + ... + (2n−1)^p) / ((2n+1)^p + ... + (4n−1)^p)."""
    _require_index(n)
    low = math.fsum(float(2 * k - 1) ** p for k in range(1, n + 1))
    high = math.fsum(float(2 * k - 1) ** p for k in range(n + 1, 2 * n + 1))
    return low / high


def power_sum_difference_exact(x: DVector, y: DVector, p: int) -> Fraction:
    """Σy^p − Σx^p in rational arithmetic for an integer exponent (negative allowed)."""
    if isinstance(p, bool) or int(p) != p:
        raise PreconditionError("Exact power sums need an integer exponent")
    p = int(p)
    if p < 0 and (x.has_zeros or y.has_zeros):
        raise DomainError("Negative powers of zero are undefined")
    xe, ye = x.as_exact(), y.as_exact()
    return sum((c**p for c in ye.components), Fraction(0)) - sum(
        (c**p for c in xe.components), Fraction(0)
    )


# **********************************
# Midpoint sums
# **********************************


def midpoint_sum(p: float, n: int, a: float = 0.0, b: float = 2.0) -> float:
    """Midpoint rule M_n(t^p) on [a, b], normalized to the mean of the n midpoint values.

    On [0, 2] this is (1/n) Σ ((2k−1)/n)^p, which equals :func:`bennett_term`.

    Raises:
        PreconditionError: n < 1 or a ≥ b.
        DomainError: a < 0.

    """
    _require_index(n)
    if not a < b:
        raise PreconditionError(f"Need a < b, got [{a}, {b}]")
    if a < 0:
        raise DomainError("t^p is only evaluated on non-negative intervals")
    mids = a + (b - a) * (2.0 * np.arange(1, n + 1) - 1.0) / (2.0 * n)
    if p < 0 and mids.min() <= 0:
        raise DomainError("Negative powers need strictly positive midpoints")
    return math.fsum(mids**p) / n


def midpoint_sequence(p: float, n_max: int, a: float = 0.0, b: float = 2.0) -> List[float]:
    return [midpoint_sum(p, n, a, b) for n in range(1, n_max + 1)]


def midpoint_monotone_check(p: float, n_max: int, a: float = 0.0, b: float = 2.0) -> bool:
    """Whether M_1, ..., M_{n_max} of t^p is strictly monotone in the expected direction.

    Increasing for p > 1 or p < 0 (strictly convex), decreasing for 0 < p < 1 (strictly
    concave); consecutive terms must differ by more than 1e-13.

    Raises:
        PreconditionError: p ∈ {0, 1} or n_max < 2.

    """
    if p in (0, 1):
        raise PreconditionError("t^p is affine for p in {0, 1}")
    if n_max < 2:
        raise PreconditionError("n_max must be at least 2")
    values = midpoint_sequence(p, n_max, a, b)
    sign = 1.0 if (p > 1 or p < 0) else -1.0
    steps = [sign * (later - earlier) for earlier, later in zip(values, values[1:])]
    worst = min(steps)
    logger.debug("midpoint p=%g n_max=%d: smallest step %.3e", p, n_max, worst)
    return worst > MONOTONE_TOL


# **********************************
# Interval inequality
# **********************************


@dataclass(frozen=True)
class QuadratureCase:
    """Hypotheses of the convex-interval inequality q∫_b^c g < p∫_a^b g + r∫_c^d g.

    Raises:
        PreconditionError: on construction when a hypothesis is violated.

    """

    a: float
    b: float
    c: float
    d: float
    p: float
    q: float
    r: float
    g: Callable

    def __post_init__(self):
        if not (self.a < self.b < self.c < self.d):
            raise PreconditionError("Need a < b < c < d")
        if self.b - self.a > self.d - self.c:
            raise PreconditionError("Need b − a ≤ d − c")
        if min(self.p, self.q, self.r) < 0:
            raise PreconditionError("Weights p, q, r must be non-negative")
        if not self.p < self.r:
            raise PreconditionError("Need p < r")
        lhs = self.q * (self.c - self.b)
        rhs = self.p * (self.b - self.a) + self.r * (self.d - self.c)
        if not math.isclose(lhs, rhs, rel_tol=1e-12, abs_tol=1e-15):
            raise PreconditionError("Need q(c − b) = p(b − a) + r(d − c)")
        if not float(self.g(self.c)) > float(self.g(self.b)):
            raise PreconditionError("Need g(c) > g(b)")

    @classmethod
    def balanced(cls, a, b, c, d, p, r, g) -> "QuadratureCase":
        """Build a case with q solved from q(c − b) = p(b − a) + r(d − c)."""
        q = (p * (b - a) + r * (d - c)) / (c - b)
        return cls(a=a, b=b, c=c, d=d, p=p, q=q, r=r, g=g)


def integrate(g: Callable, lo: float, hi: float) -> float:
    """Composite Simpson on 2^k + 1 points, doubling until two estimates agree to 1e-10."""
    previous = None
    for level in range(2, QUAD_MAX_LEVEL + 1):
        ts = np.linspace(lo, hi, 2**level + 1)
        estimate = float(simpson(g(ts), x=ts))
        if previous is not None:
            if abs(estimate - previous) <= QUAD_RTOL * max(abs(estimate), 1e-300):
                return estimate
        previous = estimate
    logger.warning("integrate: no convergence on [%g, %g] after %d levels", lo, hi, level)
    return previous


def lemma_interval_inequality(case: QuadratureCase) -> bool:
    """Evaluate both sides by quadrature and return whether the strict inequality holds."""
    left = case.q * integrate(case.g, case.b, case.c)
    right = case.p * integrate(case.g, case.a, case.b) + case.r * integrate(
        case.g, case.c, case.d
    )
    logger.debug("interval inequality: %.12g < %.12g", left, right)
    return left < right


def random_quadrature_case(rng: np.random.Generator) -> QuadratureCase:
    """Random valid case with an increasing convex cubic on t ≥ 0."""
    a = float(rng.uniform(0.0, 1.0))
    b = a + float(rng.uniform(0.1, 1.0))
    c = b + float(rng.uniform(0.1, 1.0))
    d = c + (b - a) + float(rng.uniform(0.0, 1.0))
    p = float(rng.uniform(0.0, 2.0))
    r = p + float(rng.uniform(0.05, 2.0))
    coeffs = [
        float(rng.uniform(-1.0, 1.0)),
        float(rng.uniform(0.1, 2.0)),
        float(rng.uniform(0.0, 2.0)),
        float(rng.uniform(0.0, 1.0)),
    ]
    return QuadratureCase.balanced(a, b, c, d, p, r, Polynomial(coeffs))
