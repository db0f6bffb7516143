"""
vectors.py
Non-negative finite vectors, sorted views, tensor products, entropy and the zero-handling
conventions shared by every relation check.

Public API:
 - DVector, ProbVector
 - sort_desc(v), sort_asc(v), tensor(x, z), normalize_pair(x, y), entropy(x)
"""

import math
import numbers
from fractions import Fraction
from typing import Iterable, Optional, Tuple

import numpy as np
from scipy.special import entr

from .errors import DomainError
from .utils.utils import get_logger

logger = get_logger(__name__)

PROB_TOL = 1e-12


def _is_exact_number(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _coerce(value, exact: bool):
    """Convert one component to the arithmetic of the vector (Fraction or float)."""
    if isinstance(value, bool):
        raise DomainError(f"Boolean is not a vector component: {value!r}")
    if isinstance(value, np.generic):
        value = value.item()
    if not isinstance(value, numbers.Real):
        raise DomainError(f"Component is not a real number: {value!r}")
    if exact:
        if isinstance(value, float) and not math.isfinite(value):
            raise DomainError(f"Component is not finite: {value!r}")
        out = value if isinstance(value, Fraction) else Fraction(value)
    else:
        out = float(value)
        if not math.isfinite(out):
            raise DomainError(f"Component is not finite: {value!r}")
    if out < 0:
        raise DomainError(f"Component is negative: {value!r}")
    return out


class DVector:
    """Immutable non-negative vector with cached sorted views.

    Parameters
    ----------
    components : Iterable of real numbers
        The entries, in the order given. Must be non-empty, finite and non-negative.
    exact : Optional[bool]
        Force exact (``Fraction``) or float arithmetic. When omitted, exact mode is chosen iff
        every component is an ``int`` or ``Fraction``.

    Attributes
    ----------
    components : tuple
        Entries as ``Fraction`` (exact mode) or ``float``.
    exact : bool
        Whether partial sums and products are computed exactly.
    asc, desc : tuple
        Non-decreasing and non-increasing permutations of the components.

    """

    __slots__ = ("_components", "_exact", "_asc", "_desc", "_array")

    def __init__(self, components: Iterable, exact: Optional[bool] = None):
        raw = list(components.components if isinstance(components, DVector) else components)
        if not raw:
            raise DomainError("A vector needs at least one component")
        if exact is None:
            exact = all(_is_exact_number(v) for v in raw)
        self._exact = bool(exact)
        self._components = tuple(_coerce(v, self._exact) for v in raw)
        # Python's sort is stable, so ties keep their input order
        self._asc = tuple(sorted(self._components))
        self._desc = tuple(sorted(self._components, reverse=True))
        self._array = None

    # --- views ---
    @property
    def components(self) -> tuple:
        return self._components

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def asc(self) -> tuple:
        return self._asc

    @property
    def desc(self) -> tuple:
        return self._desc

    @property
    def dim(self) -> int:
        return len(self._components)

    @property
    def total(self):
        if self._exact:
            return sum(self._components, Fraction(0))
        return math.fsum(self._components)

    @property
    def array(self) -> np.ndarray:
        """Float64 copy of the components, for the numeric functionals."""
        if self._array is None:
            arr = np.array([float(v) for v in self._components], dtype=np.float64)
            arr.setflags(write=False)
            self._array = arr
        return self._array

    @property
    def zero_count(self) -> int:
        return sum(1 for v in self._components if v == 0)

    @property
    def has_zeros(self) -> bool:
        return self._asc[0] == 0

    @property
    def is_positive(self) -> bool:
        return self._asc[0] > 0

    @property
    def is_integral(self) -> bool:
        return self._exact and all(v.denominator == 1 for v in self._components)

    def as_exact(self) -> "DVector":
        """Return the same vector in exact arithmetic (floats keep their binary value)."""
        return self if self._exact else DVector(self._components, exact=True)

    def as_float(self) -> "DVector":
        return DVector(self._components, exact=False) if self._exact else self

    def to_list(self) -> list:
        return list(self._components)

    def permuted(self, perm) -> "DVector":
        """Return the vector ``(v[perm[0]], v[perm[1]], ...)``."""
        if sorted(perm) != list(range(self.dim)):
            raise DomainError(f"Not a permutation of {self.dim} indices: {perm!r}")
        return DVector([self._components[i] for i in perm], exact=self._exact)

    # --- dunder helpers ---
    def __len__(self):
        return len(self._components)

    def __iter__(self):
        return iter(self._components)

    def __getitem__(self, idx):
        return self._components[idx]

    def __eq__(self, other):
        if not isinstance(other, DVector):
            return NotImplemented
        return self._components == other._components

    def __hash__(self):
        return hash(self._components)

    def __repr__(self):
        mode = "exact" if self._exact else "float"
        return f"DVector({[str(v) for v in self._components]}, {mode})"


class ProbVector:
    """A ``DVector`` whose components sum to one.

    Parameters
    ----------
    underlying : DVector
        The vector to wrap; its total must be exactly 1 in exact mode and within 1e-12
        otherwise.

    """

    __slots__ = ("underlying",)

    def __init__(self, underlying: DVector):
        total = underlying.total
        if underlying.exact:
            ok = total == 1
        else:
            ok = abs(total - 1.0) <= PROB_TOL
        if not ok:
            raise DomainError(f"Probability vector must sum to 1, got {float(total)!r}")
        self.underlying = underlying

    @classmethod
    def normalized(cls, v: DVector) -> "ProbVector":
        total = v.total
        if total == 0:
            raise DomainError("Cannot normalize the zero vector")
        if v.exact:
            return cls(DVector([c / total for c in v.components], exact=True))
        arr = v.array / total
        # fold the rounding residue into the largest entry
        arr[int(np.argmax(arr))] += 1.0 - math.fsum(arr)
        return cls(DVector(arr, exact=False))

    def __getattr__(self, name):
        return getattr(self.underlying, name)

    def __repr__(self):
        return f"ProbVector({self.underlying!r})"


def sort_desc(v: DVector) -> DVector:
    """Return the non-increasing rearrangement of ``v``."""
    return DVector(v.desc, exact=v.exact)


def sort_asc(v: DVector) -> DVector:
    """Return the non-decreasing rearrangement of ``v``."""
    return DVector(v.asc, exact=v.exact)


def tensor(x: DVector, z: DVector) -> DVector:
    """Return the Kronecker product ``x ⊗ z`` (all products ``x_i z_j``, row-major).

    Exact only when both factors are exact.
    """
    exact = x.exact and z.exact
    if exact:
        return DVector([a * b for a in x.components for b in z.components], exact=True)
    return DVector(np.outer(x.array, z.array).ravel(), exact=False)


def _drop_zeros(v: DVector, count: int) -> list:
    out_ls, dropped = [], 0
    for c in v.components:
        if c == 0 and dropped < count:
            dropped += 1
            continue
        out_ls.append(c)
    return out_ls


def normalize_pair(x: DVector, y: DVector) -> Tuple[DVector, DVector]:
    """Delete matched zeros from both vectors, then zero-pad the shorter one.

    ``min(#zeros(x), #zeros(y))`` zeros are removed from each vector; when the dimensions
    still differ, zeros are appended to the shorter vector. Majorization, trumping and power
    majorization verdicts are unchanged by the transformation.

    Args:
        x : First vector.
        y : Second vector.

    Returns:
        A pair of vectors of equal dimension.

    """
    exact = x.exact and y.exact
    common = min(x.zero_count, y.zero_count)
    x_ls = _drop_zeros(x, common)
    y_ls = _drop_zeros(y, common)
    # a vector made only of matched zeros keeps one of them
    if not x_ls and not y_ls:
        x_ls, y_ls = [0], [0]
    zero = Fraction(0) if exact else 0.0
    width = max(len(x_ls), len(y_ls), 1)
    x_ls += [zero] * (width - len(x_ls))
    y_ls += [zero] * (width - len(y_ls))
    if width != x.dim or width != y.dim:
        logger.debug("normalize_pair: %d x %d -> %d", x.dim, y.dim, width)
    return DVector(x_ls, exact=exact), DVector(y_ls, exact=exact)


def normalized_pair_fixpoint(x: DVector, y: DVector) -> Tuple[DVector, DVector, bool]:
    """Apply :func:`normalize_pair` until stable and report whether padding occurred.

    A zero appended by padding may match a zero of the other vector, so a second pass is
    needed at most once.
    """
    padded = x.dim != y.dim
    for _ in range(2):
        nx, ny = normalize_pair(x, y)
        if nx == x and ny == y:
            break
        x, y = nx, ny
    return x, y, padded


def entropy(x: DVector) -> float:
    """Return ``σ(x) = −Σ x_i ln x_i`` with ``0·ln 0 = 0`` (natural logarithm)."""
    return float(math.fsum(entr(x.array)))
