from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majorizer.catalysis import (
    Catalyst,
    SearchConfig,
    check_catalyst,
    check_weak_catalyst,
    descend,
    draw_start,
    search_catalyst,
    violation,
)
from majorizer.errors import DomainError, PreconditionError
from majorizer.relations import majorize, submajorize
from majorizer.vectors import DVector, tensor

JP_X = DVector([Fraction(2, 5), Fraction(2, 5), Fraction(1, 10), Fraction(1, 10)])
JP_Y = DVector([Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), 0])
JP_Z = DVector([Fraction(3, 5), Fraction(2, 5)])


def test_check_catalyst_examples():
    assert check_catalyst(JP_X, JP_Y, JP_Z)
    assert check_catalyst(JP_X.as_float(), JP_Y.as_float(), JP_Z.as_float())
    assert not majorize(JP_X, JP_Y).holds
    assert check_catalyst(JP_X, JP_Y, DVector([1])) == majorize(JP_X, JP_Y).holds
    assert not check_catalyst(DVector([1, 3]), DVector([2, 2]), DVector([0.5, 0.5]))


def test_check_catalyst_requires_equal_totals():
    with pytest.raises(PreconditionError):
        check_catalyst(DVector([1, 2]), DVector([1, 3]), DVector([1]))


def test_check_catalyst_invariant_under_permutation_and_scaling_of_z():
    assert check_catalyst(JP_X, JP_Y, JP_Z.permuted([1, 0]))
    assert check_catalyst(JP_X, JP_Y, DVector([c * 7 for c in JP_Z.components]))
    bad = DVector([Fraction(9, 10), Fraction(1, 10)])
    assert not check_catalyst(JP_X, JP_Y, bad)
    assert not check_catalyst(JP_X, JP_Y, DVector([c * 3 for c in bad.components]))


def test_catalysts_compose():
    assert check_catalyst(JP_X, JP_Y, tensor(JP_Z, JP_Z))


def test_violation_examples():
    assert violation(JP_X, JP_Y, JP_Z) == 0
    assert violation(DVector([1, 3]), DVector([2, 2]), DVector([1])) == 1
    assert violation(JP_X, JP_X, JP_Z) == 0
    assert violation(JP_X.as_float(), JP_Y.as_float(), JP_Z.as_float()) == 0.0


def test_catalyst_must_be_positive():
    with pytest.raises(DomainError):
        Catalyst(DVector([1, 0]))
    assert Catalyst([0.5, 0.5]).dim == 2


def test_weak_catalyst_examples():
    assert check_weak_catalyst(DVector([1, 1]), DVector([3, 1]), DVector([1]), mode="sub")
    assert check_weak_catalyst(DVector([2, 2]), DVector([1, 3]), DVector([1]), mode="super")
    with pytest.raises(PreconditionError):
        check_weak_catalyst(DVector([1]), DVector([1]), DVector([1]), mode="both")


@settings(max_examples=200, deadline=None)
@given(
    x=st.lists(st.integers(min_value=0, max_value=12), min_size=2, max_size=2),
    y=st.lists(st.integers(min_value=0, max_value=12), min_size=2, max_size=2),
    z=st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=4),
)
def test_sub_catalysis_equals_submajorization_in_two_dimensions(x, y, z):
    expected = submajorize(DVector(x), DVector(y)).holds
    assert check_weak_catalyst(DVector(x), DVector(y), DVector(z), mode="sub") == expected


def test_draw_start_is_seeded_and_sorted():
    a = draw_start(3, 5, 42)
    b = draw_start(3, 5, 42)
    assert np.array_equal(a, b)
    assert np.all(np.diff(a) <= 0)
    assert a.sum() == pytest.approx(1.0)
    assert not np.array_equal(a, draw_start(3, 6, 42))


def test_descend_reaches_known_catalyst_region():
    result = descend(JP_X.array, JP_Y.array, np.array([0.9, 0.1]), SearchConfig())
    assert result["raw_violation"] == 0.0
    assert 0.6 <= result["z"][0] <= 0.625 + 1e-9


def test_search_finds_two_dimensional_catalyst():
    x, y = JP_X.as_float(), JP_Y.as_float()
    report = search_catalyst(x, y, SearchConfig(seed=0))
    assert report.found
    assert report.catalyst.dim == 2
    assert report.dim_tried == [1, 2]
    assert check_catalyst(x, y, report.catalyst)
    again = search_catalyst(x, y, SearchConfig(seed=0))
    assert again.catalyst.z == report.catalyst.z


def test_search_prefilter_fails():
    report = search_catalyst(DVector([1, 3]), DVector([2, 2]))
    assert not report.found
    assert report.prefilter_failed
    assert report.dim_tried == []
    assert report.to_dict()["prefilter"]["status"] == "fails"


def test_search_majorized_pair_returns_scalar_catalyst():
    report = search_catalyst(DVector([2, 2]), DVector([1, 3]))
    assert report.found
    assert report.catalyst.dim == 1
    assert report.dim_tried == [1]


def test_search_exhausted_when_max_dim_is_one():
    report = search_catalyst(JP_X.as_float(), JP_Y.as_float(), SearchConfig(max_dim=1))
    assert not report.found
    assert not report.prefilter_failed


def test_search_preconditions():
    with pytest.raises(PreconditionError):
        search_catalyst(DVector([1, 2]), DVector([1, 3]))
    with pytest.raises(DomainError):
        search_catalyst(DVector([0, 4]), DVector([1, 3]))


def test_search_config_validation(monkeypatch):
    with pytest.raises(PreconditionError):
        SearchConfig(max_dim=0)
    with pytest.raises(PreconditionError):
        SearchConfig(step_decay=1.5)
    monkeypatch.setenv("MAJORIZER_RESTARTS", "7")
    assert SearchConfig.from_env(seed=3).restarts_per_dim == 7
    assert SearchConfig.from_env(seed=3).seed == 3


@st.composite
def transfer_pairs(draw):
    """Integer pairs with equal totals: y moves part of one entry of x onto another."""
    x = draw(st.lists(st.integers(min_value=1, max_value=12), min_size=2, max_size=4))
    i, j = draw(st.permutations(range(len(x))))[:2]
    amount = draw(st.integers(min_value=0, max_value=x[i] - 1))
    y = list(x)
    y[i] -= amount
    y[j] += amount
    return DVector(x), DVector(y)


@settings(max_examples=60, deadline=None)
@given(
    pair=transfer_pairs(),
    z=st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=3),
    k=st.integers(min_value=1, max_value=4),
    data=st.data(),
)
def test_violation_is_lipschitz_in_the_catalyst(pair, z, k, data):
    x, y = pair
    step = Fraction(1, 10**k)
    shifts = data.draw(st.lists(st.sampled_from([-1, 0, 1]), min_size=len(z), max_size=len(z)))
    moved = DVector([c + s * step for c, s in zip(z, shifts)])
    bound = x.dim * len(z) * (x.total + y.total) * step * len(z)
    assert abs(violation(x, y, DVector(z)) - violation(x, y, moved)) <= bound
