"""Seeded end-to-end checks over randomized families of vectors."""

from fractions import Fraction

import numpy as np
import pytest

from majorizer.catalysis import SearchConfig, check_catalyst, search_catalyst
from majorizer.families import (
    bennett05_pair,
    bennett_pair,
    bennett_term,
    flip_pattern,
    lemma_interval_inequality,
    midpoint_monotone_check,
    midpoint_sum,
    random_quadrature_case,
)
from majorizer.functionals import scan_strict_dominance, turgut_conditions
from majorizer.geometry import (
    boundary_point,
    classify_extreme_point,
    interior_path,
    rado_decompose,
    sample_p_boundary,
)
from majorizer.relations import (
    integer_trump_certificate,
    majorize,
    power_majorize,
    power_majorize_via_klimesh,
    trumped,
)
from majorizer.vectors import DVector
from majorizer.verdicts import Status

# pairs whose decisive gap is this close to zero are too close to call in float arithmetic
NEAR_ZERO = 1e-7

JP_X = DVector([Fraction(2, 5), Fraction(2, 5), Fraction(1, 10), Fraction(1, 10)])
JP_Y = DVector([Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), 0])


def _random_pair(rng, d):
    x = DVector(rng.dirichlet(np.ones(d)), exact=False)
    y = DVector(rng.dirichlet(np.ones(d)), exact=False)
    return x, y


def _mix(rng, y, rounds=3):
    """A random point of the permutohedron of y, so majorized by y."""
    x = y
    for _ in range(rounds):
        perm = rng.permutation(y.dim).tolist()
        if x.permuted(perm) == x:
            continue
        x = interior_path(x, perm, float(rng.uniform(0.05, 0.95)))
    return x


def _swap_extremes(x):
    i, j = int(np.argmax(x.array)), int(np.argmin(x.array))
    perm = list(range(x.dim))
    perm[i], perm[j] = j, i
    return perm


@pytest.mark.integration
def test_bennett_tuples_and_majorization_verdicts():
    pair = bennett_pair(2)
    assert pair.x.components == (3, 3, 3, 9, 9, 9)
    assert pair.y.components == (2, 2, 6, 6, 10, 10)
    assert flip_pattern(pair).flip_index == 3
    assert majorize(pair.x, pair.y).fails
    x, y = bennett05_pair(2)
    assert x.components == (7, 9, 11, 21, 27, 33)
    assert majorize(x, y).holds


@pytest.mark.integration
@pytest.mark.parametrize("n", range(2, 7))
def test_bennett_pairs_are_trumped(n):
    pair = bennett_pair(n)
    report = scan_strict_dominance(pair.x, pair.y)
    assert report.status is Status.HOLDS
    assert report.min_gap > 1e-9
    assert trumped(pair.x, pair.y).holds
    assert flip_pattern(pair).flip_index == n + 1


@pytest.mark.integration
@pytest.mark.parametrize("n", range(2, 9))
def test_integer_certificate_on_bennett_family(n):
    pair = bennett_pair(n)
    verdict = integer_trump_certificate(pair.x, pair.y)
    assert verdict.holds
    assert verdict.details["prod_x"] != verdict.details["prod_y"]


def _structured_pairs(rng):
    """Pairs whose verdict is decided between the tails: mixes, points around the boundary of
    P(y) and the integer families."""
    for _ in range(400):
        y = DVector(rng.dirichlet(np.ones(int(rng.integers(4, 7)))), exact=False)
        yield _mix(rng, y), y
    for _ in range(60):
        d = int(rng.integers(4, 7))
        y = DVector(rng.dirichlet(np.ones(d)), exact=False)
        direction = DVector(rng.dirichlet(np.full(d, 0.3)) * float(y.total), exact=False)
        if not direction.is_positive or not power_majorize(direction, y).fails:
            continue
        edge = boundary_point(y, direction).array
        centre = np.full(d, edge.mean())
        for scale in (0.95, 1.05):
            point = centre + scale * (edge - centre)
            if point.min() > 0:
                yield DVector(point, exact=False), y
    for n in range(2, 7):
        pair = bennett_pair(n)
        yield pair.x, pair.y
    for n in range(1, 7):
        yield bennett05_pair(n)


@pytest.mark.integration
def test_klimesh_and_turgut_criteria_agree():
    rng = np.random.default_rng(2024)
    compared = scanned = 0
    for x, y in _structured_pairs(rng):
        report = scan_strict_dominance(x, y)
        turgut = turgut_conditions(x, y)
        closest = min(abs(v) for v in turgut.minima.values())
        if (
            report.status is Status.INCONCLUSIVE
            or turgut.inconclusive
            or abs(report.min_gap) < NEAR_ZERO
            or closest < NEAR_ZERO
        ):
            continue
        compared += 1
        # both tails favour y, so the verdict comes from the interior of the window
        scanned += min(report.tail_signs) > 0
        assert (report.status is Status.HOLDS) == turgut.all_hold, (x, y)
    assert compared >= 300
    assert scanned >= 0.6 * compared


@pytest.mark.integration
def test_power_majorization_evaluators_agree():
    rng = np.random.default_rng(7)
    compared = 0
    for _ in range(1000):
        d = int(rng.integers(2, 7))
        y = DVector(rng.dirichlet(np.ones(d)), exact=False)
        # half of the pairs are majorized so both verdicts get exercised
        x = _mix(rng, y) if rng.random() < 0.5 else DVector(rng.dirichlet(np.ones(d)))
        direct = power_majorize(x, y)
        via = power_majorize_via_klimesh(x, y)
        if direct.inconclusive or via.inconclusive:
            continue
        if min(abs(direct.min_gap), abs(via.min_gap)) < NEAR_ZERO:
            continue
        compared += 1
        assert direct.status is via.status, (x, y)
    assert compared > 500


@pytest.mark.integration
def test_low_dimension_trumping_is_majorization():
    rng = np.random.default_rng(3)
    compared = 0
    for _ in range(1000):
        x, y = _random_pair(rng, int(rng.integers(2, 4)))
        verdict = majorize(x, y)
        if min(abs(m) for m in verdict.margins[:-1]) < NEAR_ZERO:
            continue
        report = scan_strict_dominance(x, y)
        if report.status is Status.INCONCLUSIVE or abs(report.min_gap) < NEAR_ZERO:
            continue
        compared += 1
        assert verdict.holds == (report.status is Status.HOLDS), (x, y)
        assert trumped(x, y).status is verdict.status
    assert compared > 900


@pytest.mark.integration
def test_catalyst_search_across_seeds():
    found = 0
    for seed in range(20):
        report = search_catalyst(JP_X, JP_Y, SearchConfig(seed=seed))
        if report.found and report.catalyst.dim == 2:
            assert check_catalyst(JP_X, JP_Y, report.catalyst)
            found += 1
    assert found >= 18
    report = search_catalyst(DVector([1, 3]), DVector([2, 2]))
    assert not report.found
    assert report.prefilter_failed


@pytest.mark.integration
def test_rado_decompositions_reconstruct():
    rng = np.random.default_rng(11)
    for _ in range(200):
        y = DVector(rng.uniform(0.1, 5.0, size=int(rng.integers(2, 7))), exact=False)
        x = _mix(rng, y)
        decomposition = rado_decompose(x, y)
        assert decomposition.reconstruction_error <= 1e-12
        assert abs(decomposition.weight_sum - 1.0) <= 1e-12
        assert len(decomposition.terms) <= 2 ** (y.dim - 1)


@pytest.mark.integration
def test_extreme_point_criteria_agree():
    rng = np.random.default_rng(5)
    compared = 0
    for i in range(200):
        d = int(rng.integers(2, 7))
        y = DVector(rng.uniform(0.1, 5.0, size=d), exact=False)
        if i % 3 == 0:
            x = y.permuted(rng.permutation(d).tolist())
        elif i % 3 == 1 or d < 4:
            x = _mix(rng, y)
        else:
            x = sample_p_boundary(y, rng)
            if x is None:
                continue
        if power_majorize(x, y).fails:
            continue
        report = classify_extreme_point(x, y)
        if report.inconclusive or (
            not report.is_permutation_of_y and abs(report.min_gap) < NEAR_ZERO
        ):
            continue
        compared += 1
        assert report.agreement is True, (x, y)
    assert compared > 100


@pytest.mark.integration
def test_interior_paths_land_in_t():
    rng = np.random.default_rng(13)
    trials = 0
    while trials < 200:
        d = int(rng.integers(2, 7))
        y = DVector(rng.uniform(0.1, 5.0, size=d), exact=False)
        x = sample_p_boundary(y, rng) if d >= 4 and trials % 2 else _mix(rng, y)
        if x is None or x.asc[0] == x.asc[-1]:
            continue
        trials += 1
        perm = _swap_extremes(x)
        for t in (0.1, 0.5, 0.9):
            assert trumped(interior_path(x, perm, t), y).holds, (x, y, t)


@pytest.mark.integration
@pytest.mark.parametrize("p", [-2.0, -1.0, -0.5, 0.25, 0.5, 0.75, 2.0, 3.0, 5.0])
def test_midpoint_sums_are_strictly_monotone(p):
    assert midpoint_monotone_check(p, 50)
    for n in range(1, 21):
        assert midpoint_sum(p, n) == pytest.approx(bennett_term(p, n), rel=1e-13)


@pytest.mark.integration
def test_interval_inequality_on_random_cases():
    rng = np.random.default_rng(17)
    for _ in range(100):
        assert lemma_interval_inequality(random_quadrature_case(rng))
