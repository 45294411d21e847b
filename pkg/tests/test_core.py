import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from cmlsga.core import (Individual, Population, constrained_dominates, crowding_distance, domination_matrix,
                         fast_nondominated_sort, nondominated_mask)
from oracles import dominates, strip_fronts


def ind(f, cv=0.0):
    return Individual(np.zeros(1), np.asarray(f, dtype=float), cv)


# ---------------------------------------------------------------- constrained_dominates

def test_feasible_beats_infeasible_regardless_of_objectives():
    assert constrained_dominates(ind((5, 5)), ind((1, 1), 0.5))


def test_componentwise_dominance():
    assert constrained_dominates(ind((1, 2)), ind((2, 3)))


def test_incomparable_pair_neither_way():
    a, b = ind((1, 2)), ind((2, 1))
    assert not constrained_dominates(a, b)
    assert not constrained_dominates(b, a)


def test_less_violation_wins_among_infeasible():
    assert constrained_dominates(ind((9, 9), 0.1), ind((0, 0), 0.2))
    assert not constrained_dominates(ind((0, 0), 0.2), ind((9, 9), 0.1))


def test_equal_vectors_do_not_dominate():
    assert not constrained_dominates(ind((1, 1)), ind((1, 1)))


def test_mismatched_lengths_raise():
    with pytest.raises(ValueError):
        constrained_dominates(ind((1, 2)), ind((1, 2, 3)))


objective = st.floats(-10, 10, allow_nan=False)
cv_value = st.sampled_from([0.0, 0.0, 0.1, 0.5, 2.0])


@given(st.lists(objective, min_size=2, max_size=3), st.lists(objective, min_size=2, max_size=3), cv_value, cv_value)
def test_irreflexive_and_asymmetric(fa, fb, cva, cvb):
    m = min(len(fa), len(fb))
    a, b = ind(fa[:m], cva), ind(fb[:m], cvb)
    assert not constrained_dominates(a, a)
    assert not (constrained_dominates(a, b) and constrained_dominates(b, a))


@given(arrays(float, (12, 2), elements=st.integers(0, 4).map(float)), st.lists(cv_value, min_size=12, max_size=12))
def test_matrix_matches_pairwise_rule(F, cv):
    D = domination_matrix(F, np.array(cv))
    for i in range(12):
        for j in range(12):
            assert D[i, j] == dominates(F[i], cv[i], F[j], cv[j])


# ---------------------------------------------------------------- fast_nondominated_sort

def test_sort_incomparable_pair_and_dominated_point():
    assert fast_nondominated_sort(np.array([[1, 2], [2, 1], [3, 3]])) == [[0, 1], [2]]


def test_sort_dominance_chain():
    assert fast_nondominated_sort(np.array([[1, 1], [2, 2], [3, 3]])) == [[0], [1], [2]]


def test_sort_identical_points_share_a_front():
    assert fast_nondominated_sort(np.ones((4, 2))) == [[0, 1, 2, 3]]


def test_sort_empty_raises():
    with pytest.raises(ValueError):
        fast_nondominated_sort(np.empty((0, 2)))


def test_sort_puts_feasible_first():
    F = np.array([[0.0, 0.0], [5.0, 5.0]])
    assert fast_nondominated_sort(F, np.array([1.0, 0.0])) == [[1], [0]]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(2, 3), st.integers(0, 2**32 - 1), st.booleans())
def test_sort_matches_front_stripping(n, m, seed, constrained):
    rng = np.random.default_rng(seed)
    F = rng.integers(0, 6, (n, m)).astype(float)
    CV = np.where(rng.random(n) < 0.3, rng.integers(1, 4, n) / 2, 0.0) if constrained else None
    assert fast_nondominated_sort(F, CV) == strip_fronts(F.tolist(), None if CV is None else CV.tolist())


def test_sort_front_structure():
    rng = np.random.default_rng(3)
    F = rng.random((150, 3))
    fronts = fast_nondominated_sort(F)
    D = domination_matrix(F)
    assert sorted(i for fr in fronts for i in fr) == list(range(150))
    for k, front in enumerate(fronts):
        later = [i for fr in fronts[k:] for i in fr]
        assert not D[np.ix_(later, front)].any()
        if k:
            assert D[np.ix_(fronts[k - 1], front)].any(axis=0).all()


def test_nondominated_mask_is_first_front():
    rng = np.random.default_rng(5)
    F = rng.random((60, 2))
    assert np.flatnonzero(nondominated_mask(F)).tolist() == fast_nondominated_sort(F)[0]


# ---------------------------------------------------------------- crowding_distance

def test_crowding_three_point_front():
    cd = crowding_distance(np.array([[0, 2], [1, 1], [2, 0]], dtype=float))
    assert np.isinf(cd[0]) and np.isinf(cd[2])
    assert cd[1] == pytest.approx(2.0)


def test_crowding_single_and_pair():
    assert np.isinf(crowding_distance(np.array([[1.0, 2.0]]))).all()
    assert np.isinf(crowding_distance(np.array([[0.0, 1.0], [1.0, 0.0]]))).all()


def test_crowding_zero_range_contributes_nothing():
    F = np.array([[0.0, 1.0], [1.0, 1.0], [2.0, 1.0], [3.0, 1.0]])
    cd = crowding_distance(F)
    assert cd[1] == pytest.approx(2 / 3) and cd[2] == pytest.approx(2 / 3)


def _front(seed, n=20):
    rng = np.random.default_rng(seed)
    t = np.sort(rng.random(n))
    return np.column_stack([t, 1 - np.sqrt(t)])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.floats(0.1, 10), st.floats(-5, 5))
def test_crowding_interior_order_invariant_under_common_affine_rescale(seed, a, b):
    F = _front(seed)
    base, scaled = crowding_distance(F), crowding_distance(a * F + b)
    interior = np.isfinite(base)
    np.testing.assert_allclose(scaled[interior], base[interior], rtol=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_crowding_boundaries_invariant_under_monotone_rescale(seed):
    F = _front(seed)
    G = np.column_stack([np.exp(3 * F[:, 0]), F[:, 1] ** 3 + 2])
    assert np.array_equal(np.isinf(crowding_distance(F)), np.isinf(crowding_distance(G)))


# ---------------------------------------------------------------- Population

def test_population_concat_and_index():
    a = Population(np.zeros((2, 3)), np.ones((2, 2)), np.zeros(2), [0, 1])
    b = Population(np.ones((1, 3)), np.zeros((1, 2)), [0.5], [7])
    c = Population.concat([a, b])
    assert len(c) == 3 and c.ids.tolist() == [0, 1, 7]
    assert c[[2]].individual(0).cv == 0.5


def test_population_rejects_ragged_arrays():
    with pytest.raises(ValueError):
        Population(np.zeros((2, 3)), np.zeros((3, 2)), np.zeros(2), [0, 1])
