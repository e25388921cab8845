from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from schroeder.diagram import components, diagram, is_schroeder
from schroeder.maps import (
    DomainError,
    avoids_213k,
    avoids_231,
    avoids_decreasing,
    avoids_increasing,
    corner_row_column_counts,
    descent_set_231_predicate,
    liftable_corners,
    omega,
    omega_inverse,
    one_step,
    phi,
    phi_fibers,
)
from schroeder.perm import (
    SCHROEDER_PATTERNS,
    avoids,
    contains_pattern,
    count_pattern,
    decreasing,
    des,
    identity,
    increasing,
    inversions,
    left_to_right_minima,
    pattern_213k,
)

from conftest import all_perms, avoiders_132, schroeder_perms

P = (4, 7, 5, 2, 6, 3, 1)
SIGMA = (6, 4, 5, 3, 2, 7, 1)
FIBER_6453271 = {(6, 4, 5, 3, 2, 7, 1), (4, 7, 5, 3, 2, 6, 1), (6, 3, 5, 7, 2, 4, 1), (6, 4, 5, 2, 7, 3, 1),
        (3, 7, 5, 6, 2, 4, 1), (4, 7, 5, 2, 6, 3, 1), (6, 2, 5, 7, 4, 3, 1), (2, 7, 5, 6, 4, 3, 1)}


def test_phi_examples():
    assert phi(P) == SIGMA
    for s in avoiders_132(5):
        assert phi(s) == s
    assert one_step((5, 9, 8, 10, 4, 2, 6, 7, 3, 1), (4, 7)) == (7, 9, 8, 5, 4, 2, 6, 10, 3, 1)
    with pytest.raises(DomainError):
        phi((1, 2, 4, 3))
    with pytest.raises(DomainError):
        one_step(P, (3, 3))


def test_phi_fibers_examples():
    fiber = phi_fibers(SIGMA)
    assert len(fiber) == 8 and set(fiber) == FIBER_6453271
    assert phi_fibers(identity(4)) == [identity(4)]
    with pytest.raises(DomainError):
        phi_fibers(P)


@pytest.mark.parametrize("n", range(8))
def test_phi_contracts(n):
    hits = Counter()
    for p in schroeder_perms(n):
        s = phi(p)
        hits[s] += 1
        assert not contains_pattern(s, (1, 3, 2))
        assert inversions(s) == inversions(p)
        assert des(p) <= des(s)
        assert left_to_right_minima(p) <= left_to_right_minima(s)
        rank_one = sum(len(c) for r, c in components(p) if r == 1)
        assert count_pattern(p, (1, 3, 2)) == rank_one
    for s in avoiders_132(n):
        assert hits[s] == 2 ** len(liftable_corners(s))
        fiber = phi_fibers(s)
        assert len(set(fiber)) == len(fiber) == hits[s]
        assert all(phi(q) == s for q in fiber)


def test_omega_examples():
    assert omega((4, 6, 3, 1, 5, 7, 2), 4) == (1, 6, 3, 4, 5, 7, 2)
    assert omega_inverse((1, 6, 3, 4, 5, 7, 2), 4) == (4, 6, 3, 1, 5, 7, 2)
    assert omega(P, 8) == P
    with pytest.raises(DomainError):
        omega((1, 2, 3, 4), 4)
    with pytest.raises(DomainError):
        omega_inverse((2, 1, 3, 4), 4)
    with pytest.raises(DomainError):
        omega((1, 2, 4, 3), 5)


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("k", [3, 4, 5])
def test_omega_is_a_bijection(n, k):
    S = schroeder_perms(n)
    domain = [p for p in S if not contains_pattern(p, increasing(k))]
    target = {q for q in S if not contains_pattern(q, pattern_213k(k))}
    image = [omega(p, k) for p in domain]
    assert set(image) == target and len(image) == len(target)
    for p, q in zip(domain, image):
        assert omega_inverse(q, k) == p
        assert (p == q) == (p in target)
        if not contains_pattern(p, (1, 3, 2)):
            assert not contains_pattern(q, (1, 3, 2))


def test_avoids_increasing_examples():
    assert avoids_increasing((4, 6, 3, 1, 5, 7, 2), 4)
    assert not avoids_increasing((4, 6, 3, 1, 5, 7, 2), 3)
    assert avoids_increasing((), 1)
    assert not avoids_increasing((2, 1), 1)
    with pytest.raises(ValueError):
        avoids_increasing(P, 0)


def test_avoids_213k_examples():
    assert avoids_213k((1, 6, 3, 4, 5, 7, 2), 4)
    assert avoids_213k(identity(5), 3)
    with pytest.raises(ValueError):
        avoids_213k(P, 2)


def test_avoids_decreasing_examples():
    assert not avoids_decreasing((2, 1), 2)
    assert avoids_decreasing(identity(3), 2)
    assert sum(avoids_decreasing(p, 3) for p in schroeder_perms(4)) == 12
    with pytest.raises(ValueError):
        avoids_decreasing(P, 1)


def test_avoids_decreasing_misses_avoiders_for_k5():
    # the criterion is exact for k <= 4 only; this avoider of 54321 has two
    # rows and two columns holding two corners
    p = (6, 8, 4, 7, 3, 1, 5, 2)
    assert is_schroeder(p)
    assert not contains_pattern(p, decreasing(5))
    assert corner_row_column_counts(p) == (4, 4, 2, 2)
    assert not avoids_decreasing(p, 5)


def test_avoids_231_examples():
    assert avoids_231(identity(4))
    assert sum(avoids_231(p) for p in schroeder_perms(4)) == 12
    with pytest.raises(DomainError):
        avoids_231((1, 2, 4, 3))


def test_descent_predicate_examples():
    assert descent_set_231_predicate(identity(5))
    assert descent_set_231_predicate(())
    assert not descent_set_231_predicate(P)


@pytest.mark.parametrize("n", range(7))
def test_predicates_match_oracle(n):
    for p in schroeder_perms(n):
        for k in range(1, 6):
            assert avoids_increasing(p, k) == (not contains_pattern(p, increasing(k)))
        for k in (3, 4, 5):
            assert avoids_213k(p, k) == (not contains_pattern(p, pattern_213k(k)))
        for k in (2, 3, 4):
            assert avoids_decreasing(p, k) == (not contains_pattern(p, decreasing(k)))
        assert avoids_231(p) == (not contains_pattern(p, (2, 3, 1)))
    for p in all_perms(n):
        assert descent_set_231_predicate(p) == avoids(p, SCHROEDER_PATTERNS + ((2, 3, 1),))


schroeder_samples = st.integers(1, 11).flatmap(
    lambda n: st.permutations(range(1, n + 1))).map(tuple).filter(is_schroeder)


@settings(max_examples=60)
@given(schroeder_samples)
def test_phi_preserves_inversions_beyond_exhaustive_range(p):
    s = phi(p)
    assert inversions(s) == inversions(p)
    assert p in phi_fibers(s)
    assert len(diagram(s)) == len(diagram(p))
