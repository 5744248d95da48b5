from itertools import combinations

import pytest

from nearfactor.factors import Factor, build_modular_factor, build_modular_factorization
from nearfactor.numtheory import gcd, totient
from nearfactor.pairing import (
    TERMINAL_EARLY,
    TERMINAL_REACHED,
    classify_pair,
    count_perfect_pairs,
    is_perfect_by_gcd,
    nth_union_edge,
    union_walk,
)


def test_union_walk_full_path():
    walk = union_walk(build_modular_factor(5, 0), build_modular_factor(5, 1))
    assert walk.start == 0
    assert walk.vertices == (0, 1, 4, 2, 3)
    assert walk.edges == ((0, 1), (1, 4), (4, 2), (2, 3))
    assert walk.terminal == TERMINAL_REACHED


def test_union_walk_stops_early():
    # the walk dead-ends at the other isolated vertex after 3 of 9 vertices
    walk = union_walk(build_modular_factor(9, 0), build_modular_factor(9, 3))
    assert walk.vertices == (0, 3, 6)
    assert walk.terminal == TERMINAL_EARLY


def test_union_walk_k3():
    fz = build_modular_factorization(3)
    walk = union_walk(fz.factors[0], fz.factors[1])
    assert walk.vertices == (0, 1, 2)
    assert walk.terminal == TERMINAL_REACHED


def test_union_walk_rejects_bad_pairs():
    f5 = build_modular_factor(5, 0)
    with pytest.raises(ValueError, match="mismatched"):
        union_walk(f5, build_modular_factor(7, 0))
    with pytest.raises(ValueError, match="distinct"):
        union_walk(f5, build_modular_factor(5, 0))


def test_union_walk_never_revisits():
    for n in range(3, 26, 2):
        fz = build_modular_factorization(n)
        for f, g in combinations(fz.factors, 2):
            walk = union_walk(f, g)
            assert len(walk.vertices) <= n
            assert len(set(walk.vertices)) == len(walk.vertices)
            assert len(walk.edges) == len(walk.vertices) - 1


def test_nth_union_edge_examples():
    assert nth_union_edge(0, 1, 5, 1) == (0, 1)
    assert nth_union_edge(0, 1, 5, 2) == (1, 4)
    assert nth_union_edge(1, 0, 5, 1) == (3, 2)


def test_nth_union_edge_rejects_bad_positions():
    with pytest.raises(ValueError):
        nth_union_edge(0, 1, 5, 0)
    with pytest.raises(ValueError):
        nth_union_edge(0, 1, 5, 5)
    with pytest.raises(ValueError):
        nth_union_edge(2, 2, 5, 1)
    with pytest.raises(ValueError):
        nth_union_edge(0, 1, 6, 1)


def test_nth_union_edge_matches_walk():
    for n in (5, 9, 15, 21):
        fz = build_modular_factorization(n)
        for k, l in combinations(range(n), 2):
            if gcd(k - l, n) != 1:
                continue
            walk = union_walk(fz.factors[k], fz.factors[l])
            for i, edge in enumerate(walk.edges, start=1):
                assert nth_union_edge(k, l, n, i) == edge


def test_is_perfect_by_gcd_examples():
    assert is_perfect_by_gcd(0, 1, 5) is True
    assert is_perfect_by_gcd(0, 3, 9) is False
    assert is_perfect_by_gcd(2, 7, 15) is False
    assert is_perfect_by_gcd(1, 5, 15) is True
    with pytest.raises(ValueError):
        is_perfect_by_gcd(2, 2, 5)


def test_classify_pair_odd_order():
    perfect = classify_pair(build_modular_factor(5, 0), build_modular_factor(5, 1))
    assert perfect.perfect is True
    assert perfect.gcd_perfect is True
    assert perfect.criterion_agreement is True
    assert perfect.witness is not None and perfect.cycle is None

    broken = classify_pair(build_modular_factor(9, 0), build_modular_factor(9, 3))
    assert broken.perfect is False
    assert broken.gcd_perfect is False
    assert broken.criterion_agreement is True

    assert classify_pair(
        build_modular_factor(9, 0), build_modular_factor(9, 1)
    ).perfect


def test_classify_pair_symmetric():
    for n in (5, 9, 15):
        fz = build_modular_factorization(n)
        for f, g in combinations(fz.factors, 2):
            assert classify_pair(f, g).perfect == classify_pair(g, f).perfect


def test_classify_pair_skips_gcd_for_unlabeled_factors():
    f = Factor(n=5, edges=((1, 4), (2, 3)), isolated=0)
    g = Factor(n=5, edges=((0, 1), (2, 4)), isolated=3)
    outcome = classify_pair(f, g)
    assert outcome.perfect is True
    assert outcome.gcd_perfect is None
    assert outcome.criterion_agreement is None


def test_classify_pair_even_order():
    from nearfactor.factors import build_modular_factor_even

    f0 = build_modular_factor_even(4, 0)
    f1 = build_modular_factor_even(4, 1)
    outcome = classify_pair(f0, f1)
    assert outcome.perfect is True
    assert outcome.cycle == (0, 2, 3, 1)
    assert outcome.witness is None and outcome.gcd_perfect is None

    # indices 0 and 2 produce the same matching on K_4, hence no pair
    f2 = build_modular_factor_even(4, 2)
    with pytest.raises(ValueError, match="distinct"):
        classify_pair(f0, f2)

    # a shared edge collapses the union into short cycles
    f = Factor(n=6, edges=((0, 1), (2, 3), (4, 5)))
    g = Factor(n=6, edges=((0, 1), (2, 4), (3, 5)))
    outcome = classify_pair(f, g)
    assert outcome.perfect is False
    assert outcome.cycle == (0, 1)


def test_count_perfect_pairs_examples():
    assert count_perfect_pairs(build_modular_factorization(3)) == 3
    assert count_perfect_pairs(build_modular_factorization(5)) == 10
    assert count_perfect_pairs(build_modular_factorization(9)) == 27


def test_count_matches_formula_midrange():
    for n in (15, 21, 33, 45):
        fz = build_modular_factorization(n)
        assert count_perfect_pairs(fz) == n * totient(n) // 2
