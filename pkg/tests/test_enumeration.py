import itertools
import random
from fractions import Fraction

import pytest

from singlink.acceptance import coset_closed, random_invertible_graph
from singlink.enumeration import EXHAUSTIVE_LIMIT, gorenstein_genera, sweep_weights
from singlink.errors import InvalidArgument, SingularIntersectionForm, TooLargeUseSampling
from singlink.plumbing import (
    build_graph,
    canonical_cycle,
    determinant,
    e8_graph,
    intersection_matrix,
    is_negative_definite_cholesky,
    path_graph,
    random_graph,
)


def sweep_oracle(topology, n):
    total = passed = 0
    for w in itertools.product(range(-n, 0), repeat=topology.r):
        total += 1
        passed += is_negative_definite_cholesky(intersection_matrix(topology.with_weights(w)))
    return total, passed


def test_sweep_examples():
    rep = sweep_weights(path_graph([-1, -1]), 3)
    assert (rep.total, rep.negative_definite, rep.mode) == (9, 8, "exhaustive")
    assert rep.fraction == Fraction(8, 9)
    rep = sweep_weights(build_graph([(0, -1, 0)], []), 5)
    assert (rep.total, rep.negative_definite) == (5, 5)
    rep = sweep_weights(path_graph([-1, -1]), 1)
    assert (rep.total, rep.negative_definite) == (1, 0)


def test_sweep_matches_cholesky_oracle(rng):
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 4), extra_edges=rng.randint(0, 1))
        n = rng.randint(1, 4)
        rep = sweep_weights(g, n)
        assert (rep.total, rep.negative_definite) == sweep_oracle(g, n)
        assert rep.total == n ** g.r


def test_dominant_vectors_always_pass(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 5), extra_edges=rng.randint(0, 2))
        rep = sweep_weights(g, 6)
        assert rep.dominant_negative_definite == rep.dominant_total
    rep = sweep_weights(e8_graph(), 8, samples=2000, seed=3)
    assert rep.dominant_total > 0
    assert rep.dominant_negative_definite == rep.dominant_total


def test_trend_on_three_vertex_path():
    # frozen from exhaustive runs (cross-checked by sweep_oracle)
    low = sweep_weights(path_graph([-1, -1, -1]), 2)
    high = sweep_weights(path_graph([-1, -1, -1]), 8)
    assert low.fraction == Fraction(3, 8)
    assert high.fraction == Fraction(495, 512)
    assert high.fraction > low.fraction
    assert sweep_oracle(path_graph([-1, -1, -1]), 2) == (8, 3)


def test_sampled_mode_is_reproducible():
    a = sweep_weights(e8_graph(), 8, samples=500, seed=11)
    b = sweep_weights(e8_graph(), 8, samples=500, seed=11)
    assert a == b
    assert (a.mode, a.samples, a.seed, a.total) == ("sampled", 500, 11, 500)
    assert a.negative_definite <= a.total


def test_sweep_guards():
    assert 8 ** 8 > EXHAUSTIVE_LIMIT
    with pytest.raises(TooLargeUseSampling):
        sweep_weights(e8_graph(), 8)
    with pytest.raises(InvalidArgument):
        sweep_weights(e8_graph(), 8, samples=10)
    with pytest.raises(InvalidArgument):
        sweep_weights(e8_graph(), 0)


def test_genera_examples():
    sol = gorenstein_genera(build_graph([(0, -3, 0)], []), 7)
    assert sol.solutions == ((1,), (4,), (7,)) and sol.lattice_period == 3
    sol = gorenstein_genera(path_graph([-2, -2]), 0)
    assert sol.solutions == ((0, 0),) and sol.lattice_period == 3
    sol = gorenstein_genera(build_graph([(0, -2, 0)], []), 3)
    assert sol.solutions == ((0,), (1,), (2,), (3,)) and sol.lattice_period == 2
    with pytest.raises(SingularIntersectionForm):
        gorenstein_genera(path_graph([-1, -1]), 2)
    with pytest.raises(InvalidArgument):
        gorenstein_genera(e8_graph(), -1)


def test_genera_match_brute_force(rng):
    for _ in range(20):
        g = random_invertible_graph(rng, max_det=8)
        gmax = 3
        want = tuple(gs for gs in itertools.product(range(gmax + 1), repeat=g.r)
                     if canonical_cycle(g.with_genera(gs)).integral)
        assert gorenstein_genera(g, gmax).solutions == want


def test_coset_closure_on_random_graphs():
    rng = random.Random(99)
    for _ in range(100):
        g = random_invertible_graph(rng, max_det=6)
        sol = gorenstein_genera(g, 2 * abs(determinant(intersection_matrix(g))))
        assert sol.solutions == tuple(sorted(sol.solutions))
        assert coset_closed(sol)
