import itertools
import random
from fractions import Fraction

import pytest

from singlink import _kernels
from singlink._kernels import _pykernels


def brute_lattice(a, b, c):
    pg = plus = minus = 0
    for i, j, k in itertools.product(range(1, a), range(1, b), range(1, c)):
        s = Fraction(i, a) + Fraction(j, b) + Fraction(k, c)
        pg += s < 1
        if 0 < s < 1 or 2 < s < 3:
            plus += 1
        elif 1 < s < 2:
            minus += 1
    return pg, plus, minus


@pytest.mark.parametrize("abc", [(2, 2, 2), (2, 3, 5), (2, 3, 7), (3, 4, 5), (2, 4, 6), (5, 5, 5), (3, 7, 11)])
def test_lattice_counts_match_fraction_oracle(kernels, abc):
    assert kernels.lattice_counts(*abc) == brute_lattice(*abc)


def test_backends_agree_on_random_inputs():
    if len(_kernels.available_backends()) < 2:
        pytest.skip("compiled kernels not built")
    py, c = _kernels.get_backend("python"), _kernels.get_backend("compiled")
    rng = random.Random(7)
    for _ in range(300):
        r = rng.randint(1, 7)
        m = [[0] * r for _ in range(r)]
        for i in range(r):
            m[i][i] = rng.randint(-12, 4)
            for j in range(i):
                m[i][j] = m[j][i] = rng.randint(-3, 3)
        assert py.negdef_minors(m) == c.negdef_minors(m)
    for _ in range(20):
        r = rng.randint(1, 4)
        off = [[0] * r for _ in range(r)]
        for i in range(1, r):
            j = rng.randrange(i)
            off[i][j] = off[j][i] = rng.randint(1, 2)
        n = rng.randint(1, 5)
        assert py.sweep_exhaustive(off, n) == c.sweep_exhaustive(off, n)
    for abc in [(2, 3, 25), (7, 11, 13), (4, 9, 25)]:
        assert py.lattice_counts(*abc) == c.lattice_counts(*abc)
    adj, det, w = [[-2, -1], [-1, -2]], 3, [-2, -2]
    assert py.genus_box(adj, det, w, 6) == c.genus_box(adj, det, w, 6)


def test_negdef_overflow_falls_back_to_exact():
    # entries of size 2^40 would overflow int64 elimination; the wrapper must stay exact
    big = 1 << 40
    m = [[-big, 1, 0], [1, -big, 1], [0, 1, -big]]
    assert _kernels.negdef_minors(m) is True
    m[1][1] = big
    assert _kernels.negdef_minors(m) is False


def test_genus_box_lexicographic(kernels):
    # single vertex w = -3: adjugate [[1]], det -3
    assert kernels.genus_box([[1]], -3, [-3], 7) == [(1,), (4,), (7,)]


def test_sweep_small(kernels):
    assert kernels.sweep_exhaustive([[0, 1], [1, 0]], 3)[:2] == (9, 8)
    assert kernels.sweep_exhaustive([[0]], 5)[:2] == (5, 5)
    assert kernels.sweep_exhaustive([[0, 1], [1, 0]], 1)[:2] == (1, 0)


def test_backend_reported():
    assert _kernels.BACKEND in _kernels.available_backends()
    with pytest.raises(ValueError):
        _kernels.get_backend("fortran")
    assert _pykernels.negdef_minors([]) is True
