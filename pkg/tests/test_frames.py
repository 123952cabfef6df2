from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singlink import brieskorn as bk
from singlink import frames as fr
from singlink.errors import EhatUndefined, IncomparableFrames, InvalidArgument, InvalidToddValue, NotCharacteristic

ints = st.integers(-10**9, 10**9)
labels = st.sampled_from(["L(2,3,5)", "L(2,3,7)", "S3"])


def test_act_examples():
    f = fr.base_frame("M")
    assert fr.act(f, 5).offset == 5
    assert fr.act(fr.FrameClass("M", 9), -9).offset == 0
    assert fr.act(fr.FrameClass("M", 3), 0).offset == 3


def test_diff_examples():
    f, g = fr.FrameClass("M", 9), fr.FrameClass("M", 0)
    assert fr.diff(f, g) == 9
    assert fr.diff(f, f) == 0
    with pytest.raises(IncomparableFrames):
        fr.diff(fr.FrameClass("M", 0), fr.FrameClass("N", 0))
    with pytest.raises(IncomparableFrames):
        fr.diff(fr.FrameClass("M", 0), fr.FrameClass("M", 0, fr.Basepoint.ABSTRACT))


def test_canonical_frame_and_ehat():
    assert fr.canonical_frame("L(2,3,5)", 8).offset == 9
    assert fr.canonical_frame("L", 0).offset == 1
    assert fr.canonical_frame("L(2,3,11)", 20).offset == 21
    assert fr.ehat(fr.canonical_frame("L", 8)) == 9
    assert fr.ehat(fr.base_frame("L")) == 0
    assert fr.ehat(fr.act(fr.canonical_frame("L", 8), -2)) == 7
    with pytest.raises(EhatUndefined):
        fr.ehat(fr.FrameClass("L", 3, fr.Basepoint.ABSTRACT))
    with pytest.raises(InvalidArgument):
        fr.canonical_frame("L", -1)


def test_reduce_examples():
    assert fr.reduce(9) == fr.InvariantBundle(9, 9, 9)
    assert fr.reduce(25) == fr.InvariantBundle(25, 1, 1)
    assert fr.reduce(-1) == fr.InvariantBundle(-1, 23, 11)


def test_e_r_from_td_arf():
    assert fr.e_r_from_td_arf(Fraction(3, 4), 0) == 9
    assert fr.e_r_from_td_arf(Fraction(1), 1) == 0
    assert fr.e_r_from_td_arf(Fraction(0), 0) == 0
    with pytest.raises(InvalidToddValue):
        fr.e_r_from_td_arf(Fraction(1, 24), 0)
    with pytest.raises(InvalidArgument):
        fr.e_r_from_td_arf(Fraction(1), 2)


def test_e_c_rochlin_characteristic_pair():
    assert fr.e_c_from_chern(0, 9) == 9
    assert fr.e_c_from_chern(0, 0) == 0
    assert fr.e_c_from_chern(4, 8) == 0
    assert [fr.rochlin(s) for s in (-8, 0, 16)] == [8, 0, 0]
    assert fr.characteristic_pair(-8, 0) == (-8, -1)
    assert fr.characteristic_pair(0, 0) == (0, 0)
    assert fr.characteristic_pair(16, 0) == (16, 2)
    with pytest.raises(NotCharacteristic):
        fr.characteristic_pair(-8, 1)


@settings(max_examples=500)
@given(labels, ints, ints, ints, ints, ints)
def test_torsor_axioms(label, a, b, c, m, n):
    f, g, h = (fr.FrameClass(label, x) for x in (a, b, c))
    assert fr.act(f, 0) == f
    assert fr.act(fr.act(f, m), n) == fr.act(f, m + n)
    assert fr.diff(fr.act(f, n), f) == n
    assert fr.diff(f, g) + fr.diff(g, h) == fr.diff(f, h)
    d = fr.diff(f, g)
    assert fr.act(g, d) == f
    assert fr.act(g, d + 1) != f and fr.act(g, d - 1) != f


def test_diagram_commutes():
    for e in range(-1000, 1001):
        b = fr.reduce(e)
        assert b.e_c == b.e_r % 12 == e % 12
        assert 0 <= b.e_r < 24 and 0 <= b.e_c < 12
    fibres = {}
    for r in range(24):
        fibres.setdefault(r % 12, []).append(r)
    assert sorted(fibres) == list(range(12)) and all(len(v) == 2 for v in fibres.values())


@settings(max_examples=300)
@given(st.integers(0, 10**6), ints)
def test_frame_change_covariance(mu, n):
    f = fr.canonical_frame("L", mu)
    before = fr.reduce(fr.ehat(f)).e_c
    after = fr.reduce(fr.ehat(fr.act(f, n))).e_c
    assert after == (before + n) % 12


def test_e_r_routes_agree_over_sweep():
    for t in bk.coprime_triples(2, 25):
        p = bk.profile(t)
        assert fr.e_r_from_td_arf(Fraction(p.chi, 12), 0) == fr.reduce(p.ehat).e_r
