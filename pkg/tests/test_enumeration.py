from math import comb

import pytest

from tasep_lab.config import Boundary, parse, serialize
from tasep_lab.enumeration import (
    Space,
    SpaceError,
    count_closed,
    count_enumerated,
    cycle_lemma_inverse,
    cycle_lemma_map,
    delta_pairs,
    enumerate_space,
    gamma_bar_pairs,
    gamma_pairs,
    marked_delta_pairs,
    narayana_count,
    omega,
    omega0,
    omega_hat,
    periodic_inverse,
    periodic_map,
    phi_gamma,
    psi_gamma,
    sorted_periodic,
)

from oracles import brute_space, catalan


def _rows(space):
    return [(s.top, s.bottom) for s in enumerate_space(space)]


def test_small_spaces_by_hand():
    assert _rows(omega0(0)) == [("", "")]
    assert _rows(omega0(1)) == [("B", "W"), ("W", "B")]
    assert len(_rows(omega0(3))) == 14
    assert len(_rows(omega(3))) == 35
    assert _rows(omega(1)) == [("B", "W"), ("W", "B"), ("X", "X")]


@pytest.mark.parametrize("n", range(0, 6))
def test_omega0_matches_brute_force(n):
    assert _rows(omega0(n)) == brute_space(n)


@pytest.mark.parametrize("n", range(0, 5))
def test_omega_matches_brute_force(n):
    assert sorted(_rows(omega(n))) == brute_space(n, "BWX")


@pytest.mark.parametrize("n", range(1, 5))
def test_omega_hat_matches_brute_force(n):
    got = []
    for k in range(n + 1):
        for l in range(1, n - k + 1):
            got += _rows(omega_hat(n, k, l, n - k - l))
    want = [p for p in brute_space(n, "BWX", periodic=True) if "X" in p[0]]
    assert sorted(got) == want


def test_enumeration_is_in_serialization_order():
    for sp in (omega0(5), omega(4), omega_hat(5, 2, 1, 2)):
        keys = [serialize(s) for s in enumerate_space(sp)]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)


@pytest.mark.parametrize("n", range(0, 10))
def test_closed_forms(n):
    assert count_enumerated(omega0(n)) == catalan(n + 1) == count_closed(omega0(n))
    if n <= 7:
        assert count_enumerated(omega(n)) == comb(2 * n + 2, n + 1) // 2
        for l in range(n + 1):
            assert count_enumerated(omega(n, l)) == count_closed(omega(n, l))
            for k in range(n - l + 1):
                sp = omega(n, l, k, n - k - l)
                assert count_enumerated(sp) == (l + 1) * comb(n + 1, k) * comb(n + 1, n - k - l) // (n + 1)
    for k in range(n + 1):
        assert count_enumerated(omega0(n, k, n - k)) == narayana_count(n, k, n - k)


@pytest.mark.parametrize("n", range(1, 7))
def test_circle_counts(n):
    for k in range(n + 1):
        for l in range(1, n - k + 1):
            m = n - k - l
            assert count_enumerated(omega_hat(n, k, l, m)) == comb(n, k) * comb(n, m)
        assert count_closed(omega_hat(n, k, 0, n - k)) == count_enumerated(omega_hat(n, k, 0, n - k))


@pytest.mark.parametrize(
    "args",
    [("torus", 3), ("omega0", -1), ("omega0", 3, 1, None, None), ("omega", 3, 1, 1, 2), ("omega_hat", 3, 1, None, 1)],
)
def test_bad_spaces(args):
    with pytest.raises(SpaceError):
        Space(*args)


def test_sorted_circle():
    s = sorted_periodic(2, 1, 1)
    assert s.top == "XWBB" and s.boundary is Boundary.PERIODIC
    assert s in set(enumerate_space(omega_hat(4, 2, 1, 1)))


@pytest.mark.parametrize("n", range(0, 6))
def test_phi_psi_round_trip(n):
    images = set()
    for s in enumerate_space(omega(n)):
        t, b = phi_gamma(s)
        assert t[-1] == "B"
        back = psi_gamma(t, b)
        # neutral-free images come back tagged two-species
        assert (back.top, back.bottom) == (s.top, s.bottom)
        assert back.boundary is (Boundary.OPEN3 if s.ell else Boundary.OPEN2)
        images.add((t, b))
    assert images == set(gamma_bar_pairs(n + 1))
    assert len(images) == comb(2 * n + 2, n + 1) // 2


def test_gamma_pairs_sizes():
    assert len(list(gamma_pairs(3))) == comb(6, 3)
    assert len(list(gamma_bar_pairs(3))) == comb(6, 3) // 2
    assert len(list(delta_pairs(4, 1, 2))) == 4 * 6


def test_psi_rejects_bad_pairs():
    with pytest.raises(SpaceError):
        psi_gamma("BW", "WB")
    with pytest.raises(SpaceError):
        psi_gamma("", "")


@pytest.mark.parametrize("n", range(0, 6))
def test_cycle_lemma_round_trip(n):
    for k in range(n + 1):
        for l in range(n - k + 1):
            m = n - k - l
            marked = list(marked_delta_pairs(n, k, l, m))
            images = set()
            for t, b, j in marked:
                cfg, i = cycle_lemma_map(t, b, j)
                assert cfg.counts() == (k, l, m)
                assert cycle_lemma_inverse(cfg, i) == (t, b, j)
                images.add((cfg, i))
            space = omega(n, l, k, m) if l else omega0(n, k, m)
            assert images == {(s, i) for s in enumerate_space(space) for i in range(n + 1)}


def test_cycle_lemma_rejects_unmarked_wall():
    with pytest.raises(SpaceError):
        cycle_lemma_map("WB", "WW", 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_periodic_map_round_trip(n):
    for k in range(n + 1):
        for l in range(1, n - k + 1):
            m = n - k - l
            images = set()
            for t, b in delta_pairs(n, k, m):
                cfg = periodic_map(t, b)
                assert periodic_inverse(cfg) == (t, b)
                images.add(cfg)
            assert images == set(enumerate_space(omega_hat(n, k, l, m)))


def test_periodic_inverse_needs_a_neutral():
    with pytest.raises(SpaceError):
        periodic_inverse(parse("B/W"))
