import pytest

from tasep_lab import kernel
from tasep_lab.config import Boundary, CompleteConfig, parse
from tasep_lab.enumeration import Space, enumerate_space
from tasep_lab.kernel import (
    ClassTag,
    KernelError,
    T_sweep,
    Y,
    bar_T,
    bar_T1,
    bar_T1_inv,
    bar_T2,
    bar_T2_inv,
    bar_T_inv,
    classify,
    hat_T,
    hat_T_inv,
    orbit,
    reduce,
    theta,
    theta3,
    theta_periodic,
)

from oracles import row_step

O3 = Boundary.OPEN3


def cfg3(text):
    return parse(text + "@open3")


# -- row maps


@pytest.mark.parametrize(
    "row, i, out",
    [("BW", 1, "WB"), ("WW", 0, "BW"), ("BB", 1, "BB"), ("B", 1, "W"), ("WB", 1, "WB"), ("", 0, "")],
)
def test_theta(row, i, out):
    assert theta(row, i) == out


def test_theta_rejects_neutral():
    with pytest.raises(KernelError):
        theta("XB", 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_theta_matches_case_list(n):
    import itertools

    for row in itertools.product("BW", repeat=n):
        r = "".join(row)
        for i in range(n + 1):
            assert theta(r, i) == row_step(r, i)


@pytest.mark.parametrize(
    "row, i, v, out",
    [
        ("XW", 1, 1, "WX"),
        ("W", 0, 2, "X"),
        ("XB", 1, 1, "XB"),
        ("W", 0, 1, "B"),
        ("X", 0, 1, "B"),
        ("X", 0, 2, "B"),
        ("B", 1, 2, "X"),
        ("X", 1, 1, "W"),
        ("BX", 1, 2, "XB"),
    ],
)
def test_theta3(row, i, v, out):
    assert theta3(row, i, v) == out


def test_theta_periodic_wraps():
    assert theta_periodic("WXB", 0) == "BXW"
    assert theta_periodic("BWX", 1) == "WBX"


# -- classification


def test_classify_examples():
    c = classify(parse("B/W"), 1)
    assert c.tag is ClassTag.C_PRIME and c.tag.two_species_name == "c" and c.j1 == 0
    c = classify(parse("W/B"), 0)
    assert c.tag is ClassTag.B_PRIME and c.tag.two_species_name == "b" and c.j2 == 1
    assert classify(parse("WB/BW"), 1).tag is ClassTag.D
    assert classify(cfg3("X/X"), 0).tag is ClassTag.B_SECOND
    assert classify(cfg3("X/X"), 1).tag is ClassTag.C_SECOND


@pytest.mark.parametrize("n", range(0, 6))
def test_stable_pairs_are_exactly_class_d(n):
    for s in enumerate_space(Space("omega", n)):
        for i in range(n + 1):
            tag = classify(s, i).tag
            fixed = bar_T1(s, i) == (s, i)
            assert (tag in (ClassTag.D, ClassTag.B_SECOND, ClassTag.C_SECOND)) == fixed


@pytest.mark.parametrize("n", range(0, 6))
def test_class_images_partition(n):
    """Each class image lands on pairs that the inverse classifies back to the class."""
    for s in enumerate_space(Space("omega0", n)):
        for i in range(n + 1):
            tag = classify(s, i).tag
            out = bar_T(s, i)
            back = bar_T_inv(*out)
            assert classify(*back).tag is tag


# -- two-species bijection


def test_bar_T_examples():
    assert bar_T(parse("B/W"), 1) == (parse("W/B"), 0)
    assert bar_T(parse("W/B"), 0) == (parse("B/W"), 1)
    s = parse("WB/BW")
    assert bar_T(s, 1) == (s, 1)
    assert T_sweep(parse("B/W"), 1) == parse("W/B")


def test_bar_T_requires_two_species():
    with pytest.raises(KernelError):
        bar_T(cfg3("X/X"), 0)


def _is_permutation(states, walls, f, finv):
    pairs = [(s, i) for s in states for i in walls(s)]
    images = [tuple(f(s, i)) for s, i in pairs]
    assert sorted(images, key=str) == sorted(pairs, key=str)
    for (s, i), img in zip(pairs, images):
        assert tuple(finv(*img)) == (s, i)


@pytest.mark.parametrize("n", range(0, 7))
def test_bar_T_is_a_permutation(n):
    _is_permutation(list(enumerate_space(Space("omega0", n))), lambda s: range(s.n + 1), bar_T, bar_T_inv)


@pytest.mark.parametrize("n", range(0, 7))
def test_sweeps_agree_with_insert_delete(n):
    for s in enumerate_space(Space("omega0", n)):
        for i in range(n + 1):
            out = bar_T(s, i).state
            assert T_sweep(s, i) == out
            assert out.top == theta(s.top, i)


# -- three-species maps


def test_Y_examples():
    s = cfg3("XB/XW")
    assert Y(s, 0) == (cfg3("WB/BW"), 0)
    assert Y(cfg3("WB/BW"), 0) == (s, 0)
    assert Y(s, 1) == (s, 1)
    assert Y(cfg3("BX/WX"), 2) == (cfg3("BB/WW"), 2)


def test_bar_T1_fixes_border_neutral_columns():
    s = cfg3("XB/XW")
    assert bar_T1(s, 0) == (s, 0)
    assert bar_T2(s, 0).state.top == theta3(s.top, 0, 2)


@pytest.mark.parametrize("n", range(0, 6))
def test_bar_T1_T2_are_permutations(n):
    sts = list(enumerate_space(Space("omega", n)))
    walls = lambda s: range(s.n + 1)  # noqa: E731
    _is_permutation(sts, walls, bar_T1, bar_T1_inv)
    _is_permutation(sts, walls, bar_T2, bar_T2_inv)
    for s in sts:
        for i in walls(s):
            assert Y(*Y(s, i)) == (s, i)


@pytest.mark.parametrize("n", range(0, 6))
def test_three_species_projections(n):
    for s in enumerate_space(Space("omega", n)):
        for i in range(n + 1):
            assert bar_T2(s, i).state.top == theta3(s.top, i, 2)
            border_neutral = n and ((i == 0 and s.top[0] == "X") or (i == n and s.top[-1] == "X"))
            if not border_neutral:
                assert bar_T1(s, i).state.top == theta3(s.top, i, 1)


def test_bar_T1_extends_bar_T():
    for n in range(5):
        for s in enumerate_space(Space("omega0", n)):
            s3 = CompleteConfig(s.top, s.bottom, O3)
            for i in range(n + 1):
                a, b = bar_T(s, i), bar_T1(s3, i)
                assert (a.state.top, a.state.bottom, a.exit_wall) == (b.state.top, b.state.bottom, b.exit_wall)


# -- circle


def test_hat_T_example_counts_preserved():
    sp = Space("omega_hat", 3, 1, 1, 1)
    sts = list(enumerate_space(sp))
    assert len(sts) == 9
    _is_permutation(sts, lambda s: range(s.n), hat_T, hat_T_inv)
    for s in sts:
        for i in range(3):
            assert hat_T(s, i).state.counts() == (1, 1, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_hat_T_is_a_permutation(n):
    for k in range(n + 1):
        for l in range(1, n + 1 - k):
            sts = list(enumerate_space(Space("omega_hat", n, k, l, n - k - l)))
            _is_permutation(sts, lambda s: range(s.n), hat_T, hat_T_inv)
            for s in sts:
                for i in range(n):
                    assert hat_T(s, i).state.top == theta_periodic(s.top, i)


def test_hat_T_rejects_neutral_free_circle():
    with pytest.raises(KernelError):
        hat_T(CompleteConfig("BW", "WB", Boundary.PERIODIC), 0)


# -- reduced configurations and orbits


def test_reduce_examples():
    empty = CompleteConfig("", "")
    assert reduce(parse("B/W"), 1) == empty
    assert reduce(parse("W/B"), 0) == empty
    assert reduce(parse("WB/BW"), 0) == parse("B/W")
    assert reduce(parse("BW/BW"), 1) == parse("W/B") or reduce(parse("BW/BW"), 1) == parse("B/W")
    with pytest.raises(KernelError):
        reduce(parse("WB/BW"), 1)


def test_reduce_removes_the_diagonal():
    # top black left of the wall, white bottom right of it
    assert reduce(parse("BW/BW"), 1) == parse("W/B")


def test_orbits_at_size_one():
    empty = CompleteConfig("", "", O3)
    full = [tuple(p) for p in orbit(empty, "T2")]
    assert full == [(cfg3("W/B"), 0), (cfg3("X/X"), 0), (cfg3("B/W"), 1), (cfg3("X/X"), 1)]
    short = [tuple(p) for p in orbit(CompleteConfig("", ""), "T")]
    assert short == [(parse("W/B"), 0), (parse("B/W"), 1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_every_unstable_pair_lies_on_the_cycle_of_its_reduction(n):
    for s in enumerate_space(Space("omega", n)):
        for i in range(n + 1):
            if kernel.is_stable(s, i):
                continue
            red = reduce(s, i)
            cyc = {tuple(p) for p in orbit(red, "T2")}
            assert (s, i) in cyc


def test_orbit_rejects_unknown_map():
    with pytest.raises(KernelError):
        orbit(CompleteConfig("", ""), "T3")
