from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superweyl.errors import InvalidInput, Unsupported
from superweyl.rootdata import (check_condition, coroot_values, default_good_system,
                                distinguished_odd_index, lambda_plus_check, odd_reflection,
                                parse_family, reflect_sequence, reflection_identity, root_system,
                                weight_frontier, weight_from_coefficients, weyl_orbit)


def counts(desc):
    rs, _ = root_system(parse_family(desc))
    return len(rs.even_roots), len(rs.odd_roots)


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 2)])
def test_gl_root_counts(m, n):
    # oracle: off-diagonal matrix units of the blocks
    assert counts("gl:%d,%d" % (m, n)) == (m * (m - 1) + n * (n - 1), 2 * m * n)


@pytest.mark.parametrize("M,n", [(1, 2), (3, 2), (1, 4), (2, 2), (4, 2), (5, 4)])
def test_osp_root_counts(M, n):
    # oracle: dim so(M) + dim sp(n) minus ranks; odd roots are weights of V_M (x) V_n
    m = M // 2
    even = (M * (M - 1) // 2 - m) + (n * (n + 1) // 2 - n // 2)
    odd = M * n
    assert counts("osp:%d,%d" % (M, n)) == (even, odd)


def test_exceptional_counts():
    assert counts("F4") == (20, 16)
    assert counts("G3") == (14, 14)
    assert counts("D21a:alpha=2/3") == (6, 8)


def test_gl12_distinguished():
    rs, s = root_system(parse_family("gl:1,2"))
    assert s.roots == ((1, -1, 0), (0, 1, -1))
    assert s.parities == (1, 0)
    assert distinguished_odd_index(s) == 0


def test_osp12_roots():
    rs, s = root_system(parse_family("osp:1,2"))
    assert set(rs.even_roots) == {(2,), (-2,)}
    assert set(rs.odd_roots) == {(1,), (-1,)}
    assert s.roots == ((1,),) and s.parities == (1,) and s.isotropic == (False,)


def test_gl22_reflection_example():
    rs, s = root_system(parse_family("gl:2,2"))
    r = odd_reflection(s, rs, 1)
    assert r.roots == ((1, 0, -1, 0), (0, -1, 1, 0), (0, 1, 0, -1))
    assert r.parities == (1, 1, 1)
    assert default_good_system(parse_family("gl:2,2")).roots == r.roots


def test_d21_reflection_all_odd():
    rs, s = root_system(parse_family("D21a:alpha=1"))
    r = odd_reflection(s, rs, distinguished_odd_index(s))
    assert all(p == 1 for p in r.parities)


def test_non_isotropic_reflection_refused():
    rs, s = root_system(parse_family("osp:1,2"))
    with pytest.raises(InvalidInput):
        odd_reflection(s, rs, 0)
    rs, s = root_system(parse_family("sl:3"))
    with pytest.raises(InvalidInput):
        odd_reflection(s, rs, 0)


@pytest.mark.parametrize("desc", ["gl:1,2", "gl:2,2", "sl:3,2", "osp:2,4", "osp:4,2", "D21a:alpha=2/3", "G3"])
def test_reflection_is_an_involution(desc):
    rs, s = root_system(parse_family(desc))
    for i in s.odd_indices:
        if rs.form(s.roots[i], s.roots[i]) == 0:
            assert reflection_identity(s, rs, i)
            assert reflect_sequence(s, rs, [i, i]).roots == s.roots


def test_condition_examples():
    for desc, want in [("B:1,2", True), ("gl:1,2", False), ("sl:3", True)]:
        rs, s = root_system(parse_family(desc))
        assert check_condition(s, rs).holds is want
    rs, s = root_system(parse_family("sl:1,2"))
    good = default_good_system(parse_family("sl:1,2"))
    assert good.roots == odd_reflection(s, rs, 0).roots
    rep = check_condition(good, rs)
    assert rep.holds and all(v is not None for v in rep.witnesses.values())


def test_gl11_has_no_good_system():
    with pytest.raises(Unsupported):
        default_good_system(parse_family("gl:1,1"))


def test_lambda_plus_examples():
    fam = parse_family("sl:2")
    _, s = root_system(fam)
    assert lambda_plus_check(weight_from_coefficients(fam, s, [0]), s)
    assert lambda_plus_check(weight_from_coefficients(fam, s, [3]), s)
    assert not lambda_plus_check(weight_from_coefficients(fam, s, [-1]), s)
    fam = parse_family("sl:1,2")
    _, s = root_system(fam)
    assert not lambda_plus_check(weight_from_coefficients(fam, s, ["1/2", 0]), s)


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=3, max_size=3))
def test_weight_coordinates_round_trip(coeffs):
    fam = parse_family("gl:1,2")
    s = default_good_system(fam)
    w = weight_from_coefficients(fam, s, coeffs)
    assert list(coroot_values(w, s)) + [w[0], w[1] + w[2]] == [Fraction(c) for c in coeffs]


def test_frontier_examples():
    fam = parse_family("sl:2")
    _, s = root_system(fam)
    lam = weight_from_coefficients(fam, s, [2])
    front = weight_frontier(lam, s.rs, s)
    assert sorted(coroot_values(mu, s)[0] for mu in front) == [-2, 0, 2]
    assert weight_frontier((0, 0), s.rs, s) == [(0, 0)]
    fam = parse_family("osp:1,2")
    _, s = root_system(fam)
    lam = weight_from_coefficients(fam, s, [1])
    assert sorted(coroot_values(mu, s)[0] for mu in weight_frontier(lam, s.rs, s)) == [-1, 0, 1]


def test_weyl_orbit_sl3():
    fam = parse_family("sl:3")
    _, s = root_system(fam)
    assert len(weyl_orbit((1, 0, 0), s)) == 3
    assert len(weyl_orbit((2, 1, 0), s)) == 6


@pytest.mark.parametrize("text", ["", "xx:1", "gl:a", "gl:1", "sl:1,1", "osp:3,3", "D21a:alpha=-1", "C:1"])
def test_bad_family_descriptors(text):
    with pytest.raises(InvalidInput):
        parse_family(text)


@pytest.mark.parametrize("desc", ["gl:2,2", "sl:2", "osp:1,2", "osp:2,4", "osp:4,2", "A:1", "F4", "D21a:alpha=2/3"])
def test_descriptor_round_trip(desc):
    fam = parse_family(desc)
    assert parse_family(fam.descriptor) == fam
