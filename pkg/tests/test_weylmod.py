from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from superweyl.algebra_base import Polynomial
from superweyl.errors import DimensionLimit, InvalidInput, Unsupported
from superweyl.liesuper import realize
from superweyl.rootdata import (coroot_values, default_good_system, odd_reflection, parse_family,
                                root_system, weight_from_coefficients)
from superweyl.weylmod.checks import (garland_identity_check, raising_kills_cyclic, representation_check,
                                      spanning_check, top_is_one_dimensional, universality_check)
from superweyl.weylmod.engine import in_lambda_plus, kac_module, local_weyl
from superweyl.weylmod.mapweight import (MapWeight, TruncationPlan, even_root_annihilator,
                                         garland_product_form, garland_scalars, psi_make,
                                         seed_exponent)
from superweyl.weylmod.oracle import oracle_character
from superweyl.weylmod.tensor import convolve, tensor_module

T = Polynomial.t()


def sl2():
    fam = parse_family("sl:2")
    s = default_good_system(fam)
    return fam, realize(fam), s


def sl2_psi(*pairs):
    fam, g, s = sl2()
    return psi_make([(z, weight_from_coefficients(fam, s, [m])) for z, m in pairs], s)


def eigen(ch, s):
    out = {}
    for w, n in ch.items():
        k = int(coroot_values(w, s)[0])
        out[k] = out.get(k, 0) + n
    return out


def test_map_weight_values():
    fam, g, s = sl2()
    h = s.even_coroots[0]
    assert MapWeight(()).is_zero and MapWeight(()).eval_ideal().is_unit
    p = sl2_psi((0, 3))
    assert [p.value(h, T ** k) for k in range(3)] == [3, 0, 0]
    p = sl2_psi((0, 1), (1, 1))
    assert p.value(h, T) == 1 and p.value(h, 1) == 2
    assert MapWeight.from_json(p.to_json()) == p


def test_map_weight_validation():
    fam, g, s = sl2()
    with pytest.raises(InvalidInput):
        sl2_psi((0, 1), (0, 2))
    with pytest.raises(InvalidInput):
        sl2_psi((0, -1))
    with pytest.raises(InvalidInput):
        psi_make([(0, (1, 0, 0))], s)
    assert sl2_psi((0, 0), (1, 1)).points == (1,)


def test_garland_scalars_examples():
    fam, g, s = sl2()
    a = s.positive_even[0]
    assert garland_scalars(MapWeight(()), T, a, s, 4) == [1, 0, 0, 0, 0]
    assert garland_scalars(sl2_psi((0, 3)), T, a, s, 4) == [1, 0, 0, 0, 0]
    assert garland_scalars(sl2_psi((1, 1)), T, a, s, 4) == [1, -1, 0, 0, 0]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 3)), max_size=3, unique_by=lambda x: x[0]),
       st.lists(st.integers(-2, 2), min_size=1, max_size=3))
def test_garland_recursion_matches_product(pairs, acoeffs):
    fam, g, s = sl2()
    psi = sl2_psi(*pairs)
    a = Polynomial(acoeffs)
    alpha = s.positive_even[0]
    assert garland_scalars(psi, a, alpha, s, 6) == garland_product_form(psi, a, alpha, s, 6)


def test_annihilators():
    fam, g, s = sl2()
    a = s.positive_even[0]
    assert even_root_annihilator(sl2_psi((0, 3)), a, s) == T ** 3
    assert even_root_annihilator(sl2_psi((0, 1), (1, 1)), a, s) == T * (T - 1)
    assert even_root_annihilator(MapWeight(()), a, s) == Polynomial((1,))


def test_kac_characters():
    fam, g, s = sl2()
    K = kac_module(g, s, weight_from_coefficients(fam, s, [2]))
    assert eigen(K.character(), s) == {2: 1, 0: 1, -2: 1}
    fam = parse_family("sl:1,2")
    g = realize(fam)
    rs, d = root_system(fam)
    K = kac_module(g, d, (0, 0, 0))
    assert K.dim == 4 and top_is_one_dimensional(K)
    assert K.character() == oracle_character(g, d, (0, 0, 0))
    r = odd_reflection(d, rs, 0)
    assert kac_module(g, r, (0, 0, 0)).dim == 1


def test_zero_kac_module_is_refused():
    fam = parse_family("sl:1,2")
    g = realize(fam)
    s = default_good_system(fam)
    lam = weight_from_coefficients(fam, s, [0, 1])
    assert not in_lambda_plus(g, s, lam)
    with pytest.raises(InvalidInput):
        kac_module(g, s, lam)


def test_local_weyl_examples():
    fam, g, s = sl2()
    W = local_weyl(g, s, sl2_psi((0, 1)))
    assert W.dim == 2 and eigen(W.character(), s) == {1: 1, -1: 1}
    W = local_weyl(g, s, sl2_psi((0, 2)))
    assert eigen(W.character(), s) == {2: 1, 0: 2, -2: 1}
    assert W.character() == oracle_character(g, s, W.top_weight, W.psi, 3, basis="monomial")


def test_cyclic_vector_relations():
    fam, g, s = sl2()
    W = local_weyl(g, s, sl2_psi((0, 1), (2, 1)))
    assert raising_kills_cyclic(W)
    h = g.cartan[0]
    for k in range(3):
        want = W.psi.value(g.cartan_vectors[h], T ** k)
        assert W.act({h: 1}, T ** k, {W.cyclic: Fraction(1)}) == ({W.cyclic: want} if want else {})


def test_garland_plain_powers_off_by_factorials():
    fam, g, s = sl2()
    W = local_weyl(g, s, sl2_psi((0, 2)))
    a = s.positive_even[0]
    for m in range(4):
        res, rhs = garland_identity_check(W, m, T - 1, a, divided=False)
        k = factorial(m) * factorial(m + 1) - 1
        assert res == {i: k * c for i, c in rhs.items() if k * c}
        assert not garland_identity_check(W, m, T - 1, a)[0]


def test_garland_osp12():
    fam = parse_family("osp:1,2")
    g = realize(fam)
    s = default_good_system(fam)
    psi = psi_make([(0, weight_from_coefficients(fam, s, [1]))], s)
    W = local_weyl(g, s, psi)
    assert W.dim == 3
    assert not garland_identity_check(W, 1, T, s.positive_even[0])[0]
    assert spanning_check(W, s.positive_even[0])


def test_degenerate_weight_several_points():
    fam = parse_family("gl:1,2")
    g = realize(fam)
    s = default_good_system(fam)
    # zero on the even coroots; a one-dimensional character of gl(1,2)
    pts = [(0, (0, 1, -2)), (1, (0, 2, -4)), (3, (0, -1, 2))]
    psi = psi_make([(z, weight_from_coefficients(fam, s, c)) for z, c in pts], s)
    assert all(v == 0 for v in coroot_values(psi.restriction, s))
    assert local_weyl(g, s, psi).dim == 1


def test_zero_psi_is_trivial():
    for desc in ("sl:2", "sl:1,2", "osp:1,2", "osp:2,2"):
        fam = parse_family(desc)
        g = realize(fam)
        s = default_good_system(fam)
        assert local_weyl(g, s, MapWeight(())).dim == 1


def test_condition_failure_refused():
    fam = parse_family("gl:1,2")
    g = realize(fam)
    _, d = root_system(fam)
    with pytest.raises(Unsupported):
        local_weyl(g, d, MapWeight(()))


def test_dimension_limit(monkeypatch):
    fam, g, s = sl2()
    monkeypatch.setenv("SUPERWEYL_MAX_DIM", "3")
    with pytest.raises(DimensionLimit):
        local_weyl(g, s, sl2_psi((0, 2)))


def test_universality_and_representation():
    fam, g, s = sl2()
    psi = sl2_psi((0, 2))
    big = local_weyl(g, s, psi, TruncationPlan(3, False))
    for M in (1, 2):
        small = local_weyl(g, s, psi, TruncationPlan(M, False))
        assert universality_check(big, small) == (True, True)
    pairs = [(i, j) for i in range(g.dim) for j in range(g.dim)]
    assert representation_check(big, pairs) == []


def test_seed_exponent():
    fam, g, s = sl2()
    assert seed_exponent(sl2_psi((0, 3)), s) == 3
    assert seed_exponent(MapWeight(()), s) == 1


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3), st.integers(1, 3))
def test_sl2_two_points_factorize(m1, m2, z, gap):
    fam, g, s = sl2()
    W = local_weyl(g, s, sl2_psi((z, m1), (z + gap, m2)))
    assert W.dim == 2 ** (m1 + m2)
    W1 = local_weyl(g, s, sl2_psi((z, m1)))
    W2 = local_weyl(g, s, sl2_psi((z + gap, m2)))
    assert convolve(W1.character(), W2.character()) == W.character()


def test_tensor_module_is_a_representation():
    fam, g, s = sl2()
    W1 = local_weyl(g, s, sl2_psi((0, 1)))
    W2 = local_weyl(g, s, sl2_psi((1, 1)))
    P = tensor_module(W1, W2)
    assert P.dim == 4 and P.character() == convolve(W1.character(), W2.character())
    pairs = [(i, j) for i in range(g.dim) for j in range(g.dim)]
    assert representation_check(P, pairs, polys=(1,)) == []
