"""Invariant suites run by ``superweyl selftest``; each returns (ok, detail)."""

from itertools import product

from .algebra_base import FinDimCommAlgebra, Polynomial, check_algebra_laws, ideal_from_points
from .liesuper import check_axioms, chevalley_data, map_algebra, realize
from .rootdata import (check_condition, default_good_system, odd_reflection, parse_family,
                       reflection_identity, root_system, weight_from_coefficients)
from .weylmod.checks import (frontier_contains, garland_residual, top_is_one_dimensional,
                             weyl_invariant)
from .weylmod.engine import kac_module, local_weyl
from .weylmod.mapweight import TruncationPlan, psi_make
from .weylmod.oracle import oracle_character
from .weylmod.tensor import verify_tensor_theorem

T = Polynomial.t()


def _axioms():
    B = FinDimCommAlgebra(ideal_from_points([(0, 2)]))
    bad = []
    for desc in ("gl:1,1", "gl:1,2", "osp:1,2"):
        g = realize(parse_family(desc))
        if check_axioms(g) or check_axioms(map_algebra(g, B)):
            bad.append(desc)
    if check_algebra_laws(B):
        bad.append("Q[t]/(t^2)")
    return not bad, bad


def _reflections():
    bad = []
    for desc in ("gl:1,2", "gl:2,2", "D21a:alpha=1"):
        rs, dist = root_system(parse_family(desc))
        for i in dist.odd_indices:
            if rs.form(dist.roots[i], dist.roots[i]) == 0 and not reflection_identity(dist, rs, i):
                bad.append((desc, i))
    return not bad, bad


def _conditions():
    want = {"B:0,1": True, "B:1,1": True, "gl:1,2": False, "gl:2,2": False}
    bad = []
    for desc, holds in want.items():
        fam = parse_family(desc)
        rs, dist = root_system(fam)
        if check_condition(dist, rs).holds != holds:
            bad.append(desc)
        if not check_condition(default_good_system(fam), rs).holds:
            bad.append(desc + " good")
    return not bad, bad


def _kac():
    fam = parse_family("sl:2")
    g = realize(fam)
    _, s = root_system(fam)
    dims = [kac_module(g, s, weight_from_coefficients(fam, s, [m])).dim for m in range(5)]
    fam = parse_family("sl:1,2")
    g = realize(fam)
    rs, s = root_system(fam)
    d0 = kac_module(g, s, weight_from_coefficients(fam, s, [0, 0])).dim
    r = odd_reflection(s, rs, 0)
    d1 = kac_module(g, r, weight_from_coefficients(fam, r, [0, 0])).dim
    got = (dims, d0, d1)
    return got == ([1, 2, 3, 4, 5], 4, 1), got


def _weyl():
    fam = parse_family("sl:2")
    g = realize(fam)
    s = default_good_system(fam)
    bad = []
    for m in (1, 2):
        psi = psi_make([(0, weight_from_coefficients(fam, s, [m]))], s)
        W = local_weyl(g, s, psi)
        ok = (W.dim == 2 ** m and top_is_one_dimensional(W) and frontier_contains(W)
              and weyl_invariant(W.character(), s)
              and oracle_character(g, s, W.top_weight, psi, W.plan.M) == W.character())
        cd = chevalley_data(g, s)
        ok = ok and not any(garland_residual(W, k, a, al, cdata=cd)
                            for k, a, al in product(range(3), (T, T - 1), s.positive_even))
        if not ok:
            bad.append(m)
    return not bad, bad


def _tensor():
    fam = parse_family("sl:2")
    g = realize(fam)
    s = default_good_system(fam)
    w = weight_from_coefficients(fam, s, [1])
    rep = verify_tensor_theorem(g, s, psi_make([(0, w)], s), psi_make([(1, w)], s),
                                TruncationPlan(1))
    return rep["holds"] and rep["dimensions"][2] == 4, rep["dimensions"]


SUITES = [
    ("axioms", _axioms),
    ("odd-reflections", _reflections),
    ("odd-partner-condition", _conditions),
    ("kac-dimensions", _kac),
    ("local-weyl", _weyl),
    ("tensor", _tensor),
]


def run_all():
    """List of (name, ok, detail) for every suite; exceptions count as failures."""
    out = []
    for name, fn in SUITES:
        try:
            ok, detail = fn()
        except Exception as e:  # a crashing suite is a failing suite
            ok, detail = False, "%s: %s" % (type(e).__name__, e)
        out.append((name, bool(ok), detail))
    return out
