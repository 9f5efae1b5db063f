"""
Structural checks on computed modules: the Garland identity, the even-root
spanning property, top space, frontier containment, Weyl invariance,
universality between truncations and the representation property.
"""

from fractions import Fraction
from math import factorial

from ..algebra_base import Polynomial, ideal_combine, ideal_from_points
from ..linalg import Echelon, vec_add, vec_scale
from ..liesuper import chevalley_data
from ..rootdata import weight_frontier, weyl_orbit
from .mapweight import MapWeight, even_root_annihilator, garland_scalars

T = Polynomial.t()


def module_psi(module):
    """The map weight a module was built from (Kac modules use the origin)."""
    psi = getattr(module, "psi", None)
    if psi is not None:
        return psi
    top = module.top_weight
    return MapWeight(((Fraction(0), top),) if any(top) else ())


def _cyclic(module):
    if module.cyclic is None:
        return {}
    return {module.cyclic: Fraction(1)}


def garland_identity_check(module, m, a, alpha, divided=True, cdata=None):
    """Residual of the Garland identity applied to the cyclic vector.

    With ``divided`` the powers of X and Y are divided powers, the form in
    which the identity holds; otherwise plain powers are used.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    alpha = tuple(alpha)
    system = module.system
    cd = cdata or chevalley_data(module.g, system)
    X, Y = cd.X[alpha], cd.Y[alpha]
    psi = module_psi(module)
    w = _cyclic(module)
    lhs = w
    for _ in range(m + 1):
        lhs = module.act(Y, 1, lhs)
    for _ in range(m):
        lhs = module.act(X, a, lhs)
    if divided:
        lhs = vec_scale(lhs, Fraction(1, factorial(m) * factorial(m + 1)))
    c = garland_scalars(psi, a, alpha, system, m)
    rhs = {}
    for i in range(m + 1):
        vec_add(rhs, module.act(Y, a ** (m - i), w), (-1) ** m * c[i])
    return vec_add(dict(lhs), rhs, -1), rhs


def garland_residual(module, m, a, alpha, divided=True, cdata=None):
    return garland_identity_check(module, m, a, alpha, divided, cdata)[0]


def spanning_check(module, alpha, cdata=None, upto=None):
    """(Y (x) t^m) w lies in span{(Y (x) t^l) w : l < lambda(H)} and (Y (x) t^l Q) w = 0."""
    system = module.system
    cd = cdata or chevalley_data(module.g, system)
    Y = cd.Y[tuple(alpha)]
    psi = module_psi(module)
    lam = module.top_weight
    k = int(sum(Fraction(x) * h for x, h in zip(lam, system.rs.coroot(alpha))))
    w = _cyclic(module)
    span = Echelon(module.act(Y, T ** l, w) for l in range(k))
    top = upto if upto is not None else 2 * k + 3
    for mm in range(top + 1):
        if not span.contains(module.act(Y, T ** mm, w)):
            return False
    Q = even_root_annihilator(psi, alpha, system)
    for l in range(top + 1):
        if module.act(Y, T ** l * Q, w):
            return False
    return True


def top_is_one_dimensional(module):
    top = module.top_weight
    return sum(1 for w in module.basis_weight if w == top) == 1


def raising_kills_cyclic(module, degrees=3):
    g = module.g
    _, _, high = g.triangular(module.system)
    w = _cyclic(module)
    return all(not module.act({x: Fraction(1)}, T ** k, w) for x in high for k in range(degrees))


def frontier_contains(module, odd_multiplicity=None):
    """All weights of the module lie in the frontier of its top weight."""
    system = module.system
    if odd_multiplicity is None:
        odd_multiplicity = getattr(getattr(module, "L", None), "B", None)
        odd_multiplicity = odd_multiplicity.dim if odd_multiplicity is not None else 1
    front = set(weight_frontier(module.top_weight, system.rs, system, odd_multiplicity))
    return set(module.basis_weight) <= front


def weyl_invariant(character, system):
    for mu, n in character.items():
        for nu in weyl_orbit(mu, system):
            if character.get(nu, 0) != n:
                return False
    return True


def representation_check(module, pairs, polys=(1, T)):
    """[x (x) f, y (x) g] acts as the super commutator, on every basis vector."""
    g = module.g
    polys = [p if isinstance(p, Polynomial) else Polynomial((p,)) for p in polys]
    bad = []
    for x, y in pairs:
        px, py = g.parity[x], g.parity[y]
        br = g.bracket({x: 1}, {y: 1})
        for f in polys:
            for h in polys:
                for i in range(module.dim):
                    v = {i: Fraction(1)}
                    lhs = module.act({x: 1}, f, module.act({y: 1}, h, v))
                    vec_add(lhs, module.act({y: 1}, h, module.act({x: 1}, f, v)), -(-1) ** (px * py))
                    if br:
                        vec_add(lhs, module.act(br, f * h, v), -1)
                    if lhs:
                        bad.append((x, y, str(f), str(h), i))
    return bad


def universality_check(big, small):
    """W_small is W_big modulo the submodule generated by (g (x) I^M') w.

    Returns (per-weight domination, quotient character equal to small's).
    """
    psi = big.psi
    Mp = small.plan.M
    pts = psi.working_points()
    gen = ideal_combine(ideal_from_points([(z, 1) for z in pts]), None, "power", Mp).generator()
    g = big.g
    d = big.L.B.dim
    w = _cyclic(big)
    seeds = []
    for x in range(g.dim):
        for k in range(d):
            v = big.act({x: 1}, gen * T ** k, w)
            if v:
                seeds.append(v)
    sub = Echelon()
    queue = [v for v in seeds if sub.add(v) is not None]
    while queue:
        v = queue.pop()
        for x in range(g.dim):
            for k in range(d):
                u = big.act({x: 1}, T ** k, v)
                if u and sub.add(u) is not None:
                    queue.append(u)
    quotient = {}
    pivots = sub.pivots
    for i, wt in enumerate(big.basis_weight):
        if i not in pivots:
            quotient[wt] = quotient.get(wt, 0) + 1
    ch_big, ch_small = big.character(), small.character()
    dominated = all(ch_big.get(mu, 0) >= n for mu, n in ch_small.items())
    return dominated, quotient == ch_small
