"""
Highest weight quotients of Verma modules over map superalgebras.

The Verma module M(psi) over L = g (x) B is realized on super-PBW monomials
in a basis of n- (x) B.  A quotient by the submodule N generated by a set R
of relation vectors is computed degree by degree (degrees are N-valued
vectors over the simple roots): first S = U(b (x) B) R by closing R under
simple raising generators and h (x) B, then N_n = S_n + sum over simple
lowering generators Y of Y N_{n - deg Y}.
"""

import logging
import os
from fractions import Fraction

from ..errors import DimensionLimit, InvalidInput, Unsupported
from ..linalg import LazyEchelon as Echelon, vec_add
from ..liesuper import MapSuperalgebra
from ..rootdata import check_condition, lambda_plus_check, pair
from ..algebra_base import LocalBasisAlgebra, Polynomial, ideal_from_points
from .mapweight import MapWeight, TruncationPlan, default_plan

log = logging.getLogger(__name__)

ALL = "all"


def max_dim():
    return int(os.environ.get("SUPERWEYL_MAX_DIM", "10000"))


class Verma:
    """Normal-ordered action of L = g (x) B on M(psi) = U(n- (x) B) v."""

    def __init__(self, L, system, psi_values):
        self.L = L
        self.system = system
        g = L.g
        d = L.B.dim
        low, cart, high = g.triangular(system)
        self.kind = {}
        for gi in low:
            for b in range(d):
                self.kind[L.id(gi, b)] = "low"
        for gi in high:
            for b in range(d):
                self.kind[L.id(gi, b)] = "high"
        for gi in cart:
            for b in range(d):
                self.kind[L.id(gi, b)] = "cartan"
        self.psi = psi_values
        # deterministic PBW order: even before odd, then height, B-degree, basis index
        lows = [k for k in range(L.dim) if self.kind[k] == "low"]
        lows.sort(key=lambda k: (L.parity[k], -system.height(L.weight[k]), k % d, k // d))
        self.gens = lows
        self.rank = {k: r for r, k in enumerate(lows)}
        self.odd = [L.parity[k] for k in lows]
        self.gdeg = []
        for k in lows:
            neg = tuple(-x for x in L.weight[k])
            self.gdeg.append(system.positive[neg])
        self.ldeg = {}
        for k in range(L.dim):
            w = L.weight[k]
            if self.kind[k] == "cartan":
                self.ldeg[k] = tuple(0 for _ in system.roots)
            elif self.kind[k] == "high":
                self.ldeg[k] = tuple(-x for x in system.positive[w])
            else:
                self.ldeg[k] = self.gdeg[self.rank[k]]
        self._memo = {}
        self._mono_cache = {}

    def parity(self, mono):
        return sum(self.odd[r] for r in mono) & 1

    def degree(self, mono):
        n = [0] * self.system.rank
        for r in mono:
            for i, c in enumerate(self.gdeg[r]):
                n[i] += c
        return tuple(n)

    def act(self, x, mono):
        """x . mono for an L basis index x; returns {mono: coeff}."""
        key = (x, mono)
        got = self._memo.get(key)
        if got is not None:
            return got
        out = self._act(x, mono)
        self._memo[key] = out
        return out

    def _act(self, x, mono):
        kind = self.kind[x]
        L = self.L
        if not mono:
            if kind == "low":
                return {(self.rank[x],): Fraction(1)}
            if kind == "cartan":
                c = self.psi.get(x, 0)
                return {(): Fraction(c)} if c else {}
            return {}
        y = mono[0]
        rest = mono[1:]
        if kind == "low":
            r = self.rank[x]
            if r < y or (r == y and not self.odd[r]):
                return {(r,) + mono: Fraction(1)}
            if r == y:
                out = {}
                for k, c in L.table.get((x, x), {}).items():
                    vec_add(out, self.act(k, rest), c / 2)
                return out
        yid = self.gens[y]
        out = {}
        for k, c in L.table.get((x, yid), {}).items():
            vec_add(out, self.act(k, rest), c)
        sign = -1 if (L.parity[x] and self.odd[y]) else 1
        for m, c in self.act(x, rest).items():
            vec_add(out, self.act(yid, m), sign * c)
        return out

    def act_vec(self, x, vec):
        out = {}
        for m, c in vec.items():
            vec_add(out, self.act(x, m), c)
        return out

    def act_elem(self, elem, vec):
        out = {}
        for x, a in elem.items():
            vec_add(out, self.act_vec(x, vec), a)
        return out

    def monomials(self, n):
        """All PBW monomials of degree n."""
        n = tuple(n)
        got = self._mono_cache.get(n)
        if got is None:
            got = sorted(self._monos(n, 0))
            self._mono_cache[n] = got
        return got

    def _monos(self, n, start):
        if not any(n):
            return [()]
        out = []
        for r in range(start, len(self.gens)):
            d = self.gdeg[r]
            rem = tuple(a - b for a, b in zip(n, d))
            if min(rem) < 0:
                continue
            nxt = r + 1 if self.odd[r] else r
            for tail in self._monos_cached(rem, nxt):
                out.append((r,) + tail)
        return out

    def _monos_cached(self, n, start):
        key = ("m", n, start)
        got = self._mono_cache.get(key)
        if got is None:
            got = self._monos(n, start)
            self._mono_cache[key] = got
        return got


class WeightModule:
    """Common interface: a finite-dimensional g (x) Q[t]-module with a weight basis.

    Subclasses provide ``basis_weight``, ``basis_parity``, ``cyclic`` and
    ``act_basis(x, f, i)`` giving (x (x) f) acting on basis vector i, for
    x an element of g and f a Polynomial.
    """

    g = None
    system = None

    @property
    def dim(self):
        return len(self.basis_weight)

    def act(self, x, f, vec):
        out = {}
        for i, c in vec.items():
            vec_add(out, self.act_basis(x, f, i), c)
        return out

    def character(self):
        ch = {}
        for w in self.basis_weight:
            ch[w] = ch.get(w, 0) + 1
        return ch

    def weights(self):
        return sorted(set(self.basis_weight), reverse=True)


class QuotientModule(WeightModule):
    """M(psi) / U(L) R computed by the structured degree-wise procedure."""

    def __init__(self, L, system, psi_values, top_weight, relations, label=None, limit=None):
        self.L = L
        self.g = L.g
        self.system = system
        self.top_weight = tuple(Fraction(x) for x in top_weight)
        self.verma = V = Verma(L, system, psi_values)
        self.label = label
        limit = max_dim() if limit is None else limit
        rank = system.rank
        zero = tuple(0 for _ in range(rank))
        # raising and Cartan closure of the relations
        d = L.B.dim
        simple_high = [L.g.root_index[b] for b in system.roots]
        simple_low = [L.g.root_index[tuple(-x for x in b)] for b in system.roots]
        ups = [L.id(gi, b) for gi in simple_high for b in range(d)]
        ups += [L.id(gi, b) for gi in L.g.cartan for b in range(d)]
        S = {}
        queue = []
        for vec in relations:
            if vec:
                n = V.degree(next(iter(vec)))
                if S.setdefault(n, Echelon()).add(vec) is not None:
                    queue.append((n, vec))
        while queue:
            n, vec = queue.pop()
            for x in ups:
                w = V.act_vec(x, vec)
                if not w:
                    continue
                m = tuple(a + b for a, b in zip(n, V.ldeg[x]))
                if S.setdefault(m, Echelon()).add(w) is not None:
                    queue.append((m, w))
        self.S = S
        # lowering span, by depth
        lows = [(L.id(gi, b), i) for i, gi in enumerate(simple_low) for b in range(d)]
        N = {}
        basis = {}
        total = 0
        layer = [zero]
        self.depth = 0
        while layer:
            nxt = set()
            for n in layer:
                ech = Echelon()
                for row in S.get(n, Echelon()).rows.values():
                    ech.add(row)
                for x, i in lows:
                    if n[i] == 0:
                        continue
                    p = tuple(a - (1 if j == i else 0) for j, a in enumerate(n))
                    src = N.get(p, ALL)
                    if src is ALL:
                        rows = [{m: Fraction(1)} for m in V.monomials(p)]
                    else:
                        rows = list(src.rows.values())
                    for row in rows:
                        w = V.act_vec(x, row)
                        if w:
                            ech.add(w)
                monos = V.monomials(n)
                free = [m for m in monos if m not in ech.rows]
                if free:
                    N[n] = ech
                    basis[n] = free
                    total += len(free)
                    if total > limit:
                        raise DimensionLimit("module dimension exceeds %d" % limit)
                    for i in range(rank):
                        nxt.add(tuple(a + (1 if j == i else 0) for j, a in enumerate(n)))
                else:
                    N[n] = ALL
            # parents that are ALL still feed lowering images into the next layer
            layer = sorted(nxt)
            if layer:
                self.depth += 1
        self.N = N
        self.degrees = sorted(basis, key=lambda n: (sum(n), tuple(-x for x in n)))
        self.basis = []
        self.basis_weight = []
        self.basis_parity = []
        self.basis_degree = []
        for n in self.degrees:
            w = self.degree_weight(n)
            for m in basis[n]:
                self.basis.append(m)
                self.basis_weight.append(w)
                self.basis_parity.append(V.parity(m))
                self.basis_degree.append(n)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.cyclic = self.index.get(())
        self._act_cache = {}

    def degree_weight(self, n):
        w = list(self.top_weight)
        for c, b in zip(n, self.system.roots):
            for k, x in enumerate(b):
                w[k] -= c * x
        return tuple(w)

    def project(self, vec):
        """Image in the quotient of a Verma vector (all monomials of one degree)."""
        if not vec:
            return {}
        n = self.verma.degree(next(iter(vec)))
        ech = self.N.get(n)
        if ech is None or ech is ALL:
            return {}
        r = ech.reduce(vec)
        return {self.index[m]: c for m, c in r.items()}

    def act_L(self, x, i):
        """L basis element x on module basis vector i."""
        key = (x, i)
        got = self._act_cache.get(key)
        if got is None:
            got = self.project(self.verma.act(x, self.basis[i]))
            self._act_cache[key] = got
        return got

    def act_L_vec(self, elem, vec):
        out = {}
        for x, a in elem.items():
            for i, c in vec.items():
                vec_add(out, self.act_L(x, i), a * c)
        return out

    def act_basis(self, x, f, i):
        if not isinstance(f, Polynomial):
            f = Polynomial((f,))
        bvec = self.L.B.reduce(f)
        return self.act_L_vec(self.L.tensor(x, bvec), {i: Fraction(1)})

    def vector_of_verma(self, vec):
        return self.project(vec)

    def is_zero_module(self):
        return self.cyclic is None


def _psi_values(L, psi, top_weight):
    """psi on the Cartan part of L = g (x) B, B = Q[t]/J with roots among psi's points."""
    g = L.g
    out = {}
    d = L.B.dim
    for gi in g.cartan:
        h = g.cartan_vectors[gi]
        for b in range(d):
            if psi is None:
                v = pair(top_weight, h) * L.B.evaluate(b, 0)
            else:
                v = sum((pair(w, h) * L.B.evaluate(b, z) for z, w in psi.entries), Fraction(0))
            if v:
                out[L.id(gi, b)] = Fraction(v)
    return out


def _relations(L, system, verma, top_weight):
    """Y_alpha^{lambda(H_alpha)+1} v for every even simple alpha."""
    g = L.g
    rels = []
    for a, h in zip(system.even_simple, system.even_coroots):
        k = pair(top_weight, h)
        if k.denominator != 1 or k < 0:
            raise InvalidInput("weight is not dominant integral")
        y = g.root_index[tuple(-x for x in a)]
        yel = L.tensor({y: Fraction(1)}, L.B.reduce(1))
        vec = {(): Fraction(1)}
        for _ in range(int(k) + 1):
            vec = verma.act_elem(yel, vec)
        rels.append(vec)
    return rels


def build_quotient(g, system, B, psi, top_weight, label=None, limit=None):
    L = MapSuperalgebra(g, B)
    vals = _psi_values(L, psi, top_weight)
    probe = Verma(L, system, vals)
    rels = _relations(L, system, probe, top_weight)
    mod = QuotientModule(L, system, vals, top_weight, rels, label=label, limit=limit)
    if mod.cyclic is None:
        raise InvalidInput("weight is outside Lambda+ for this base: the universal module is zero")
    return mod


def _require_module_level(g, system):
    if system.rs.family != g.family:
        raise InvalidInput("system belongs to a different algebra")


def kac_module(g, system, weight, limit=None):
    """The generalized Kac module with highest weight ``weight`` relative to ``system``."""
    _require_module_level(g, system)
    if not lambda_plus_check(weight, system):
        raise InvalidInput("weight is not dominant integral for the even part")
    B = LocalBasisAlgebra(ideal_from_points([(0, 1)]))
    mod = build_quotient(g, system, B, None, weight, label="kac", limit=limit)
    mod.psi = None
    mod.plan = None
    return mod


def in_lambda_plus(g, system, weight):
    """lambda is in Lambda+ exactly when its generalized Kac module is nonzero."""
    if not lambda_plus_check(weight, system):
        return False
    try:
        kac_module(g, system, weight)
    except InvalidInput:
        return False
    return True


class LocalWeylResult:
    """The computed module together with its truncation trace."""

    def __init__(self, module, plan, trace, seed):
        self.module = module
        self.plan = plan
        self.trace = trace
        self.seed = seed


def _local_weyl_at(g, system, psi, M, limit):
    plan = TruncationPlan(M, False)
    B = LocalBasisAlgebra(plan.ideal(psi))
    top = psi.total(system.rs.dim)
    mod = build_quotient(g, system, B, psi, top, label="weyl", limit=limit)
    mod.psi = psi
    mod.plan = plan
    return mod


def local_weyl(g, system, psi, plan=None, limit=None, require_condition=True):
    """W_M for the map weight psi; adaptive plans raise M until two consecutive dims agree.

    Returns the module for the final M; ``module.trace`` lists (M, dim) pairs and
    ``module.next_character`` is the character of W_{M+1} in adaptive mode.
    """
    _require_module_level(g, system)
    if require_condition and not check_condition(system, system.rs).holds:
        raise Unsupported("the base fails the odd-partner condition")
    if not isinstance(psi, MapWeight):
        raise InvalidInput("psi must be a MapWeight")
    if psi.entries and not lambda_plus_check(psi.restriction, system):
        raise InvalidInput("restriction of psi is not dominant integral")
    seed = default_plan(psi, system).M
    if plan is None:
        plan = default_plan(psi, system)
    M = plan.M
    mod = _local_weyl_at(g, system, psi, M, limit)
    trace = [(M, mod.dim)]
    mod.next_character = None
    if plan.adaptive:
        while True:
            nxt = _local_weyl_at(g, system, psi, M + 1, limit)
            trace.append((M + 1, nxt.dim))
            if nxt.character() == mod.character():
                mod.next_character = nxt.character()
                break
            if M >= seed:
                log.warning("plateau not reached at seed M=%d for psi=%s", seed, psi.to_json())
            mod, M = nxt, M + 1
    mod.trace = trace
    mod.seed = seed
    mod.plan = TruncationPlan(M, plan.adaptive)
    return mod


def character(module):
    return module.character()
