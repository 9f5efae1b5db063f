"""
Matrix realizations of gl(m,n), sl(m,n) and osp(M,2n) with exact structure
constants, Chevalley generators relative to a base, and map superalgebras
g (x) B for a finite-dimensional commutative algebra B.

Elements are sparse dicts ``basis index -> Fraction``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InvalidInput, InvariantViolation, Unsupported
from .linalg import vec_add, vec_scale
from .rootdata import FULL, RootSystem, pair


def _mat_mul(a, b):
    out = {}
    rows_b = {}
    for (i, j), c in b.items():
        rows_b.setdefault(i, []).append((j, c))
    for (i, k), c in a.items():
        for j, d in rows_b.get(k, ()):
            v = out.get((i, j), 0) + c * d
            if v:
                out[(i, j)] = v
            else:
                out.pop((i, j), None)
    return out


def supercommutator(a, b, pa, pb):
    out = _mat_mul(a, b)
    sign = -1 if pa * pb else 1
    return vec_add(out, _mat_mul(b, a), -sign)


class LieSuperalgebra:
    """A finite-dimensional Lie superalgebra given by a matrix realization.

    Attributes: ``dim``, ``labels``, ``parity[i]``, ``weight[i]`` (ambient
    root coordinates, zero on the Cartan), ``cartan`` (indices spanning h),
    ``cartan_vectors[i]`` for i in ``cartan`` (so mu(h_i) = pair(mu, vec)),
    ``root_index`` (root -> basis index) and ``table[(i, j)]`` holding
    [b_i, b_j] as a sparse vector.
    """

    def __init__(self, family, rs, vspace, basis, labels, cartan):
        self.family = family
        self.rs = rs
        self.vspace = vspace  # list of (parity, weight) of the natural module
        self.matrices = [b for b in basis]
        self.labels = tuple(labels)
        self.dim = len(basis)
        self.cartan = tuple(cartan)
        self.parity = []
        self.weight = []
        for b in basis:
            (i, j), _ = next(iter(b.items()))
            self.parity.append(vspace[i][0] ^ vspace[j][0])
            self.weight.append(tuple(x - y for x, y in zip(vspace[i][1], vspace[j][1])))
        self.root_index = {w: k for k, w in enumerate(self.weight) if k not in cartan}
        self._by_weight = {}
        for k, w in enumerate(self.weight):
            self._by_weight.setdefault(w, []).append(k)
        self.cartan_vectors = {k: self._cartan_vector(self.matrices[k]) for k in cartan}
        self.table = self._structure_constants()

    def __repr__(self):
        return "LieSuperalgebra(%s, dim=%d)" % (self.family, self.dim)

    def _cartan_vector(self, h):
        n = self.rs.dim
        vec = [Fraction(0)] * n
        for v, (_, w) in enumerate(self.vspace):
            nz = [k for k, x in enumerate(w) if x]
            if len(nz) == 1 and w[nz[0]] == 1:
                vec[nz[0]] = Fraction(h.get((v, v), 0))
        for v, (_, w) in enumerate(self.vspace):
            if h.get((v, v), 0) != pair(w, vec):
                raise InvariantViolation("Cartan element is not diagonal on weights")
        return tuple(vec)

    def decode(self, mat, weight):
        """Coordinates of a matrix lying in the weight space ``weight``."""
        if not mat:
            return {}
        idx = self._by_weight.get(weight)
        if idx is None:
            raise InvariantViolation("bracket leaves the algebra (weight %r)" % (weight,))
        keys = sorted(set(mat).union(*(self.matrices[k] for k in idx)))
        rows = [[self.matrices[k].get(e, 0) for k in idx] for e in keys]
        rhs = [mat.get(e, 0) for e in keys]
        x = linalg.solve(rows, rhs)
        if x is None:
            raise InvariantViolation("bracket leaves the algebra (weight %r)" % (weight,))
        return {k: c for k, c in zip(idx, x) if c}

    def _structure_constants(self):
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                w = tuple(x + y for x, y in zip(self.weight[i], self.weight[j]))
                m = supercommutator(self.matrices[i], self.matrices[j],
                                    self.parity[i], self.parity[j])
                v = self.decode(m, w) if m else {}
                if v:
                    table[(i, j)] = v
        return table

    def element_parity(self, x):
        ps = {self.parity[k] for k in x}
        if len(ps) > 1:
            raise InvalidInput("element is not homogeneous")
        return ps.pop() if ps else 0

    def bracket(self, x, y):
        out = {}
        for i, a in x.items():
            if i >= self.dim:
                raise InvalidInput("dimension mismatch")
            for j, b in y.items():
                if j >= self.dim:
                    raise InvalidInput("dimension mismatch")
                v = self.table.get((i, j))
                if v:
                    vec_add(out, v, a * b)
        return out

    def to_matrix(self, x):
        out = {}
        for k, c in x.items():
            vec_add(out, self.matrices[k], c)
        return out

    def structure_json(self):
        return [{"i": i, "j": j, "k": k, "c": str(c)}
                for (i, j), v in sorted(self.table.items()) for k, c in sorted(v.items())]

    def triangular(self, system):
        """(lowering, cartan, raising) basis indices relative to ``system``."""
        low, high = [], []
        for r, k in sorted(self.root_index.items()):
            (high if system.is_positive(r) else low).append(k)
        return tuple(low), self.cartan, tuple(high)


def _natural_gl(m, n):
    vs = []
    for i in range(m + n):
        w = [0] * (m + n)
        w[i] = 1
        vs.append((0 if i < m else 1, tuple(w)))
    return vs


def _realize_gl(family, rs, special):
    m, n = family.params
    N = m + n
    vs = _natural_gl(m, n)
    basis, labels, cartan = [], [], []
    if special:
        for k in range(N - 1):
            s = -1 if vs[k][0] == vs[k + 1][0] else 1
            basis.append({(k, k): Fraction(1), (k + 1, k + 1): Fraction(s)})
            labels.append("h%d" % (k + 1))
            cartan.append(len(basis) - 1)
    else:
        for k in range(N):
            basis.append({(k, k): Fraction(1)})
            labels.append("E%d%d" % (k + 1, k + 1))
            cartan.append(len(basis) - 1)
    for i in range(N):
        for j in range(N):
            if i != j:
                basis.append({(i, j): Fraction(1)})
                labels.append("E%d,%d" % (i + 1, j + 1) if N > 9 else "E%d%d" % (i + 1, j + 1))
    return LieSuperalgebra(family, rs, vs, basis, labels, cartan)


def _realize_osp(family, rs):
    k = family.kind
    if k == "C":
        m, n, odd_dim = 1, family.params[0] - 1, False
    else:
        m, n = family.params
        odd_dim = k == "B"
    N = m + n
    vs, names = [], []
    unit = lambda a, s: tuple(s if i == a else 0 for i in range(N))
    for a in range(m):
        vs.append((0, unit(a, 1)))
        names.append("e%d" % (a + 1))
    for a in range(m):
        vs.append((0, unit(a, -1)))
        names.append("e-%d" % (a + 1))
    if odd_dim:
        vs.append((0, unit(0, 0)))
        names.append("e0")
    for j in range(n):
        vs.append((1, unit(m + j, 1)))
        names.append("f%d" % (j + 1))
    for j in range(n):
        vs.append((1, unit(m + j, -1)))
        names.append("f-%d" % (j + 1))
    D = len(vs)
    form = {}
    for a in range(m):
        form[(a, m + a)] = form[(m + a, a)] = 1
    if odd_dim:
        form[(2 * m, 2 * m)] = 1
    off = 2 * m + (1 if odd_dim else 0)
    for j in range(n):
        form[(off + j, off + n + j)] = 1
        form[(off + n + j, off + j)] = -1

    def conditions(pairs, par):
        # B(X u, v) + (-1)^{par |u|} B(u, X v) = 0 for all u, v
        rows = []
        for u in range(D):
            for v in range(D):
                row = [0] * len(pairs)
                for col, (p, q) in enumerate(pairs):
                    if q == u:
                        row[col] += form.get((p, v), 0)
                    if q == v:
                        row[col] += (-1) ** (par * vs[u][0]) * form.get((u, p), 0)
                if any(row):
                    rows.append(row)
        return rows

    groups = {}
    for p in range(D):
        for q in range(D):
            w = tuple(x - y for x, y in zip(vs[p][1], vs[q][1]))
            groups.setdefault((w, vs[p][0] ^ vs[q][0]), []).append((p, q))
    basis, labels, cartan = [], [], []
    zero = unit(0, 0)
    for a in range(N):
        pv = a if a < m else off + (a - m)
        nv = m + a if a < m else off + n + (a - m)
        h = {(pv, pv): Fraction(1), (nv, nv): Fraction(-1)}
        pairs = groups[(zero, 0)]
        rows = conditions(pairs, 0)
        x = [h.get(pq, 0) for pq in pairs]
        if any(sum(r * c for r, c in zip(row, x)) for row in rows):
            raise InvariantViolation("Cartan element does not preserve the form")
        basis.append(h)
        labels.append("h_" + names[pv])
        cartan.append(len(basis) - 1)
    for (w, par), pairs in sorted(groups.items(), key=lambda kv: (kv[0][1], tuple(-c for c in kv[0][0]))):
        if w == zero:
            continue
        null = linalg.nullspace(conditions(pairs, par), len(pairs))
        if not null:
            continue
        if len(null) != 1:
            raise InvariantViolation("root space of %r has dimension %d" % (w, len(null)))
        vec = null[0]
        mat = {pq: c for pq, c in zip(pairs, vec) if c}
        basis.append(mat)
        labels.append("x[%s]" % ",".join(str(c) for c in w))
    return LieSuperalgebra(family, rs, vs, basis, labels, cartan)


def realize(family):
    """Matrix realization of a family with full module-level support."""
    if family.support_level != FULL:
        raise Unsupported("%s is unsupported at module level" % family)
    rs = RootSystem(family)
    if family.kind in ("gl", "sl"):
        g = _realize_gl(family, rs, family.kind == "sl")
    else:
        g = _realize_osp(family, rs)
    realized = {w: g.parity[k] for w, k in g.root_index.items()}
    if realized != rs.parity:
        raise InvariantViolation("realized roots of %s differ from the root data" % family)
    return g


def bracket(g, x, y):
    return g.bracket(x, y)


@dataclass
class ChevalleyData:
    """Root vectors relative to a base.

    ``X[r]``, ``Y[r]`` for every positive root r; ``H[r]`` for simple roots
    and even positive roots (with r(H) = 2 for the even ones).
    """

    X: dict
    Y: dict
    H: dict
    simple: tuple

    def triple(self, root):
        return self.X[root], self.Y[root], self.H[root]


def _neg(r):
    return tuple(-x for x in r)


def _functional(g, h):
    """Ambient vector c with mu(h) = pair(mu, c) for h in the Cartan span."""
    vec = [Fraction(0)] * g.rs.dim
    for k, c in h.items():
        if k not in g.cartan_vectors:
            raise InvariantViolation("element is not in the Cartan subalgebra")
        for i, x in enumerate(g.cartan_vectors[k]):
            vec[i] += c * x
    return tuple(vec)


def chevalley_data(g, system):
    """Generators X_beta, Y_beta with [X_bi, Y_bj] = delta_ij H_bi and sl(2)-triples."""
    if system.rs.family != g.family:
        raise InvalidInput("system belongs to a different algebra")
    cm = system.cartan_matrix
    X, Y, H = {}, {}, {}
    for i, b in enumerate(system.roots):
        x = {g.root_index[b]: Fraction(1)}
        y = {g.root_index[_neg(b)]: Fraction(1)}
        h = g.bracket(x, y)
        vals = [pair(bj, _functional(g, h)) for bj in system.roots]
        ratio = None
        for v, target in zip(vals, cm[i]):
            if v or target:
                if not v:
                    raise InvariantViolation("coroot of %r does not match the Cartan matrix" % (b,))
                r = Fraction(target) / v
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    raise InvariantViolation("coroot of %r does not match the Cartan matrix" % (b,))
        if ratio is None or ratio == 0:
            ratio = Fraction(1)
        y = vec_scale(y, ratio)
        X[b], Y[b], H[b] = x, y, vec_scale(h, ratio)
    for r in sorted(system.positive, key=lambda r: (system.height(r), _neg(r))):
        if r in X:
            continue
        for b in system.roots:
            rest = tuple(x - y for x, y in zip(r, b))
            if rest not in X:
                continue
            x = g.bracket(X[b], X[rest])
            if x:
                X[r] = x
                Y[r] = g.bracket(Y[b], Y[rest])
                if not Y[r]:
                    raise InvariantViolation("lowering chain for %r vanishes" % (r,))
                break
        else:
            raise InvariantViolation("no nonzero bracket chain reaches %r" % (r,))
    for r in system.positive_even:
        h = g.bracket(X[r], Y[r])
        v = pair(r, _functional(g, h))
        if not v:
            raise InvariantViolation("degenerate sl(2)-triple at %r" % (r,))
        Y[r] = vec_scale(Y[r], 2 / v)
        H[r] = vec_scale(h, 2 / v)
    return ChevalleyData(X, Y, H, tuple(system.roots))


def check_axioms(g, triples=None):
    """Failures of skew-supersymmetry and super Jacobi on basis elements."""
    bad = []
    n = g.dim
    p = g.parity
    for i in range(n):
        for j in range(n):
            a = dict(g.table.get((i, j), {}))
            vec_add(a, g.table.get((j, i), {}), (-1) ** (p[i] * p[j]))
            if a:
                bad.append(("skew", i, j))
    it = triples if triples is not None else ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    for i, j, k in it:
        # [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        lhs = g.bracket({i: 1}, g.table.get((j, k), {}))
        rhs = g.bracket(g.table.get((i, j), {}), {k: 1})
        vec_add(rhs, g.bracket({j: 1}, g.table.get((i, k), {})), (-1) ** (p[i] * p[j]))
        vec_add(lhs, rhs, -1)
        if lhs:
            bad.append(("jacobi", i, j, k))
    return bad


class MapSuperalgebra:
    """g (x) B with [x (x) a, y (x) b] = [x, y] (x) ab; basis id = gi * dim(B) + bi."""

    def __init__(self, g, B):
        self.g = g
        self.B = B
        d = B.dim
        self.dim = g.dim * d
        self.parity = [g.parity[i // d] for i in range(self.dim)]
        self.weight = [g.weight[i // d] for i in range(self.dim)]
        self.labels = tuple("%s(x)%s" % (g.labels[i // d], B.labels[i % d]) for i in range(self.dim))
        self.table = {}
        for (i, j), v in g.table.items():
            for a in range(d):
                for b in range(d):
                    ab = B.table[a][b]
                    out = {}
                    for k, c in v.items():
                        for e, s in enumerate(ab):
                            if s:
                                out[k * d + e] = c * s
                    if out:
                        self.table[(i * d + a, j * d + b)] = out

    def __repr__(self):
        return "MapSuperalgebra(%s, %r)" % (self.g.family, self.B)

    def id(self, gi, bi):
        return gi * self.B.dim + bi

    def split(self, k):
        return divmod(k, self.B.dim)

    def tensor(self, x, bvec):
        """Element x (x) b for x in g and b a coefficient vector in B."""
        out = {}
        for k, c in x.items():
            for e, s in enumerate(bvec):
                if s:
                    out[self.id(k, e)] = c * s
        return out

    def bracket(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                v = self.table.get((i, j))
                if v:
                    vec_add(out, v, a * b)
        return out


def map_algebra(g, B):
    return MapSuperalgebra(g, B)
