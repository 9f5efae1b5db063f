"""
Brute-force closure oracle for highest weight quotients.

Shares only the structure constants with the engine.  Words in U(L) are
straightened by repeated adjacent swaps (lowering < Cartan < raising, then
by basis id) on a basis of B; relations are closed under
every raising and Cartan basis element, then under every lowering basis
element up to a depth bound that grows until a whole layer vanishes.
"""

from fractions import Fraction

from ..algebra_base import FinDimCommAlgebra, LocalBasisAlgebra, ideal_combine, ideal_from_points
from ..liesuper import MapSuperalgebra
from ..rootdata import pair


def _rank(vectors):
    """Rank of sparse vectors by plain Gaussian elimination keyed on the largest key."""
    rows = {}
    for v in vectors:
        v = {k: Fraction(c) for k, c in v.items() if c}
        while v:
            p = max(v)
            if p not in rows:
                c = v[p]
                rows[p] = {k: x / c for k, x in v.items()}
                break
            c = v[p]
            for k, x in rows[p].items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return rows


class _Straightener:
    def __init__(self, L, system, psi_values):
        self.L = L
        low, cart, high = L.g.triangular(system)
        d = L.B.dim
        cls = {}
        for gi in low:
            for b in range(d):
                cls[L.id(gi, b)] = 0
        for gi in cart:
            for b in range(d):
                cls[L.id(gi, b)] = 1
        for gi in high:
            for b in range(d):
                cls[L.id(gi, b)] = 2
        self.cls = cls
        self.psi = psi_values
        self.memo = {}

    def key(self, x):
        return (self.cls[x], x)

    def apply(self, x, vec):
        out = {}
        for w, c in vec.items():
            for u, e in self.normal((x,) + w).items():
                v = out.get(u, 0) + c * e
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
        return out

    def normal(self, word):
        """word . v as a combination of sorted lowering words."""
        got = self.memo.get(word)
        if got is not None:
            return got
        L = self.L
        todo = {word: Fraction(1)}
        done = {}
        while todo:
            w, c = todo.popitem()
            if not c:
                continue
            # trailing non-lowering letters act on v
            if w and self.cls[w[-1]] == 2:
                continue
            if w and self.cls[w[-1]] == 1:
                s = self.psi.get(w[-1], 0)
                if s:
                    _acc(todo, w[:-1], c * s)
                continue
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                ka, kb = self.key(a), self.key(b)
                if ka > kb:
                    sign = -1 if (L.parity[a] and L.parity[b]) else 1
                    _acc(todo, w[:i] + (b, a) + w[i + 2:], sign * c)
                    for k, e in L.table.get((a, b), {}).items():
                        _acc(todo, w[:i] + (k,) + w[i + 2:], c * e)
                    break
                if a == b and L.parity[a]:
                    for k, e in L.table.get((a, a), {}).items():
                        _acc(todo, w[:i] + (k,) + w[i + 2:], c * e / 2)
                    break
            else:
                _acc(done, w, c)
        done = {k: v for k, v in done.items() if v}
        self.memo[word] = done
        return done


def _acc(d, k, c):
    v = d.get(k, 0) + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


def oracle_character(g, system, top_weight, psi=None, M=1, max_depth=64, basis="local"):
    """Character of the quotient computed by brute-force closure.

    With psi None this is the generalized Kac module of ``top_weight``;
    otherwise the local Weyl truncation W_M of psi.  ``basis`` selects the
    basis of B: "monomial" (residues of t^k) or "local" (idempotent-adapted).
    """
    if psi is None:
        ideal = ideal_from_points([(0, 1)])
        points = [(0, top_weight)]
    else:
        pts = psi.points or (Fraction(0),)
        ideal = ideal_combine(ideal_from_points([(z, 1) for z in pts]), None, "power", M)
        points = list(psi.entries)
    B = FinDimCommAlgebra(ideal) if basis == "monomial" else LocalBasisAlgebra(ideal)
    L = MapSuperalgebra(g, B)
    one = B.reduce(1)
    d = B.dim
    psi_values = {}
    for gi in g.cartan:
        h = g.cartan_vectors[gi]
        for b in range(d):
            v = sum((pair(w, h) * B.evaluate(b, z) for z, w in points), Fraction(0))
            if v:
                psi_values[L.id(gi, b)] = v
    st = _Straightener(L, system, psi_values)
    low = [k for k, c in st.cls.items() if c == 0]
    ups = [k for k, c in st.cls.items() if c > 0]

    def depth(word):
        return sum(system.height(tuple(-x for x in L.weight[k])) for k in word)

    def weight_of(word):
        w = list(top_weight)
        for k in word:
            for i, x in enumerate(L.weight[k]):
                w[i] += x
        return tuple(Fraction(x) for x in w)

    rels = []
    for a, h in zip(system.even_simple, system.even_coroots):
        k = int(pair(top_weight, h))
        gy = g.root_index[tuple(-x for x in a)]
        vec = {(): Fraction(1)}
        for _ in range(k + 1):
            nxt = {}
            for b, c in enumerate(one):
                if c:
                    for m, e in st.apply(L.id(gy, b), vec).items():
                        _acc(nxt, m, c * e)
            vec = nxt
        if vec:
            rels.append(vec)
    # raising and Cartan closure (depth never increases)
    seen = _rank([])
    queue = []
    for r in rels:
        if _insert(seen, r):
            queue.append(r)
    while queue:
        v = queue.pop()
        for x in ups:
            w = st.apply(x, v)
            if w and _insert(seen, w):
                queue.append(w)
    S = [dict(r) for r in seen.values()]
    heights = {x: system.height(tuple(-c for c in L.weight[x])) for x in low}
    K = 1
    while K <= max_depth:
        # all canonical words of depth <= K reachable from v
        words = {()}
        layer = {()}
        while layer:
            nxt = set()
            for u in layer:
                du = depth(u)
                for x in low:
                    if du + heights[x] > K:
                        continue
                    for m in st.normal((x,) + u):
                        if m not in words:
                            words.add(m)
                            nxt.add(m)
            layer = nxt
        size = {}
        for m in words:
            mu = weight_of(m)
            size[mu] = size.get(mu, 0) + 1
        # lowering closure of S up to depth K, eliminated weight by weight
        N = {}
        frontier = []

        def push(w):
            mu = weight_of(next(iter(w)))
            rows = N.setdefault(mu, {})
            if len(rows) < size.get(mu, 0) and _insert(rows, w):
                frontier.append((w, depth(next(iter(w)))))

        for r in S:
            if depth(next(iter(r))) <= K:
                push(r)
        while frontier:
            v, dv = frontier.pop()
            for x in low:
                if dv + heights[x] > K:
                    continue
                w = st.apply(x, v)
                if w:
                    push(w)
        ch = {}
        deepest = 0
        for mu, n in size.items():
            dim = n - len(N.get(mu, {}))
            if dim:
                ch[mu] = dim
                deepest = max(deepest, sum(system.in_cone(tuple(a - b for a, b in zip(top_weight, mu)))))
        if deepest < K:
            return ch
        K += 1
    raise RuntimeError("oracle did not terminate within depth %d" % max_depth)


def _insert(rows, vec):
    """Add vec to the elimination state; True when it was independent."""
    before = len(rows)
    rows.update(_rank_into(rows, vec))
    return len(rows) > before


def _rank_into(rows, vec):
    v = {k: Fraction(c) for k, c in vec.items() if c}
    while v:
        p = max(v)
        if p not in rows:
            c = v[p]
            return {p: {k: x / c for k, x in v.items()}}
        c = v[p]
        for k, x in rows[p].items():
            y = v.get(k, 0) - c * x
            if y:
                v[k] = y
            else:
                v.pop(k, None)
    return {}
