"""
Root data of basic Lie superalgebras.

Roots live in a fixed ambient coordinate space (the epsilon/delta basis of
the standard realization) equipped with the invariant form as a Gram
matrix.  Parities, pairings, positivity and heights are all computed from
coordinates; only the exceptional families F(4), G(3), D(2,1;alpha) are
entered as explicit lists.

Coroots are represented on the same coordinates: the coroot of an even
root alpha is the vector H with mu(H) = sum_k H[k] * mu[k] for every
weight mu, namely H = 2 G alpha / (alpha, alpha).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product as _cartesian

from .algebra_base import scalar, fstr
from .errors import InvalidInput, Unsupported
from . import linalg

FULL = "full"
ROOT_DATA_ONLY = "root-data-only"

_TYPE_II = {"B", "D", "F4", "G3", "D21"}


@dataclass(frozen=True)
class Family:
    """A family tag with its parameters.

    kinds: gl(m,n), sl(m,n), A(n,n), B(m,n)=osp(2m+1,2n), C(k)=osp(2,2k-2),
    D(m,n)=osp(2m,2n), F4, G3, D21 (D(2,1;alpha), rational alpha).
    """

    kind: str
    params: tuple = ()
    alpha: Fraction = None

    def __post_init__(self):
        k, p = self.kind, self.params
        if any(not isinstance(x, int) for x in p):
            raise InvalidInput("family parameters must be integers")
        ok = True
        if k == "gl":
            ok = len(p) == 2 and min(p) >= 0 and sum(p) >= 2
        elif k == "sl":
            ok = len(p) == 2 and min(p) >= 0 and sum(p) >= 2
            if ok and p[0] == p[1]:
                ok = p[0] >= 2
        elif k == "A":
            ok = len(p) == 1 and p[0] >= 1
        elif k == "B":
            ok = len(p) == 2 and p[0] >= 0 and p[1] >= 1
        elif k == "C":
            ok = len(p) == 1 and p[0] >= 2
        elif k == "D":
            ok = len(p) == 2 and p[0] >= 2 and p[1] >= 1
        elif k in ("F4", "G3"):
            ok = p == ()
        elif k == "D21":
            ok = p == () and self.alpha is not None and self.alpha not in (0, -1)
        else:
            ok = False
        if not ok:
            raise InvalidInput("invalid family %s%r" % (k, p))

    @property
    def label(self):
        k, p = self.kind, self.params
        if k in ("gl", "sl"):
            return "%s(%d,%d)" % (k, p[0], p[1]) if p[1] else "%s(%d)" % (k, p[0])
        if k == "A":
            return "A(%d,%d)" % (p[0], p[0])
        if k == "B":
            return "osp(%d,%d)" % (2 * p[0] + 1, 2 * p[1])
        if k == "C":
            return "osp(2,%d)" % (2 * p[0] - 2)
        if k == "D":
            return "osp(%d,%d)" % (2 * p[0], 2 * p[1])
        if k == "D21":
            return "D(2,1;%s)" % fstr(self.alpha)
        return {"F4": "F(4)", "G3": "G(3)"}[k]

    def __str__(self):
        return self.label

    @property
    def descriptor(self):
        """The string ``parse_family`` maps back to this family."""
        k, p = self.kind, self.params
        if k in ("gl", "sl"):
            return "%s:%d,%d" % (k, p[0], p[1]) if p[1] else "%s:%d" % (k, p[0])
        if k in ("A", "C"):
            return "%s:%d" % (k, p[0])
        if k in ("B", "D"):
            return "%s:%d,%d" % (k, p[0], p[1])
        if k == "D21":
            return "D21a:alpha=%s" % fstr(self.alpha)
        return k

    @property
    def support_level(self):
        return FULL if self.kind in ("gl", "sl", "B", "C", "D") else ROOT_DATA_ONLY

    @property
    def has_odd(self):
        if self.kind in ("gl", "sl"):
            return min(self.params) > 0
        return True

    @property
    def type_II(self):
        return self.kind in _TYPE_II


def parse_family(text):
    """Parse descriptors like ``gl:2,2``, ``sl:2``, ``osp:3,2``, ``D21a:alpha=2/3``."""
    text = text.strip()
    head, _, rest = text.partition(":")
    head = head.strip()
    args = [a.strip() for a in rest.split(",")] if rest.strip() else []
    try:
        if head in ("F4", "G3"):
            return Family(head)
        if head in ("D21a", "D21"):
            if len(args) != 1:
                raise InvalidInput("D21a needs one parameter alpha")
            a = args[0].split("=", 1)[-1]
            return Family("D21", (), scalar(a))
        nums = [int(a) for a in args]
        if head == "osp":
            if len(nums) != 2 or nums[1] % 2 or nums[1] < 2 or nums[0] < 1:
                raise InvalidInput("osp:M,2n needs M >= 1 and even 2n >= 2")
            big, n = nums[0], nums[1] // 2
            if big % 2:
                return Family("B", ((big - 1) // 2, n))
            if big == 2:
                return Family("C", (n + 1,))
            return Family("D", (big // 2, n))
        if head == "sl" and len(nums) == 1:
            return Family("sl", (nums[0], 0))
        if head == "gl" and len(nums) == 1:
            return Family("gl", (nums[0], 0))
        if head in ("gl", "sl", "A", "B", "C", "D"):
            return Family(head, tuple(nums))
    except ValueError as e:
        if isinstance(e, InvalidInput):
            raise
        raise InvalidInput("cannot parse family %r" % (text,)) from e
    raise InvalidInput("unknown family %r" % (text,))


@dataclass(frozen=True)
class Root:
    coords: tuple
    parity: int

    def __neg__(self):
        return Root(tuple(-c for c in self.coords), self.parity)


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def _family_data(fam):
    """(coordinate labels, gram, {root: parity}, distinguished base)."""
    k, p = fam.kind, fam.params
    roots = {}

    def put(vec, par):
        roots[tuple(vec)] = par
        roots[tuple(-x for x in vec)] = par

    if k in ("gl", "sl", "A"):
        m, n = (p[0] + 1, p[0] + 1) if k == "A" else p
        N = m + n
        labels = ["e%d" % (i + 1) for i in range(m)] + ["d%d" % (j + 1) for j in range(n)]
        gram = [[(1 if i < m else -1) if i == j else 0 for j in range(N)] for i in range(N)]
        par = [0] * m + [1] * n
        for i in range(N):
            for j in range(i + 1, N):
                v = _unit(N, i)
                v[j] = -1
                put(v, par[i] ^ par[j])
        base = []
        for i in range(N - 1):
            v = _unit(N, i)
            v[i + 1] = -1
            base.append(tuple(v))
        return labels, gram, roots, base

    if k in ("B", "C", "D"):
        if k == "C":
            m, n = 1, p[0] - 1
        else:
            m, n = p
        N = m + n
        labels = ["e%d" % (i + 1) for i in range(m)] + ["d%d" % (j + 1) for j in range(n)]
        gram = [[(1 if i < m else -1) if i == j else 0 for j in range(N)] for i in range(N)]
        E = list(range(m))
        D = list(range(m, N))
        for a, b in _pairs(E):
            if k != "C":
                for s in (1, -1):
                    v = _unit(N, a)
                    v[b] = s
                    put(v, 0)
        for a, b in _pairs(D):
            for s in (1, -1):
                v = _unit(N, a)
                v[b] = s
                put(v, 0)
        for a in D:
            put(_unit(N, a, 2), 0)
        for a in E:
            for b in D:
                for s in (1, -1):
                    v = _unit(N, a)
                    v[b] = s
                    put(v, 1)
        if k == "B":
            for a in E:
                put(_unit(N, a), 0)
            for b in D:
                put(_unit(N, b), 1)
        base = []
        if k == "C":
            v = _unit(N, 0)
            v[D[0]] = -1
            base.append(tuple(v))
            for j in range(n - 1):
                v = _unit(N, D[j])
                v[D[j + 1]] = -1
                base.append(tuple(v))
            base.append(tuple(_unit(N, D[-1], 2)))
            return labels, gram, roots, base
        for j in range(n - 1):
            v = _unit(N, D[j])
            v[D[j + 1]] = -1
            base.append(tuple(v))
        if m == 0:
            base.append(tuple(_unit(N, D[-1])))
            return labels, gram, roots, base
        v = _unit(N, D[-1])
        v[E[0]] = -1
        base.append(tuple(v))
        for i in range(m - 1):
            v = _unit(N, E[i])
            v[E[i + 1]] = -1
            base.append(tuple(v))
        if k == "B":
            base.append(tuple(_unit(N, E[-1])))
        else:
            v = _unit(N, E[-2])
            v[E[-1]] = 1
            base.append(tuple(v))
        return labels, gram, roots, base

    if k == "F4":
        # coordinates are half-units: (delta/2, e1/2, e2/2, e3/2)
        labels = ["d/2", "e1/2", "e2/2", "e3/2"]
        gram = [[-3, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        for a, b in _pairs([1, 2, 3]):
            for s in (2, -2):
                v = _unit(4, a, 2)
                v[b] = s
                put(v, 0)
        for a in (0, 1, 2, 3):
            put(_unit(4, a, 2), 0)
        for signs in _cartesian((1, -1), repeat=4):
            roots[signs] = 1
        base = [(1, -1, -1, -1), (0, 0, 0, 2), (0, 0, 2, -2), (0, 2, -2, 0)]
        return labels, gram, roots, base

    if k == "G3":
        # coordinates (delta, e1, e2) with e3 = -e1 - e2
        labels = ["d", "e1", "e2"]
        gram = [[2, 0, 0], [0, -2, 1], [0, 1, -2]]
        eps = [(0, 1, 0), (0, 0, 1), (0, -1, -1)]
        put((2, 0, 0), 0)
        for e in eps:
            put(e, 0)
        for a, b in _pairs([0, 1, 2]):
            put(tuple(x - y for x, y in zip(eps[a], eps[b])), 0)
        put((1, 0, 0), 1)
        for e in eps:
            put(tuple(x + y for x, y in zip((1, 0, 0), e)), 1)
            put(tuple(x - y for x, y in zip((1, 0, 0), e)), 1)
        base = [(1, -1, -1), (0, 1, 0), (0, -1, 1)]
        return labels, gram, roots, base

    if k == "D21":
        a = fam.alpha
        labels = ["e1", "e2", "e3"]
        gram = [[-(1 + a), 0, 0], [0, 1, 0], [0, 0, a]]
        for i in range(3):
            put(_unit(3, i, 2), 0)
        for signs in _cartesian((1, -1), repeat=3):
            roots[signs] = 1
        base = [(1, -1, -1), (0, 2, 0), (0, 0, 2)]
        return labels, gram, roots, base
    raise InvalidInput("unknown family kind %r" % (k,))


def _pairs(xs):
    return [(a, b) for i, a in enumerate(xs) for b in xs[i + 1:]]


class RootSystem:
    """All roots of a family with parities and the invariant form."""

    def __init__(self, family):
        self.family = family
        labels, gram, roots, _ = _family_data(family)
        self.labels = tuple(labels)
        self.dim = len(labels)
        self.gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
        self.parity = dict(sorted(roots.items(), reverse=True))
        self.roots = tuple(Root(r, p) for r, p in self.parity.items())

    def __repr__(self):
        return "RootSystem(%s)" % self.family

    def form(self, u, v):
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.dim) if u[i]
                   for j in range(self.dim) if v[j] and g[i][j])

    def is_root(self, vec):
        return tuple(vec) in self.parity

    @property
    def even_roots(self):
        return [r for r, p in self.parity.items() if p == 0]

    @property
    def odd_roots(self):
        return [r for r, p in self.parity.items() if p == 1]

    def coroot(self, alpha):
        """Coroot vector of a non-isotropic root (alpha(H) = 2)."""
        aa = self.form(alpha, alpha)
        if not aa:
            raise InvalidInput("isotropic root has no normalized coroot")
        g = self.gram
        return tuple(2 * sum(g[k][j] * alpha[j] for j in range(self.dim)) / aa
                     for k in range(self.dim))

    def to_json(self):
        return {
            "family": self.family.label,
            "coordinates": list(self.labels),
            "roots": [{"root": list(r), "parity": p} for r, p in self.parity.items()],
        }


def pair(weight, coroot):
    return sum(Fraction(w) * h for w, h in zip(weight, coroot))


@dataclass(frozen=True)
class SimpleSystem:
    """A base of a root system together with everything derived from it."""

    rs: RootSystem = field(compare=False, repr=False)
    roots: tuple

    def __post_init__(self):
        # validation happens in the cached computations; force it here
        self.positive

    @property
    def rank(self):
        return len(self.roots)

    @cached_property
    def _solver(self):
        # rows = ambient coordinates, columns = base roots
        return [[Fraction(b[i]) for b in self.roots] for i in range(self.rs.dim)]

    def coefficients(self, vec):
        """Coefficients of ``vec`` on the base, or None outside its span."""
        x = linalg.solve(self._solver, list(vec))
        if x is None:
            return None
        check = [sum(c * b[i] for c, b in zip(x, self.roots)) for i in range(self.rs.dim)]
        if check != [Fraction(v) for v in vec]:
            return None
        return tuple(x)

    @cached_property
    def positive(self):
        """Positive roots mapped to their (integer) coefficient tuples."""
        if linalg.rank([list(b) for b in self.roots]) != len(self.roots):
            raise InvalidInput("simple roots are linearly dependent")
        pos = {}
        for r in self.rs.parity:
            c = self.coefficients(r)
            if c is None or any(x.denominator != 1 for x in c):
                raise InvalidInput("root %r is not an integer combination of the base" % (r,))
            if all(x >= 0 for x in c):
                pos[r] = tuple(int(x) for x in c)
            elif not all(x <= 0 for x in c):
                raise InvalidInput("root %r is not one-signed on the base" % (r,))
        return pos

    def is_positive(self, root):
        return tuple(root) in self.positive

    def height(self, root):
        root = tuple(root)
        if root in self.positive:
            return sum(self.positive[root])
        neg = tuple(-x for x in root)
        return -sum(self.positive[neg])

    @property
    def parities(self):
        return tuple(self.rs.parity[b] for b in self.roots)

    @property
    def isotropic(self):
        return tuple(self.rs.parity[b] == 1 and self.rs.form(b, b) == 0 for b in self.roots)

    @property
    def odd_indices(self):
        return [i for i, p in enumerate(self.parities) if p]

    @cached_property
    def cartan_matrix(self):
        """b_ij = beta_j(H_{beta_i}); isotropic rows use the unnormalized form."""
        f = self.rs.form
        rows = []
        for bi in self.roots:
            d = f(bi, bi)
            rows.append(tuple(Fraction(f(bi, bj)) * (2 / Fraction(d) if d else 1)
                              for bj in self.roots))
        return tuple(rows)

    def pairing_nonzero(self, i, j):
        return self.rs.form(self.roots[i], self.roots[j]) != 0

    @cached_property
    def positive_even(self):
        return [r for r in self.positive if self.rs.parity[r] == 0]

    @cached_property
    def positive_odd(self):
        return [r for r in self.positive if self.rs.parity[r] == 1]

    @cached_property
    def even_simple(self):
        """Simple roots of the even part, ordered by descending coordinates."""
        pe = set(self.positive_even)
        simple = []
        for a in pe:
            if not any(tuple(x - y for x, y in zip(a, b)) in pe for b in pe):
                simple.append(a)
        return tuple(sorted(simple, reverse=True))

    @cached_property
    def even_coroots(self):
        return tuple(self.rs.coroot(a) for a in self.even_simple)

    @cached_property
    def highest_root_height(self):
        return max(sum(c) for c in self.positive.values())

    def in_cone(self, vec):
        """Coefficients of vec in N(base), or None."""
        c = self.coefficients(vec)
        if c is None or any(x.denominator != 1 or x < 0 for x in c):
            return None
        return tuple(int(x) for x in c)

    def to_json(self):
        return {
            "base": [list(b) for b in self.roots],
            "parities": list(self.parities),
            "isotropic": list(self.isotropic),
            "cartan": [[fstr(x) for x in row] for row in self.cartan_matrix],
        }


def root_system(family):
    """The root system of ``family`` and its distinguished base."""
    rs = RootSystem(family)
    base = _family_data(family)[3]
    return rs, SimpleSystem(rs, tuple(base))


def distinguished_odd_index(system):
    odd = system.odd_indices
    return odd[0] if len(odd) == 1 else None


def odd_reflection(system, rs, index):
    """Reflect the base at the isotropic odd simple root ``system.roots[index]``."""
    if not 0 <= index < system.rank:
        raise InvalidInput("simple root index %d out of range" % index)
    beta = system.roots[index]
    if rs.parity[beta] != 1:
        raise InvalidInput("simple root %r is even" % (beta,))
    if rs.form(beta, beta) != 0:
        raise InvalidInput("simple root %r is not isotropic" % (beta,))
    new = []
    for i, b in enumerate(system.roots):
        if i == index:
            new.append(tuple(-x for x in beta))
        elif system.pairing_nonzero(index, i) or system.pairing_nonzero(i, index):
            new.append(tuple(x + y for x, y in zip(beta, b)))
        else:
            new.append(b)
    return SimpleSystem(rs, tuple(new))


def reflection_identity(system, rs, index):
    """Positive roots of the reflected base are those of the old one with beta replaced by -beta."""
    beta = system.roots[index]
    new = odd_reflection(system, rs, index)
    neg = tuple(-x for x in beta)
    return set(new.positive) - {neg} == set(system.positive) - {beta}


def reflect_sequence(system, rs, indices):
    for i in indices:
        system = odd_reflection(system, rs, i)
    return system


@dataclass
class ConditionReport:
    holds: bool
    witnesses: dict

    def to_json(self):
        return {
            "holds": self.holds,
            "witnesses": [{"simple": list(a), "partner": list(b) if b else None,
                           "sum": [x + y for x, y in zip(a, b)] if b else None}
                          for a, b in self.witnesses.items()],
        }


def check_condition(system, rs):
    """Every odd simple alpha has an odd positive alpha' with alpha + alpha' a root."""
    wit = {}
    for i in system.odd_indices:
        a = system.roots[i]
        found = None
        for b in sorted(system.positive_odd, key=lambda r: (system.height(r), tuple(-x for x in r))):
            s = tuple(x + y for x, y in zip(a, b))
            if rs.is_root(s):
                if rs.parity[s] != 0:
                    raise AssertionError("odd + odd root %r is not even" % (s,))
                found = b
                break
        wit[a] = found
    return ConditionReport(all(v is not None for v in wit.values()), wit)


def default_good_system(family):
    """A base satisfying the odd-partner condition."""
    rs, dist = root_system(family)
    if not family.has_odd or family.type_II:
        return dist
    s = distinguished_odd_index(dist)
    good = odd_reflection(dist, rs, s)
    if not check_condition(good, rs).holds:
        raise Unsupported("%s has no base satisfying the odd-partner condition" % family)
    return good


def coroot_values(weight, system):
    return tuple(pair(weight, h) for h in system.even_coroots)


def lambda_plus_check(weight, system):
    """Integral and dominant on the even simple coroots (necessary for Lambda+)."""
    return all(v.denominator == 1 and v >= 0 for v in coroot_values(weight, system))


def reflect_weight(mu, alpha, coroot):
    k = pair(mu, coroot)
    return tuple(Fraction(m) - k * a for m, a in zip(mu, alpha))


def dominant_conjugate(mu, system):
    mu = tuple(Fraction(x) for x in mu)
    while True:
        for a, h in zip(system.even_simple, system.even_coroots):
            if pair(mu, h) < 0:
                mu = reflect_weight(mu, a, h)
                break
        else:
            return mu


def weyl_orbit(mu, system):
    mu = tuple(Fraction(x) for x in mu)
    seen = {mu}
    todo = [mu]
    while todo:
        x = todo.pop()
        for a, h in zip(system.even_simple, system.even_coroots):
            y = reflect_weight(x, a, h)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def _dominant_below(tau, system):
    """Dominant weights in tau - N(even simple roots)."""
    es, hs = system.even_simple, system.even_coroots
    if not es:
        return [tau]
    vals = [pair(tau, h) for h in hs]
    cm = [[pair(a, h) for a in es] for h in hs]
    inv = linalg.inverse(cm)
    bounds = []
    for i in range(len(es)):
        b = sum(inv[i][j] * vals[j] for j in range(len(es)))
        if b < 0:
            return []
        bounds.append(int(b))
    out = []
    for n in _cartesian(*[range(b + 1) for b in bounds]):
        kappa = tuple(t - sum(c * a[k] for c, a in zip(n, es)) for k, t in enumerate(tau))
        if all(pair(kappa, h) >= 0 for h in hs):
            out.append(kappa)
    return out


def weight_frontier(weight, rs, system, odd_multiplicity=1):
    """A finite set of weights containing every weight of the modules built here.

    Candidates are the weights mu in weight - Q+ whose dominant conjugate
    mu+ satisfies weight - mu+ in Q+ and lies below weight - S for a sum S of
    odd positive roots, each used at most ``odd_multiplicity`` times (the
    exterior part of a PBW basis of n- tensored with a ``odd_multiplicity``
    dimensional coefficient algebra).
    """
    if not lambda_plus_check(weight, system):
        raise InvalidInput("weight is not dominant integral for the even part")
    lam = tuple(Fraction(x) for x in weight)
    sums = {tuple(Fraction(0) for _ in lam)}
    for g in system.positive_odd:
        new = set()
        for s in sums:
            for c in range(odd_multiplicity + 1):
                new.add(tuple(x + c * y for x, y in zip(s, g)))
        sums = new
    dominant = set()
    for s in sums:
        tau = tuple(x - y for x, y in zip(lam, s))
        dominant.update(_dominant_below(tau, system))
    out = set()
    for kappa in dominant:
        if system.in_cone(tuple(x - y for x, y in zip(lam, kappa))) is None:
            continue
        for mu in weyl_orbit(kappa, system):
            if system.in_cone(tuple(x - y for x, y in zip(lam, mu))) is not None:
                out.add(mu)
    return sorted(out, key=lambda mu: (sum(system.in_cone(tuple(x - y for x, y in zip(lam, mu)))), tuple(-x for x in mu)))


def extra_cartan_vectors(family):
    """Cartan elements completing the even coroots to a basis of h."""
    k, p = family.kind, family.params
    if k == "gl":
        m, n = p
        out = []
        if m:
            out.append(tuple([1] * m + [0] * n))
        if n:
            out.append(tuple([0] * m + [1] * n))
        return out
    if k == "sl":
        m, n = p
        if m and n:
            return [tuple(1 if i in (m - 1, m) else 0 for i in range(m + n))]
        return []
    if k == "C":
        return [tuple(_unit(p[0], 0))]
    return []


def weight_from_coefficients(family, system, coeffs):
    """Ambient weight with prescribed values on even coroots then extra Cartan elements.

    For sl(m,n) the weight is only defined modulo the supertrace functional;
    the lift with vanishing last coordinate is returned.
    """
    rs = system.rs
    rows = [list(h) for h in system.even_coroots] + [list(v) for v in extra_cartan_vectors(family)]
    coeffs = [scalar(c) for c in coeffs]
    if len(coeffs) != len(rows):
        raise InvalidInput("%s expects %d weight coefficients, got %d"
                           % (family, len(rows), len(coeffs)))
    if family.kind == "sl":
        rows.append(_unit(rs.dim, rs.dim - 1))
        coeffs.append(Fraction(0))
    if family.kind == "A":
        raise InvalidInput("A(n,n) has no module-level weights")
    x = linalg.solve(rows, coeffs)
    if x is None or linalg.rank(rows) != rs.dim:
        raise InvalidInput("weight coordinates do not determine a weight")
    return tuple(x)


def weight_coefficients(family, system, weight):
    return tuple(pair(weight, h) for h in list(system.even_coroots) + extra_cartan_vectors(family))
