"""
Exact scalars, polynomials in one variable t over Q, ideals of Q[t] with
rational roots in factored form, and the finite-dimensional quotients
Q[t]/I realized with explicit multiplication tables.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .errors import InvalidInput


def scalar(x):
    """Coerce ints, Fractions and "p/q" strings to a canonical Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise InvalidInput("floating point scalars are not accepted: %r" % (x,))
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InvalidInput("not a rational number: %r" % (x,)) from e


def fstr(x):
    return str(Fraction(x))


class Polynomial:
    """Polynomial in t with Fraction coefficients, stored low degree first.

    Invariant: no trailing zero coefficient; the zero polynomial has
    ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for z in roots:
            p = p * cls((-scalar(z), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Polynomial(%s)" % ", ".join(fstr(c) for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("t" if k == 1 else "t^%d" % k)
            if mon and c == 1:
                terms.append(mon)
            elif mon and c == -1:
                terms.append("-" + mon)
            else:
                terms.append(fstr(c) + ("*" + mon if mon else ""))
        return " + ".join(terms)

    def _coerce(self, other):
        return other if isinstance(other, Polynomial) else Polynomial((other,))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise InvalidInput("negative power of a polynomial")
        out, base = Polynomial((1,)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quo[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Polynomial(quo), Polynomial(rem[:dq] if dq > 0 else ())

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, z):
        z = scalar(z)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def to_json(self):
        return [fstr(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(scalar(c) for c in data)


def parse_polynomial(text):
    """Parse a polynomial such as ``"t^2 - 3*t + 1/2"``."""
    import sympy

    t = sympy.Symbol("t")
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals={"t": t}, rational=True)
        poly = sympy.Poly(expr, t)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError) as e:
        raise InvalidInput("cannot parse polynomial %r" % (text,)) from e
    if any(not c.is_Rational for c in poly.all_coeffs()):
        raise InvalidInput("non-rational coefficient in %r" % (text,))
    return Polynomial(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True)
class FactoredIdeal:
    """The ideal generated by prod (t - z)^m over the stored factors.

    Roots are pairwise distinct and sorted; an empty factor list is the
    unit ideal Q[t].
    """

    factors: tuple = ()

    @property
    def codim(self):
        return sum(m for _, m in self.factors)

    @property
    def is_unit(self):
        return not self.factors

    def multiplicity(self, z):
        return dict(self.factors).get(scalar(z), 0)

    def generator(self):
        p = Polynomial((1,))
        for z, m in self.factors:
            p = p * Polynomial((-z, 1)) ** m
        return p

    def __str__(self):
        if not self.factors:
            return "(1)"
        parts = []
        for z, m in self.factors:
            base = "t" if z == 0 else "(t - %s)" % fstr(z)
            parts.append(base if m == 1 else "%s^%d" % (base, m))
        return "(" + "*".join(parts) + ")"

    def to_json(self):
        return [{"root": fstr(z), "mult": m} for z, m in self.factors]

    @classmethod
    def from_json(cls, data):
        return ideal_from_points([(d["root"], d["mult"]) for d in data])


def ideal_from_points(entries):
    """Build the ideal with the given (root, multiplicity) factors.

    Repeated roots are merged by adding multiplicities.
    """
    acc = {}
    for z, m in entries:
        z = scalar(z)
        if not isinstance(m, int) or m < 1:
            raise InvalidInput("multiplicity must be a positive integer, got %r" % (m,))
        acc[z] = acc.get(z, 0) + m
    return FactoredIdeal(tuple(sorted(acc.items())))


def ideal_support(ideal):
    return frozenset(z for z, _ in ideal.factors)


def ideal_combine(lhs, rhs, op, n=None):
    """Sum, product, intersection of two ideals, or a power of ``lhs``.

    In Q[t] the sum is the gcd of generators, the intersection the lcm.
    """
    a, b = dict(lhs.factors), dict(rhs.factors) if rhs is not None else {}
    if op == "sum":
        out = {z: min(a[z], b[z]) for z in a.keys() & b.keys()}
    elif op == "product":
        out = dict(a)
        for z, m in b.items():
            out[z] = out.get(z, 0) + m
    elif op == "intersection":
        out = dict(a)
        for z, m in b.items():
            out[z] = max(out.get(z, 0), m)
    elif op == "power":
        if not isinstance(n, int) or n < 1:
            raise InvalidInput("ideal power needs an integer n >= 1")
        out = {z: m * n for z, m in a.items()}
    else:
        raise InvalidInput("unknown ideal operation %r" % (op,))
    return FactoredIdeal(tuple(sorted(out.items())))


class FinDimCommAlgebra:
    """The quotient Q[t]/I for a proper ideal I, on the basis 1, t, ..., t^(d-1).

    ``table[i][j]`` is the coefficient vector of the residue of t^(i+j).
    """

    unit = 0

    def __init__(self, ideal):
        if ideal.is_unit:
            raise InvalidInput("zero algebra: the unit ideal has no proper quotient")
        self.ideal = ideal
        self.modulus = ideal.generator()
        self.dim = d = ideal.codim
        powers = [self.reduce(Polynomial.t() ** k) for k in range(2 * d - 1)]
        self.table = tuple(tuple(powers[i + j] for j in range(d)) for i in range(d))
        self.labels = tuple("1" if k == 0 else ("t" if k == 1 else "t^%d" % k) for k in range(d))

    def __repr__(self):
        return "FinDimCommAlgebra(Q[t]/%s)" % (self.ideal,)

    def reduce(self, poly):
        """Coefficient vector (length dim) of the residue of ``poly``."""
        if not isinstance(poly, Polynomial):
            poly = Polynomial((poly,))
        r = poly % self.modulus
        return tuple(r.coeffs) + (Fraction(0),) * (self.dim - len(r.coeffs))

    def mul(self, u, v):
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        for k, c in enumerate(self.table[i][j]):
                            if c:
                                out[k] += a * b * c
        return tuple(out)

    def basis_vector(self, k):
        return tuple(Fraction(int(i == k)) for i in range(self.dim))

    def evaluate(self, k, z):
        """Value at the root z of I of the basis residue t^k."""
        return scalar(z) ** k

    def to_polynomial(self, vec):
        return Polynomial(vec)


def truncated_algebra(ideal):
    return FinDimCommAlgebra(ideal)


def check_algebra_laws(alg):
    """Return a list of failed law descriptions (empty when all hold)."""
    d = alg.dim
    basis = [alg.basis_vector(k) for k in range(d)]
    unit = alg.reduce(1)
    bad = []
    for i in range(d):
        if alg.mul(unit, basis[i]) != basis[i]:
            bad.append("unit law at %d" % i)
        for j in range(d):
            if alg.mul(basis[i], basis[j]) != alg.mul(basis[j], basis[i]):
                bad.append("commutativity at (%d,%d)" % (i, j))
    for i, j, k in _cartesian(range(d), repeat=3):
        lhs = alg.mul(alg.mul(basis[i], basis[j]), basis[k])
        rhs = alg.mul(basis[i], alg.mul(basis[j], basis[k]))
        if lhs != rhs:
            bad.append("associativity at (%d,%d,%d)" % (i, j, k))
    return bad


class LocalBasisAlgebra(FinDimCommAlgebra):
    """Q[t]/I on the basis e_z (t - z)^k adapted to the Chinese remainder splitting.

    ``e_z`` is the idempotent that is 1 near z and 0 near the other roots.
    Same interface as FinDimCommAlgebra; the unit is not a basis vector.
    """

    unit = None

    def __init__(self, ideal):
        if ideal.is_unit:
            raise InvalidInput("zero algebra: the unit ideal has no proper quotient")
        self.ideal = ideal
        self.modulus = ideal.generator()
        self.dim = d = ideal.codim
        self.polys = []
        labels = []
        for z, m in ideal.factors:
            e = self._idempotent(z, m)
            for k in range(m):
                self.polys.append((e * Polynomial((-z, 1)) ** k) % self.modulus)
                labels.append("e[%s]" % fstr(z) + ("" if k == 0 else "(t-%s)^%d" % (fstr(z), k)))
        self.labels = tuple(labels)
        cols = [tuple(p.coeffs) + (Fraction(0),) * (d - len(p.coeffs)) for p in self.polys]
        from .linalg import inverse
        self._inv = inverse([[cols[j][i] for j in range(d)] for i in range(d)])
        self.table = tuple(tuple(self.reduce(self.polys[i] * self.polys[j]) for j in range(d))
                           for i in range(d))

    def _idempotent(self, z, m):
        other = Polynomial((1,))
        for w, n in self.ideal.factors:
            if w != z:
                other = other * Polynomial((-w, 1)) ** n
        # solve other * s == 1 mod (t - z)^m by truncated inversion in the local variable
        u = Polynomial((z, 1))  # substitute t = z + s
        loc = _compose(other, u)
        inv = _series_inverse(loc, m)
        s_poly = _compose(inv, Polynomial((-z, 1)))
        return (other * s_poly) % self.modulus

    def __repr__(self):
        return "LocalBasisAlgebra(Q[t]/%s)" % (self.ideal,)

    def reduce(self, poly):
        if not isinstance(poly, Polynomial):
            poly = Polynomial((poly,))
        r = poly % self.modulus
        v = tuple(r.coeffs) + (Fraction(0),) * (self.dim - len(r.coeffs))
        return tuple(sum(self._inv[i][j] * v[j] for j in range(self.dim)) for i in range(self.dim))

    def evaluate(self, k, z):
        return self.polys[k](z)

    def to_polynomial(self, vec):
        out = Polynomial()
        for c, p in zip(vec, self.polys):
            out = out + c * p
        return out


def _compose(p, q):
    out = Polynomial()
    for c in reversed(p.coeffs):
        out = out * q + c
    return out


def _series_inverse(p, n):
    """Power series inverse of p (p(0) != 0) modulo s^n."""
    a = list(p.coeffs) + [Fraction(0)] * n
    inv = [1 / a[0]]
    for k in range(1, n):
        inv.append(-sum(a[i] * inv[k - i] for i in range(1, k + 1)) / a[0])
    return Polynomial(inv)
