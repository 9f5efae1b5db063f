"""Map weights psi = sum_i lambda_i (x) ev_{z_i}, truncation plans and Garland scalars."""

from dataclasses import dataclass
from fractions import Fraction

from ..algebra_base import (FinDimCommAlgebra, Polynomial, ideal_combine,
                            ideal_from_points, ideal_support, scalar, fstr)
from ..errors import InvalidInput
from ..rootdata import lambda_plus_check, pair


@dataclass(frozen=True)
class MapWeight:
    """Finitely supported evaluation functional on h (x) Q[t].

    ``entries`` is a tuple of (point, ambient weight) sorted by point, with
    distinct points and nonzero weights.
    """

    entries: tuple

    @property
    def points(self):
        return tuple(z for z, _ in self.entries)

    @property
    def restriction(self):
        """psi restricted to h, i.e. the sum of the components."""
        if not self.entries:
            return None
        n = len(self.entries[0][1])
        return tuple(sum((w[k] for _, w in self.entries), Fraction(0)) for k in range(n))

    def total(self, dim):
        r = self.restriction
        return r if r is not None else tuple(Fraction(0) for _ in range(dim))

    @property
    def is_zero(self):
        return not self.entries

    def eval_ideal(self):
        return ideal_from_points([(z, 1) for z in self.points])

    def working_points(self):
        """Points used to build truncations; psi = 0 is evaluated at the origin."""
        return self.points or (Fraction(0),)

    def value(self, coroot, poly):
        """psi(h (x) poly) where h is given by its ambient functional ``coroot``."""
        if not isinstance(poly, Polynomial):
            poly = Polynomial((poly,))
        return sum((pair(w, coroot) * poly(z) for z, w in self.entries), Fraction(0))

    def value_power(self, coroot, k):
        return sum((pair(w, coroot) * z ** k for z, w in self.entries), Fraction(0))

    def __add__(self, other):
        acc = dict(self.entries)
        for z, w in other.entries:
            if z in acc:
                acc[z] = tuple(a + b for a, b in zip(acc[z], w))
            else:
                acc[z] = w
        return MapWeight(tuple(sorted((z, w) for z, w in acc.items() if any(w))))

    def to_json(self):
        return [{"point": fstr(z), "weight": [fstr(x) for x in w]} for z, w in self.entries]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(sorted((scalar(d["point"]), tuple(scalar(x) for x in d["weight"]))
                                for d in data)))


def psi_make(entries, system):
    """Validate (point, weight) pairs into a MapWeight."""
    seen = set()
    out = []
    for z, w in entries:
        z = scalar(z)
        w = tuple(scalar(x) for x in w)
        if len(w) != system.rs.dim:
            raise InvalidInput("weight has %d coordinates, expected %d" % (len(w), system.rs.dim))
        if z in seen:
            raise InvalidInput("duplicate point %s in map weight" % fstr(z))
        seen.add(z)
        if not any(w):
            continue
        if not lambda_plus_check(w, system):
            raise InvalidInput("component at %s is not dominant integral" % fstr(z))
        out.append((z, w))
    psi = MapWeight(tuple(sorted(out)))
    if psi.entries and not lambda_plus_check(psi.restriction, system):
        raise InvalidInput("restriction of psi to h is not dominant integral")
    return psi


def coroot_max(weight, system):
    """max over even positive alpha of weight(H_alpha), at least 0."""
    vals = [pair(weight, system.rs.coroot(a)) for a in system.positive_even]
    return max([0] + [int(v) for v in vals])


def seed_exponent(psi, system):
    lam = psi.total(system.rs.dim)
    return max(coroot_max(lam, system), 1) * system.highest_root_height


@dataclass(frozen=True)
class TruncationPlan:
    """Work over B = Q[t]/J with J = I^M for the evaluation ideal I of psi."""

    M: int
    adaptive: bool = True

    def __post_init__(self):
        if not isinstance(self.M, int) or self.M < 1:
            raise InvalidInput("truncation exponent must be a positive integer")

    def ideal(self, psi):
        base = ideal_from_points([(z, 1) for z in psi.working_points()])
        return ideal_combine(base, None, "power", self.M)

    def algebra(self, psi):
        return FinDimCommAlgebra(self.ideal(psi))


def default_plan(psi, system, adaptive=True):
    return TruncationPlan(seed_exponent(psi, system), adaptive)


def _check_even_positive(alpha, system):
    alpha = tuple(alpha)
    if alpha not in system.positive or system.rs.parity[alpha] != 0:
        raise InvalidInput("%r is not an even positive root" % (alpha,))
    return alpha


def garland_scalars(psi, a, alpha, system, maxdeg):
    """Coefficients c_0..c_maxdeg of p(a, alpha) acting on the highest weight vector."""
    alpha = _check_even_positive(alpha, system)
    h = system.rs.coroot(alpha)
    powers = [None] + [psi.value(h, a ** i) for i in range(1, maxdeg + 1)]
    c = [Fraction(1)]
    for k in range(1, maxdeg + 1):
        c.append(-sum(powers[i] * c[k - i] for i in range(1, k + 1)) / k)
    return c


def garland_product_form(psi, a, alpha, system, maxdeg):
    """Taylor coefficients of prod_i (1 - a(z_i) u)^{lambda_i(H_alpha)}."""
    alpha = _check_even_positive(alpha, system)
    h = system.rs.coroot(alpha)
    series = Polynomial((1,))
    for z, w in psi.entries:
        e = pair(w, h)
        if e.denominator != 1 or e < 0:
            raise InvalidInput("component exponent is not a nonnegative integer")
        series = series * Polynomial((1, -a(z))) ** int(e)
    cs = list(series.coeffs) + [Fraction(0)] * (maxdeg + 1)
    return cs[: maxdeg + 1]


def even_root_annihilator(psi, alpha, system):
    """Q_alpha = prod_i (t - z_i)^{lambda_i(H_alpha)}."""
    alpha = _check_even_positive(alpha, system)
    h = system.rs.coroot(alpha)
    q = Polynomial((1,))
    for z, w in psi.entries:
        e = pair(w, h)
        if e.denominator != 1 or e < 0:
            raise InvalidInput("component exponent is not a nonnegative integer")
        q = q * Polynomial((-z, 1)) ** int(e)
    return q


def supports_disjoint(psi1, psi2):
    return not (ideal_support(psi1.eval_ideal()) & ideal_support(psi2.eval_ideal()))
