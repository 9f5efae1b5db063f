"""Tensor products of modules over g (x) Q[t] and the tensor factorization check."""

from ..errors import InvalidInput
from .engine import WeightModule, local_weyl
from .mapweight import MapWeight, supports_disjoint


def convolve(ch1, ch2):
    out = {}
    for a, m in ch1.items():
        for b, n in ch2.items():
            w = tuple(x + y for x, y in zip(a, b))
            out[w] = out.get(w, 0) + m * n
    return out


class TensorModule(WeightModule):
    """M1 (x) M2 with x(v (x) w) = xv (x) w + (-1)^{|x||v|} v (x) xw."""

    def __init__(self, m1, m2):
        if m1.g.family != m2.g.family or m1.system.roots != m2.system.roots:
            raise InvalidInput("tensor factors are modules over different algebras")
        self.m1, self.m2 = m1, m2
        self.g = m1.g
        self.system = m1.system
        n2 = m2.dim
        self.basis_weight = []
        self.basis_parity = []
        for i in range(m1.dim):
            for j in range(n2):
                self.basis_weight.append(tuple(a + b for a, b in zip(m1.basis_weight[i], m2.basis_weight[j])))
                self.basis_parity.append(m1.basis_parity[i] ^ m2.basis_parity[j])
        c1, c2 = m1.cyclic, m2.cyclic
        self.cyclic = None if c1 is None or c2 is None else c1 * n2 + c2

    def act_basis(self, x, f, k):
        n2 = self.m2.dim
        i, j = divmod(k, n2)
        out = {}
        parts = {}
        for gi, c in x.items():
            parts.setdefault(self.g.parity[gi], {})[gi] = c
        for px, xp in parts.items():
            for a, c in self.m1.act_basis(xp, f, i).items():
                out[a * n2 + j] = out.get(a * n2 + j, 0) + c
            sign = -1 if (px and self.m1.basis_parity[i]) else 1
            for b, c in self.m2.act_basis(xp, f, j).items():
                out[i * n2 + b] = out.get(i * n2 + b, 0) + sign * c
        return {k: v for k, v in out.items() if v}


def tensor_module(m1, m2):
    return TensorModule(m1, m2)


def verify_tensor_theorem(g, system, psi1, psi2, plan=None, limit=None):
    """Compare ch W(psi1 + psi2) with ch W(psi1) * ch W(psi2) for disjoint supports."""
    if not isinstance(psi1, MapWeight) or not isinstance(psi2, MapWeight):
        raise InvalidInput("map weights expected")
    if not supports_disjoint(psi1, psi2):
        raise InvalidInput("precondition violated: map weights do not have disjoint support")
    w1 = local_weyl(g, system, psi1, plan, limit)
    w2 = local_weyl(g, system, psi2, plan, limit)
    w12 = local_weyl(g, system, psi1 + psi2, plan, limit)
    ch1, ch2, ch12 = w1.character(), w2.character(), w12.character()
    product = convolve(ch1, ch2)
    return {
        "modules": (w1, w2, w12),
        "characters": (ch1, ch2, ch12),
        "dimensions": (w1.dim, w2.dim, w12.dim),
        "product": product,
        "holds": product == ch12,
    }
