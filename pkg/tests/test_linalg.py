from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from superweyl.linalg import Echelon, LazyEchelon, inverse, nullspace, rank, solve

entries = st.integers(-3, 3).map(Fraction)
matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=1, max_size=5))


@given(matrices)
def test_rank_matches_sympy(rows):
    want = sympy.Matrix(rows).rank()
    assert rank(rows) == want
    for cls in (Echelon, LazyEchelon):
        ech = cls({j: c for j, c in enumerate(r) if c} for r in rows)
        assert len(ech) == want


@given(matrices)
def test_nullspace_is_annihilated(rows):
    n = len(rows[0])
    basis = nullspace(rows, n)
    assert len(basis) == n - rank(rows)
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices)
def test_membership(rows):
    ech = Echelon({j: c for j, c in enumerate(r) if c} for r in rows)
    combo = {}
    for k, r in enumerate(rows):
        for j, c in enumerate(r):
            combo[j] = combo.get(j, 0) + (k + 1) * c
    assert ech.contains({j: c for j, c in combo.items() if c})


def test_solve_and_inverse():
    m = [[2, 1], [1, 1]]
    assert solve(m, [3, 2]) == [1, 1]
    assert solve([[1, 1], [2, 2]], [1, 3]) is None
    inv = inverse(m)
    assert [[sum(Fraction(m[i][k]) * inv[k][j] for k in range(2)) for j in range(2)] for i in range(2)] == [[1, 0], [0, 1]]
