"""
Exact linear algebra over the rationals.

Vectors are sparse dicts ``key -> Fraction`` with orderable keys.  The
``Echelon`` class keeps a fully reduced row-echelon basis so membership and
projection onto a complement are a single pass.
"""

import heapq
from fractions import Fraction


def vec_add(acc, vec, scale=1):
    """acc += scale * vec, in place; zero entries are dropped."""
    if not scale:
        return acc
    for k, c in vec.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


def vec_scale(vec, scale):
    if not scale:
        return {}
    return {k: scale * c for k, c in vec.items()}


class Echelon:
    """Reduced row-echelon basis of a subspace of sparse vectors.

    Every stored row has coefficient 1 at its pivot and no other row has a
    nonzero entry at that pivot.  The pivot of a new row is its smallest key,
    so the basis is independent of insertion scheduling for a fixed order of
    insertions.
    """

    def __init__(self, rows=()):
        self.rows = {}
        for r in rows:
            self.add(r)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        out = dict(vec)
        for k in [k for k in vec if k in self.rows]:
            c = out.get(k)
            if c:
                vec_add(out, self.rows[k], -c)
        return out

    def add(self, vec):
        """Insert ``vec``; return the new normalized row or None if dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {k: c * inv for k, c in r.items()}
        for row in self.rows.values():
            c = row.get(p)
            if c:
                vec_add(row, r, -c)
        self.rows[p] = r
        return r

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def pivots(self):
        return set(self.rows)


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly; matrix is a list of rows.

    Returns one solution (free variables set to zero) or None when the
    system is inconsistent.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivcols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivcols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivcols):
        x[c] = aug[i][n]
    return x


def rank(rows):
    return len(Echelon({i: Fraction(x) for i, x in enumerate(row) if x} for row in rows))


def inverse(matrix):
    n = len(matrix)
    cols = [solve(matrix, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    if any(c is None for c in cols):
        raise ZeroDivisionError("singular matrix")
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def nullspace(rows, ncols):
    """Basis of {x : rows @ x = 0}; each vector has a 1 at its free column."""
    ech = Echelon()
    for row in rows:
        vec = {j: Fraction(c) for j, c in enumerate(row) if c}
        if vec:
            ech.add(vec)
    out = []
    for f in range(ncols):
        if f in ech.rows:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                x[p] = -c
        out.append(x)
    return out


class LazyEchelon:
    """Row-echelon basis without back substitution.

    Rows are normalized at their pivot (smallest key) and only contain keys
    at or after it, so reduction walks pivots in increasing order.  The
    result of ``reduce`` has no pivot keys, exactly as with ``Echelon``.
    """

    def __init__(self, rows=()):
        self.rows = {}
        for r in rows:
            self.add(r)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        rows = self.rows
        out = dict(vec)
        heap = [k for k in out if k in rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = out.get(k)
            if not c:
                continue
            for j, v in rows[k].items():
                x = out.get(j, 0) - c * v
                if x:
                    if j not in out and j in rows:
                        heapq.heappush(heap, j)
                    out[j] = x
                else:
                    del out[j]
        return out

    def add(self, vec):
        r = self.reduce(vec)
        if not r:
            return None
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {k: c * inv for k, c in r.items()}
        self.rows[p] = r
        return r

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def pivots(self):
        return set(self.rows)
