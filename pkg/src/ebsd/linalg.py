"""Small exact linear algebra over Fraction: solve, rref, kernel, det.

Dense lists of lists; everything stays rational.  Sizes here are tiny
(6x6 group rings, modular-symbol spaces of dimension < 50), so no attempt
at sparsity or fraction-free pivoting.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def identity(n):
    return [[Fraction(i == j) for j in range(n)] for i in range(n)]


def rref(mat):
    """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in mat]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    piv = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
        if r == rows:
            break
    return m, piv


def kernel(mat):
    """Basis of the right kernel (list of column vectors)."""
    if not mat:
        return []
    cols = len(mat[0])
    m, piv = rref(mat)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """One solution of mat * x = rhs, or None if inconsistent."""
    rows = [list(r) + [b] for r, b in zip(mat, rhs)]
    m, piv = rref(rows)
    cols = len(mat[0])
    for r in range(len(m)):
        if all(m[r][c] == 0 for c in range(cols)) and m[r][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for r, c in enumerate(piv):
        if c == cols:
            return None
        x[c] = m[r][cols]
    return x


def det(mat):
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def invert(mat):
    n = len(mat)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(mat)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix not invertible")
    return [row[n:] for row in m[:n]]


def lattice_basis(vectors):
    """Z-basis (HNF-style) of the lattice spanned by rational vectors.

    Scales to a common denominator, row-reduces over Z, and returns
    primitive rational basis vectors of the same span-with-integrality.
    """
    vecs = [v for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return []
    den = 1
    for v in vecs:
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
    rows = [[int(x * den) for x in v] for v in vecs]
    rows = _hnf(rows)
    return [[Fraction(x, den) for x in row] for row in rows]


def _hnf(rows):
    """Row Hermite normal form over Z (nonzero rows returned)."""
    rows = [r[:] for r in rows]
    cols = len(rows[0])
    r = 0
    for c in range(cols):
        # gcd-reduce column c below row r
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            i = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[i] = rows[i], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c] != 0:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c] != 0:
                        done = False
            if done:
                break
        if any(rows[i][c] != 0 for i in range(r, len(rows))):
            if rows[r][c] < 0:
                rows[r] = [-a for a in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
            r += 1
            if r == len(rows):
                break
    return [row for row in rows[:r]]


def in_lattice(v, basis):
    """Whether rational vector v is a Z-combination of the basis rows."""
    if not basis:
        return all(x == 0 for x in v)
    coords = solve([[basis[j][i] for j in range(len(basis))]
                    for i in range(len(v))], list(v))
    return coords is not None and all(c.denominator == 1 for c in coords)


def primitive_in_lattice(direction, basis):
    """Primitive lattice vector on the line Q*direction, or None."""
    coords = solve([[basis[j][i] for j in range(len(basis))]
                    for i in range(len(direction))], list(direction))
    if coords is None:
        return None
    den = 1
    for c in coords:
        den = den * c.denominator // gcd(den, c.denominator)
    nums = [int(c * den) for c in coords]
    g = 0
    for x in nums:
        g = gcd(g, x)
    if g == 0:
        return None
    nums = [x // g for x in nums]
    out = [sum(Fraction(nums[j]) * basis[j][i] for j in range(len(basis)))
           for i in range(len(direction))]
    return out
