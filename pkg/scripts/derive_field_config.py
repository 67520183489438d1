"""Regenerate configs/field_x3m4x1.cfg from scratch.

The splitting field of x^3 - 4x + 1 is K = Q(theta, sqrt(229)).  Its ring
of integers turns out to be Z[theta, theta2] where theta2 is a second root
of the cubic, expressed inside K as

    theta2 = (-theta + sqrt(229)/f'(theta)) / 2.

This script verifies that claim exactly (discriminant 229^3, ring closure),
searches a small box for a Z[S3]-module generator alpha0 of O_K (resolvent
matrix determinant +-1), and writes the config file consumed by
ebsd.sextic_field.  Everything here is exact rational arithmetic.

Run:  python scripts/derive_field_config.py [out.cfg]
"""

from fractions import Fraction
from itertools import product
import sys

D = 229

# K = Q[x, y] / (x^3 - 4x + 1, y^2 - 229), power-product basis
# {x^i y^j : 0 <= i < 3, 0 <= j < 2}; element = tuple of 6 Fractions,
# index i + 3*j.


def kmul(u, v):
    acc = [Fraction(0)] * 12
    for i1 in range(3):
        for j1 in range(2):
            a = u[i1 + 3 * j1]
            if not a:
                continue
            for i2 in range(3):
                for j2 in range(2):
                    b = v[i2 + 3 * j2]
                    if not b:
                        continue
                    c = a * b
                    i, j = i1 + i2, j1 + j2
                    if j >= 2:
                        j -= 2
                        c *= D
                    # x^3 = 4x - 1, x^4 = 4x^2 - x
                    if i < 3:
                        acc[i + 3 * j] += c
                    elif i == 3:
                        acc[1 + 3 * j] += 4 * c
                        acc[0 + 3 * j] -= c
                    else:
                        acc[2 + 3 * j] += 4 * c
                        acc[1 + 3 * j] -= c
    return tuple(acc[:6])


def kadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def kscale(u, c):
    return tuple(c * a for a in u)


def unit(i):
    v = [Fraction(0)] * 6
    v[i] = Fraction(1)
    return tuple(v)


def to_coords(x, basis):
    """Coordinates of x in the given basis (rows in power-product coords)."""
    m = [list(b) + [x[k]] for k, b in enumerate(zip(*basis))]
    piv, row = [], 0
    for col in range(6):
        p = next((r for r in range(row, 6) if m[r][col] != 0), None)
        if p is None:
            continue
        m[row], m[p] = m[p], m[row]
        pv = m[row][col]
        m[row] = [a / pv for a in m[row]]
        for r in range(6):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        piv.append(col)
        row += 1
    if row < 6:
        raise ValueError("singular basis")
    sol = [Fraction(0)] * 6
    for r, col in enumerate(piv):
        sol[col] = m[r][6]
    return sol


def det(m):
    m = [row[:] for row in m]
    d = Fraction(1)
    for col in range(len(m)):
        p = next((r for r in range(col, len(m)) if m[r][col] != 0), None)
        if p is None:
            return Fraction(0)
        if p != col:
            m[col], m[p] = m[p], m[col]
            d = -d
        d *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return d


def mult_trace(u, basis):
    cols = [to_coords(kmul(u, b), basis) for b in basis]
    return sum(cols[i][i] for i in range(6))


def disc(basis):
    g = [[mult_trace(kmul(bi, bj), basis) for bj in basis] for bi in basis]
    return det(g)


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "configs/field_x3m4x1.cfg"
    one, theta, sqrtD = unit(0), unit(1), unit(3)
    th2 = kmul(theta, theta)

    # f'(theta)^(-1): solve (3 theta^2 - 4) x = 1 in Q(theta)
    fp = kadd(kscale(th2, 3), kscale(one, -4))
    cols = [to_coords(kmul(fp, b), [unit(k) for k in range(6)])
            for b in (one, theta, th2)]
    M = [[cols[j][i] for j in range(3)] for i in range(3)]
    rhs = [Fraction(1), Fraction(0), Fraction(0)]
    for c in range(3):
        p = next(r for r in range(c, 3) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        rhs[c], rhs[p] = rhs[p], rhs[c]
        pv = M[c][c]
        M[c] = [a / pv for a in M[c]]
        rhs[c] /= pv
        for r in range(3):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
                rhs[r] -= f * rhs[c]
    fpinv = kadd(kadd(kscale(one, rhs[0]), kscale(theta, rhs[1])),
                 kscale(th2, rhs[2]))
    assert kmul(fp, fpinv) == one

    theta2 = kscale(kadd(kscale(theta, -1), kmul(sqrtD, fpinv)), Fraction(1, 2))
    f_at = kadd(kadd(kmul(kmul(theta2, theta2), theta2), kscale(theta2, -4)), one)
    assert f_at == (Fraction(0),) * 6, "theta2 is not a root"

    basis = [one, theta, th2, theta2, kmul(theta, theta2), kmul(th2, theta2)]
    d = disc(basis)
    assert d == D ** 3, f"disc(Z[theta, theta2]) = {d}, not 229^3"
    for bi in basis:
        for bj in basis:
            assert all(c.denominator == 1 for c in to_coords(kmul(bi, bj), basis))
    print("maximal order verified: disc = 229^3, ring closed")

    # Galois action: s(theta) = theta2 (even), r(sqrtD) = -sqrtD (odd).
    def hom(img_t, img_s):
        pows = [one, img_t, kmul(img_t, img_t)]

        def f(x):
            acc = (Fraction(0),) * 6
            for i in range(3):
                for j in range(2):
                    c = x[i + 3 * j]
                    if not c:
                        continue
                    term = pows[i] if not j else kmul(pows[i], img_s)
                    acc = kadd(acc, kscale(term, c))
            return acc
        return f

    s = hom(theta2, sqrtD)
    r = hom(theta, kscale(sqrtD, -1))
    group = [lambda x: x, s, lambda x: s(s(x)),
             r, lambda x: r(s(x)), lambda x: r(s(s(x)))]

    def resolvent_det(alpha):
        return det([to_coords(g(alpha), basis) for g in group])

    alpha0 = None
    for coeffs in product([0, 1, -1, 2, -2], repeat=6):
        if all(c == 0 for c in coeffs):
            continue
        alpha = (Fraction(0),) * 6
        for c, b in zip(coeffs, basis):
            if c:
                alpha = kadd(alpha, kscale(b, c))
        if abs(resolvent_det(alpha)) == 1:
            alpha0 = coeffs
            break
    assert alpha0 is not None, "no Z[S3]-generator in the search box"
    print("alpha0 coefficients in integral basis:", alpha0)

    lines = ["# splitting field of x^3 - 4x + 1 over Q (S3, totally real)",
             "cubic = 1 0 -4 1",
             "disc = 229"]
    for i, b in enumerate(basis):
        lines.append("basis.%d = %s" % (i, " ".join(str(c) for c in b)))
    lines.append("alpha0 = %s" % " ".join(str(c) for c in alpha0))
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote", out)


if __name__ == "__main__":
    main()
