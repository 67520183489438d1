"""Dense rational polynomials, plus the power-sum calculus used to build
local factors of twisted L-functions.

A "reversed factor" here is the polynomial det(1 - F X) written as a
little-endian coefficient list [1, c1, ..., cd]; the roots of interest are
the inverse eigenvalues of F.  Products of such factors, evaluation at
rational X, substitution X -> X^k and the tensor construction
det(1 - (F (x) G) X) are all exact.
"""

from __future__ import annotations

from fractions import Fraction


def poly_trim(coeffs):
    c = [Fraction(x) for x in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return poly_trim(out)


def poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_substitute_power(coeffs, k: int):
    """P(X) -> P(X^k)."""
    out = [Fraction(0)] * ((len(coeffs) - 1) * k + 1)
    for i, c in enumerate(coeffs):
        out[i * k] = Fraction(c)
    return poly_trim(out)


def monic_cubic_discriminant(coeffs) -> Fraction:
    """Discriminant of a monic cubic x^3 + a x^2 + b x + c.

    coeffs is little-endian [c, b, a, 1].
    """
    c4 = poly_trim(coeffs)
    if len(c4) != 4 or c4[3] != 1:
        raise ValueError("expected a monic cubic")
    c, b, a = c4[0], c4[1], c4[2]
    return (18 * a * b * c - 4 * a ** 3 * c + a ** 2 * b ** 2
            - 4 * b ** 3 - 27 * c ** 2)


def power_sums_from_factor(factor, n: int):
    """First n power sums of the eigenvalues of F, from det(1 - F X).

    If det(1 - F X) = 1 + c1 X + ... + cd X^d then the elementary symmetric
    functions of the eigenvalues are e_k = (-1)^k c_k; Newton's identities
    give p_1..p_n.
    """
    d = len(factor) - 1
    e = [Fraction(0)] * (n + 1)
    for k in range(1, min(d, n) + 1):
        e[k] = (-1) ** k * Fraction(factor[k])
    p = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        acc = (-1) ** (k - 1) * k * e[k] if k <= d else Fraction(0)
        if k > d:
            acc = Fraction(0)
        for i in range(1, min(k - 1, d) + 1):
            acc += (-1) ** (i - 1) * e[i] * p[k - i]
        p[k] = acc
    return p[1:]


def factor_from_power_sums(psums, degree: int):
    """det(1 - F X) of degree <= `degree` from power sums p_1..p_degree."""
    e = [Fraction(1)] + [Fraction(0)] * degree
    for k in range(1, degree + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * psums[i - 1]
        e[k] = acc / k
    return poly_trim([(-1) ** k * e[k] for k in range(degree + 1)])


def tensor_factor(fa, fb):
    """det(1 - (F (x) G) X) from det(1 - F X) and det(1 - G X)."""
    da, db = len(fa) - 1, len(fb) - 1
    d = da * db
    if d == 0:
        return [Fraction(1)]
    pa = power_sums_from_factor(fa, d)
    pb = power_sums_from_factor(fb, d)
    return factor_from_power_sums([pa[k] * pb[k] for k in range(d)], d)
