"""Certified high-precision reals: a thin layer over mpmath interval arithmetic.

Every numeric quantity in the library is an mpmath `iv` interval, so error
bounds are carried by construction.  Helpers here handle Fraction
conversion, width accounting, certified root enclosures for integer
polynomials, and the AGM.

mpmath's interval context is global; `working_precision` scopes a guard
precision for a computation and restores the previous one.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

from mpmath import iv, mp, mpf

GUARD_DIGITS = 12


@contextmanager
def working_precision(dps: int):
    old_iv, old_mp = iv.dps, mp.dps
    iv.dps = dps + GUARD_DIGITS
    mp.dps = dps + GUARD_DIGITS
    try:
        yield
    finally:
        iv.dps = old_iv
        mp.dps = old_mp


def ival(x):
    """Exact interval from an int or Fraction (rounded outward if needed)."""
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    return iv.mpf(x)


def width(x) -> mpf:
    return mpf(x.delta.b)


def midpoint(x) -> mpf:
    return mpf(x.mid.a)


def contains(x, q) -> bool:
    return ival(q) in x


def certified_error(x) -> mpf:
    """Radius bound: half the interval width, rounded up a little."""
    return mpf(x.delta.b) / 2


def assert_width_below(x, bound, what=""):
    if not width(x) <= mpf(bound):
        raise PrecisionError(
            f"{what or 'interval'} width {width(x)} exceeds {bound}")


class PrecisionError(ArithmeticError):
    pass


def agm(a, b, max_iter=200):
    """Arithmetic-geometric mean of two positive intervals."""
    for _ in range(max_iter):
        a, b = (a + b) / 2, iv.sqrt(a * b)
        hull = _hull(a, b)
        if mpf(hull.delta.b) <= mpf(2) ** (5 - iv.prec) * abs(mpf(hull.mid.a)):
            return hull
    return _hull(a, b)


def _hull(a, b):
    lo = a.a if a.a < b.a else b.a
    hi = a.b if a.b > b.b else b.b
    return iv.mpf([mpf(lo), mpf(hi)])


def real_root_enclosure(int_coeffs, lo: Fraction, hi: Fraction, bits: int):
    """Certified enclosure of the root of an integer polynomial in [lo, hi].

    Requires a sign change between the exact rational endpoints; bisects
    with exact arithmetic until the width is below 2^-bits, then returns
    an iv interval containing the root.
    """
    def ev(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(int_coeffs):
            acc = acc * x + c
        return acc

    if lo == hi:
        return ival(lo)
    flo, fhi = ev(lo), ev(hi)
    if flo == 0:
        return ival(lo)
    if fhi == 0:
        return ival(hi)
    if (flo > 0) == (fhi > 0):
        raise ValueError("no sign change on the given interval")
    target = Fraction(1, 2 ** bits)
    while hi - lo > target:
        mid = (lo + hi) / 2
        fm = ev(mid)
        if fm == 0:
            eps = target / 4
            lo, hi = mid - eps, mid + eps
            break
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return _hull(ival(lo), ival(hi))


def isolate_real_roots_cubic(int_coeffs):
    """Isolating rational intervals for the real roots of an integer cubic.

    Dumb and safe: scan unit steps within the Cauchy bound, split on sign
    changes, refine multiple-root-free assumption by checking the
    discriminant upstream.
    """
    assert len(int_coeffs) == 4 and int_coeffs[3] != 0
    bound = 1 + max(abs(Fraction(c, int_coeffs[3])) for c in int_coeffs[:3])
    bound = int(bound) + 1

    def ev(x):
        acc = 0
        for c in reversed(int_coeffs):
            acc = acc * x + c
        return acc

    roots = []
    prev_x, prev_v = -bound, ev(Fraction(-bound))
    x = -bound
    while x < bound:
        x += Fraction(1, 2)
        v = ev(x)
        if v == 0:
            roots.append((x, x))
            prev_x, prev_v = x + Fraction(1, 1000000), ev(x + Fraction(1, 1000000))
            continue
        if prev_v != 0 and (v > 0) != (prev_v > 0):
            roots.append((prev_x, x))
        prev_x, prev_v = x, v
    return roots
