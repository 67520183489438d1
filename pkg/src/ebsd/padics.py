"""l-adic valuations and absolute values on Q."""

from __future__ import annotations

from fractions import Fraction

INFINITY = float("inf")


def valuation_int(n: int, l: int) -> int:
    assert l >= 2
    if n == 0:
        raise ValueError("valuation of 0 is infinite; handle separately")
    v = 0
    n = abs(n)
    while n % l == 0:
        n //= l
        v += 1
    return v


def l_adic_valuation(x, l: int):
    """v with x = l^v * (l-adic unit); +inf for x = 0."""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return valuation_int(x.numerator, l) - valuation_int(x.denominator, l)


def l_adic_abs(x, l: int) -> Fraction:
    """|x|_l = l^(-v_l(x)) as an exact rational; |0|_l = 0."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    v = l_adic_valuation(x, l)
    return Fraction(1, l ** v) if v >= 0 else Fraction(l ** (-v))


def is_l_unit(x, l: int) -> bool:
    return l_adic_valuation(x, l) == 0


def is_l_integral(x, l: int) -> bool:
    x = Fraction(x)
    return x == 0 or l_adic_valuation(x, l) >= 0


def unit_part(x, l: int) -> Fraction:
    """x / l^v_l(x)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no unit part")
    v = l_adic_valuation(x, l)
    return x / Fraction(l) ** v
