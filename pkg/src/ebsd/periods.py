"""Exact period expressions q * O+^a * (O-/i)^b * sqrt(D)^c and their
recognition from certified high-precision reals.

The exponent box is small by design: nothing in this verification ever
needs |a|, |b| > 2 or c outside {0, 1}.  sqrt(D)^2 folds into the rational
part, so c in {0, 1} is a canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, mpf

from .reals import ival, width, midpoint

EXPONENT_BOX = 2


@dataclass(frozen=True)
class PeriodValue:
    q: Fraction
    a: int = 0          # exponent of Omega_+
    b: int = 0          # exponent of Omega_-/i
    c: int = 0          # exponent of sqrt(D), canonical in {0, 1}
    D: int = 1

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("period values are nonzero by construction")
        if self.c not in (0, 1):
            raise ValueError("canonical form requires c in {0, 1}")
        if self.D <= 0:
            raise ValueError("D must be a positive integer")

    def __mul__(self, other: "PeriodValue") -> "PeriodValue":
        assert self.D == other.D or self.c == 0 or other.c == 0
        D = self.D if self.c else other.D
        q = self.q * other.q
        c = self.c + other.c
        if c == 2:
            q *= D
            c = 0
        return PeriodValue(q, self.a + other.a, self.b + other.b, c, D)

    def inverse(self) -> "PeriodValue":
        if self.c == 0:
            return PeriodValue(1 / self.q, -self.a, -self.b, 0, self.D)
        # 1/sqrt(D) = sqrt(D)/D
        return PeriodValue(1 / (self.q * self.D), -self.a, -self.b, 1, self.D)

    def evaluate(self, omega_plus, omega_minus_over_i=None, sqrtD=None):
        """Interval value given interval basis data."""
        acc = ival(self.q)
        if self.a:
            acc *= omega_plus ** self.a
        if self.b:
            assert omega_minus_over_i is not None
            acc *= omega_minus_over_i ** self.b
        if self.c:
            acc *= sqrtD if sqrtD is not None else iv.sqrt(ival(self.D))
        return acc

    def __str__(self):
        parts = [str(self.q)]
        if self.a:
            parts.append(f"O+^{self.a}" if self.a != 1 else "O+")
        if self.b:
            parts.append(f"(O-/i)^{self.b}" if self.b != 1 else "O-/i")
        if self.c:
            parts.append(f"sqrt({self.D})")
        return " * ".join(parts)


class RecognitionError(ValueError):
    pass


class AmbiguousRecognition(RecognitionError):
    def __init__(self, candidates):
        self.candidates = candidates
        super().__init__(f"ambiguous recognition: {candidates}")


NOT_FOUND = None


def _rational_candidates(x_mid, height_bound, tol):
    """Continued-fraction convergents of x_mid with bounded height."""
    out = []
    target = Fraction(x_mid)
    # convergents
    a, b = target.numerator, target.denominator
    p0, q0, p1, q1 = 0, 1, 1, 0
    while b:
        k, rem = divmod(a, b)
        p0, q0, p1, q1 = p1, q1, k * p1 + p0, k * q1 + q0
        a, b = b, rem
        if q1 > height_bound and abs(p1) > height_bound:
            break
        q = Fraction(p1, q1)
        if abs(q - target) <= tol:
            out.append(q)
    return out


def recognize_period_value(x, omega_plus, omega_minus_over_i=None, D: int = 1,
                           height_bound: int = 10 ** 6, precision_digits: int = 50):
    """Recognize interval x as q * O+^a * (O-/i)^b * sqrt(D)^c, or NOT_FOUND.

    Search box: |a|, |b| <= 2, c in {0, 1}; q rational of height <=
    height_bound.  Tolerance is 10^(10 - precision_digits); two hits
    inside tolerance raise AmbiguousRecognition.
    """
    tol = mpf(10) ** (10 - precision_digits)
    if abs(midpoint(x)) <= tol or width(x) > tol:
        return NOT_FOUND
    sqrtD = iv.sqrt(ival(D)) if D > 1 else ival(1)
    candidates = []
    b_range = [0] if omega_minus_over_i is None else range(-EXPONENT_BOX, EXPONENT_BOX + 1)
    for a in range(-EXPONENT_BOX, EXPONENT_BOX + 1):
        for b in b_range:
            for c in (0, 1) if D > 1 else (0,):
                unit = omega_plus ** a if a else ival(1)
                if b:
                    unit *= omega_minus_over_i ** b
                if c:
                    unit *= sqrtD
                ratio = x / unit
                for q in _rational_candidates(midpoint(ratio), height_bound,
                                              Fraction(10) ** (10 - precision_digits)):
                    if q == 0:
                        continue
                    pv = PeriodValue(q, a, b, c, D)
                    val = pv.evaluate(omega_plus, omega_minus_over_i, sqrtD)
                    if abs(midpoint(val - x)) <= tol:
                        candidates.append(pv)
    # dedupe identical tuples
    seen = []
    for pv in candidates:
        if pv not in seen:
            seen.append(pv)
    if not seen:
        return NOT_FOUND
    if len(seen) > 1:
        raise AmbiguousRecognition(seen)
    return seen[0]
