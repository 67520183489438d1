"""Weierstrass curves over Q: reduction data, point counts over finite
fields, traces of Frobenius, real/imaginary periods, torsion bounds.

Point counting is naive (largest field needed is F_{11^3}); a_p values are
cached on disk because the Dirichlet-coefficient cutoffs reuse them across
runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path

from mpmath import iv, mpf

from .ffield import finite_field, require_prime
from .padics import l_adic_valuation
from .reals import (agm, ival, isolate_real_roots_cubic, real_root_enclosure,
                    working_precision)

POINT_COUNT_BUDGET = 10 ** 7


class ReductionKind(Enum):
    GOOD = "good"
    SPLIT_MULTIPLICATIVE = "split"
    NONSPLIT_MULTIPLICATIVE = "nonsplit"
    ADDITIVE = "additive"


class LatticeShape(Enum):
    RECTANGULAR = "rectangular"
    NON_RECTANGULAR = "non_rectangular"


@dataclass(frozen=True)
class ReductionInfo:
    p: int
    kind: ReductionKind
    tamagawa: int


@dataclass(frozen=True)
class PeriodPair:
    omega_plus: object          # iv interval, > 0
    omega_minus_over_i: object  # iv interval, > 0
    shape: LatticeShape


class CurveConfigError(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    conductor: int
    label: str = ""
    bad_reduction: dict = field(default_factory=dict)  # p -> ReductionInfo

    @property
    def b2(self):
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self):
        return (self.a1 ** 2 * self.a6 + 4 * self.a2 * self.a6
                - self.a1 * self.a3 * self.a4 + self.a2 * self.a3 ** 2
                - self.a4 ** 2)

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6

    def validate(self):
        if self.discriminant == 0:
            raise CurveConfigError("singular Weierstrass equation")
        bad = sorted(self.bad_reduction)
        n = self.conductor
        for p in bad:
            if n % p:
                raise CurveConfigError(f"reduction data at good prime {p}")
        p_of_n = _prime_factors(n)
        for p in p_of_n:
            if p not in self.bad_reduction:
                raise CurveConfigError(f"missing reduction data at {p} | conductor")
            if self.discriminant % p:
                raise CurveConfigError(f"{p} divides conductor but not disc")
        for p, info in self.bad_reduction.items():
            if info.kind == ReductionKind.GOOD:
                raise CurveConfigError("bad_reduction entry marked good")
            if info.kind == ReductionKind.SPLIT_MULTIPLICATIVE:
                vp = l_adic_valuation(self.discriminant, p)
                if info.tamagawa != vp:
                    raise CurveConfigError(
                        f"split multiplicative c_{p} = {info.tamagawa} != v_p(disc) = {vp}")
        return self

    def reduction(self, p: int) -> ReductionInfo:
        require_prime(p)
        if p in self.bad_reduction:
            return self.bad_reduction[p]
        if self.conductor % p == 0:
            raise CurveConfigError(f"no reduction data at bad prime {p}")
        return ReductionInfo(p, ReductionKind.GOOD, 1)

    def rhs(self, x):
        return x ** 3 + self.a2 * x ** 2 + self.a4 * x + self.a6

    def y_line(self, x):
        return self.a1 * x + self.a3


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# config file I/O (key = value per line)

def parse_curve_config(text: str) -> WeierstrassCurve:
    entries = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CurveConfigError(f"bad config line: {line!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        entries[key] = val
    try:
        a1, a2, a3, a4, a6 = (int(s) for s in entries["a1,a2,a3,a4,a6"].split(","))
        conductor = int(entries["conductor"])
    except KeyError as e:
        raise CurveConfigError(f"missing key {e}") from None
    label = entries.get("label", "")
    bad = {}
    kinds = {"split": ReductionKind.SPLIT_MULTIPLICATIVE,
             "nonsplit": ReductionKind.NONSPLIT_MULTIPLICATIVE,
             "additive": ReductionKind.ADDITIVE}
    for key, val in entries.items():
        if key.startswith("reduction."):
            p = int(key.split(".", 1)[1])
            cp = int(entries.get(f"tamagawa.{p}", "1"))
            if val not in kinds:
                raise CurveConfigError(f"unknown reduction kind {val!r}")
            bad[p] = ReductionInfo(p, kinds[val], cp)
    return WeierstrassCurve(a1, a2, a3, a4, a6, conductor, label, bad).validate()


def load_curve(path) -> WeierstrassCurve:
    return parse_curve_config(Path(path).read_text())


# ---------------------------------------------------------------------------
# point counting

def count_points(curve: WeierstrassCurve, p: int, k: int = 1) -> int:
    """|E_ns(F_{p^k})|, the nonsingular locus, by direct enumeration."""
    require_prime(p)
    q = p ** k
    if q > POINT_COUNT_BUDGET:
        raise ResourceWarning(f"field size {q} exceeds the counting budget")
    F = finite_field(p, k)
    a1, a2, a3, a4, a6 = (F.from_int(a) for a in
                          (curve.a1, curve.a2, curve.a3, curve.a4, curve.a6))
    count = 1  # point at infinity, always nonsingular
    singular = _singular_points(curve, p)
    if p == 2:
        for x in F.elements():
            rhs = x * x * x + a2 * x * x + a4 * x + a6
            c = a1 * x + a3
            if c.is_zero():
                count += 1  # y -> y^2 is a bijection
            else:
                u = rhs / (c * c)
                count += 2 if u.trace_to_prime_field() == 0 else 0
    else:
        inv4 = F.from_int(4).inverse()
        for x in F.elements():
            rhs = x * x * x + a2 * x * x + a4 * x + a6
            c = a1 * x + a3
            # y^2 + c y = rhs; complete the square
            disc = rhs + c * c * inv4
            if disc.is_zero():
                count += 1
            elif disc.is_square():
                count += 2
    for (x0, y0) in singular:
        count -= 1  # the node/cusp is rational over F_p, hence over F_{p^k}
    return count


def _singular_points(curve: WeierstrassCurve, p: int):
    """Singular points of the reduction mod p (subset of F_p^2)."""
    if curve.discriminant % p:
        return []
    out = []
    for x in range(p):
        for y in range(p):
            fxy = (y * y + curve.a1 * x * y + curve.a3 * y
                   - curve.rhs(x)) % p
            if fxy:
                continue
            fx = (curve.a1 * y - (3 * x * x + 2 * curve.a2 * x + curve.a4)) % p
            fy = (2 * y + curve.a1 * x + curve.a3) % p
            if fx == 0 and fy == 0:
                out.append((x, y))
    return out


# ---------------------------------------------------------------------------
# traces of Frobenius with a persistent cache

def cache_dir() -> Path:
    root = os.environ.get("EBSD_CACHE_DIR")
    if root:
        return Path(root)
    return Path.home() / ".cache" / "ebsd"


class ApCache:
    """Append-only a_p store, one file per curve label: lines 'p a_p'."""

    def __init__(self, curve: WeierstrassCurve, path: Path | None = None):
        self.curve = curve
        name = curve.label or f"curve_{curve.conductor}"
        self.path = path or (cache_dir() / f"ap_{name}.txt")
        self._table: dict[int, int] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    ps, aps = line.split()
                    self._table[int(ps)] = int(aps)

    def get(self, p: int):
        return self._table.get(p)

    def put_many(self, items):
        fresh = {p: ap for p, ap in items if p not in self._table}
        if not fresh:
            return
        self._table.update(fresh)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"{p} {self._table[p]}" for p in sorted(self._table)]
        self.path.write_text("\n".join(lines) + "\n")


def trace_ap(curve: WeierstrassCurve, p: int, cache: ApCache | None = None) -> int:
    """a_p: good p via counting, bad p via the reduction type convention."""
    require_prime(p)
    red = curve.reduction(p)
    if red.kind == ReductionKind.SPLIT_MULTIPLICATIVE:
        return 1
    if red.kind == ReductionKind.NONSPLIT_MULTIPLICATIVE:
        return -1
    if red.kind == ReductionKind.ADDITIVE:
        return 0
    if cache is not None:
        hit = cache.get(p)
        if hit is not None:
            return hit
    ap = p + 1 - count_points(curve, p, 1)
    if cache is not None:
        cache.put_many([(p, ap)])
    return ap


def traces_up_to(curve: WeierstrassCurve, bound: int,
                 cache: ApCache | None = None) -> dict[int, int]:
    """a_p for all primes p <= bound (batch, cache-aware)."""
    out = {}
    new = []
    for p in _primes_up_to(bound):
        red = curve.reduction(p)
        if red.kind != ReductionKind.GOOD:
            out[p] = trace_ap(curve, p)
            continue
        hit = cache.get(p) if cache is not None else None
        if hit is None:
            hit = p + 1 - (_count_affine_fast(curve, p) + 1)
            new.append((p, hit))
        out[p] = hit
    if cache is not None and new:
        cache.put_many(new)
    return out


def _count_affine_fast(curve: WeierstrassCurve, p: int) -> int:
    """Affine point count of good reduction mod p via a squares table."""
    if p == 2:
        n = 0
        for x in range(2):
            for y in range(2):
                if (y * y + curve.a1 * x * y + curve.a3 * y
                        - curve.rhs(x)) % 2 == 0:
                    n += 1
        return n
    squares = bytearray(p)
    for t in range((p + 1) // 2):
        squares[t * t % p] = 1
    inv4 = pow(4, -1, p)
    c_a1, c_a2, c_a3, c_a4, c_a6 = (curve.a1 % p, curve.a2 % p, curve.a3 % p,
                                    curve.a4 % p, curve.a6 % p)
    n = 0
    for x in range(p):
        rhs = (x * x * x + c_a2 * x * x + c_a4 * x + c_a6) % p
        c = (c_a1 * x + c_a3) % p
        disc = (rhs + c * c * inv4) % p
        if disc == 0:
            n += 1
        elif squares[disc]:
            n += 2
    return n


def _primes_up_to(n: int):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = b"\x00" * len(sieve[i * i::i])
    return [i for i in range(2, n + 1) if sieve[i]]


def frobenius_power_sum(ap: int, p: int, k: int) -> int:
    """alpha^k + beta^k with alpha+beta = a_p, alpha*beta = p."""
    s_prev, s = 2, ap
    for _ in range(k - 1):
        s_prev, s = s, ap * s - p * s_prev
    return s if k >= 1 else 2


def count_from_ap(ap: int, p: int, k: int) -> int:
    return p ** k + 1 - frobenius_power_sum(ap, p, k)


# ---------------------------------------------------------------------------
# periods

class AgmError(ArithmeticError):
    pass


def real_periods(curve: WeierstrassCurve, precision: int = 50) -> PeriodPair:
    """Omega_+ and Omega_-/i by AGM on the two-division values.

    For disc < 0 (one real component) the periods come from the complex
    AGM reduction: with e1 the real root of 4x^3 + b2 x^2 + 2 b4 x + b6 and
    e2 = pbar + i q the complex pair, R = |e1 - e2|,

        Omega_+  = pi / agm(sqrt(R), sqrt((R + e1 - pbar)/2))
        Omega_-/i = pi / agm(sqrt(R), sqrt((R - e1 + pbar)/2)).

    For disc > 0 (two components, rectangular lattice), with real roots
    e1 > e2 > e3:

        Omega_+  = 2 pi / agm(sqrt(e1 - e3), sqrt(e1 - e2))
        Omega_-/i = 2 pi / agm(sqrt(e1 - e3), sqrt(e2 - e3)).
    """
    if precision > 300:
        raise ValueError("precision capped at 300 digits")
    with working_precision(precision + 10):
        bits = int((precision + 10) * 3.33) + 20
        b2, b4, b6 = curve.b2, curve.b4, curve.b6
        cubic = [b6, 2 * b4, b2, 4]
        isolated = isolate_real_roots_cubic(cubic)
        if curve.discriminant > 0:
            if len(isolated) != 3:
                raise AgmError("disc > 0 but fewer than 3 real roots isolated")
            roots = sorted((real_root_enclosure(cubic, lo, hi, bits)
                            for lo, hi in isolated), key=lambda r: mpf(r.a))
            e3, e2, e1 = roots
            om_p = 2 * iv.pi / agm(iv.sqrt(e1 - e3), iv.sqrt(e1 - e2))
            om_m = 2 * iv.pi / agm(iv.sqrt(e1 - e3), iv.sqrt(e2 - e3))
            shape = LatticeShape.RECTANGULAR
        else:
            if len(isolated) != 1:
                raise AgmError("disc < 0 but did not isolate a single real root")
            lo, hi = isolated[0]
            e1 = real_root_enclosure(cubic, lo, hi, bits)
            # remaining quadratic factor: sum of roots = -b2/4 - e1
            pbar = (ival(Fraction(-b2, 4)) - e1) / 2
            # product of all roots = -b6/4
            mod2 = ival(Fraction(-b6, 4)) / e1  # = pbar^2 + q^2
            m = e1 - pbar
            R = iv.sqrt((m * m) + (mod2 - pbar * pbar))
            om_p = iv.pi / agm(iv.sqrt(R), iv.sqrt((R + m) / 2))
            om_m = iv.pi / agm(iv.sqrt(R), iv.sqrt((R - m) / 2))
            shape = LatticeShape.NON_RECTANGULAR
        if not (om_p > 0 and om_m > 0):
            raise AgmError("period intervals not positive")
        return PeriodPair(om_p, om_m, shape)


# ---------------------------------------------------------------------------
# torsion

def torsion_bound(residue_counts) -> int:
    """gcd-style bound on |E(K)_tors| from nonsingular residue counts."""
    counts = list(residue_counts)
    if not counts:
        raise ValueError("need at least one residue count")
    from math import gcd
    g = 0
    for c in counts:
        g = gcd(g, c)
    return g


# rational points, used only to pin |E(Q)_tors| exactly

INF = None


def _add_points(curve, P, Q):
    a1, a2, a3, a4, a6 = (Fraction(a) for a in
                          (curve.a1, curve.a2, curve.a3, curve.a4, curve.a6))
    if P is INF:
        return Q
    if Q is INF:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and y1 + y2 + a1 * x2 + a3 == 0:
        return INF
    if x1 == x2:
        lam = (3 * x1 ** 2 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam ** 2 + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def point_order(curve, P, max_order=16):
    acc = P
    for n in range(1, max_order + 1):
        if acc is INF:
            return n
        acc = _add_points(curve, acc, P)
    return None


def rational_torsion_order(curve: WeierstrassCurve, x_range=100) -> int:
    """|E(Q)_tors|: gcd bound over good residue counts, then exhibit it.

    Searches small integral x for torsion points; certified only when the
    exhibited subgroup order meets the residue-count bound (true for 11A1,
    whose torsion is integral in this model).
    """
    from math import gcd, isqrt, lcm
    bound = 0
    tested = 0
    for p in _primes_up_to(200):
        if p < 3 or curve.conductor % p == 0:
            continue
        bound = gcd(bound, count_points(curve, p, 1))
        tested += 1
        if tested >= 4:
            break
    found = 1
    for x in range(-x_range, x_range + 1):
        # y^2 + (a1 x + a3) y - rhs = 0
        c = curve.a1 * x + curve.a3
        disc = c * c + 4 * curve.rhs(x)
        if disc < 0:
            continue
        r = isqrt(disc)
        if r * r != disc:
            continue
        for sign in (1, -1):
            if (sign * r - c) % 2:
                continue
            y = Fraction(sign * r - c, 2)
            n = point_order(curve, (Fraction(x), y))
            if n is not None:
                found = lcm(found, n)
    if found != bound:
        raise ArithmeticError(
            f"torsion not certified: exhibited {found}, residue bound {bound}")
    return found
