"""Finite fields F_{p^k} and univariate factorization over prime fields.

Prime-field polynomials are little-endian lists of ints reduced mod p.
Extension fields fix an irreducible modulus once (deterministic search)
and represent elements as coefficient tuples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int):
    if not _is_probable_prime(p):
        raise ValueError(f"{p} is not prime")


# ---------------------------------------------------------------------------
# polynomials over F_p

def fp_trim(f):
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def fp_normalize(f, p):
    return fp_trim([c % p for c in f])


def fp_deg(f):
    return len(f) - 1 if f != [0] else -1


def fp_mul(f, g, p):
    if f == [0] or g == [0]:
        return [0]
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = (out[i + j] + a * b) % p
    return fp_trim(out)


def fp_divmod(f, g, p):
    f = f[:]
    dg = fp_deg(g)
    if dg < 0:
        raise ZeroDivisionError
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 1)
    while fp_deg(f) >= dg:
        shift = fp_deg(f) - dg
        coef = f[-1] * inv % p
        q[shift] = coef
        for i, b in enumerate(g):
            f[i + shift] = (f[i + shift] - coef * b) % p
        fp_trim(f)
    return fp_trim(q), f


def fp_mod(f, g, p):
    return fp_divmod(f, g, p)[1]


def fp_gcd(f, g, p):
    while g != [0]:
        f, g = g, fp_mod(f, g, p)
    if f != [0]:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def fp_powmod(f, e, mod, p):
    result = [1]
    base = fp_mod(f, mod, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, p), mod, p)
        base = fp_mod(fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def fp_monic(f, p):
    if f == [0]:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def fp_diff(f, p):
    return fp_trim([(i * c) % p for i, c in enumerate(f)][1:] or [0])


def fp_is_irreducible(f, p) -> bool:
    """Rabin test: x^{p^n} = x mod f, and no earlier collapse."""
    f = fp_monic(fp_normalize(f, p), p)
    n = fp_deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n):
        h = fp_powmod(h, p, f, p)
    if fp_mod([c - b for c, b in zip_pad(h, x)], f, p) != [0]:
        return False
    for q in _prime_divisors(n):
        h = x
        for _ in range(n // q):
            h = fp_powmod(h, p, f, p)
        g = fp_gcd(fp_normalize([c - b for c, b in zip_pad(h, x)], p), f, p)
        if fp_deg(g) != 0:
            return False
    return True


def zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _prime_divisors(n):
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


def poly_factor_mod_p(f, p):
    """Factor f over F_p as [(irreducible monic factor, multiplicity), ...].

    Cantor-Zassenhaus; deterministic output ordering (by degree, then
    lexicographic coefficients).  The leading unit is discarded.
    """
    require_prime(p)
    f = fp_normalize(list(f), p)
    if f == [0]:
        raise ValueError("cannot factor the zero polynomial")
    f = fp_monic(f, p)
    if fp_deg(f) == 0:
        return []
    factors: dict[tuple, int] = {}
    _factor_rec(f, p, factors, 1)
    items = [(list(k), m) for k, m in factors.items()]
    items.sort(key=lambda t: (fp_deg(t[0]), t[0][::-1]))
    return items


def _factor_rec(f, p, factors, mult):
    if fp_deg(f) == 0:
        return
    if fp_deg(f) == 1 or fp_is_irreducible(f, p):
        key = tuple(f)
        factors[key] = factors.get(key, 0) + mult
        return
    df = fp_diff(f, p)
    if df == [0]:
        # f = g(x^p) = g(x)^p over F_p
        g = fp_trim([f[i] for i in range(0, len(f), p)])
        _factor_rec(g, p, factors, mult * p)
        return
    g = fp_gcd(f, df, p)
    if fp_deg(g) > 0:
        _factor_rec(g, p, factors, mult)
        _factor_rec(fp_divmod(f, g, p)[0], p, factors, mult)
        return
    # squarefree: distinct-degree then equal-degree splitting
    rng = random.Random(0xEB5D ^ fp_deg(f) ^ p)
    x = [0, 1]
    h = x
    rest = f
    d = 0
    while fp_deg(rest) > 0:
        d += 1
        if 2 * d > fp_deg(rest):
            key = tuple(rest)
            factors[key] = factors.get(key, 0) + mult
            return
        h = fp_powmod(h, p, rest, p)
        g = fp_gcd(fp_normalize([c - b for c, b in zip_pad(h, x)], p), rest, p)
        if fp_deg(g) > 0:
            for piece in _split_equal_degree(g, d, p, rng):
                key = tuple(piece)
                factors[key] = factors.get(key, 0) + mult
            rest = fp_divmod(rest, g, p)[0]
            h = fp_mod(h, rest, p)


def _split_equal_degree(f, d, p, rng):
    """Split a squarefree product of degree-d irreducibles."""
    n = fp_deg(f)
    if n == d:
        return [f]
    while True:
        r = [rng.randrange(p) for _ in range(n)] + [1]
        if p == 2:
            t = [0]
            a = fp_mod(r, f, p)
            for _ in range(d):
                t = fp_normalize([x + y for x, y in zip_pad(t, a)], p)
                a = fp_mod(fp_mul(a, a, p), f, p)
            g = fp_gcd(t, f, p)
        else:
            e = (p ** d - 1) // 2
            t = fp_powmod(r, e, f, p)
            t = fp_normalize([c for c in t], p)
            t[0] = (t[0] - 1) % p
            g = fp_gcd(fp_trim(t), f, p)
        if 0 < fp_deg(g) < n:
            left = _split_equal_degree(g, d, p, rng)
            right = _split_equal_degree(fp_divmod(f, g, p)[0], d, p, rng)
            return left + right


# ---------------------------------------------------------------------------
# extension fields

@dataclass(frozen=True)
class FiniteField:
    """F_{p^k} with a fixed irreducible modulus (little-endian, monic)."""

    p: int
    k: int
    modulus: tuple

    @property
    def order(self) -> int:
        return self.p ** self.k

    def element(self, coeffs):
        c = [x % self.p for x in coeffs]
        c = c[:self.k] + [0] * max(0, self.k - len(c))
        return FFElement(self, tuple(c))

    def zero(self):
        return self.element([0])

    def one(self):
        return self.element([1])

    def from_int(self, n: int):
        return self.element([n])

    def gen(self):
        return self.element([0, 1] if self.k > 1 else [1])

    def elements(self):
        """Iterate over all p^k elements (coefficient counting order)."""
        from itertools import product
        for coeffs in product(range(self.p), repeat=self.k):
            yield FFElement(self, coeffs)


@lru_cache(maxsize=None)
def finite_field(p: int, k: int) -> FiniteField:
    require_prime(p)
    assert k >= 1
    if k == 1:
        return FiniteField(p, 1, (0, 1))
    # deterministic search for an irreducible monic modulus
    rng = random.Random(p * 1000003 + k)
    while True:
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        if fp_is_irreducible(coeffs, p):
            return FiniteField(p, k, tuple(coeffs))


@dataclass(frozen=True)
class FFElement:
    field: FiniteField
    coeffs: tuple

    def _wrap(self, poly):
        c = fp_normalize(list(poly), self.field.p)
        c = c + [0] * (self.field.k - len(c))
        return FFElement(self.field, tuple(c[:self.field.k]))

    def __add__(self, other):
        other = self._coerce(other)
        return self._wrap([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        return self._wrap([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._wrap([-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        prod = fp_mul(list(self.coeffs), list(other.coeffs), self.field.p)
        return self._wrap(fp_mod(prod, list(self.field.modulus), self.field.p))

    def _coerce(self, other):
        if isinstance(other, FFElement):
            assert other.field == self.field
            return other
        return self.field.from_int(int(other))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError
        p, mod = self.field.p, list(self.field.modulus)
        # extended euclid in F_p[x]
        a, b = list(self.coeffs), mod
        sa, sb = [1], [0]
        while fp_deg(b) > 0:
            q, r = fp_divmod(a, b, p)
            a, b = b, r
            sa, sb = sb, fp_normalize(
                [x - y for x, y in zip_pad(sa, fp_mul(q, sb, p))], p)
        if b == [0]:
            g, s = a, sa
        else:
            g, s = b, sb
        inv = pow(g[0], -1, p)
        return self._wrap([c * inv % p for c in s])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def trace_to_prime_field(self) -> int:
        """Absolute trace to F_p, returned as an int in [0, p)."""
        acc = self
        frob = self
        for _ in range(self.field.k - 1):
            frob = frob ** self.field.p
            acc = acc + frob
        assert all(c == 0 for c in acc.coeffs[1:])
        return acc.coeffs[0]

    def is_square(self) -> bool:
        if self.is_zero():
            return True
        if self.field.p == 2:
            return True
        q = self.field.order
        return (self ** ((q - 1) // 2)).coeffs[0] == 1
