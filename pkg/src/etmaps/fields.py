"""Small finite fields GF(p^e).

Elements are integers ``0 .. q-1`` whose base-``p`` digits are the
coefficients (constant term first) of a polynomial reduced modulo the
lexicographically least monic irreducible of degree ``e``.  Multiplication
goes through discrete log tables, so every field fits in two arrays of
length ``q``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

MAX_FIELD_ORDER = 2 ** 20


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """``(p, e)`` with ``q == p**e``, or ``None``."""
    if q < 2:
        return None
    p = prime_factors(q)
    if len(p) != 1:
        return None
    p = p[0]
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return p, e


# polynomials over GF(p): coefficient lists, constant term first

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, m, p):
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _polymulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _polymod(prod, m, p)


def _polygcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def _x_power_mod(k, m, p):
    """x^k mod m."""
    result, base = [1], _polymod([0, 1], m, p)
    while k:
        if k & 1:
            result = _polymulmod(result, base, m, p)
        base = _polymulmod(base, base, m, p)
        k >>= 1
    return result


def is_irreducible(poly, p):
    """Rabin's test for a monic polynomial over GF(p)."""
    e = len(poly) - 1
    if e < 1:
        return False
    if e == 1:
        return True

    def x_pk_minus_x(k):
        r = _x_power_mod(p ** k, poly, p) + [0] * 2
        r[1] = (r[1] - 1) % p
        return _trim(r)

    if x_pk_minus_x(e):
        return False
    for r in prime_factors(e):
        g = _polygcd(poly, x_pk_minus_x(e // r), p)
        if len(g) > 1:
            return False
    return True


def least_irreducible(p, e):
    """Lexicographically least monic irreducible of degree ``e`` (constant
    term first; comparison from the lowest coefficient)."""
    for tail in itertools.product(range(p), repeat=e):
        poly = list(tail) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {e} over GF({p})")  # pragma: no cover


class FiniteField:
    """GF(p^e) with a designated primitive root ``gen``."""

    def __init__(self, p, e=1):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if e < 1:
            raise FieldError("extension degree must be positive")
        q = p ** e
        if q > MAX_FIELD_ORDER:
            raise FieldError(f"field order {q} exceeds {MAX_FIELD_ORDER}")
        self.p, self.e, self.q = p, e, q
        self.modulus = least_irreducible(p, e)
        self._digits = np.array([[(x // p ** i) % p for i in range(e)] for x in range(q)], dtype=np.int64)
        self._weights = p ** np.arange(e, dtype=np.int64)
        self.gen = self._find_primitive_root()
        self._exp, self._log = self._log_tables(self.gen)

    # raw polynomial multiplication, used only while building the log tables
    def _poly_mul(self, a, b):
        pa = list(self._digits[a])
        pb = list(self._digits[b])
        r = _polymulmod(pa, pb, list(self.modulus), self.p) + [0] * self.e
        return int(np.dot(r[: self.e], self._weights))

    def _mult_order(self, a):
        x, k = a, 1
        while x != 1:
            x = self._poly_mul(x, a)
            k += 1
        return k

    def _find_primitive_root(self):
        if self.q == 2:
            return 1
        for a in range(2, self.q):
            if self._mult_order(a) == self.q - 1:
                return a
        raise FieldError("no primitive root found")  # pragma: no cover

    def _log_tables(self, g):
        exp = np.zeros(self.q - 1, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for k in range(self.q - 1):
            exp[k] = x
            log[x] = k
            x = self._poly_mul(x, g)
        return exp, log

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def __iter__(self):
        return iter(range(self.q))

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        d = (self._digits[a] + self._digits[b]) % self.p
        return int(d @ self._weights)

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        d = (-self._digits[a]) % self.p
        return int(d @ self._weights)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            return 0 if k > 0 else 1
        return int(self._exp[(self._log[a] * k) % (self.q - 1)])

    def frobenius(self, a, times=1):
        """``a -> a^(p^times)``."""
        return self.pow(a, self.p ** times)

    def mult_order(self, a):
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        k = int(self._log[a])
        from math import gcd
        return (self.q - 1) // gcd(k, self.q - 1)

    def from_int(self, k):
        """Image of the integer ``k`` under the prime-field embedding."""
        return k % self.p

    def is_square(self, a):
        return a == 0 or self.p == 2 or self._log[a] % 2 == 0


@lru_cache(maxsize=None)
def finite_field(p, e=1):
    return FiniteField(p, e)


def field_of_order(q):
    pe = prime_power(q)
    if pe is None:
        raise FieldError(f"{q} is not a prime power")
    return finite_field(*pe)


def primitive_root_self_inverse_conjugate(q):
    """Whether the designated primitive root of GF(q) is sent to its inverse
    by some power of the Frobenius automorphism."""
    F = field_of_order(q)
    lam = F.gen
    target = F.inv(lam)
    x = lam
    for _ in range(F.e):
        if x == target:
            return True
        x = F.frobenius(x)
    return False
