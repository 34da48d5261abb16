"""Exact integer arithmetic support: factorization, divisor-power sieves,
and power sums in both direct and Bernoulli closed form.

Everything here is exact: unbounded Python ints, Fraction for the Bernoulli
coefficients. No floating point enters any value-producing path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

# Documented ceiling for factorize(); trial division with a 2-3-5 wheel is
# adequate at table scale and keeps the routine deterministic.
FACTOR_LIMIT = 2**64 - 1

# Ceiling for the closed-form power sum; the audit pipeline needs t <= 6.
FAULHABER_T_MAX = 64

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)

# Deterministic Miller-Rabin witness set, valid far beyond FACTOR_LIMIT.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality check (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """n as an ordered product of prime powers, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def recompose(self) -> int:
        out = 1
        for p, a in self.factors:
            out *= p**a
        return out


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division with a 2-3-5 wheel.

    Total and deterministic for 1 <= n <= FACTOR_LIMIT; factorize(1) has an
    empty factor list.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n > FACTOR_LIMIT:
        raise ValueError(f"factorize limited to n <= {FACTOR_LIMIT}")
    m = n
    factors = []
    for p in (2, 3, 5):
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
    d = 7
    i = 0
    while d * d <= m:
        if m % d == 0:
            a = 0
            while m % d == 0:
                m //= d
                a += 1
            factors.append((d, a))
        d += _WHEEL[i]
        i = (i + 1) % 8
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


@dataclass
class SigmaTables:
    """Sieved divisor-power sums sigma_a[n] = sum of d^a over d | n.

    Only the requested exponents are materialized; index 0 of each table is
    unused (kept 0). Tables are exact ints and must not be mutated after
    construction.
    """

    limit: int
    tables: dict[int, list[int]]

    def table(self, a: int) -> list[int]:
        if a not in self.tables:
            raise ValueError(f"sigma_{a} table was not sieved")
        return self.tables[a]

    @property
    def sigma0(self) -> list[int]:
        return self.table(0)

    @property
    def sigma1(self) -> list[int]:
        return self.table(1)

    @property
    def sigma3(self) -> list[int]:
        return self.table(3)

    @property
    def sigma5(self) -> list[int]:
        return self.table(5)

    def require(self, limit: int, exponents=()) -> None:
        if self.limit < limit:
            raise ValueError(
                f"sigma tables cover 1..{self.limit}, need 1..{limit}"
            )
        for a in exponents:
            self.table(a)


def sieve_sigma(limit: int, exponents=(0, 1, 3, 5)) -> SigmaTables:
    """Divisor-iteration sieve: for each d add d^a onto all multiples of d.

    O(limit log limit) additions per exponent, exact throughout.
    """
    if limit < 1:
        raise ValueError("sieve_sigma requires limit >= 1")
    exps = sorted(set(exponents))
    if not all(a in (0, 1, 3, 5) for a in exps):
        raise ValueError("supported exponents are 0, 1, 3, 5")
    tables: dict[int, list[int]] = {}
    for a in exps:
        arr = [0] * (limit + 1)
        for d in range(1, limit + 1):
            da = d**a
            for m in range(d, limit + 1, d):
                arr[m] += da
        tables[a] = arr
    return SigmaTables(limit, tables)


def divisor_power_sum(n: int, a: int) -> int:
    """Brute-force sigma_a(n) by divisor enumeration (test oracle)."""
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**a
            e = n // d
            if e != d:
                total += e**a
    return total


def power_sum_direct(t: int, n: int) -> int:
    """S_t(n) = sum of k^t for k = 1..n-1, by direct summation."""
    if t < 1 or n < 1:
        raise ValueError("power_sum_direct requires t >= 1 and n >= 1")
    return sum(k**t for k in range(1, n))


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (convention B_1 = -1/2), exact Fraction.

    Standard recurrence sum_{j<m} C(m+1, j) B_j = 0 for m >= 1, cached.
    """
    if m == 0:
        return Fraction(1)
    if m == 1:
        return Fraction(-1, 2)
    if m % 2 == 1:
        return Fraction(0)
    s = Fraction(0)
    for j in range(m):
        bj = bernoulli(j)
        if bj:
            s += comb(m + 1, j) * bj
    return -s / (m + 1)


def power_sum_faulhaber(t: int, n: int) -> int:
    """S_t(n) by the Bernoulli closed form; bit-identical to direct summation.

    S_t(n) = (1/(t+1)) sum_{j=0}^{t} C(t+1, j) B_j n^{t+1-j} with B_1 = -1/2
    gives sum_{k=0}^{n-1} k^t, which equals sum_{k=1}^{n-1} k^t for t >= 1.
    The rational accumulation is exact and the result is asserted integral.
    """
    if t < 1 or n < 1:
        raise ValueError("power_sum_faulhaber requires t >= 1 and n >= 1")
    if t > FAULHABER_T_MAX:
        raise ValueError(f"power_sum_faulhaber limited to t <= {FAULHABER_T_MAX}")
    acc = Fraction(0)
    npow = n  # n^{t+1-j}, starting at j = t
    for j in range(t, -1, -1):
        bj = bernoulli(j)
        if bj:
            acc += comb(t + 1, j) * bj * npow
        npow *= n
    acc /= t + 1
    if acc.denominator != 1:
        raise ArithmeticError(f"Faulhaber value not integral for t={t}, n={n}")
    return acc.numerator


def coprime(m: int, n: int) -> bool:
    return gcd(m, n) == 1
