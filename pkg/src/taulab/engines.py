"""Four independent algorithms for the tau table, plus reconciliation.

tau(n) is the coefficient of q^n in q prod (1 - q^k)^24. The four routes:

* eta            -- Jacobi's sparse cube series raised to the 8th power by
                    three dense squarings, shifted by q.
* niebur         -- tau(n) = n^4 sigma(n)
                    - 24 sum_{k<n} (35k^4 - 52k^3 n + 18k^2 n^2) sigma(k) sigma(n-k).
* eisenstein     -- (E4^3 - E6^2)/1728 with E4 = 1 + 240 sum sigma3(n) q^n,
                    E6 = 1 - 504 sum sigma5(n) q^n; every division by 1728
                    must be exact or the engine aborts.
* multiplicative -- tau(p^a) = tau(p) tau(p^{a-1}) - p^11 tau(p^{a-2}) on prime
                    powers, tau(mn) = tau(m) tau(n) on coprime parts, seeded
                    with tau(p) taken from any other engine.

All coefficients are exact unbounded ints; tables agree bit-exactly or
reconcile() says where they first differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import SigmaTables
from .series import IntSeries, jacobi_cube_series


@dataclass
class TauTable:
    """tau(1..limit); values[0] is an unused 0 so values[n] is tau(n)."""

    limit: int
    values: list[int]
    algo: str

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"tau({n}) outside table range 1..{self.limit}")
        return self.values[n]

    def primes(self) -> list[int]:
        return prime_range(self.limit)

    def prime_seeds(self) -> dict[int, int]:
        """tau(p) for every prime p <= limit, e.g. to seed the recurrence engine."""
        return {p: self.values[p] for p in self.primes()}


def prime_range(limit: int) -> list[int]:
    """Primes <= limit by a plain Eratosthenes sieve."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(2, limit + 1) if flags[i]]


def _require_limit(limit: int) -> None:
    if limit < 1:
        raise ValueError("tau table limit must be >= 1")


def tau_eta(limit: int) -> TauTable:
    """Eta route: q prod (1-q^k)^24 = q * (prod (1-q^k)^3)^8."""
    _require_limit(limit)
    T = limit - 1
    cube = jacobi_cube_series(T).to_dense(T)
    pow8 = cube.square().square().square()
    values = [0] + pow8.coeffs  # shift by q: tau(n) = coeff of q^{n-1}
    return TauTable(limit, values[: limit + 1], "eta")


def _convolution_polynomial(k: int, n: int) -> int:
    """P(k, n) = 35k^4 - 52k^3 n + 18k^2 n^2, Horner in k, exact ints."""
    return k * k * (18 * n * n + k * (35 * k - 52 * n))


def niebur_convolution(n: int, sigma1: list[int]) -> int:
    """Signed sum over k < n of P(k, n) sigma(k) sigma(n-k)."""
    acc = 0
    for k in range(1, n):
        acc += _convolution_polynomial(k, n) * sigma1[k] * sigma1[n - k]
    return acc


def tau_niebur(limit: int, sigma: SigmaTables) -> TauTable:
    """Divisor-convolution route, one exact evaluation per n."""
    _require_limit(limit)
    sigma.require(limit, (1,))
    s1 = sigma.sigma1
    values = [0] * (limit + 1)
    for n in range(1, limit + 1):
        values[n] = n**4 * s1[n] - 24 * niebur_convolution(n, s1)
    return TauTable(limit, values, "niebur")


def tau_eisenstein(limit: int, sigma: SigmaTables) -> TauTable:
    """Discriminant route: coefficients of (E4^3 - E6^2)/1728."""
    _require_limit(limit)
    sigma.require(limit, (3, 5))
    s3, s5 = sigma.sigma3, sigma.sigma5
    e4 = IntSeries([1] + [240 * s3[n] for n in range(1, limit + 1)])
    e6 = IntSeries([1] + [-504 * s5[n] for n in range(1, limit + 1)])
    disc = e4.square().mul(e4).sub(e6.square())
    if disc[0] != 0:
        raise ArithmeticError("discriminant must have no constant term")
    values = disc.exact_div(1728).coeffs
    return TauTable(limit, values[: limit + 1], "eisenstein")


def tau_prime_power(tau_p: int, p: int, a: int) -> int:
    """tau(p^a) from the degree-2 recurrence seeded by tau(1)=1, tau(p)."""
    if a == 0:
        return 1
    p11 = p**11
    prev, cur = 1, tau_p
    for _ in range(a - 1):
        prev, cur = cur, tau_p * cur - p11 * prev
    return cur


def tau_multiplicative(limit: int, prime_taus: dict[int, int]) -> TauTable:
    """Recurrence + multiplicativity route from tau(p) seeds.

    Requires a seed for every prime <= limit; builds the table with a
    smallest-prime-factor sieve so each n is one prime-power split.
    """
    _require_limit(limit)
    missing = [p for p in prime_range(limit) if p not in prime_taus]
    if missing:
        raise ValueError(f"missing tau(p) seeds for primes: {missing[:5]}...")
    spf = list(range(limit + 1))
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    values = [0] * (limit + 1)
    if limit >= 1:
        values[1] = 1
    pp_cache: dict[tuple[int, int], int] = {}
    for n in range(2, limit + 1):
        p = spf[n]
        m, a = n, 0
        while m % p == 0:
            m //= p
            a += 1
        key = (p, a)
        t = pp_cache.get(key)
        if t is None:
            t = tau_prime_power(prime_taus[p], p, a)
            pp_cache[key] = t
        values[n] = t * values[m]
    return TauTable(limit, values, "multiplicative")


ENGINES = ("eta", "niebur", "eisenstein", "multiplicative")


def build_table(algo: str, limit: int, sigma: SigmaTables | None = None) -> TauTable:
    """Build one table by name; sigma is required for niebur/eisenstein."""
    if algo == "eta":
        return tau_eta(limit)
    if algo in ("niebur", "eisenstein"):
        if sigma is None:
            raise ValueError(f"{algo} engine needs sigma tables")
        return tau_niebur(limit, sigma) if algo == "niebur" else tau_eisenstein(limit, sigma)
    if algo == "multiplicative":
        return tau_multiplicative(limit, tau_eta(limit).prime_seeds())
    raise ValueError(f"unknown engine {algo!r}")


@dataclass
class ReconcileReport:
    """Pairwise bit-exact comparison over the common range of the tables."""

    range_checked: int
    pairs: list[tuple[str, str, int | None]]  # (algo_a, algo_b, first mismatch)

    @property
    def agree(self) -> bool:
        return all(m is None for _, _, m in self.pairs)


def reconcile(tables: list[TauTable]) -> ReconcileReport:
    if len(tables) < 2:
        raise ValueError("reconcile needs at least two tables")
    common = min(t.limit for t in tables)
    pairs = []
    for i in range(len(tables)):
        for j in range(i + 1, len(tables)):
            a, b = tables[i], tables[j]
            first = None
            for n in range(1, common + 1):
                if a.values[n] != b.values[n]:
                    first = n
                    break
            pairs.append((a.algo, b.algo, first))
    return ReconcileReport(common, pairs)


def hecke_violations(table: TauTable) -> list[tuple[int, int, int, int]]:
    """(p, a, lhs, rhs) wherever tau(p^a) != tau(p)tau(p^{a-1}) - p^11 tau(p^{a-2})."""
    bad = []
    v = table.values
    for p in prime_range(int(table.limit**0.5) + 1):
        pa = p * p
        a = 2
        while pa <= table.limit:
            lhs = v[pa]
            rhs = v[p] * v[pa // p] - p**11 * v[pa // (p * p)]
            if lhs != rhs:
                bad.append((p, a, lhs, rhs))
            pa *= p
            a += 1
    return bad


def multiplicativity_violations(table: TauTable) -> list[tuple[int, int, int, int]]:
    """(m, n, tau(mn), tau(m)tau(n)) for every coprime m <= n with mn <= limit."""
    from math import gcd

    bad = []
    v = table.values
    N = table.limit
    for m in range(2, int(N**0.5) + 1):
        for n in range(m + 1, N // m + 1):
            if gcd(m, n) == 1:
                lhs = v[m * n]
                rhs = v[m] * v[n]
                if lhs != rhs:
                    bad.append((m, n, lhs, rhs))
    return bad
