"""Truncated power series with exact unbounded-integer coefficients.

Dense multiplication has two bit-identical routes: schoolbook convolution,
and Kronecker substitution (pack coefficients into slots of one huge integer,
multiply once, unslice). Kronecker is the default above a small size because
CPython's big-integer multiply is subquadratic; both routes are exact and the
tests pin them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


class IntSeries:
    """Dense series sum c_i q^i, truncated at a fixed order (len(coeffs)-1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("IntSeries needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"IntSeries([{head}{tail}], order={self.order})"

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        c = [0] * (order + 1)
        c[0] = 1
        return cls(c)

    def add(self, other: "IntSeries") -> "IntSeries":
        T = min(self.order, other.order)
        return IntSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(T + 1)]
        )

    def sub(self, other: "IntSeries") -> "IntSeries":
        T = min(self.order, other.order)
        return IntSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(T + 1)]
        )

    def mul(self, other: "IntSeries", order: int | None = None) -> "IntSeries":
        if order is None:
            order = min(self.order, other.order)
        a = self.coeffs[: order + 1]
        b = other.coeffs[: order + 1]
        if min(len(a), len(b)) <= 32:
            return IntSeries(_mul_schoolbook(a, b, order))
        return IntSeries(_mul_kronecker(a, b, order))

    def square(self, order: int | None = None) -> "IntSeries":
        return self.mul(self, order)

    def scale(self, k: int) -> "IntSeries":
        return IntSeries([k * c for c in self.coeffs])

    def shift(self, e: int, order: int | None = None) -> "IntSeries":
        """Multiply by q^e, keeping the given truncation order."""
        if order is None:
            order = self.order
        out = [0] * (order + 1)
        for i, c in enumerate(self.coeffs):
            if i + e > order:
                break
            out[i + e] = c
        return IntSeries(out)

    def exact_div(self, k: int) -> "IntSeries":
        """Divide every coefficient by k; non-exact division is a hard error."""
        out = []
        for i, c in enumerate(self.coeffs):
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(
                    f"coefficient {i} = {c} not divisible by {k}"
                )
            out.append(q)
        return IntSeries(out)


def _mul_schoolbook(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        top = min(len(b), order + 1 - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def _pack(coeffs: list[int], slot: int) -> int:
    buf = bytearray(len(coeffs) * slot)
    for i, c in enumerate(coeffs):
        if c:
            nb = (c.bit_length() + 7) // 8
            buf[i * slot : i * slot + nb] = c.to_bytes(nb, "little")
    return int.from_bytes(buf, "little")


def _mul_kronecker(a: list[int], b: list[int], order: int) -> list[int]:
    """Exact polynomial product via big-integer multiplication.

    Coefficients are split by sign so every packed slot is nonnegative and
    below the slot modulus; the two nonnegative sub-products are unpacked by
    byte slicing and recombined, which is identical to the schoolbook result.
    """
    maxa = max(abs(c) for c in a)
    maxb = max(abs(c) for c in b)
    if maxa == 0 or maxb == 0:
        return [0] * (order + 1)
    conv_bound = min(len(a), len(b)) * maxa * maxb
    slot = (conv_bound.bit_length() + 8) // 8  # bytes per slot, 1 spare bit
    ap = _pack([c if c > 0 else 0 for c in a], slot)
    an = _pack([-c if c < 0 else 0 for c in a], slot)
    bp = _pack([c if c > 0 else 0 for c in b], slot)
    bn = _pack([-c if c < 0 else 0 for c in b], slot)
    pos = ap * bp + an * bn
    neg = ap * bn + an * bp
    nbytes = (len(a) + len(b)) * slot
    pb = pos.to_bytes(nbytes, "little")
    nb = neg.to_bytes(nbytes, "little")
    return [
        int.from_bytes(pb[i * slot : (i + 1) * slot], "little")
        - int.from_bytes(nb[i * slot : (i + 1) * slot], "little")
        for i in range(order + 1)
    ]


@dataclass(frozen=True)
class SparseSeries:
    """(exponent, coefficient) terms, exponents strictly increasing, no zeros."""

    terms: tuple[tuple[int, int], ...]

    def to_dense(self, order: int) -> IntSeries:
        c = [0] * (order + 1)
        for e, v in self.terms:
            if e <= order:
                c[e] = v
        return IntSeries(c)


def pentagonal_series(order: int) -> SparseSeries:
    """Euler's expansion of prod (1 - q^n): exponents k(3k-1)/2, signs (-1)^k.

    O(sqrt(order)) terms, all coefficients +-1.
    """
    terms = {0: 1}
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 > order and e2 > order:
            break
        s = -1 if k % 2 else 1
        if e1 <= order:
            terms[e1] = s
        if e2 <= order:
            terms[e2] = s
        k += 1
    return SparseSeries(tuple(sorted(terms.items())))


def jacobi_cube_series(order: int) -> SparseSeries:
    """Jacobi's expansion of prod (1 - q^n)^3: (-1)^k (2k+1) q^{k(k+1)/2}."""
    terms = []
    k = 0
    while True:
        e = k * (k + 1) // 2
        if e > order:
            break
        terms.append((e, (2 * k + 1) * (-1 if k % 2 else 1)))
        k += 1
    return SparseSeries(tuple(terms))


def euler_product_dense(order: int, power: int = 1) -> IntSeries:
    """prod_{n>=1} (1 - q^n)^power by direct multiplication (test oracle).

    Quadratic; intended for small orders to pin the sparse expansions.
    """
    out = [0] * (order + 1)
    out[0] = 1
    for n in range(1, order + 1):
        for _ in range(power):
            # multiply by (1 - q^n) in place
            for i in range(order, n - 1, -1):
                out[i] -= out[i - n]
    return IntSeries(out)
