"""High-precision real arithmetic with a fixed, deterministic precision contract.

All non-exact comparisons in this package go through this module. Values are
mpmath mpf floats computed under a pinned working precision (round-to-nearest),
well above the 64 fractional bits the rest of the package assumes. Verdicts
that pit an exact integer against a real bound are made against a widened
enclosure of the bound, so a verdict is never an artifact of rounding: if the
enclosure straddles the integer the comparison is reported as undecided
("near-equality") instead of being forced to a boolean.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf, nstr

# Total mantissa bits for every HighReal computation. The largest magnitudes
# handled (~2^80) still leave >100 fractional bits.
PRECISION_BITS = 192

# Relative enclosure widening, in multiples of 2^-PRECISION_BITS. mpmath's
# elementary functions are accurate to a few ulp; 64 ulp is a generous cover.
_GUARD = None  # initialized below

# Guard band for integer-vs-real verdicts: a comparison this close to equality
# is never trusted to a boolean.
VERDICT_GUARD_BITS = 40


def hp():
    """Context manager pinning the working precision; wrap all mpf math in it."""
    return mp.workprec(PRECISION_BITS)


with hp():
    _GUARD = mpf(64) * mpf(2) ** (-PRECISION_BITS)
    _VERDICT_GUARD = mpf(2) ** (-VERDICT_GUARD_BITS)


def to_real(x) -> mpf:
    """Convert an int, Fraction, str or float to mpf at working precision."""
    with hp():
        if isinstance(x, Fraction):
            return mpf(x.numerator) / x.denominator
        return mpf(x)


def loglog(n: int) -> mpf:
    """log(log(n)) for n >= 2, natural logarithm twice.

    Negative for n = 2, crosses zero between n = 2 and n = 3 (log log e = 0).
    Relative error is bounded by a few ulp at the working precision, far below
    the 2^-60 budget callers rely on.
    """
    if n <= 1:
        raise ValueError("loglog requires n >= 2")
    with hp():
        return mp.log(mp.log(n))


def euler_gamma() -> mpf:
    """Euler-Mascheroni constant at working precision."""
    with hp():
        return +mp.euler


def enclosure(x: mpf) -> tuple[mpf, mpf]:
    """A certified [lo, hi] pair around a positive computed value.

    Widens by _GUARD relative, covering the accumulated rounding of the short
    arithmetic chains used in this package (every chain is < 30 operations).
    """
    with hp():
        if x <= 0:
            raise ValueError("enclosure expects a positive bound value")
        return x * (1 - _GUARD), x * (1 + _GUARD)


def compare_int_to_bound(value: int, bound: mpf) -> tuple[bool, bool]:
    """Certified verdict for ``value <= bound`` with an exact integer value.

    Returns (holds, decided). ``decided`` is False when the widened enclosure
    of the bound straddles the integer closer than 2^-VERDICT_GUARD_BITS, i.e.
    the comparison is within precision doubt and must be reported, not judged.
    """
    lo, hi = enclosure(bound)
    with hp():
        v = mpf(value)
        if v <= lo - _VERDICT_GUARD:
            return True, True
        if v >= hi + _VERDICT_GUARD:
            return False, True
        return v <= bound, False


def fraction_to_real(num: int, den: int) -> mpf:
    """Exact-quotient conversion: round(num/den) at working precision."""
    with hp():
        return mpf(num) / den


def fmt_real(x) -> str:
    """Fixed 15-significant-digit decimal rendering, round-to-nearest.

    Deterministic for a given mantissa; this is the one formatting used in
    every report so identical configs produce identical bytes.
    """
    with hp():
        return nstr(mpf(x), 15, strip_zeros=False)
