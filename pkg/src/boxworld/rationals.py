"""Exact rational arithmetic carrier.

All exact computation in this package runs on arbitrary-precision rationals,
always stored in lowest terms with a positive denominator, and never rounded.
gmpy2's mpq is used when available (it is several times faster than
fractions.Fraction); otherwise the stdlib Fraction is a drop-in fallback.
Both types interoperate freely, so callers should only ever construct values
through rat() / parse_rat() and format them through rat_str().
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    Rat = Fraction

ZERO = Rat(0)
ONE = Rat(1)


def rat(num, den=None):
    """Build an exact rational from ints, strings or other rationals."""
    if den is None:
        return Rat(num)
    return Rat(num, den)


def parse_rat(text):
    """Parse "p/q" or "p" into an exact rational."""
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        return Rat(int(p), int(q))
    return Rat(int(text))


def rat_str(x):
    """Canonical "p/q" form, always with an explicit denominator."""
    return f"{x.numerator}/{x.denominator}"


def as_fraction(x):
    return Fraction(x.numerator, x.denominator)
