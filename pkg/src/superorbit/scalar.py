"""Exact rational scalars.

Everything in this library is computed over arbitrary-precision rationals.
When gmpy2 is importable its GMP-backed ``mpq`` type is used; otherwise the
pure-Python ``fractions.Fraction`` serves as a drop-in fallback.  Both types
print identically (reduced ``p/q`` with positive denominator), so all program
output is backend independent.  Set ``SUPERORBIT_SCALAR=fraction`` in the
environment to force the fallback; ``benchmarks/bench_scalars.py`` compares
the two.
"""

import os
from fractions import Fraction

if os.environ.get("SUPERORBIT_SCALAR", "").lower() == "fraction":
    _impl = Fraction
    BACKEND = "fraction"
else:
    try:
        from gmpy2 import mpq as _impl

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover
        _impl = Fraction
        BACKEND = "fraction"


def Q(value=0, den=None):
    """Build a rational from an int, rational, or a string like "-3/4"."""
    if den is not None:
        return _impl(value) / _impl(den)
    if isinstance(value, str):
        # Route through Fraction so both backends accept the same strings.
        return _impl(Fraction(value))
    return _impl(value)


ZERO = Q(0)
ONE = Q(1)


def qstr(x) -> str:
    """Canonical string form: "p/q", or "p" when the denominator is 1."""
    return str(x)


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
