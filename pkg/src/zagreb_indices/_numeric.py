"""Shared numeric plumbing: exponent normalisation and the dual
exact/float power regime.

Integer exponents evaluate exactly: plain ints for positive exponents,
fractions for negative ones, so equality checks downstream are genuine
equalities with no overflow (Python ints are unbounded).  Everything else
evaluates in 64-bit floats and is compared elsewhere at 1e-9 relative
tolerance.
"""

from __future__ import annotations

from fractions import Fraction

Number = "int | float | Fraction"


def normalize_exponent(alpha) -> tuple:
    """Return (value, exact) for an exponent given as an int, float,
    Fraction, or ExponentParam.  Exponent 0 is rejected outright: the
    conventions for 0**0 would silently change every sum with an isolated
    vertex."""
    if hasattr(alpha, "alpha") and hasattr(alpha, "mode"):
        return alpha.alpha, alpha.mode == "exact"
    if isinstance(alpha, bool):
        raise TypeError("exponent must be a number")
    if isinstance(alpha, Fraction):
        alpha = int(alpha) if alpha.denominator == 1 else float(alpha)
    if isinstance(alpha, int):
        if alpha == 0:
            raise ValueError("exponent 0 is not supported")
        return alpha, True
    if isinstance(alpha, float):
        if alpha == 0.0:
            raise ValueError("exponent 0 is not supported")
        return alpha, False
    raise TypeError(f"exponent must be a number, got {type(alpha).__name__}")


def power(base: int, value, exact: bool, label: str = "base"):
    """base ** value under the regime picked by normalize_exponent.

    0 ** value is 0 for positive exponents and a domain error for negative
    ones (the error names the offending quantity via *label*)."""
    if base == 0:
        if (value > 0) if exact else (value > 0.0):
            return 0 if exact else 0.0
        raise ValueError(f"{label} is 0, which has no negative power")
    if exact:
        if value > 0:
            return base ** value
        return Fraction(1, base ** (-value))
    return float(base) ** value


def simplify(x):
    """Collapse integral Fractions back to ints; pass everything else through."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x
