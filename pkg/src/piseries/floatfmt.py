"""Decimal-string rendering for mpfr values and exact rationals.

JSON reports serialize every number as a decimal string so arbitrary
precision survives the trip through parsers that would otherwise coerce to
binary64.  Rendering goes through mpfr.digits(), which exposes the exact
base-10 mantissa/exponent split.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq

__all__ = ["decimal_str", "fraction_decimal_upper", "round_decimal_places"]


def decimal_str(x, sig_digits: int | None = None) -> str:
    """Scientific-notation decimal string of an mpfr, e.g. '3.14159e+0'.

    sig_digits defaults to the full decimal resolution of x's precision.
    """
    x = x if isinstance(x, mpfr) else mpfr(x)
    if gmpy2.is_nan(x):
        return "nan"
    if gmpy2.is_infinite(x):
        return "-inf" if x < 0 else "inf"
    if x == 0:
        return "0"
    if sig_digits is None:
        sig_digits = int(math.ceil(x.precision * math.log10(2))) + 1
    mantissa, exponent, _ = x.digits(10, sig_digits)
    sign = ""
    if mantissa.startswith("-"):
        sign, mantissa = "-", mantissa[1:]
    if len(mantissa) == 1:
        body = mantissa
    else:
        body = f"{mantissa[0]}.{mantissa[1:]}"
    return f"{sign}{body}e{exponent - 1:+d}"


def fraction_decimal_upper(value: Fraction, sig_digits: int = 40) -> str:
    """Decimal string >= value (for serializing certified upper bounds)."""
    bits = int(sig_digits * math.log2(10)) + 16
    with gmpy2.context(precision=bits, round=gmpy2.RoundUp):
        return decimal_str(mpfr(mpq(value)), sig_digits)


def round_decimal_places(x, places: int) -> str:
    """Fixed-point decimal string with `places` digits after the point,
    rounded to nearest; used for human-facing digit displays.

    No arithmetic touches x (which would re-round it at the ambient
    context); everything works off the exact base-10 expansion.
    """
    x = x if isinstance(x, mpfr) else mpfr(x)
    if x == 0:
        return "0." + "0" * places if places else "0"
    mantissa, exponent, _ = x.digits(10)
    sign = ""
    if mantissa.startswith("-"):
        sign = "-"
    # request exactly the digits needed left+right of the point
    needed = exponent + places
    if needed <= 0:
        return sign + ("0." + "0" * places if places else "0")
    mantissa, exponent, _ = x.digits(10, needed)
    if mantissa.startswith("-"):
        mantissa = mantissa[1:]
    if exponent <= 0:
        int_part, frac_part = "0", "0" * (-exponent) + mantissa
    else:
        digits = mantissa.ljust(exponent, "0")
        int_part, frac_part = digits[:exponent], digits[exponent:]
    frac_part = frac_part.ljust(places, "0")[:places]
    return f"{sign}{int_part}" + (f".{frac_part}" if places else "")
