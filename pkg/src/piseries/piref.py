"""Self-validating high-precision constants.

pi is computed by two structurally different arctangent decompositions,

    A:  pi = 16 arctan(1/5) - 4 arctan(1/239)
    B:  pi =  4 arctan(1/2) + 4 arctan(1/3)

each summed by integer binary splitting with an alternating-series
truncation bound.  A result is only released when the two routes agree to
the requested number of digits; disagreement raises AgreementFailure
because it can only come from an arithmetic bug, never from the math.

The same page evaluates square roots, the surd forms of sin(pi alpha), and
complete closed-form constants at arbitrary precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import AgreementFailure, BudgetExceeded, DomainError
from .series import ClosedFormRHS, SurdConstant

__all__ = [
    "PiReference",
    "compute_pi",
    "pi_mpfr",
    "sqrt_big",
    "eval_surd",
    "eval_closed_form",
]

MAX_PI_DIGITS = 10_000

# fmt: off
PI_50_DIGITS = "3.14159265358979323846264338327950288419716939937510"
# fmt: on


@dataclass(frozen=True)
class PiReference:
    """pi to a requested precision plus the measured route agreement."""

    digits: int
    value: object  # gmpy2.mpfr
    agreement_digits: int


def _arctan_split(k2: int, lo: int, hi: int) -> tuple[int, int, int]:
    """(P, Q, T) for arctan(1/k) terms lo..hi-1 under ratio
    r(m) = -(2m+1) / ((2m+3) k^2), with T/Q = sum of cumulative ratio
    products starting at lo."""
    if hi - lo == 1:
        num = -(2 * lo + 1)
        den = (2 * lo + 3) * k2
        return num, den, den
    mid = (lo + hi) // 2
    pl, ql, tl = _arctan_split(k2, lo, mid)
    pr, qr, tr = _arctan_split(k2, mid, hi)
    return pl * pr, ql * qr, tl * qr + pl * tr


def _arctan_inv(k: int, bits: int):
    """arctan(1/k) to the current-context precision; truncation error is
    below 2^-bits by the alternating series bound."""
    # terms: (-1)^m / ((2m+1) k^(2m+1)); stop once the next term < 2^-bits
    m = max(2, int(bits / (2 * math.log2(k))) + 2)
    while (2 * m + 1) * k ** (2 * m + 1) < 2**bits:
        m += 1
    _, q, t = _arctan_split(k * k, 0, m)
    return mpfr(t) / mpfr(k * q)


@lru_cache(maxsize=None)
def _pi_two_routes(bits: int) -> tuple:
    """pi by formulas A and B, both at `bits` working precision."""
    with gmpy2.context(precision=bits):
        route_a = 16 * _arctan_inv(5, bits) - 4 * _arctan_inv(239, bits)
        route_b = 4 * (_arctan_inv(2, bits) + _arctan_inv(3, bits))
        return route_a, route_b


def compute_pi(digits: int, max_digits: int = MAX_PI_DIGITS) -> PiReference:
    """pi to `digits` decimal digits, cross-checked between two formulas.

    Raises AgreementFailure if the routes agree to fewer than `digits`
    digits and BudgetExceeded for digits > max_digits.
    """
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    if digits > max_digits:
        raise BudgetExceeded(f"requested {digits} digits, budget is {max_digits}")
    bits = int(digits * math.log2(10)) + 64
    route_a, route_b = _pi_two_routes(bits)
    with gmpy2.context(precision=bits):
        diff = abs(route_a - route_b)
        if diff == 0:
            agreement = int((bits - 2) * math.log10(2))
        else:
            agreement = int(math.floor(-gmpy2.log10(diff)))
    if agreement < digits:
        raise AgreementFailure(
            f"pi routes agree to only {agreement} of {digits} digits"
        )
    return PiReference(digits=digits, value=route_a, agreement_digits=agreement)


@lru_cache(maxsize=None)
def _pi_bits_bucket(bucket: int):
    route_a, route_b = _pi_two_routes(bucket)
    with gmpy2.context(precision=bucket):
        if abs(route_a - route_b) > mpfr(2) ** (8 - bucket):
            raise AgreementFailure("pi routes disagree at bit level")
    return route_a

def pi_mpfr(bits: int):
    """pi with at least `bits` correct bits, cached in 64-bit buckets."""
    bucket = max(128, ((bits + 63) // 64) * 64 + 64)
    return _pi_bits_bucket(bucket)


def sqrt_big(x: Fraction | int, precision: int):
    """sqrt(x) for x >= 0 as a correctly rounded mpfr at `precision` bits."""
    if x < 0:
        raise DomainError(f"square root of negative value {x}")
    with gmpy2.context(precision=precision):
        return gmpy2.sqrt(mpfr(mpq(x)))


def eval_surd(surd: SurdConstant, precision: int):
    """Numeric value of a SurdConstant at `precision` bits.

    Exact kinds evaluate their radical expression; numeric-only falls back
    to sin(pi alpha) with the self-validated pi.
    """
    work = precision + 16
    with gmpy2.context(precision=work):
        if not surd.is_exact:
            acc = gmpy2.sin(pi_mpfr(work) * mpq(surd.alpha))
        else:
            acc = mpfr(mpq(surd.rational))
            for coeff, radicand in surd.surds:
                acc += mpq(coeff) * gmpy2.sqrt(mpfr(radicand))
            if surd.nested is not None:
                coeff, base, inner_coeff, inner_rad = surd.nested
                inner = mpfr(base) + inner_coeff * gmpy2.sqrt(mpfr(inner_rad))
                acc += mpq(coeff) * gmpy2.sqrt(inner)
    with gmpy2.context(precision=precision):
        return +acc


def eval_closed_form(rhs: ClosedFormRHS, precision: int):
    """rational_part * sin(pi alpha) / pi at `precision` bits."""
    work = precision + 16
    with gmpy2.context(precision=work):
        value = mpq(rhs.rational_part) * eval_surd(rhs.sine, work) / pi_mpfr(work)
    with gmpy2.context(precision=precision):
        return +value
