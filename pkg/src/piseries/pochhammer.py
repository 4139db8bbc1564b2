"""Exact rising-factorial arithmetic at rational arguments.

The rising factorial (z)_n is defined for integer n of either sign:

    (z)_0  = 1
    (z)_n  = z (z + 1) ... (z + n - 1)              for n > 0
    (z)_-n = 1 / ((z - 1)(z - 2) ... (z - n))       for n > 0

The negative-shift form is the unique extension satisfying the recurrence
(z)_{n+1} = (z)_n (z + n) for all integers n; it has poles exactly where a
factor (z - k) vanishes.

Also provided: gamma at half-integer points, represented exactly as a
rational multiple of sqrt(pi) via

    Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    Gamma(1/2 - n) = (-1)^n 4^n n! / (2n)! sqrt(pi)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial as _math_factorial

from .errors import DomainError, PoleError

__all__ = ["factorial", "poch", "HalfGamma", "gamma_half"]


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise DomainError(f"factorial requires n >= 0, got {n}")
    return _math_factorial(n)


def _arith_prod(start: int, step: int, count: int) -> int:
    """Product of the arithmetic progression start, start+step, ...

    Multiplies balanced halves rather than left-to-right so that huge
    operands meet operands of similar size.
    """
    if count <= 8:
        acc = 1
        for k in range(count):
            acc *= start + k * step
        return acc
    half = count // 2
    return _arith_prod(start, step, half) * _arith_prod(
        start + half * step, step, count - half
    )


def poch(z: Fraction | int, n: int) -> Fraction:
    """Rising factorial (z)_n as an exact rational.

    Raises PoleError when n < 0 and some factor z - k (1 <= k <= -n)
    vanishes, i.e. when z is an integer in [n + 1, 0] shifted range.
    """
    z = Fraction(z)
    p, q = z.numerator, z.denominator
    if n == 0:
        return Fraction(1)
    if n > 0:
        # prod_{k=0}^{n-1} (p + k q) / q^n
        return Fraction(_arith_prod(p, q, n), q**n)
    m = -n
    # 1 / prod_{k=1}^{m} (z - k); a zero factor means p = k q for some k
    if q == 1 and 1 <= p <= m:
        raise PoleError(f"({z})_{n} hits the pole at z - {p} = 0")
    return Fraction(q**m, _arith_prod(p - q, -q, m))


@dataclass(frozen=True)
class HalfGamma:
    """Gamma at a half-integer point, stored as coefficient * sqrt(pi)."""

    coefficient: Fraction


def gamma_half(n: int) -> HalfGamma:
    """Gamma(n + 1/2) for any integer n, as a rational times sqrt(pi)."""
    if n >= 0:
        coeff = Fraction(factorial(2 * n), 4**n * factorial(n))
    else:
        m = -n
        coeff = Fraction((-1) ** m * 4**m * factorial(m), factorial(2 * m))
    return HalfGamma(coeff)
