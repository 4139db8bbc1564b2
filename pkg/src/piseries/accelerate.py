"""Sequence extrapolation on mpfr partial sums.

Two classic schemes, both returning (estimate, heuristic_error) where the
heuristic is the difference between the last two extrapolation depths —
an error *indicator*, not a certificate.

levin-u: the u-variant with beta = 1 and remainder model
omega_j = (1+j)(s_j - s_{j-1}), evaluated in closed form

            sum_j (-1)^j C(k,j) (1+j)^{k-1} s_j / omega_j
    L_k  =  ---------------------------------------------
            sum_j (-1)^j C(k,j) (1+j)^{k-1} 1   / omega_j

wynn-epsilon: the even columns of the recurrence
    eps_{k+1}^{(n)} = eps_{k-1}^{(n+1)} + 1/(eps_k^{(n+1)} - eps_k^{(n)}).

A stabilized sequence (an exactly repeated entry) is treated as converged
rather than as a failure; a genuinely degenerate table raises
NumericBreakdown.
"""

from __future__ import annotations

from math import comb

import gmpy2
from gmpy2 import mpfr

from .errors import DomainError, InsufficientData, NumericBreakdown

__all__ = ["levin_u", "wynn_epsilon", "accelerate"]

MIN_PARTIALS = 8


def _as_mpfr(partials) -> list:
    values = [x if isinstance(x, mpfr) else mpfr(x) for x in partials]
    if len(values) < MIN_PARTIALS:
        raise InsufficientData(
            f"need at least {MIN_PARTIALS} partial sums, got {len(values)}"
        )
    return values


def _levin_estimate(s: list, k: int):
    """L_k from partials s_0..s_k."""
    num = mpfr(0)
    den = mpfr(0)
    for j in range(k + 1):
        diff = s[j] - (s[j - 1] if j > 0 else mpfr(0))
        if diff == 0:
            # the sequence stopped moving at this precision: its value is
            # already the limit as far as we can resolve it
            return s[j]
        omega = (1 + j) * diff
        weight = (-1) ** j * comb(k, j) * (1 + j) ** (k - 1)
        num += weight * s[j] / omega
        den += weight / omega
    if den == 0:
        raise NumericBreakdown(f"levin-u denominator vanished at depth {k}")
    return num / den


def levin_u(partials, precision: int | None = None) -> tuple:
    """(estimate, |last two depths' difference|) for the u-transform."""
    s = _as_mpfr(partials)
    precision = precision or max(x.precision for x in s)
    k = len(s) - 1
    with gmpy2.context(precision=precision):
        deep = _levin_estimate(s, k)
        shallow = _levin_estimate(s, k - 1)
        if gmpy2.is_nan(deep) or gmpy2.is_infinite(deep):
            raise NumericBreakdown("levin-u produced a non-finite estimate")
        return deep, abs(deep - shallow)


def wynn_epsilon(partials, precision: int | None = None) -> tuple:
    """(estimate, |last two even columns' difference|) for the epsilon
    algorithm; odd columns are auxiliary and never reported."""
    s = _as_mpfr(partials)
    precision = precision or max(x.precision for x in s)
    with gmpy2.context(precision=precision):
        col_prev = [mpfr(0)] * (len(s) + 1)
        col_cur = list(s)
        evens = [col_cur[0]]
        for k in range(1, len(s)):
            nxt = []
            stabilized = None
            for i in range(len(col_cur) - 1):
                diff = col_cur[i + 1] - col_cur[i]
                if diff == 0:
                    stabilized = col_cur[i + 1]
                    break
                nxt.append(col_prev[i + 1] + 1 / diff)
            if stabilized is not None:
                if k % 2 == 1:
                    # equal entries in an even column: exact convergence
                    return stabilized, mpfr(0)
                break
            col_prev, col_cur = col_cur, nxt
            if k % 2 == 0:
                evens.append(col_cur[0])
        estimate = evens[-1]
        if gmpy2.is_nan(estimate) or gmpy2.is_infinite(estimate):
            raise NumericBreakdown("epsilon table degenerated to a non-finite value")
        error = abs(evens[-1] - evens[-2]) if len(evens) > 1 else abs(estimate)
        return estimate, error


_SCHEMES = {"levin-u": levin_u, "wynn-epsilon": wynn_epsilon}


def accelerate(partials, scheme: str = "levin-u", precision: int | None = None) -> tuple:
    """Dispatch to a named scheme; see levin_u / wynn_epsilon."""
    try:
        fn = _SCHEMES[scheme]
    except KeyError:
        raise DomainError(
            f"unknown scheme {scheme!r}; expected one of {sorted(_SCHEMES)}"
        ) from None
    return fn(partials, precision=precision)
