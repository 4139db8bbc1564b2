"""Partial sums and certified truncation error for series specs.

Three evaluation routes live here:

* partial_sum_exact — integer binary splitting over the term ratio
  polynomials; returns the exact rational S_N with no rounding anywhere.
* partial_sum_float — compensated (Kahan) summation in mpfr arithmetic,
  advancing terms by the same integer ratios.
* tail_bound — a certified upper bound on sum_{n>=N} term(n), valid once
  all remaining terms are positive (N >= head_length).

The tail bound compares the term ratio against the ratio of a majorant
with parameters (1, N+g; N+g+s), whose total is the closed form
(N+g+s-1)/(s-1).  The comparison condition

    (n+g)(n+1)(n+c+1) - (n+alpha+a)(n+1-alpha+b)(n+g+s) >= 0

is exactly linear in n — the cubic terms cancel identically and the
quadratic ones cancel because (alpha+a) + (1-alpha+b) + s = c + 2 — so it
holds for every n >= N iff the linear coefficient is >= 0 and the value at
n = N is >= 0.  The shift g is searched upward from 0; the smallest
admissible g gives the tightest bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import gmpy2
from gmpy2 import mpfr, mpq

from .accelerate import accelerate
from .errors import BoundUnavailable, BudgetExceeded, DomainError
from .series import SeriesSpec, term, term_ratio_integers

__all__ = [
    "SumResult",
    "partial_sum_exact",
    "partial_sum_float",
    "exact_prefix_sums",
    "tail_bound",
    "sum_to_digits",
    "sum_accelerated",
]


@dataclass(frozen=True)
class SumResult:
    """Outcome of a summation run.

    value is an exact Fraction for rigorous routes and an mpfr estimate for
    accelerated ones.  tail_bound (exact, rational) certifies
    |true sum - value| <= tail_bound when present; heuristic_error is the
    extrapolation's own non-certified error indicator.
    """

    value: object
    terms_used: int
    method: str
    tail_bound: Fraction | None = None
    heuristic_error: object | None = None


def _split(spec: SeriesSpec, lo: int, hi: int) -> tuple[int, int, int]:
    """(P, Q, T) over ratio factors for indices lo..hi-1, satisfying
    T/Q = sum_{n=lo}^{hi-1} prod_{m=lo}^{n-1} ratio(m) and P/Q the full
    ratio product."""
    if hi - lo == 1:
        num, den = term_ratio_integers(spec, lo)
        return num, den, den
    mid = (lo + hi) // 2
    p_left, q_left, t_left = _split(spec, lo, mid)
    p_right, q_right, t_right = _split(spec, mid, hi)
    return (
        p_left * p_right,
        q_left * q_right,
        t_left * q_right + p_left * t_right,
    )


def partial_sum_exact(spec: SeriesSpec, n_terms: int) -> Fraction:
    """Exact sum of terms 0..n_terms-1 by binary splitting."""
    if n_terms < 0:
        raise DomainError(f"n_terms must be >= 0, got {n_terms}")
    if n_terms == 0:
        return Fraction(0)
    first = term(spec, 0)
    if n_terms == 1:
        return first
    _, q, t = _split(spec, 0, n_terms)
    return Fraction(first.numerator * t, first.denominator * q)


def partial_sum_float(spec: SeriesSpec, n_terms: int, precision: int):
    """Sum of terms 0..n_terms-1 in mpfr at `precision` bits with Kahan
    compensation; terms advance by exact integer ratios."""
    if n_terms < 0:
        raise DomainError(f"n_terms must be >= 0, got {n_terms}")
    with gmpy2.context(precision=precision):
        if n_terms == 0:
            return mpfr(0)
        current = mpfr(mpq(term(spec, 0)))
        total = current
        comp = mpfr(0)
        for n in range(1, n_terms):
            num, den = term_ratio_integers(spec, n - 1)
            current = current * num / den
            y = current - comp
            t = total + y
            comp = (t - total) - y
            total = t
        return total


def exact_prefix_sums(
    spec: SeriesSpec,
    count: int,
    start: int = 0,
    scale: Fraction | int = 1,
    offset: Fraction | int = 0,
) -> list[Fraction]:
    """[offset + sum_{m=0}^{j} scale*term(start+m) for j in 0..count-1],
    computed incrementally with exact arithmetic."""
    scale = Fraction(scale)
    offset = Fraction(offset)
    sums: list[Fraction] = []
    if count <= 0:
        return sums
    current = scale * term(spec, start)
    acc = offset + current
    sums.append(acc)
    for j in range(1, count):
        num, den = term_ratio_integers(spec, start + j - 1)
        current = current * num / den
        acc += current
        sums.append(acc)
    return sums


def _majorant_shift(spec: SeriesSpec, n_from: int, g_max: int) -> tuple[int, Fraction, Fraction]:
    """Smallest g in 0..g_max whose comparison inequality holds from n_from
    on; returns (g, beta, gamma) with beta*n + gamma the exact slack."""
    alpha = spec.alpha
    big_a = alpha + spec.a
    big_b = 1 - alpha + spec.b
    ab = big_a * big_b
    s = spec.convergence_order
    c = spec.c
    for g in range(g_max + 1):
        beta = g * (c + 2) + (c + 1) - ab - (1 + spec.a + spec.b) * (g + s)
        gamma = g * (c + 1) - ab * (g + s)
        if beta >= 0 and beta * n_from + gamma >= 0:
            return g, beta, gamma
    raise BoundUnavailable(
        f"no majorant shift g <= {g_max} certifies the tail of {spec} from n = {n_from}"
    )


def tail_bound(spec: SeriesSpec, n_from: int, g_max: int = 64) -> Fraction:
    """Certified upper bound on sum_{n>=n_from} term(n), exact rational.

    Requires n_from >= max(head_length, 1) so that every bounded term is
    positive; raises BoundUnavailable otherwise, or when no shift g <= g_max
    validates the comparison at this n_from (retry with larger n_from).
    """
    if n_from < max(spec.head_length, 1):
        raise BoundUnavailable(
            f"tail of {spec} from n = {n_from} may contain non-positive terms; "
            f"need n >= {max(spec.head_length, 1)}"
        )
    g, _, _ = _majorant_shift(spec, n_from, g_max)
    s = spec.convergence_order
    return term(spec, n_from) * Fraction(n_from + g + s - 1, s - 1)


def _choose_rigorous_cutoff(
    spec: SeriesSpec, target: Fraction, max_terms: int
) -> tuple[int, Fraction]:
    """Double n from the first positive-tail index until the certified
    bound drops to target."""
    n = max(spec.head_length, 1)
    while True:
        if n > max_terms:
            raise BudgetExceeded(
                f"no certified cutoff <= {max_terms} terms reaches {target} for {spec}"
            )
        try:
            bound = tail_bound(spec, n)
        except BoundUnavailable:
            n *= 2
            continue
        if bound <= target:
            return n, bound
        n *= 2


ACCEL_COUNT_CAP = 4096


def sum_accelerated(
    prefixes: Callable[[int], Sequence[Fraction]],
    digits: int,
    max_terms: int,
    precision_bits: int,
    scheme: str = "levin-u",
    initial: int | None = None,
) -> SumResult:
    """Extrapolate a series limit from exact prefix sums.

    prefixes(k) must return the first k exact partial sums.  The partial
    count doubles until two successive extrapolations agree to `digits`
    significant digits; that cross-check is the (heuristic) accuracy gate.

    The count ladder stops at min(max_terms, ACCEL_COUNT_CAP): a scheme
    that has not stabilized by then is not going to, and exact prefixes
    beyond that scale cost more than the certified rigorous route.

    The transforms run above the requested precision by ~3 bits per
    partial: their alternating weights condition the evaluation like
    2^(2.5 k), so a fixed working precision would make deeper
    extrapolations *worse* and defeat the doubling cross-check.
    """
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    count = initial or max(12, digits + 10)
    cap = min(max_terms, ACCEL_COUNT_CAP)
    previous = None
    while True:
        if count > cap:
            raise BudgetExceeded(
                f"no agreement to {digits} digits within {cap} terms"
            )
        exact = prefixes(count)
        work = precision_bits + 3 * count + 32
        with gmpy2.context(precision=work):
            partials = [mpfr(mpq(s)) for s in exact]
            estimate, heuristic = accelerate(partials, scheme=scheme, precision=work)
            agreed = previous is not None and abs(estimate - previous) <= (
                mpfr(10) ** (-digits)
            ) * max(mpfr(1), abs(estimate))
        if agreed:
            with gmpy2.context(precision=precision_bits):
                return SumResult(
                    value=+estimate,
                    terms_used=count,
                    method=scheme,
                    tail_bound=None,
                    heuristic_error=+heuristic,
                )
        previous = estimate
        count *= 2


def sum_to_digits(
    spec: SeriesSpec,
    digits: int,
    mode: str = "accelerated",
    max_terms: int = 10**6,
    precision_bits: int | None = None,
    scheme: str = "levin-u",
) -> SumResult:
    """Evaluate the series to a digit target.

    mode "rigorous": exact partial sum cut where the certified tail bound
    is <= 10^-digits; value is the exact Fraction and tail_bound the
    certificate.  mode "accelerated": sequence extrapolation over exact
    prefix sums with a doubling cross-check; fast, not certified.
    """
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    precision = precision_bits or (4 * digits + 64)
    if mode == "rigorous":
        target = Fraction(1, 10**digits)
        n, bound = _choose_rigorous_cutoff(spec, target, max_terms)
        return SumResult(
            value=partial_sum_exact(spec, n),
            terms_used=n,
            method="exact-rigorous",
            tail_bound=bound,
            heuristic_error=None,
        )
    if mode == "accelerated":
        return sum_accelerated(
            lambda k: exact_prefix_sums(spec, k),
            digits=digits,
            max_terms=max_terms,
            precision_bits=precision,
            scheme=scheme,
        )
    raise DomainError(f"unknown mode {mode!r}; expected 'rigorous' or 'accelerated'")
