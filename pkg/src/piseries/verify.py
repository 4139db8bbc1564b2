"""Dual-route verification: summed series vs closed-form constants.

Every check compares a left-hand side produced by the summation engine
against a right-hand side evaluated from the exact closed form through the
self-validated pi.  The two sides share no code path beyond the parameter
tuple itself, so agreement is evidence and disagreement is diagnosis.

Pass criteria by mode:
  accelerated — relative error <= 10^-digits (heuristic route);
  rigorous    — absolute error <= certified tail bound + 4 ulps of RHS
                rounding slack at the working precision.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import BoundUnavailable, BudgetExceeded, DomainError
from .floatfmt import decimal_str, fraction_decimal_upper
from .piref import eval_closed_form
from .series import (
    ClosedFormRHS,
    NormalizedIdentity,
    SeriesSpec,
    build_spec,
    rhs_constant,
    term,
    term_ratio_integers,
)
from .summation import (
    SumResult,
    exact_prefix_sums,
    partial_sum_exact,
    sum_accelerated,
    sum_to_digits,
    tail_bound,
)

__all__ = [
    "VerificationReport",
    "verify_spec",
    "verify_normalized",
    "verify_gauss_reduced",
    "verify_symmetry",
    "report_to_dict",
    "report_to_json",
]


@dataclass(frozen=True)
class VerificationReport:
    spec: SeriesSpec
    method: str
    terms_used: int
    working_precision_bits: int
    lhs: object
    rhs: object
    abs_error: object
    rel_error: object
    digits_agreed: int
    tail_bound: Fraction | None
    passed: bool
    elapsed_ms: int


def _digits_agreed(rel_error, precision: int) -> int:
    if rel_error == 0:
        return int(precision * math.log10(2))
    if rel_error >= 1:
        return 0
    return int(math.floor(-gmpy2.log10(rel_error)))


def _resolve_precision(digits: int, precision_bits: int | None) -> int:
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    return precision_bits or (4 * digits + 64)


def _finish_report(
    spec: SeriesSpec,
    result: SumResult,
    rhs: ClosedFormRHS,
    digits: int,
    precision: int,
    started: float,
    scaled_bound: Fraction | None = None,
) -> VerificationReport:
    rhs_value = eval_closed_form(rhs, precision)
    bound = scaled_bound if scaled_bound is not None else result.tail_bound
    with gmpy2.context(precision=precision):
        lhs_value = (
            mpfr(mpq(result.value))
            if isinstance(result.value, (Fraction, int))
            else result.value
        )
        abs_error = abs(lhs_value - rhs_value)
        rel_error = abs_error / abs(rhs_value)
        if bound is not None:
            # 4 ulps of slack absorbs the RHS evaluation rounding
            exponent = gmpy2.get_exp(rhs_value)
            slack = mpfr(2) ** (exponent - precision + 2)
            passed = bool(abs_error <= mpq(bound) + slack)
        else:
            passed = bool(rel_error <= mpfr(10) ** (-digits))
        digits_agreed = _digits_agreed(rel_error, precision)
    return VerificationReport(
        spec=spec,
        method=result.method,
        terms_used=result.terms_used,
        working_precision_bits=precision,
        lhs=lhs_value,
        rhs=rhs_value,
        abs_error=abs_error,
        rel_error=rel_error,
        digits_agreed=digits_agreed,
        tail_bound=bound,
        passed=passed,
        elapsed_ms=int(round((time.perf_counter() - started) * 1000)),
    )


def verify_spec(
    spec: SeriesSpec,
    digits: int = 20,
    mode: str = "accelerated",
    max_terms: int = 10**6,
    precision_bits: int | None = None,
    rhs_override: ClosedFormRHS | None = None,
) -> VerificationReport:
    """Verify that the series of `spec` equals its closed form.

    rhs_override substitutes a different right-hand side (used by negative
    controls to confirm the comparison actually has teeth).
    """
    started = time.perf_counter()
    precision = _resolve_precision(digits, precision_bits)
    result = sum_to_digits(
        spec, digits, mode=mode, max_terms=max_terms, precision_bits=precision
    )
    rhs = rhs_override if rhs_override is not None else rhs_constant(spec)
    return _finish_report(spec, result, rhs, digits, precision, started)


def verify_normalized(
    identity: NormalizedIdentity,
    digits: int = 20,
    mode: str = "accelerated",
    max_terms: int = 10**6,
    precision_bits: int | None = None,
    rhs_override: ClosedFormRHS | None = None,
) -> VerificationReport:
    """Verify a peeled-and-rescaled identity: head + scaled tail vs scaled
    closed form.  Exactness of the peeling means this equals scale * (raw
    series), but the check runs through the normalized route on purpose."""
    started = time.perf_counter()
    precision = _resolve_precision(digits, precision_bits)
    spec = identity.spec
    rhs = rhs_override if rhs_override is not None else identity.rhs
    if mode == "rigorous":
        target = Fraction(1, 10**digits) / abs(identity.scale)
        n = max(spec.head_length, identity.tail_start, 1)
        while True:
            if n > max_terms:
                raise BudgetExceeded(
                    f"no certified cutoff <= {max_terms} terms for scale "
                    f"{identity.scale} of {spec}"
                )
            try:
                bound = tail_bound(spec, n)
            except BoundUnavailable:
                n *= 2
                continue
            if bound <= target:
                break
            n *= 2
        tail_sum = identity.scale * (
            partial_sum_exact(spec, n) - partial_sum_exact(spec, identity.tail_start)
        )
        result = SumResult(
            value=identity.head + tail_sum,
            terms_used=n,
            method="exact-rigorous",
            tail_bound=None,
        )
        scaled_bound = abs(identity.scale) * bound
        return _finish_report(
            spec, result, rhs, digits, precision, started, scaled_bound=scaled_bound
        )
    result = sum_accelerated(
        lambda k: exact_prefix_sums(
            spec, k, start=identity.tail_start, scale=identity.scale,
            offset=identity.head,
        ),
        digits=digits,
        max_terms=max_terms,
        precision_bits=precision,
    )
    result = SumResult(
        value=result.value,
        terms_used=identity.tail_start + result.terms_used,
        method=result.method,
        tail_bound=None,
        heuristic_error=result.heuristic_error,
    )
    return _finish_report(spec, result, rhs, digits, precision, started)


def verify_gauss_reduced(
    alpha: Fraction | str,
    a: int,
    b: int,
    c: int,
    digits: int = 10,
    mode: str = "accelerated",
    max_terms: int = 10**6,
    precision_bits: int | None = None,
) -> VerificationReport:
    """Build a spec from raw parameters and verify it; the closed form used
    as RHS is the summation identity this whole package rests on."""
    return verify_spec(
        build_spec(alpha, a, b, c),
        digits=digits,
        mode=mode,
        max_terms=max_terms,
        precision_bits=precision_bits,
    )


def _swap(spec: SeriesSpec) -> SeriesSpec:
    return build_spec(1 - spec.alpha, spec.b, spec.a, spec.c)


def verify_symmetry(specs, n_terms: int = 200) -> bool:
    """(alpha, a, b, c) -> (1-alpha, b, a, c) must leave every term and the
    closed form unchanged.  Exact check; returns False on any mismatch."""
    for spec in specs:
        mirror = _swap(spec)
        t_spec = term(spec, 0)
        t_mirror = term(mirror, 0)
        for n in range(n_terms):
            if t_spec != t_mirror:
                return False
            num_s, den_s = term_ratio_integers(spec, n)
            num_m, den_m = term_ratio_integers(mirror, n)
            t_spec = t_spec * num_s / den_s
            t_mirror = t_mirror * num_m / den_m
        rhs_s = rhs_constant(spec)
        rhs_m = rhs_constant(mirror)
        if rhs_s.rational_part != rhs_m.rational_part:
            return False
        if rhs_s.sine != rhs_m.sine:
            return False
    return True


def report_to_dict(report: VerificationReport) -> dict:
    """Schema-stable dict; every number is a decimal string."""
    spec = report.spec
    return {
        "spec": {
            "alpha": f"{spec.alpha.numerator}/{spec.alpha.denominator}",
            "a": spec.a,
            "b": spec.b,
            "c": spec.c,
        },
        "method": report.method,
        "terms_used": report.terms_used,
        "working_precision_bits": report.working_precision_bits,
        "lhs": decimal_str(report.lhs),
        "rhs": decimal_str(report.rhs),
        "abs_error": decimal_str(report.abs_error),
        "rel_error": decimal_str(report.rel_error),
        "digits_agreed": report.digits_agreed,
        "tail_bound": (
            fraction_decimal_upper(report.tail_bound)
            if report.tail_bound is not None
            else None
        ),
        "pass": report.passed,
        "elapsed_ms": report.elapsed_ms,
    }


def report_to_json(report: VerificationReport, indent: int | None = 2) -> str:
    return json.dumps(report_to_dict(report), indent=indent)
