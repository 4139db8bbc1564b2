"""Core model of the four-parameter series family and its closed form.

A spec (alpha, a, b, c) with rational non-integer alpha in (0, 1), integer
shifts a and b, and integer c >= 0 subject to c - a - b >= 1 denotes the
convergent series

    sum_{n>=0} (alpha)_{a+n} (1-alpha)_{b+n} / (n! (c+n)!)

whose value has the closed form

    (alpha)_a (1-alpha)_b (c-a-b-1)!
    --------------------------------- * sin(pi alpha) / pi .
    (alpha)_{c-b} (1-alpha)_{c-a}

Everything on this page is exact rational arithmetic; the only irrational
ingredients, sin(pi alpha) and pi itself, are carried symbolically
(SurdConstant) and evaluated elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .pochhammer import factorial, poch

__all__ = [
    "SeriesSpec",
    "build_spec",
    "term",
    "term_ratio",
    "term_ratio_integers",
    "SurdConstant",
    "sin_pi_rational",
    "ClosedFormRHS",
    "rhs_constant",
    "NormalizedIdentity",
    "normalize_identity",
]


@dataclass(frozen=True)
class SeriesSpec:
    """Validated parameter tuple; construct through build_spec."""

    alpha: Fraction
    a: int
    b: int
    c: int

    @property
    def convergence_order(self) -> int:
        """Exponent s with term(n) ~ n^-s; always >= 2 on the domain."""
        return self.c - self.a - self.b + 1

    @property
    def head_length(self) -> int:
        """Index from which every term is strictly positive."""
        return max(-self.a, -self.b, 0)

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, a={self.a}, b={self.b}, c={self.c})"


def build_spec(alpha: Fraction | str | tuple, a: int, b: int, c: int) -> SeriesSpec:
    """Validate parameters and return a SeriesSpec.

    alpha may be a Fraction, a "p/q" string, or a (p, q) pair; it is reduced
    to lowest terms.  Raises DomainError for alpha outside (0, 1), integer
    alpha, negative c, or c - a - b < 1 (the series would converge too
    slowly or not at all).
    """
    if isinstance(alpha, tuple):
        alpha = Fraction(*alpha)
    else:
        alpha = Fraction(alpha)
    if not (0 < alpha < 1):
        raise DomainError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    if alpha.denominator == 1:
        raise DomainError("alpha must not be an integer")
    for name, value in (("a", a), ("b", b), ("c", c)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"{name} must be an int, got {value!r}")
    if c < 0:
        raise DomainError(f"c must be >= 0, got {c}")
    if c - a - b < 1:
        raise DomainError(
            f"need c - a - b >= 1 for convergence, got {c} - {a} - {b} = {c - a - b}"
        )
    return SeriesSpec(alpha, a, b, c)


def term(spec: SeriesSpec, n: int) -> Fraction:
    """Exact n-th term, n >= 0."""
    if n < 0:
        raise DomainError(f"term index must be >= 0, got {n}")
    num = poch(spec.alpha, spec.a + n) * poch(1 - spec.alpha, spec.b + n)
    return num / (factorial(n) * factorial(spec.c + n))


def term_ratio(spec: SeriesSpec, n: int) -> Fraction:
    """term(n+1) / term(n); never zero and pole-free on the domain."""
    alpha = spec.alpha
    return Fraction(
        (alpha + spec.a + n) * (1 - alpha + spec.b + n),
        (n + 1) * (spec.c + n + 1),
    )


def term_ratio_integers(spec: SeriesSpec, n: int) -> tuple[int, int]:
    """term(n+1)/term(n) as an integer pair (num, den) with den > 0.

    Clearing alpha = p/q from term_ratio gives

        num = (p + (a + n) q) (q - p + (b + n) q)
        den = q^2 (n + 1) (c + n + 1)

    which binary splitting multiplies without rational reductions.
    """
    p, q = spec.alpha.numerator, spec.alpha.denominator
    num = (p + (spec.a + n) * q) * (q - p + (spec.b + n) * q)
    den = q * q * (n + 1) * (spec.c + n + 1)
    return num, den


@dataclass(frozen=True)
class SurdConstant:
    """sin(pi alpha) in exact closed form where one exists.

    value = rational + sum coeff_i sqrt(radicand_i)           (surds)
          + coeff sqrt(base + inner_coeff sqrt(inner_radicand))  (nested)

    alpha is stored folded into (0, 1/2], using sin(pi x) = sin(pi (1-x)),
    so specs related by alpha <-> 1-alpha compare equal.  kind is one of
    "one", "half", "simple-surd", "scaled-surd-sum", "nested-surd",
    "numeric-only"; for numeric-only the symbolic fields are empty and
    evaluation falls back to a high-precision sine.
    """

    kind: str
    rational: Fraction
    surds: tuple[tuple[Fraction, int], ...]
    nested: tuple[Fraction, int, int, int] | None
    alpha: Fraction

    @property
    def is_exact(self) -> bool:
        return self.kind != "numeric-only"


def sin_pi_rational(alpha: Fraction) -> SurdConstant:
    """Classify sin(pi p/q) into its exact surd form for small q.

    Exact forms exist here for q in {2, 3, 4, 5, 6, 10}; all other
    denominators yield kind "numeric-only".
    """
    alpha = Fraction(alpha)
    if not (0 < alpha < 1) or alpha.denominator == 1:
        raise DomainError(f"alpha must be a non-integer in (0, 1), got {alpha}")
    folded = min(alpha, 1 - alpha)
    p, q = folded.numerator, folded.denominator
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    if q == 2:
        return SurdConstant("one", Fraction(1), (), None, folded)
    if q == 6:
        return SurdConstant("half", half, (), None, folded)
    if q == 3:
        return SurdConstant("simple-surd", Fraction(0), ((half, 3),), None, folded)
    if q == 4:
        return SurdConstant("simple-surd", Fraction(0), ((half, 2),), None, folded)
    if q == 10:
        # sin(pi/10) = (sqrt(5) - 1)/4,  sin(3 pi/10) = (sqrt(5) + 1)/4
        sign = -1 if p == 1 else 1
        return SurdConstant(
            "scaled-surd-sum", sign * quarter, ((quarter, 5),), None, folded
        )
    if q == 5:
        # sin(pi/5) = sqrt(10 - 2 sqrt(5))/4,  sin(2 pi/5) = sqrt(10 + 2 sqrt(5))/4
        inner = -2 if p == 1 else 2
        return SurdConstant("nested-surd", Fraction(0), (), (quarter, 10, inner, 5), folded)
    return SurdConstant("numeric-only", Fraction(0), (), None, folded)


@dataclass(frozen=True)
class ClosedFormRHS:
    """Exact value of a series: rational_part * sine / pi."""

    rational_part: Fraction
    sine: SurdConstant

    def scaled(self, factor: Fraction) -> "ClosedFormRHS":
        return ClosedFormRHS(self.rational_part * factor, self.sine)


def rhs_constant(spec: SeriesSpec) -> ClosedFormRHS:
    """Closed form of the series sum for a validated spec.

    The rational aggregate is

        (alpha)_a (1-alpha)_b (c-a-b-1)! / ((alpha)_{c-b} (1-alpha)_{c-a})

    and the transcendental factor sin(pi alpha)/pi is carried symbolically.
    """
    alpha = spec.alpha
    s = spec.convergence_order
    rational = (
        poch(alpha, spec.a)
        * poch(1 - alpha, spec.b)
        * factorial(s - 2)
        / (poch(alpha, spec.c - spec.b) * poch(1 - alpha, spec.c - spec.a))
    )
    return ClosedFormRHS(rational, sin_pi_rational(alpha))


@dataclass(frozen=True)
class NormalizedIdentity:
    """A series identity with its first few terms peeled off and rescaled.

    Printed catalog forms read  scaled_rhs = head + sum of scaled tail ,
    where head collects the peeled terms exactly:

        scale * sum_{n>=0} term(n)
            = head + sum_{m>=0} scale * term(tail_start + m).
    """

    spec: SeriesSpec
    scale: Fraction
    head: Fraction
    tail_start: int
    rhs: ClosedFormRHS

    def tail_term(self, m: int) -> Fraction:
        """m-th term of the scaled tail, m >= 0; strictly positive when
        tail_start >= head_length."""
        return self.scale * term(self.spec, self.tail_start + m)


def normalize_identity(
    spec: SeriesSpec,
    scale: Fraction | int = 1,
    head_terms: int | None = None,
) -> NormalizedIdentity:
    """Peel head_terms leading terms (default: spec.head_length, past any
    sign changes) and multiply through by a nonzero rational scale."""
    scale = Fraction(scale)
    if scale == 0:
        raise DomainError("scale must be nonzero")
    if head_terms is None:
        head_terms = spec.head_length
    if head_terms < 0:
        raise DomainError(f"head_terms must be >= 0, got {head_terms}")
    head = scale * sum((term(spec, n) for n in range(head_terms)), Fraction(0))
    return NormalizedIdentity(
        spec=spec,
        scale=scale,
        head=head,
        tail_start=head_terms,
        rhs=rhs_constant(spec).scaled(scale),
    )
