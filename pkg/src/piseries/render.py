"""Identity rendering: LaTeX display equations, unicode one-liners, and a
round-trip parser for the canonical spec form.

Two LaTeX styles on purpose:

* canonical — plain, fully braced, machine-readable; parse_spec_latex
  inverts it exactly (serializer/parser pair).
* display — catalog entries in book style: the constant on the left, the
  peeled head and scale spelled out, tails reindexed so every rising
  factorial carries a nonnegative shift, squares collapsed, and
  n!(n+1)! written as (n+1)n!^2.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError
from .series import (
    ClosedFormRHS,
    NormalizedIdentity,
    SeriesSpec,
    SurdConstant,
    build_spec,
    normalize_identity,
    rhs_constant,
)

__all__ = [
    "emit_latex",
    "emit_text",
    "render_closed_form_text",
    "parse_spec_latex",
]

MINUS = "\u2212"  # typographic minus used in unicode displays


def _frac_latex(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return rf"{sign}\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _over_pi_latex(coeff: Fraction, radical: str = "") -> str:
    """coeff * radical / pi as \\frac{...}{...\\pi}."""
    num, den = coeff.numerator, coeff.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    top = radical if num == 1 and radical else f"{num}{radical}"
    bottom = rf"\pi" if den == 1 else rf"{den}\pi"
    return rf"{sign}\frac{{{top}}}{{{bottom}}}"


def _sine_parts(sine: SurdConstant) -> tuple[Fraction, str, str]:
    """(coefficient, latex-radical, unicode-radical) with
    sin(pi alpha) = coefficient * radical; raises for numeric-only."""
    if sine.kind == "one":
        return Fraction(1), "", ""
    if sine.kind == "half":
        return Fraction(1, 2), "", ""
    if sine.kind == "simple-surd":
        coeff, rad = sine.surds[0]
        return coeff, rf"\sqrt{{{rad}}}", f"\u221a{rad}"
    if sine.kind == "scaled-surd-sum":
        coeff, rad = sine.surds[0]
        # rational part is +-coeff by construction: factor it out
        unit = sine.rational / coeff
        if abs(unit) != 1:
            raise DomainError(f"unexpected surd-sum shape {sine}")
        op, uop = ("-", MINUS) if unit < 0 else ("+", "+")
        return coeff, rf"(\sqrt{{{rad}}}{op}1)", f"(\u221a{rad}{uop}1)"
    if sine.kind == "nested-surd":
        coeff, base, inner_coeff, inner_rad = sine.nested
        op, uop = ("-", MINUS) if inner_coeff < 0 else ("+", "+")
        k = abs(inner_coeff)
        latex = rf"\sqrt{{{base}{op}{k}\sqrt{{{inner_rad}}}}}"
        unicode = f"\u221a({base}{uop}{k}\u221a{inner_rad})"
        return coeff, latex, unicode
    raise DomainError(f"no exact radical form for kind {sine.kind!r}")


def _rhs_latex(rhs: ClosedFormRHS) -> str:
    sine = rhs.sine
    if not sine.is_exact:
        r = rhs.rational_part
        p, q = sine.alpha.numerator, sine.alpha.denominator
        angle = rf"\frac{{\pi}}{{{q}}}" if p == 1 else rf"\frac{{{p}\pi}}{{{q}}}"
        num = "" if abs(r.numerator) == 1 else str(abs(r.numerator))
        sign = "-" if r < 0 else ""
        bottom = rf"\pi" if r.denominator == 1 else rf"{r.denominator}\pi"
        return rf"{sign}\frac{{{num}\sin({angle})}}{{{bottom}}}"
    coeff, radical, _ = _sine_parts(sine)
    return _over_pi_latex(rhs.rational_part * coeff, radical)


def render_closed_form_text(rhs: ClosedFormRHS) -> str:
    """Unicode one-line constant, e.g. '8√2/(3π)' or '25(√5−1)/(9π)'."""
    sine = rhs.sine
    pi = "\u03c0"
    if not sine.is_exact:
        r = rhs.rational_part
        p, q = sine.alpha.numerator, sine.alpha.denominator
        angle = f"{pi}/{q}" if p == 1 else f"{p}{pi}/{q}"
        num = f"{r.numerator}\u00b7" if r.numerator != 1 else ""
        den = pi if r.denominator == 1 else f"{r.denominator}{pi}"
        return f"{num}sin({angle})/({den})" if r.denominator != 1 else f"{num}sin({angle})/{pi}"
    coeff, _, radical = _sine_parts(sine)
    total = rhs.rational_part * coeff
    num, den = total.numerator, total.denominator
    sign = MINUS if num < 0 else ""
    num = abs(num)
    top = radical if num == 1 and radical else f"{num}{radical}"
    if den == 1:
        return f"{sign}{top}/{pi}"
    return f"{sign}{top}/({den}{pi})"


def _poch_display(alpha: Fraction, shift: int, power: int = 1) -> str:
    base = rf"(\frac{{{alpha.numerator}}}{{{alpha.denominator}}})"
    if shift == 0:
        sub = "_n"
    elif shift > 0:
        sub = rf"_{{n+{shift}}}"
    else:
        sub = rf"_{{n-{-shift}}}"
    return base + sub + ("^2" if power == 2 else "")


def _factorial_display(shift: int, power: int) -> str:
    body = "n!" if shift == 0 else rf"(n+{shift})!"
    return body + ("^2" if power == 2 else "")


def _tail_term_display(spec: SeriesSpec, reindex: int) -> str:
    """Term at n := n + reindex, collapsed for display."""
    sa, sb = spec.a + reindex, spec.b + reindex
    alpha, beta = spec.alpha, 1 - spec.alpha
    if alpha == beta and sa == sb:
        top = _poch_display(alpha, sa, 2)
    else:
        top = _poch_display(alpha, sa) + _poch_display(beta, sb)
    f1, f2 = reindex, reindex + spec.c
    if f1 == f2:
        bottom = _factorial_display(f1, 2)
    elif f2 == f1 + 1:
        # n!(n+1)! = (n+1) n!^2 and its shifted relatives
        factor = "(n+1)" if f1 == 0 else rf"(n+{f1 + 1})"
        bottom = factor + _factorial_display(f1, 2)
    else:
        bottom = _factorial_display(f1, 1) + r"\," + _factorial_display(f2, 1)
    return rf"\frac{{{top}}}{{{bottom}}}"


def _identity_latex(identity: NormalizedIdentity) -> str:
    spec = identity.spec
    h = spec.head_length
    start = identity.tail_start - h
    if start < 0:
        # over-peeled relative to the canonical reindex: fall back to a
        # shift that keeps the display start at 0
        h = identity.tail_start
        start = 0
    term_tex = _tail_term_display(spec, h)
    sum_tex = rf"\sum_{{n={start}}}^{{\infty}}{term_tex}"
    rhs_tex = _rhs_latex(identity.rhs)
    scale_tex = "" if identity.scale == 1 else _frac_latex(identity.scale)
    if identity.tail_start == 0 and identity.scale == 1:
        return rf"{rhs_tex}={sum_tex}"
    head_tex = _frac_latex(identity.head)
    return rf"{rhs_tex}={head_tex}+{scale_tex}{sum_tex}"


def _spec_latex(spec: SeriesSpec) -> str:
    """Canonical machine-readable form; parse_spec_latex inverts this."""
    alpha, beta = spec.alpha, 1 - spec.alpha

    def poch(fr: Fraction, shift: int) -> str:
        if shift == 0:
            sub = "{n}"
        elif shift > 0:
            sub = f"{{n+{shift}}}"
        else:
            sub = f"{{n-{-shift}}}"
        return rf"(\frac{{{fr.numerator}}}{{{fr.denominator}}})_{sub}"

    fact = "n!" if spec.c == 0 else rf"(n+{spec.c})!"
    lhs = (
        rf"\sum_{{n=0}}^{{\infty}}\frac{{{poch(alpha, spec.a)}{poch(beta, spec.b)}}}"
        rf"{{n!\,{fact}}}"
    )
    return rf"{lhs}={_rhs_latex(rhs_constant(spec))}"


_SPEC_RE = re.compile(
    r"\\sum_\{n=0\}\^\{\\infty\}\\frac\{"
    r"\(\\frac\{(\d+)\}\{(\d+)\}\)_\{n(?:([+-])(\d+))?\}"
    r"\(\\frac\{(\d+)\}\{(\d+)\}\)_\{n(?:([+-])(\d+))?\}"
    r"\}\{n!\\,(?:n!|\(n\+(\d+)\)!)\}"
)


def parse_spec_latex(text: str) -> SeriesSpec:
    """Recover a SeriesSpec from its canonical LaTeX form."""
    m = _SPEC_RE.search(text)
    if m is None:
        raise DomainError("not a canonical series display")
    p1, q1, sign_a, mag_a, p2, q2, sign_b, mag_b, c_str = m.groups()
    alpha = Fraction(int(p1), int(q1))
    beta = Fraction(int(p2), int(q2))
    if alpha + beta != 1:
        raise DomainError(f"factor arguments {alpha}, {beta} do not sum to 1")
    a = 0 if mag_a is None else int(mag_a) * (-1 if sign_a == "-" else 1)
    b = 0 if mag_b is None else int(mag_b) * (-1 if sign_b == "-" else 1)
    c = 0 if c_str is None else int(c_str)
    return build_spec(alpha, a, b, c)


def emit_latex(obj) -> str:
    """LaTeX for a SeriesSpec (canonical), NormalizedIdentity, or catalog
    entry (display style).  Deterministic."""
    if isinstance(obj, SeriesSpec):
        return _spec_latex(obj)
    if isinstance(obj, NormalizedIdentity):
        return _identity_latex(obj)
    if hasattr(obj, "identity"):
        return _identity_latex(obj.identity())
    raise DomainError(f"cannot render {type(obj).__name__}")


def emit_text(obj) -> str:
    """Unicode one-liner in original indexing (human-facing)."""
    if isinstance(obj, SeriesSpec):
        identity = normalize_identity(obj, 1, 0)
    elif isinstance(obj, NormalizedIdentity):
        identity = obj
    elif hasattr(obj, "identity"):
        identity = obj.identity()
    else:
        raise DomainError(f"cannot render {type(obj).__name__}")
    spec = identity.spec
    alpha, beta = spec.alpha, 1 - spec.alpha

    def poch_txt(fr: Fraction, shift: int) -> str:
        if shift == 0:
            sub = "n"
        elif shift > 0:
            sub = f"n+{shift}"
        else:
            sub = f"n{MINUS}{-shift}"
        return f"({fr.numerator}/{fr.denominator})_{{{sub}}}"

    fact = "n!" if spec.c == 0 else f"(n+{spec.c})!"
    term_txt = f"{poch_txt(alpha, spec.a)}{poch_txt(beta, spec.b)}/(n!{fact})"
    sum_txt = f"\u03a3[n\u2265{identity.tail_start}] {term_txt}"
    rhs_txt = render_closed_form_text(identity.rhs)
    if identity.tail_start == 0 and identity.scale == 1:
        return f"{rhs_txt} = {sum_txt}"
    if identity.scale == 1:
        scale_txt = ""
    elif identity.scale.denominator != 1:
        scale_txt = f"{identity.scale.numerator}/{identity.scale.denominator}\u00b7"
    else:
        scale_txt = f"{identity.scale.numerator}\u00b7"
    return f"{rhs_txt} = {identity.head} + {scale_txt}{sum_txt}"
