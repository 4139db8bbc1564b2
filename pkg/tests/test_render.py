"""LaTeX/text emission and the canonical-form parser."""

from __future__ import annotations

from fractions import Fraction

import pytest

from piseries import (
    DomainError,
    build_spec,
    emit_latex,
    emit_text,
    entry_by_id,
    rhs_constant,
)
from piseries.render import parse_spec_latex, render_closed_form_text
from tests.support import random_specs

F = Fraction


def test_raw_entry_latex_pinned():
    assert (
        emit_latex(entry_by_id("ex-3.3"))
        == r"\frac{4}{\pi}=\sum_{n=0}^{\infty}\frac{(\frac{1}{2})_n^2}{(n+1)n!^2}"
    )


def test_presented_entry_latex_pinned():
    assert (
        emit_latex(entry_by_id("ex-3.6"))
        == r"\frac{16}{\pi}=5+\sum_{n=1}^{\infty}\frac{(\frac{1}{2})_n^2}{(n+1)!^2}"
    )
    assert (
        emit_latex(entry_by_id("ex-3.10"))
        == r"\frac{2048}{3\pi}=217+36\sum_{n=1}^{\infty}\frac{(\frac{1}{2})_n^2}{(n+2)!^2}"
    )


def test_scaled_fraction_latex_pinned():
    assert emit_latex(entry_by_id("ex-a13-k0")) == (
        r"\frac{9\sqrt{3}}{4\pi}=1+\frac{2}{9}"
        r"\sum_{n=0}^{\infty}\frac{(\frac{1}{3})_n(\frac{2}{3})_n}{(n+1)!^2}"
    )


def test_nested_surd_latex_pinned():
    got = emit_latex(entry_by_id("ex-a15-k0"))
    assert got.startswith(r"\frac{25\sqrt{10-2\sqrt{5}}}{16\pi}=1+\frac{4}{25}")


def test_text_rendering():
    assert emit_text(entry_by_id("ex-3.3")) == (
        "4/π = Σ[n≥0] (1/2)_{n}(1/2)_{n}/(n!(n+1)!)"
    )
    # scale of one is suppressed, peeled head kept
    assert emit_text(entry_by_id("ex-3.6")) == (
        "16/π = 5 + Σ[n≥2] (1/2)_{n−1}(1/2)_{n−1}/(n!n!)"
    )
    assert "36·Σ[n≥3]" in emit_text(entry_by_id("ex-3.10"))


def test_closed_form_text_numeric_fallback():
    text = render_closed_form_text(rhs_constant(build_spec(F(2, 7), 0, 0, 1)))
    assert "sin(2π/7)" in text and "π)" in text


def test_canonical_round_trip_random():
    for spec in random_specs(66, 25):
        assert parse_spec_latex(emit_latex(spec)) == spec


def test_canonical_round_trip_catalog():
    for eid in ("ex-3.3", "ex-3.6", "ex-3.10", "ex-a15-k0"):
        spec = entry_by_id(eid).spec
        assert parse_spec_latex(emit_latex(spec)) == spec


def test_emission_is_deterministic():
    entry = entry_by_id("ex-a110-k0")
    assert emit_latex(entry) == emit_latex(entry)
    assert emit_text(entry) == emit_text(entry)


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        parse_spec_latex("not latex at all")
    with pytest.raises(DomainError):
        parse_spec_latex(r"\sum_{n=0}^{\infty} x^n")


def test_parse_rejects_non_complementary_parameters():
    good = emit_latex(build_spec(F(1, 3), 0, 0, 1))
    # corrupt the second Pochhammer base so alpha + beta != 1
    bad = good.replace(r"(\frac{2}{3})", r"(\frac{1}{3})", 1)
    assert bad != good
    with pytest.raises(DomainError):
        parse_spec_latex(bad)


def test_emit_latex_rejects_unknown_objects():
    with pytest.raises(DomainError):
        emit_latex(42)
