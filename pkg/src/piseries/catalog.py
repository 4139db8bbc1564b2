"""Fixed catalog of printable identities and their parametric families.

Explicit entries carry the presentation (scale factor, peeled head) under
which the constant takes its familiar printed shape, e.g.

    16/pi      =   5 + sum_{n>=2} (1/2)_{n-1}^2 / n!^2          (ex-3.6)
    8*sqrt(2)/(3 pi) = 1 + (3/16) sum_{n>=1} (1/4)_{n-1}(3/4)_{n-1}/n!^2

Families fix (alpha, a, b) and sweep c = k; their scale factors are
coeff * (k + shift)! and their heads are polynomials in k, both anchored
by tests against exact normalization.

Ids and ordering are stable public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .pochhammer import factorial
from .render import render_closed_form_text
from .series import (
    NormalizedIdentity,
    SeriesSpec,
    build_spec,
    normalize_identity,
)

__all__ = [
    "CatalogEntry",
    "CatalogFamily",
    "catalog_entries",
    "catalog_families",
    "catalog_index",
    "entry_by_id",
]


@dataclass(frozen=True)
class CatalogEntry:
    """One printable identity: a spec plus its presentation."""

    id: str
    spec: SeriesSpec
    scale: Fraction
    head_terms: int
    head: Fraction
    citation: str
    rhs_display: str

    @property
    def is_presented(self) -> bool:
        return self.head_terms > 0 or self.scale != 1

    def identity(self) -> NormalizedIdentity:
        return normalize_identity(self.spec, self.scale, self.head_terms)


@dataclass(frozen=True)
class CatalogFamily:
    """Entries parameterized by c = k >= k_min with scale
    scale_coeff * (k + scale_shift)!  (plain scale_coeff when shift is
    None) and head given by head_poly in k (lowest degree first)."""

    id: str
    citation: str
    alpha: Fraction
    a: int
    b: int
    k_min: int
    head_terms: int
    scale_coeff: Fraction
    scale_shift: int | None
    head_poly: tuple[int, ...]

    def spec_of(self, k: int) -> SeriesSpec:
        return build_spec(self.alpha, self.a, self.b, k)

    def scale_of(self, k: int) -> Fraction:
        if self.scale_shift is None:
            return self.scale_coeff
        return self.scale_coeff * factorial(k + self.scale_shift)

    def head_of(self, k: int) -> Fraction:
        return Fraction(sum(coeff * k**i for i, coeff in enumerate(self.head_poly)))

    def instantiate(self, k: int) -> CatalogEntry:
        if k < self.k_min:
            raise DomainError(f"family {self.id} starts at k = {self.k_min}, got {k}")
        spec = self.spec_of(k)
        scale = self.scale_of(k)
        identity = normalize_identity(spec, scale, self.head_terms)
        return CatalogEntry(
            id=f"{self.id}-k{k}",
            spec=spec,
            scale=scale,
            head_terms=self.head_terms,
            head=identity.head,
            citation=f"{self.citation}, k={k}",
            rhs_display=render_closed_form_text(identity.rhs),
        )


def _entry(
    id: str,
    citation: str,
    alpha: Fraction,
    a: int,
    b: int,
    c: int,
    scale: Fraction | int = 1,
    head_terms: int = 0,
) -> CatalogEntry:
    spec = build_spec(alpha, a, b, c)
    identity = normalize_identity(spec, Fraction(scale), head_terms)
    return CatalogEntry(
        id=id,
        spec=spec,
        scale=Fraction(scale),
        head_terms=head_terms,
        head=identity.head,
        citation=citation,
        rhs_display=render_closed_form_text(identity.rhs),
    )


_HALF = Fraction(1, 2)

_ENTRIES = (
    _entry("ex-3.3", "alpha=1/2 squared series, c=1", _HALF, 0, 0, 1),
    _entry("ex-3.4", "alpha=1/2 squared series, c=2", _HALF, 0, 0, 2),
    _entry(
        "ex-3.6", "alpha=1/2 double back-shift, c=0", _HALF, -1, -1, 0,
        scale=1, head_terms=2,
    ),
    _entry(
        "ex-3.7", "alpha=1/2 double back-shift, c=1", _HALF, -1, -1, 1,
        scale=2, head_terms=2,
    ),
    _entry(
        "ex-3.10", "alpha=1/2 quadruple back-shift, c=0", _HALF, -2, -2, 0,
        scale=36, head_terms=3,
    ),
    _entry(
        "ex-a13-k0", "alpha=1/3 back-shift, k=0", Fraction(1, 3), -1, -1, 0,
        scale=Fraction(2, 9), head_terms=1,
    ),
    _entry(
        "ex-a14-k0", "alpha=1/4 back-shift, k=0", Fraction(1, 4), -1, -1, 0,
        scale=Fraction(3, 16), head_terms=1,
    ),
    _entry(
        "ex-a16-k0", "alpha=1/6 back-shift, k=0", Fraction(1, 6), -1, -1, 0,
        scale=Fraction(5, 36), head_terms=1,
    ),
    _entry(
        "ex-a110-k0", "alpha=1/10 back-shift, k=0", Fraction(1, 10), -1, -1, 0,
        scale=Fraction(9, 100), head_terms=1,
    ),
    _entry(
        "ex-a15-k0", "alpha=1/5 back-shift, k=0", Fraction(1, 5), -1, -1, 0,
        scale=Fraction(4, 25), head_terms=1,
    ),
)

_FAMILIES = (
    CatalogFamily(
        id="sp-3.2", citation="alpha=1/2 squared series, c=k",
        alpha=_HALF, a=0, b=0, k_min=1, head_terms=0,
        scale_coeff=Fraction(1), scale_shift=None, head_poly=(0,),
    ),
    CatalogFamily(
        id="sp-3.5", citation="alpha=1/2 double back-shift, c=k",
        alpha=_HALF, a=-1, b=-1, k_min=0, head_terms=2,
        scale_coeff=Fraction(1), scale_shift=1, head_poly=(5, 4),
    ),
    CatalogFamily(
        id="sp-3.9", citation="alpha=1/2 quadruple back-shift, c=k",
        alpha=_HALF, a=-2, b=-2, k_min=0, head_terms=3,
        scale_coeff=Fraction(18), scale_shift=2, head_poly=(217, 168, 32),
    ),
    CatalogFamily(
        id="sp-a13", citation="alpha=1/3 back-shift, c=k",
        alpha=Fraction(1, 3), a=-1, b=-1, k_min=0, head_terms=1,
        scale_coeff=Fraction(2, 9), scale_shift=0, head_poly=(1,),
    ),
    CatalogFamily(
        id="sp-a14", citation="alpha=1/4 back-shift, c=k",
        alpha=Fraction(1, 4), a=-1, b=-1, k_min=0, head_terms=1,
        scale_coeff=Fraction(3, 16), scale_shift=0, head_poly=(1,),
    ),
    CatalogFamily(
        id="sp-a16", citation="alpha=1/6 back-shift, c=k",
        alpha=Fraction(1, 6), a=-1, b=-1, k_min=0, head_terms=1,
        scale_coeff=Fraction(5, 36), scale_shift=0, head_poly=(1,),
    ),
    CatalogFamily(
        id="sp-a110", citation="alpha=1/10 back-shift, c=k",
        alpha=Fraction(1, 10), a=-1, b=-1, k_min=0, head_terms=1,
        scale_coeff=Fraction(9, 100), scale_shift=0, head_poly=(1,),
    ),
    CatalogFamily(
        id="sp-a15", citation="alpha=1/5 back-shift, c=k",
        alpha=Fraction(1, 5), a=-1, b=-1, k_min=0, head_terms=1,
        scale_coeff=Fraction(4, 25), scale_shift=0, head_poly=(1,),
    ),
)


def catalog_entries() -> tuple[CatalogEntry, ...]:
    """The explicit identities, stable ids, stable order."""
    return _ENTRIES


def catalog_families() -> tuple[CatalogFamily, ...]:
    """The parametric families, stable ids, stable order."""
    return _FAMILIES


def catalog_index() -> dict[str, CatalogEntry | CatalogFamily]:
    index: dict[str, CatalogEntry | CatalogFamily] = {}
    for item in (*_ENTRIES, *_FAMILIES):
        index[item.id] = item
    return index


def entry_by_id(entry_id: str) -> CatalogEntry:
    """Resolve an explicit entry id, or a family id suffixed -k<k>."""
    index = catalog_index()
    item = index.get(entry_id)
    if isinstance(item, CatalogEntry):
        return item
    if item is None:
        for family in _FAMILIES:
            prefix = f"{family.id}-k"
            if entry_id.startswith(prefix):
                try:
                    return family.instantiate(int(entry_id[len(prefix):]))
                except ValueError:
                    break
    raise DomainError(f"unknown catalog id {entry_id!r}")
