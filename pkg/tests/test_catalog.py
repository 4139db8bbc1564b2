"""The frozen identity catalog: contents, presentation, self-consistency."""

from __future__ import annotations

from fractions import Fraction

import pytest

from piseries import (
    DomainError,
    build_spec,
    catalog_entries,
    catalog_families,
    entry_by_id,
    normalize_identity,
)
from piseries.catalog import catalog_index

F = Fraction

EXPECTED_IDS = [
    "ex-3.3",
    "ex-3.4",
    "ex-3.6",
    "ex-3.7",
    "ex-3.10",
    "ex-a13-k0",
    "ex-a14-k0",
    "ex-a16-k0",
    "ex-a110-k0",
    "ex-a15-k0",
]

EXPECTED_FAMILY_IDS = [
    "sp-3.2",
    "sp-3.5",
    "sp-3.9",
    "sp-a13",
    "sp-a14",
    "sp-a16",
    "sp-a110",
    "sp-a15",
]

# displayed constant on the left of each printed identity
EXPECTED_DISPLAYS = {
    "ex-3.3": "4/π",
    "ex-3.4": "16/(9π)",
    "ex-3.6": "16/π",
    "ex-3.7": "256/(9π)",
    "ex-3.10": "2048/(3π)",
    "ex-a13-k0": "9√3/(4π)",
    "ex-a14-k0": "8√2/(3π)",
    "ex-a16-k0": "18/(5π)",
    "ex-a110-k0": "25(√5−1)/(9π)",
    "ex-a15-k0": "25√(10−2√5)/(16π)",
}

EXPECTED_HEADS = {
    "ex-3.3": F(0),
    "ex-3.4": F(0),
    "ex-3.6": F(5),
    "ex-3.7": F(9),
    "ex-3.10": F(217),
    "ex-a13-k0": F(1),
    "ex-a14-k0": F(1),
    "ex-a16-k0": F(1),
    "ex-a110-k0": F(1),
    "ex-a15-k0": F(1),
}


def test_entry_ids_and_order_are_stable():
    assert [e.id for e in catalog_entries()] == EXPECTED_IDS
    assert [f.id for f in catalog_families()] == EXPECTED_FAMILY_IDS


def test_catalog_sizes():
    assert len(catalog_entries()) == 10
    assert len(catalog_families()) == 8
    assert len(catalog_index()) == 18


def test_displayed_constants():
    for entry in catalog_entries():
        assert entry.rhs_display == EXPECTED_DISPLAYS[entry.id], entry.id


def test_stored_heads():
    for entry in catalog_entries():
        assert entry.head == EXPECTED_HEADS[entry.id], entry.id


def test_slowest_entry_parameters():
    entry = entry_by_id("ex-3.3")
    assert entry.spec == build_spec(F(1, 2), 0, 0, 1)
    assert entry.scale == 1 and entry.head_terms == 0
    assert not entry.is_presented


def test_presented_entry_parameters():
    entry = entry_by_id("ex-a14-k0")
    assert entry.spec == build_spec(F(1, 4), -1, -1, 0)
    assert entry.scale == F(3, 16)
    assert entry.head_terms == 1 and entry.head == 1
    assert entry.is_presented


def test_entry_presentation_is_consistent():
    # the stored head must be exactly what peeling head_terms terms of the
    # scaled series produces; nothing in the table may drift from the math
    for entry in catalog_entries():
        ident = normalize_identity(entry.spec, entry.scale, entry.head_terms)
        assert ident.head == entry.head, entry.id
        assert ident.tail_start == entry.head_terms, entry.id
        assert entry.identity() == ident


@pytest.mark.parametrize("family_id", EXPECTED_FAMILY_IDS)
def test_family_instantiation_is_consistent(family_id):
    family = catalog_index()[family_id]
    for k in range(family.k_min, family.k_min + 4):
        entry = family.instantiate(k)
        assert entry.id == f"{family_id}-k{k}"
        ident = normalize_identity(entry.spec, entry.scale, entry.head_terms)
        assert entry.head == ident.head == family.head_of(k)


def test_family_head_polynomials():
    index = catalog_index()
    for k in range(0, 6):
        assert index["sp-3.5"].head_of(k) == 4 * k + 5
        assert index["sp-3.9"].head_of(k) == 32 * k**2 + 168 * k + 217
        assert index["sp-a13"].head_of(k) == 1


def test_family_scale_factories():
    index = catalog_index()
    assert index["sp-3.2"].scale_of(5) == 1
    assert index["sp-3.5"].scale_of(3) == 24  # (k+1)!
    assert index["sp-3.9"].scale_of(1) == 108  # 18 (k+2)!
    assert index["sp-a13"].scale_of(2) == F(4, 9)  # (2/9) k!


def test_families_extend_explicit_entries():
    # family members at the low end coincide with frozen explicit entries
    index = catalog_index()
    e36 = entry_by_id("ex-3.6")
    f = index["sp-3.5"].instantiate(0)
    assert (f.spec, f.scale, f.head) == (e36.spec, e36.scale, e36.head)
    e37 = entry_by_id("ex-3.7")
    f = index["sp-3.5"].instantiate(1)
    assert (f.spec, f.scale, f.head) == (e37.spec, e37.scale, e37.head)
    assert index["sp-3.2"].spec_of(1) == entry_by_id("ex-3.3").spec
    assert index["sp-3.2"].spec_of(2) == entry_by_id("ex-3.4").spec


def test_entry_by_id_resolves_family_members():
    entry = entry_by_id("sp-3.5-k4")
    assert entry.spec == build_spec(F(1, 2), -1, -1, 4)
    assert entry.scale == 120
    assert entry.head == 21


def test_entry_by_id_unknown():
    with pytest.raises(DomainError):
        entry_by_id("ex-99")
    with pytest.raises(DomainError):
        entry_by_id("sp-3.5-kX")
    with pytest.raises(DomainError):
        entry_by_id("sp-3.2-k0")  # below the family's k_min


def test_citations_are_unique_and_informative():
    seen = set()
    for item in list(catalog_entries()) + list(catalog_families()):
        assert item.citation and item.citation not in seen
        seen.add(item.citation)
