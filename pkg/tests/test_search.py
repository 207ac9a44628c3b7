import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geox.model import CostAccess, ProviderCategory
from geox.search import (
    DatasetQuery,
    NonPhoneticError,
    PublicationQuery,
    fuzzy_match,
    normalize_tokens,
    search_datasets,
    search_publications,
    soundex,
)
from tests.test_store import make_dataset


@pytest.mark.parametrize(
    "name,code",
    [
        ("Washington", "W252"),
        ("Lee", "L000"),
        ("Pfister", "P236"),
        ("Tymczak", "T522"),
        ("Ashcraft", "A261"),
        ("Robert", "R163"),
        ("Rupert", "R163"),
        ("Honeyman", "H555"),
        ("haemorrhagic", "H562"),
        ("hemorrhagic", "H562"),
        ("hemoragic", "H562"),
        ("a", "A000"),
    ],
)
def test_soundex_known_codes(name, code):
    assert soundex(name) == code


def test_soundex_rejects_non_phonetic():
    with pytest.raises(NonPhoneticError):
        soundex("12345")
    with pytest.raises(NonPhoneticError):
        soundex("  !! ")


@given(st.text(alphabet=string.ascii_letters, min_size=1, max_size=40))
def test_soundex_shape(word):
    code = soundex(word)
    assert len(code) == 4
    assert code[0] == word[0].upper()
    assert all(d in "0123456" for d in code[1:])


@given(st.text(alphabet=string.ascii_letters, min_size=1, max_size=40))
def test_soundex_case_insensitive(word):
    assert soundex(word) == soundex(word.upper()) == soundex(word.lower())


def test_normalize_tokens():
    assert normalize_tokens("Haemorrhagic  Fever!") == ["haemorrhagic", "fever"]
    assert normalize_tokens("COVID-19") == ["covid", "19"]
    assert normalize_tokens("Ségolène's data") == ["segolene", "s", "data"]
    assert normalize_tokens("  ") == []


def test_fuzzy_match_spelling_variants():
    values = ["Haemorrhagic Fever", "Heat Stress"]
    assert fuzzy_match("hemoragic fever", values)
    assert fuzzy_match("hemorrhagic", values)
    assert not fuzzy_match("malaria", values)


def test_fuzzy_match_requires_single_value_coverage():
    # Both tokens match somewhere, but no single value covers them both.
    assert not fuzzy_match("heat fever", ["Haemorrhagic Fever", "Heat Stress"])
    assert fuzzy_match("heat stress", ["Haemorrhagic Fever", "Heat Stress"])


def test_fuzzy_match_numeric_tokens_exact():
    assert fuzzy_match("19", ["COVID-19"])
    assert not fuzzy_match("2019", ["COVID-19"])


def test_fuzzy_match_empty_query_matches():
    assert fuzzy_match("", ["anything"])
    assert fuzzy_match("   ", [])


def test_search_by_health_term(fixture_store):
    hits = search_datasets(fixture_store, DatasetQuery(health_terms=["Heat Stress"]))
    assert [d.id for d in hits] == ["thermal-imagery-alpha", "vegetation-index-beta"]


def test_search_by_cost(fixture_store):
    hits = search_datasets(fixture_store, DatasetQuery(cost=CostAccess.PAID))
    assert sorted(d.id for d in hits) == ["air-quality-gamma", "historic-land-survey"]


def test_search_by_area(fixture_store):
    hits = search_datasets(fixture_store, DatasetQuery(areas=["kenya"]))
    assert [d.id for d in hits] == ["kenya-road-map"]


def test_search_by_provider(fixture_store):
    hits = search_datasets(fixture_store, DatasetQuery(providers=["Agency One"]))
    assert sorted(d.id for d in hits) == [
        "historic-land-survey",
        "thermal-imagery-alpha",
        "vegetation-index-beta",
    ]


def test_search_by_provider_category(fixture_store):
    hits = search_datasets(
        fixture_store,
        DatasetQuery(provider_categories=[ProviderCategory.ACADEMIC_INSTITUTE]),
    )
    assert sorted(d.id for d in hits) == ["unmapped-area-set", "vegetation-index-beta"]


def test_search_facets_intersect(fixture_store):
    hits = search_datasets(
        fixture_store,
        DatasetQuery(health_terms=["Heat Stress"], providers=["Institute Two"]),
    )
    assert [d.id for d in hits] == ["vegetation-index-beta"]


def test_search_free_text_phonetic(fixture_store):
    hits = search_datasets(
        fixture_store, DatasetQuery(free_text="hemoragic fever")
    )
    assert [d.id for d in hits] == ["thermal-imagery-alpha"]


def test_search_empty_query_returns_all(fixture_store):
    hits = search_datasets(fixture_store, DatasetQuery())
    assert len(hits) == 8


def test_exact_hits_rank_before_fuzzy():
    from geox.store import CatalogStore

    store = CatalogStore()
    # "Aaa Fuzzy" sorts first by name, so only exact-before-fuzzy ranking
    # can put the exact match ahead of it.
    fuzzy = make_dataset(ds_id="ds-fuzzy", name="Aaa Fuzzy")
    fuzzy.health_applications = ("Smyth Analysis",)
    exact = make_dataset(ds_id="ds-exact", name="Zzz Exact")
    exact.health_applications = ("Smith Analysis",)
    store.upsert_dataset(fuzzy)
    store.upsert_dataset(exact)
    hits = search_datasets(store, DatasetQuery(free_text="smith analysis"))
    assert [d.id for d in hits] == ["ds-exact", "ds-fuzzy"]


def test_search_publications_by_health(fixture_store):
    hits = search_publications(
        fixture_store, PublicationQuery(health_terms=["hemoragic"])
    )
    assert [p.id for p in hits] == ["p-haemorrhagic-fever-landscapes"]


def test_search_publications_by_dataset_name(fixture_store):
    hits = search_publications(
        fixture_store, PublicationQuery(dataset_name="vegetation index")
    )
    assert [p.id for p in hits] == ["p-greenness-cities", "p-heat-and-health"]


def test_search_publications_sorted_year_desc(fixture_store):
    hits = search_publications(fixture_store, PublicationQuery())
    years = [p.year for p in hits]
    assert years == sorted(years, reverse=True)
    assert len(hits) == 10


def test_search_accepts_snapshot(fixture_store):
    snap = fixture_store.snapshot()
    assert len(search_datasets(snap, DatasetQuery())) == 8
