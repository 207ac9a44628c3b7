import pytest

from geox.api import _package_data, load_area_buckets
from geox.stats import (
    TABLES,
    compute_table,
    datasets_by_cost,
    datasets_by_coverage,
    datasets_by_first_year,
    datasets_by_provider,
    datasets_by_resolution,
    publications_by_journal_category,
    publications_by_study_area,
    publications_by_theme,
    publications_by_year,
)
from geox.store import CatalogStore


def rows_dict(table):
    return {r.label: r.count for r in table.rows}


# --- fixture corpus: every count below is hand-tallied from the CSVs ------


def test_fixture_journal_categories(fixture_store):
    table = publications_by_journal_category(fixture_store)
    assert rows_dict(table) == {
        "Geography": 4,
        "Public Health": 3,
        "Environment": 2,
        "Science": 1,
    }
    assert table.total == 10
    assert [r.label for r in table.rows] == [
        "Geography", "Public Health", "Environment", "Science",
    ]


def test_fixture_themes(fixture_store):
    table = publications_by_theme(fixture_store)
    assert rows_dict(table) == {
        "Human Activity": 3,
        "Public Health": 5,
        "Environment": 2,
    }
    assert table.total == 10


def test_fixture_years(fixture_store):
    table = publications_by_year(fixture_store)
    assert rows_dict(table) == {
        "2010": 1, "2015": 1, "2016": 1, "2018": 1, "2019": 1,
        "2020": 3, "2021": 1, "2022": 1, "pre-2018": 3,
    }
    assert table.total == 10
    assert table.rows[-1].label == "pre-2018"


def test_fixture_study_areas_unbucketed(fixture_store):
    table = publications_by_study_area(fixture_store)
    assert [(r.label, r.count) for r in table.rows] == [
        ("Global", 5), ("USA", 2), ("China", 1), ("Kenya", 1), ("UK", 1),
    ]


def test_fixture_study_areas_bucketed(fixture_store):
    buckets = {"USA": "North America/USA", "UK": "Europe/UK", "China": "Asia"}
    table = publications_by_study_area(fixture_store, buckets)
    assert rows_dict(table) == {
        "Global": 5,
        "North America/USA": 2,
        "Asia": 1,
        "Europe/UK": 1,
        "Kenya": 1,
    }


def test_fixture_providers(fixture_store):
    table = datasets_by_provider(fixture_store)
    assert rows_dict(table) == {
        "Government Agency / Europe / Agency One": 3,
        "Government Agency / America / Agency Three": 2,
        "Government Agency (total)": 5,
        "Commercial Company / America / Tech Co": 1,
        "Commercial Company / Africa / Mapping Co": 1,
        "Commercial Company (total)": 2,
        "Academic Institute / Asia / Institute Two": 2,
        "Academic Institute (total)": 2,
    }
    # the table total counts distinct datasets, not provider entries
    assert table.total == 8


def test_fixture_coverage(fixture_store):
    table = datasets_by_coverage(fixture_store)
    assert [(r.label, r.count) for r in table.rows] == [
        ("Global", 4), ("Atlantis", 1), ("Kenya", 1), ("UK", 1), ("USA", 1),
    ]


def test_fixture_cost(fixture_store):
    table = datasets_by_cost(fixture_store)
    assert [(r.label, r.count) for r in table.rows] == [("Free", 6), ("Paid", 2)]


def test_fixture_first_year(fixture_store):
    table = datasets_by_first_year(fixture_store)
    assert rows_dict(table) == {
        "pre-2000": 2,
        "2000-2010": 3,
        "post-2010": 3,
        "unknown": 0,
        "still updated as of 2022+": 4,
    }


def test_fixture_resolutions(fixture_store):
    table = datasets_by_resolution(fixture_store)
    assert [(r.label, r.count) for r in table.rows] == [
        ("1km", 2), ("250m", 1), ("84m", 1), ("30m", 1), ("10m", 1), ("5m", 1),
        ("N/A", 1), ("1:10000", 1),
    ]
    # total counts resolution rows; the two-resolution dataset adds one
    assert table.total == 9


def test_empty_store_tables():
    store = CatalogStore()
    for name in TABLES:
        table = compute_table(store, name)
        assert table.total == 0


def test_unknown_table_name(fixture_store):
    with pytest.raises(KeyError) as exc:
        compute_table(fixture_store, "bogus")
    assert "journal-categories" in str(exc.value)


def test_render_text_has_total(fixture_store):
    text = datasets_by_cost(fixture_store).render_text()
    lines = text.splitlines()
    assert lines[0] == "Datasets by cost"
    assert lines[-1].startswith("Total")
    assert lines[-1].endswith("8")


def test_to_json_dict_shape(fixture_store):
    d = datasets_by_cost(fixture_store).to_json_dict()
    assert d == {
        "title": "Datasets by cost",
        "rows": [{"label": "Free", "count": 6}, {"label": "Paid", "count": 2}],
        "total": 8,
    }


# --- published corpus: headline figures ------------------------------------


def test_published_journal_categories(published_store):
    table = publications_by_journal_category(published_store)
    assert rows_dict(table) == {
        "Geography": 21, "Public Health": 13, "Environment": 9, "Science": 7,
    }
    assert table.total == 50


def test_published_themes(published_store):
    table = publications_by_theme(published_store)
    assert rows_dict(table) == {
        "Human Activity": 24, "Public Health": 14, "Environment": 12,
    }


def test_published_years(published_store):
    counts = rows_dict(publications_by_year(published_store))
    assert counts["2020"] == 12
    assert counts["pre-2018"] == 25


def test_published_study_areas(published_store):
    buckets = load_area_buckets(_package_data("study_area_buckets.csv"))
    table = publications_by_study_area(published_store, buckets)
    assert rows_dict(table) == {
        "Global": 30,
        "North America/USA": 9,
        "Europe/UK": 7,
        "Asia": 2,
        "Africa": 1,
        "Global Coastal Zone": 1,
    }


def test_published_provider_totals(published_store):
    counts = rows_dict(datasets_by_provider(published_store))
    assert counts["Government Agency (total)"] == 28
    assert counts["Commercial Company (total)"] == 8
    assert counts["Academic Institute (total)"] == 5
    table = datasets_by_provider(published_store)
    assert table.total == 40
    # provider entries exceed distinct datasets because of co-provision
    entries = sum(
        r.count for r in table.rows if not r.label.endswith("(total)")
    )
    assert entries == 42


def test_published_coverage(published_store):
    counts = rows_dict(datasets_by_coverage(published_store))
    assert counts["Global"] == 24
    assert counts["UK"] == 4
    assert counts["USA"] == 4


def test_published_cost(published_store):
    assert rows_dict(datasets_by_cost(published_store)) == {"Free": 33, "Paid": 7}


def test_published_first_year(published_store):
    assert rows_dict(datasets_by_first_year(published_store)) == {
        "pre-2000": 14,
        "2000-2010": 17,
        "post-2010": 9,
        "unknown": 0,
        "still updated as of 2022+": 21,
    }


def test_published_resolutions(published_store):
    table = datasets_by_resolution(published_store)
    counts = rows_dict(table)
    assert counts["1km"] == 7
    assert counts["30m"] == 7
    assert table.total == 42
