from pathlib import Path

import pytest

from geox.ingest import WorkbookSource, ingest_workbook

FIXTURES = Path(__file__).parent / "fixtures"
PUBLISHED = Path(__file__).parent.parent / "data" / "published"


def load_workbook(directory: Path):
    return WorkbookSource(
        datasets_csv=(directory / "datasets.csv").read_bytes(),
        publications_csv=(directory / "publications.csv").read_bytes(),
    )


@pytest.fixture
def fixture_source():
    return load_workbook(FIXTURES)


@pytest.fixture
def fixture_store(fixture_source):
    store, report = ingest_workbook(fixture_source)
    assert report.ok, report.lines()
    return store


@pytest.fixture
def published_store():
    store, report = ingest_workbook(load_workbook(PUBLISHED))
    assert report.ok, report.lines()
    return store


@pytest.fixture
def gazetteer_csv():
    return (FIXTURES / "gazetteer.csv").read_bytes()
