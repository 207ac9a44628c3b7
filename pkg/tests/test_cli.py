import json

import pytest
from click.testing import CliRunner

from geox.cli import main
from tests.conftest import FIXTURES


@pytest.fixture
def runner():
    return CliRunner()


def ingest_fixture(runner, tmp_path):
    data_dir = tmp_path / "data"
    result = runner.invoke(
        main,
        [
            "ingest",
            "--datasets", str(FIXTURES / "datasets.csv"),
            "--publications", str(FIXTURES / "publications.csv"),
            "--data-dir", str(data_dir),
        ],
    )
    assert result.exit_code == 0, result.output
    return data_dir


def test_ingest_reports_counts(runner, tmp_path):
    data_dir = tmp_path / "data"
    result = runner.invoke(
        main,
        [
            "ingest",
            "--datasets", str(FIXTURES / "datasets.csv"),
            "--publications", str(FIXTURES / "publications.csv"),
            "--data-dir", str(data_dir),
        ],
    )
    assert result.exit_code == 0
    assert "8 datasets, 10 publications loaded" in result.output
    assert (data_dir / "datasets.csv").exists()
    assert (data_dir / "publications.csv").exists()


def test_ingest_missing_file_exits_2(runner, tmp_path):
    result = runner.invoke(
        main,
        [
            "ingest",
            "--datasets", str(tmp_path / "missing.csv"),
            "--publications", str(FIXTURES / "publications.csv"),
        ],
    )
    assert result.exit_code == 2
    assert "I/O error" in result.output


def test_ingest_invalid_data_exits_1(runner, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("id,name\nx,y\n")
    result = runner.invoke(
        main,
        [
            "ingest",
            "--datasets", str(bad),
            "--publications", str(FIXTURES / "publications.csv"),
            "--data-dir", str(tmp_path / "data"),
        ],
    )
    assert result.exit_code == 1


def test_validate_ok(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(main, ["validate", "--data-dir", str(data_dir)])
    assert result.exit_code == 0
    assert "ok" in result.output


def test_validate_missing_dir_is_empty_ok(runner, tmp_path):
    result = runner.invoke(main, ["validate", "--data-dir", str(tmp_path / "nope")])
    assert result.exit_code == 0


def test_export_round_trip(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    out_ds = tmp_path / "out_ds.csv"
    out_pub = tmp_path / "out_pub.csv"
    result = runner.invoke(
        main,
        [
            "export",
            "--data-dir", str(data_dir),
            "--out-datasets", str(out_ds),
            "--out-publications", str(out_pub),
        ],
    )
    assert result.exit_code == 0
    # export of a freshly ingested dir reproduces the stored CSVs exactly
    assert out_ds.read_bytes() == (data_dir / "datasets.csv").read_bytes()
    assert out_pub.read_bytes() == (data_dir / "publications.csv").read_bytes()


def test_stats_text(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(
        main, ["stats", "--table", "cost", "--data-dir", str(data_dir)]
    )
    assert result.exit_code == 0
    assert "Datasets by cost" in result.output
    assert "Free" in result.output and "6" in result.output


def test_stats_json(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(
        main,
        ["stats", "--table", "cost", "--format", "json", "--data-dir", str(data_dir)],
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["total"] == 8
    assert body["rows"][0] == {"label": "Free", "count": 6}


def test_stats_unknown_table_exits_1(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(
        main, ["stats", "--table", "bogus", "--data-dir", str(data_dir)]
    )
    assert result.exit_code == 1
    assert "valid names" in result.output


def test_query_datasets_text(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(
        main,
        ["query", "datasets", "--health", "Heat Stress", "--data-dir", str(data_dir)],
    )
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "thermal-imagery-alpha\tThermal Imagery Alpha",
        "vegetation-index-beta\tVegetation Index Beta",
    ]


def test_query_datasets_json(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(
        main,
        [
            "query", "datasets",
            "--q", "hemoragic fever",
            "--format", "json",
            "--data-dir", str(data_dir),
        ],
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert [d["id"] for d in body] == ["thermal-imagery-alpha"]
    assert body[0]["publications"][0]["id"] == "p-haemorrhagic-fever-landscapes"


def test_query_publications(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(
        main,
        [
            "query", "publications",
            "--dataset", "vegetation index",
            "--data-dir", str(data_dir),
        ],
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("p-greenness-cities\t2020\t")
    assert lines[1].startswith("p-heat-and-health\t2020\t")


def test_query_bad_provider_category_exits_1(runner, tmp_path):
    data_dir = ingest_fixture(runner, tmp_path)
    result = runner.invoke(
        main,
        [
            "query", "datasets",
            "--provider-category", "ministry",
            "--data-dir", str(data_dir),
        ],
    )
    assert result.exit_code == 1
    assert "accepted" in result.output


def test_query_corrupt_data_dir_exits_1(runner, tmp_path):
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    (data_dir / "datasets.csv").write_text("id,name\nx,y\n")
    (data_dir / "publications.csv").write_text("id\n")
    result = runner.invoke(main, ["query", "datasets", "--data-dir", str(data_dir)])
    assert result.exit_code == 1
