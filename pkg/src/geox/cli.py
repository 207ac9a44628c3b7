"""Operator command line: ingest, validate, export, stats, query, serve."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import search, serialize, stats
from .api import ServiceConfig, load_area_buckets, serve as api_serve, _package_data
from .ingest import WorkbookSource, export_csv, ingest_workbook
from .model import CostAccess
from .persistence import DataDir
from .store import validate_cross_references

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


def _read_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        sys.exit(EXIT_IO)


def _load_data_dir(data_dir: str):
    dd = DataDir(data_dir)
    try:
        store, report = dd.load_store()
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        sys.exit(EXIT_IO)
    if not report.ok:
        for line in report.lines():
            click.echo(line, err=True)
        sys.exit(EXIT_VALIDATION)
    return store


def _area_buckets(data_dir: str) -> dict[str, str]:
    override = Path(data_dir) / "study_area_buckets.csv"
    data = (
        override.read_bytes()
        if override.exists()
        else _package_data("study_area_buckets.csv")
    )
    return load_area_buckets(data)


@click.group()
def main():
    """Catalogue of Earth-observation datasets for health research."""


@main.command()
@click.option("--datasets", "datasets_path", required=True, type=str)
@click.option("--publications", "publications_path", required=True, type=str)
@click.option("--data-dir", default="./data", show_default=True)
def ingest(datasets_path, publications_path, data_dir):
    """Parse the CSV pair and populate the data directory."""
    source = WorkbookSource(
        datasets_csv=_read_file(datasets_path),
        publications_csv=_read_file(publications_path),
    )
    store, report = ingest_workbook(source)
    for line in report.lines():
        click.echo(line, err=True)
    if not report.ok:
        sys.exit(EXIT_VALIDATION)
    try:
        DataDir(data_dir).save_store(store)
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        sys.exit(EXIT_IO)
    snap = store.snapshot()
    click.echo(f"{len(snap.datasets)} datasets, {len(snap.publications)} publications loaded")


@main.command()
@click.option("--data-dir", default="./data", show_default=True)
def validate(data_dir):
    """Re-check referential integrity of the data directory."""
    store = _load_data_dir(data_dir)
    report = validate_cross_references(store.snapshot())
    for line in report.lines():
        click.echo(line)
    if not report.ok:
        sys.exit(EXIT_VALIDATION)
    click.echo("ok")


@main.command()
@click.option("--data-dir", default="./data", show_default=True)
@click.option("--out-datasets", required=True, type=str)
@click.option("--out-publications", required=True, type=str)
def export(data_dir, out_datasets, out_publications):
    """Write the canonical CSV export of the current store."""
    store = _load_data_dir(data_dir)
    source = export_csv(store)
    try:
        Path(out_datasets).write_bytes(source.datasets_csv)
        Path(out_publications).write_bytes(source.publications_csv)
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(f"wrote {out_datasets} and {out_publications}")


@main.command("stats")
@click.option("--table", required=True, type=str)
@click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    show_default=True,
)
@click.option("--data-dir", default="./data", show_default=True)
def stats_cmd(table, fmt, data_dir):
    """Print one summary table (see --table bogus for the list of names)."""
    store = _load_data_dir(data_dir)
    try:
        result = stats.compute_table(store, table, area_buckets=_area_buckets(data_dir))
    except KeyError as exc:
        click.echo(str(exc.args[0]), err=True)
        sys.exit(EXIT_VALIDATION)
    if fmt == "json":
        click.echo(serialize.dumps_compact(result.to_json_dict()))
    else:
        click.echo(result.render_text())


@main.command()
@click.argument("kind", type=click.Choice(["datasets", "publications"]))
@click.option("--health", multiple=True)
@click.option("--cost", type=click.Choice(["free", "paid"]), default=None)
@click.option("--area", multiple=True)
@click.option("--provider", multiple=True)
@click.option("--provider-category", multiple=True)
@click.option("--dataset", "dataset_name", default=None, help="publications only")
@click.option("--q", "free_text", default=None)
@click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    show_default=True,
)
@click.option("--data-dir", default="./data", show_default=True)
def query(kind, health, cost, area, provider, provider_category, dataset_name,
          free_text, fmt, data_dir):
    """Run a faceted search and print matches in rank order."""
    store = _load_data_dir(data_dir)
    snap = store.snapshot()
    if kind == "datasets":
        from .model import ProviderCategory

        categories = []
        for raw in provider_category:
            try:
                categories.append(ProviderCategory(raw.lower()))
            except ValueError:
                accepted = ", ".join(m.value for m in ProviderCategory)
                click.echo(f"invalid provider category {raw!r}; accepted: {accepted}", err=True)
                sys.exit(EXIT_VALIDATION)
        q = search.DatasetQuery(
            health_terms=list(health),
            cost=CostAccess(cost) if cost else None,
            areas=list(area),
            providers=list(provider),
            provider_categories=categories,
            free_text=free_text,
        )
        results = search.search_datasets(snap, q)
        if fmt == "json":
            click.echo(
                serialize.dumps_compact(
                    [serialize.dataset_to_json(ds, snap) for ds in results]
                )
            )
        else:
            for ds in results:
                click.echo(f"{ds.id}\t{ds.name}")
    else:
        q = search.PublicationQuery(
            health_terms=list(health), dataset_name=dataset_name
        )
        results = search.search_publications(snap, q)
        if fmt == "json":
            click.echo(
                serialize.dumps_compact(
                    [serialize.publication_to_json(pub, snap) for pub in results]
                )
            )
        else:
            for pub in results:
                click.echo(f"{pub.id}\t{pub.year}\t{pub.title}")


@main.command()
@click.option("--data-dir", default=None)
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
def serve(data_dir, host, port):
    """Run the JSON HTTP service (GEOX_* env vars supply defaults)."""
    config = ServiceConfig.from_env()
    if data_dir is not None:
        config.data_dir = Path(data_dir)
    if host is not None:
        config.bind_addr = host
    if port is not None:
        config.port = port
    api_serve(config)


if __name__ == "__main__":
    main()
