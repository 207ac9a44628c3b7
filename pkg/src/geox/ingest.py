"""CSV interchange: parse, validate and load the two-file workbook export.

The canonical format is a datasets.csv / publications.csv pair, UTF-8 with a
header row. Multi-valued cells are ";"-separated; provider cells use the
"Name|category|region" sub-format.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from typing import Optional

from .model import (
    CostAccess,
    CostInfo,
    CoverageInfo,
    CoverageRegion,
    DatasetRecord,
    JournalCategory,
    LengthResolution,
    ModelError,
    Provider,
    ProviderCategory,
    ProviderRegion,
    PublicationRecord,
    Resolution,
    ScaleResolution,
    StudyTheme,
    UnspecifiedResolution,
    UpdateFrequency,
    ValidationReport,
)
from .store import CatalogStore, Snapshot

DATASET_COLUMNS = [
    "id",
    "name",
    "providers",
    "first_available_year",
    "update_frequency",
    "still_updated_as_of",
    "cost",
    "cost_notes",
    "coverage_region",
    "covered_areas",
    "resolutions",
    "url",
    "related_publication_ids",
    "health_applications",
]

PUBLICATION_COLUMNS = [
    "id",
    "title",
    "year",
    "journal",
    "journal_category",
    "study_theme",
    "study_topics",
    "study_areas",
    "link",
    "dataset_ids",
    "health_applications",
]


class ParseError(ValueError):
    """Unparseable cell value; message names the offending token."""


@dataclass
class WorkbookSource:
    datasets_csv: bytes
    publications_csv: bytes


_NUM = r"\d+(?:\.\d+)?"
_LENGTH_RE = re.compile(
    rf"^(?P<open>>)?(?P<min>{_NUM})(?:\s*[–-]\s*(?P<max>{_NUM}))?\s*(?P<unit>km|m)$",
    re.IGNORECASE,
)
_SCALE_RE = re.compile(r"^1:(?P<den>[\d,]+)$")


def parse_resolution(text: str) -> Resolution:
    """Parse one resolution cell value.

    Grammar: "30m", "1km", "0.15-0.5m" (en-dash accepted), ">10km",
    "2.4m/Multispectral", "1:250,000", "na"/"" -> unspecified.
    """
    raw = text.strip()
    if not raw or raw.lower() in ("na", "n/a"):
        return UnspecifiedResolution()

    band = None
    body = raw
    if "/" in raw and not _SCALE_RE.match(raw):
        body, band = (part.strip() for part in raw.split("/", 1))
        if not band:
            band = None

    m = _SCALE_RE.match(body)
    if m:
        return ScaleResolution(int(m.group("den").replace(",", "")))

    m = _LENGTH_RE.match(body)
    if m:
        factor = 1000.0 if m.group("unit").lower() == "km" else 1.0
        min_m = float(m.group("min")) * factor
        if m.group("open"):
            return LengthResolution(min_m, None, band)
        if m.group("max") is not None:
            return LengthResolution(min_m, float(m.group("max")) * factor, band)
        return LengthResolution(min_m, min_m, band)

    raise ParseError(f"unparseable resolution {raw!r}")


def render_resolution(res: Resolution) -> str:
    """Canonical text for a resolution; parse_resolution round-trips it."""
    if isinstance(res, UnspecifiedResolution):
        return "na"
    if isinstance(res, ScaleResolution):
        return f"1:{res.denominator}"
    suffix = f"/{res.band}" if res.band else ""
    if res.max_meters is None:
        return f">{_fmt_meters(res.min_meters)}{suffix}"
    if res.max_meters == res.min_meters:
        return f"{_fmt_meters(res.min_meters)}{suffix}"
    return f"{res.min_meters:g}-{res.max_meters:g}m{suffix}"


def _fmt_meters(value: float) -> str:
    if value >= 1000 and value % 1000 == 0:
        return f"{value / 1000:g}km"
    return f"{value:g}m"


def _parse_enum(enum_cls, text: str, what: str):
    token = text.strip().lower().replace(" ", "_").replace("-", "_")
    for member in enum_cls:
        if member.value == token:
            return member
    accepted = ", ".join(m.value for m in enum_cls)
    raise ParseError(f"unknown {what} {text.strip()!r}; accepted: {accepted}")


def parse_provider(text: str) -> Provider:
    parts = [p.strip() for p in text.split("|")]
    if len(parts) != 3:
        raise ParseError(
            f"provider {text!r} must have shape 'Name|category|region'"
        )
    name, category, region = parts
    if not name:
        raise ParseError("provider name must be nonempty")
    return Provider(
        name=name,
        category=_parse_enum(ProviderCategory, category, "provider category"),
        region=_parse_enum(ProviderRegion, region, "provider region"),
    )


def _split_multi(cell: str) -> list[str]:
    return [part.strip() for part in cell.split(";") if part.strip()]


def _parse_year(cell: str) -> Optional[int]:
    cell = cell.strip()
    if not cell:
        return None
    if not cell.isdigit():
        raise ParseError(f"invalid year {cell!r}")
    return int(cell)


def _open_reader(stream, expected_columns: list[str]):
    if isinstance(stream, bytes):
        stream = io.BytesIO(stream)
    data = stream.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8-sig")
    reader = csv.DictReader(io.StringIO(data))
    header = reader.fieldnames or []
    if list(header) != expected_columns:
        missing = [c for c in expected_columns if c not in header]
        extra = [c for c in header if c not in expected_columns]
        raise ParseError(
            f"bad header: expected {expected_columns}; missing {missing}, "
            f"extra {extra}"
        )
    return reader


def _dataset_from_row(row: dict[str, str]) -> DatasetRecord:
    providers = tuple(parse_provider(p) for p in _split_multi(row["providers"]))
    resolutions = tuple(
        parse_resolution(r) for r in _split_multi(row["resolutions"])
    )
    freq_cell = row["update_frequency"].strip()
    frequency = (
        _parse_enum(UpdateFrequency, freq_cell, "update frequency")
        if freq_cell
        else UpdateFrequency.UNKNOWN
    )
    return DatasetRecord(
        id=row["id"].strip(),
        name=row["name"].strip(),
        providers=providers,
        first_available_year=_parse_year(row["first_available_year"]),
        update_frequency=frequency,
        still_updated_as_of=_parse_year(row["still_updated_as_of"]),
        cost=CostInfo(
            access=_parse_enum(CostAccess, row["cost"], "cost"),
            notes=row["cost_notes"].strip() or None,
        ),
        coverage=CoverageInfo(
            region=_parse_enum(CoverageRegion, row["coverage_region"], "coverage region"),
            areas=tuple(_split_multi(row["covered_areas"])),
        ),
        resolutions=resolutions,
        url=row["url"].strip(),
        publication_ids=tuple(_split_multi(row["related_publication_ids"])),
        health_applications=tuple(_split_multi(row["health_applications"])),
    )


def _publication_from_row(row: dict[str, str]) -> PublicationRecord:
    year = _parse_year(row["year"])
    if year is None:
        raise ParseError("year is required")
    return PublicationRecord(
        id=row["id"].strip(),
        title=row["title"].strip(),
        year=year,
        journal=row["journal"].strip(),
        journal_category=_parse_enum(
            JournalCategory, row["journal_category"], "journal category"
        ),
        study_theme=_parse_enum(StudyTheme, row["study_theme"], "study theme"),
        study_topics=tuple(_split_multi(row["study_topics"])),
        study_areas=tuple(_split_multi(row["study_areas"])),
        link=row["link"].strip(),
        dataset_ids=tuple(_split_multi(row["dataset_ids"])),
        health_applications=tuple(_split_multi(row["health_applications"])),
    )


_FIELD_HINT_RE = re.compile(r"unknown (cost|coverage region|update frequency|journal category|study theme)")

_FIELD_COLUMNS = {
    "cost": "cost",
    "coverage region": "coverage_region",
    "update frequency": "update_frequency",
    "journal category": "journal_category",
    "study theme": "study_theme",
}


def _error_column(exc: Exception, default: str) -> str:
    m = _FIELD_HINT_RE.search(str(exc))
    if m:
        return _FIELD_COLUMNS[m.group(1)]
    text = str(exc)
    for column in ("providers", "resolution", "year", "id", "name", "title"):
        if column in text:
            return "resolutions" if column == "resolution" else column
    return default


def _parse_rows(stream, columns, build, report: ValidationReport):
    records = []
    try:
        reader = _open_reader(stream, columns)
    except ParseError as exc:
        report.error("header", str(exc), row=1)
        return records
    # header is file row 1; first data row is 2
    for row_number, row in enumerate(reader, start=2):
        try:
            records.append(build(row))
        except (ParseError, ModelError) as exc:
            report.error(_error_column(exc, "row"), str(exc), row=row_number)
    return records


def parse_datasets_csv(stream) -> tuple[list[DatasetRecord], ValidationReport]:
    report = ValidationReport()
    records = _parse_rows(stream, DATASET_COLUMNS, _dataset_from_row, report)
    return records, report


def parse_publications_csv(stream) -> tuple[list[PublicationRecord], ValidationReport]:
    report = ValidationReport()
    records = _parse_rows(stream, PUBLICATION_COLUMNS, _publication_from_row, report)
    return records, report


def ingest_workbook(source: WorkbookSource) -> tuple[CatalogStore, ValidationReport]:
    """Load both CSV files into a store with symmetric, closed links.

    Dangling cross-file references are dropped (error recorded, record kept);
    one-sided links are repaired with a warning.
    """
    report = ValidationReport()
    datasets, ds_report = parse_datasets_csv(source.datasets_csv)
    publications, pub_report = parse_publications_csv(source.publications_csv)
    report.extend(ds_report)
    report.extend(pub_report)

    ds_by_id = {}
    for ds in datasets:
        if ds.id in ds_by_id:
            report.error("id", f"duplicate dataset id {ds.id!r}", record_id=ds.id)
            continue
        ds_by_id[ds.id] = ds
    pub_by_id = {}
    for pub in publications:
        if pub.id in pub_by_id:
            report.error("id", f"duplicate publication id {pub.id!r}", record_id=pub.id)
            continue
        pub_by_id[pub.id] = pub

    # links as sets, repaired below
    ds_links = {d: set(ds_by_id[d].publication_ids) for d in ds_by_id}
    pub_links = {p: set(pub_by_id[p].dataset_ids) for p in pub_by_id}

    for did, pids in ds_links.items():
        for pid in sorted(pids):
            if pid not in pub_by_id:
                report.error(
                    "related_publication_ids",
                    f"references nonexistent publication {pid!r}; link dropped",
                    record_id=did,
                )
                pids.discard(pid)
            elif did not in pub_links[pid]:
                report.warn(
                    "dataset_ids",
                    f"one-sided link repaired: dataset {did!r} lists {pid!r}",
                    record_id=pid,
                )
                pub_links[pid].add(did)
    for pid, dids in pub_links.items():
        for did in sorted(dids):
            if did not in ds_by_id:
                report.error(
                    "dataset_ids",
                    f"references nonexistent dataset {did!r}; link dropped",
                    record_id=pid,
                )
                dids.discard(did)
            elif pid not in ds_links[did]:
                report.warn(
                    "related_publication_ids",
                    f"one-sided link repaired: publication {pid!r} lists {did!r}",
                    record_id=did,
                )
                ds_links[did].add(pid)

    store = CatalogStore()
    store.load(
        [
            DatasetRecord(**{**_as_kwargs(ds), "publication_ids": tuple(sorted(ds_links[ds.id]))})
            for ds in ds_by_id.values()
        ],
        [
            PublicationRecord(**{**_pub_kwargs(pub), "dataset_ids": tuple(sorted(pub_links[pub.id]))})
            for pub in pub_by_id.values()
        ],
    )
    return store, report


def _as_kwargs(ds: DatasetRecord) -> dict:
    return {
        "id": ds.id,
        "name": ds.name,
        "providers": ds.providers,
        "first_available_year": ds.first_available_year,
        "update_frequency": ds.update_frequency,
        "still_updated_as_of": ds.still_updated_as_of,
        "cost": ds.cost,
        "coverage": ds.coverage,
        "resolutions": ds.resolutions,
        "url": ds.url,
        "publication_ids": ds.publication_ids,
        "health_applications": ds.health_applications,
    }


def _pub_kwargs(pub: PublicationRecord) -> dict:
    return {
        "id": pub.id,
        "title": pub.title,
        "year": pub.year,
        "journal": pub.journal,
        "journal_category": pub.journal_category,
        "study_theme": pub.study_theme,
        "study_topics": pub.study_topics,
        "study_areas": pub.study_areas,
        "link": pub.link,
        "dataset_ids": pub.dataset_ids,
        "health_applications": pub.health_applications,
    }


def _join_multi(values) -> str:
    # records already hold multi-valued fields in canonical order
    return ";".join(values)


def _render_provider(p: Provider) -> str:
    return f"{p.name}|{p.category.value}|{p.region.value}"


def export_csv(store: CatalogStore | Snapshot) -> WorkbookSource:
    """Serialize the store back to the canonical CSV pair, deterministically."""
    snap = store.snapshot() if isinstance(store, CatalogStore) else store

    ds_out = io.StringIO()
    writer = csv.writer(ds_out, lineterminator="\n")
    writer.writerow(DATASET_COLUMNS)
    for ds in sorted(snap.datasets.values(), key=lambda d: d.id):
        writer.writerow(
            [
                ds.id,
                ds.name,
                _join_multi(_render_provider(p) for p in ds.providers),
                "" if ds.first_available_year is None else str(ds.first_available_year),
                ds.update_frequency.value,
                "" if ds.still_updated_as_of is None else str(ds.still_updated_as_of),
                ds.cost.access.value,
                ds.cost.notes or "",
                ds.coverage.region.value,
                _join_multi(ds.coverage.areas),
                _join_multi(render_resolution(r) for r in ds.resolutions),
                ds.url,
                _join_multi(ds.publication_ids),
                _join_multi(ds.health_applications),
            ]
        )

    pub_out = io.StringIO()
    writer = csv.writer(pub_out, lineterminator="\n")
    writer.writerow(PUBLICATION_COLUMNS)
    for pub in sorted(snap.publications.values(), key=lambda p: p.id):
        writer.writerow(
            [
                pub.id,
                pub.title,
                str(pub.year),
                pub.journal,
                pub.journal_category.value,
                pub.study_theme.value,
                _join_multi(pub.study_topics),
                _join_multi(pub.study_areas),
                pub.link,
                _join_multi(pub.dataset_ids),
                _join_multi(pub.health_applications),
            ]
        )

    return WorkbookSource(
        datasets_csv=ds_out.getvalue().encode("utf-8"),
        publications_csv=pub_out.getvalue().encode("utf-8"),
    )
