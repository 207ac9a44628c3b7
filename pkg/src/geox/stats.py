"""Summary statistics over the catalogue, rendered as deterministic tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .ingest import render_resolution
from .model import (
    CostAccess,
    JournalCategory,
    LengthResolution,
    ProviderCategory,
    ProviderRegion,
    ScaleResolution,
    StudyTheme,
    UnspecifiedResolution,
    normalize_term,
)
from .store import CatalogStore, Snapshot


@dataclass(frozen=True)
class StatsRow:
    label: str
    count: int


@dataclass
class StatsTable:
    title: str
    rows: list[StatsRow]
    total: int

    def to_json_dict(self) -> dict:
        return {
            "title": self.title,
            "rows": [{"label": r.label, "count": r.count} for r in self.rows],
            "total": self.total,
        }

    def render_text(self) -> str:
        width = max([len(r.label) for r in self.rows] + [len("Total"), 5])
        lines = [self.title, "-" * len(self.title)]
        for row in self.rows:
            lines.append(f"{row.label:<{width}}  {row.count}")
        lines.append(f"{'Total':<{width}}  {self.total}")
        return "\n".join(lines)


def _snap(store: CatalogStore | Snapshot) -> Snapshot:
    return store.snapshot() if isinstance(store, CatalogStore) else store


_JOURNAL_LABELS = [
    (JournalCategory.GEOGRAPHY, "Geography"),
    (JournalCategory.PUBLIC_HEALTH, "Public Health"),
    (JournalCategory.ENVIRONMENT, "Environment"),
    (JournalCategory.SCIENCE, "Science"),
]

_THEME_LABELS = [
    (StudyTheme.HUMAN_ACTIVITY, "Human Activity"),
    (StudyTheme.PUBLIC_HEALTH, "Public Health"),
    (StudyTheme.ENVIRONMENT, "Environment"),
]


def publications_by_journal_category(store) -> StatsTable:
    snap = _snap(store)
    counts = {cat: 0 for cat, _ in _JOURNAL_LABELS}
    for pub in snap.publications.values():
        counts[pub.journal_category] += 1
    rows = [StatsRow(label, counts[cat]) for cat, label in _JOURNAL_LABELS]
    return StatsTable("Publications by journal category", rows, len(snap.publications))


def publications_by_theme(store) -> StatsTable:
    snap = _snap(store)
    counts = {theme: 0 for theme, _ in _THEME_LABELS}
    for pub in snap.publications.values():
        counts[pub.study_theme] += 1
    rows = [StatsRow(label, counts[theme]) for theme, label in _THEME_LABELS]
    return StatsTable("Publications by study theme", rows, len(snap.publications))


def publications_by_study_area(
    store, buckets: Optional[Mapping[str, str]] = None
) -> StatsTable:
    """Group study areas through an editorial bucket mapping (area -> label).

    Areas absent from the mapping become their own bucket. A publication is
    counted once per distinct bucket its areas fall into.
    """
    snap = _snap(store)
    mapping = {normalize_term(k): v for k, v in (buckets or {}).items()}
    counts: dict[str, int] = {}
    for pub in snap.publications.values():
        labels = {
            mapping.get(normalize_term(area), area) for area in pub.study_areas
        }
        for label in labels:
            counts[label] = counts.get(label, 0) + 1
    rows = [
        StatsRow(label, count)
        for label, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    ]
    return StatsTable("Publications by study area", rows, len(snap.publications))


PRE_2018_LABEL = "pre-2018"


def publications_by_year(store) -> StatsTable:
    snap = _snap(store)
    counts: dict[int, int] = {}
    for pub in snap.publications.values():
        counts[pub.year] = counts.get(pub.year, 0) + 1
    rows = [StatsRow(str(year), counts[year]) for year in sorted(counts)]
    pre_2018 = sum(c for year, c in counts.items() if year < 2018)
    rows.append(StatsRow(PRE_2018_LABEL, pre_2018))
    return StatsTable("Publications by year", rows, len(snap.publications))


_CATEGORY_LABELS = {
    ProviderCategory.GOVERNMENT_AGENCY: "Government Agency",
    ProviderCategory.COMMERCIAL_COMPANY: "Commercial Company",
    ProviderCategory.ACADEMIC_INSTITUTE: "Academic Institute",
}

_REGION_LABELS = {
    ProviderRegion.ASIA: "Asia",
    ProviderRegion.EUROPE: "Europe",
    ProviderRegion.AMERICA: "America",
    ProviderRegion.AFRICA: "Africa",
    ProviderRegion.OTHER: "Other",
}

_CATEGORY_ORDER = [
    ProviderCategory.GOVERNMENT_AGENCY,
    ProviderCategory.COMMERCIAL_COMPANY,
    ProviderCategory.ACADEMIC_INSTITUTE,
]

_REGION_ORDER = [
    ProviderRegion.ASIA,
    ProviderRegion.EUROPE,
    ProviderRegion.AMERICA,
    ProviderRegion.AFRICA,
    ProviderRegion.OTHER,
]


def datasets_by_provider(store) -> StatsTable:
    """Per-provider dataset counts grouped category -> region -> provider.

    Each category gets a "<Category> (total)" row counting distinct datasets,
    so co-provided datasets appear under every provider but inflate no total.
    The table total is the distinct dataset count.
    """
    snap = _snap(store)
    per_provider: dict[tuple, set[str]] = {}
    per_category: dict[ProviderCategory, set[str]] = {}
    for ds in snap.datasets.values():
        for provider in ds.providers:
            key = (provider.category, provider.region, provider.name)
            per_provider.setdefault(key, set()).add(ds.id)
            per_category.setdefault(provider.category, set()).add(ds.id)

    rows = []
    for category in _CATEGORY_ORDER:
        keys = [k for k in per_provider if k[0] is category]
        if not keys and category not in per_category:
            continue
        for region in _REGION_ORDER:
            for key in sorted(
                (k for k in keys if k[1] is region), key=lambda k: k[2].casefold()
            ):
                label = (
                    f"{_CATEGORY_LABELS[category]} / "
                    f"{_REGION_LABELS[region]} / {key[2]}"
                )
                rows.append(StatsRow(label, len(per_provider[key])))
        rows.append(
            StatsRow(
                f"{_CATEGORY_LABELS[category]} (total)",
                len(per_category.get(category, set())),
            )
        )
    return StatsTable("Datasets by provider", rows, len(snap.datasets))


def datasets_by_coverage(store) -> StatsTable:
    snap = _snap(store)
    counts: dict[str, int] = {}
    for ds in snap.datasets.values():
        for area in ds.coverage.areas:
            counts[area] = counts.get(area, 0) + 1
    rows = [
        StatsRow(area, count)
        for area, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    ]
    return StatsTable("Datasets by covered area", rows, len(snap.datasets))


def datasets_by_cost(store) -> StatsTable:
    snap = _snap(store)
    counts = {CostAccess.FREE: 0, CostAccess.PAID: 0}
    for ds in snap.datasets.values():
        counts[ds.cost.access] += 1
    rows = [
        StatsRow("Free", counts[CostAccess.FREE]),
        StatsRow("Paid", counts[CostAccess.PAID]),
    ]
    return StatsTable("Datasets by cost", rows, len(snap.datasets))


STILL_UPDATED_SINCE = 2022

FIRST_YEAR_BUCKETS = ["pre-2000", "2000-2010", "post-2010", "unknown"]


def datasets_by_first_year(store) -> StatsTable:
    snap = _snap(store)
    counts = dict.fromkeys(FIRST_YEAR_BUCKETS, 0)
    still_updated = 0
    for ds in snap.datasets.values():
        year = ds.first_available_year
        if year is None:
            counts["unknown"] += 1
        elif year < 2000:
            counts["pre-2000"] += 1
        elif year <= 2010:
            counts["2000-2010"] += 1
        else:
            counts["post-2010"] += 1
        if (
            ds.still_updated_as_of is not None
            and ds.still_updated_as_of >= STILL_UPDATED_SINCE
        ):
            still_updated += 1
    rows = [StatsRow(bucket, counts[bucket]) for bucket in FIRST_YEAR_BUCKETS]
    rows.append(StatsRow(f"still updated as of {STILL_UPDATED_SINCE}+", still_updated))
    return StatsTable("Datasets by first available year", rows, len(snap.datasets))


NOT_AVAILABLE_LABEL = "N/A"


def datasets_by_resolution(store) -> StatsTable:
    """One row per distinct resolution value; multi-resolution datasets are
    counted once per resolution, and datasets without any fall under N/A."""
    snap = _snap(store)
    length_counts: dict[LengthResolution, int] = {}
    scale_counts: dict[ScaleResolution, int] = {}
    unspecified = 0
    none_recorded = 0
    for ds in snap.datasets.values():
        if not ds.resolutions:
            none_recorded += 1
            continue
        for res in ds.resolutions:
            if isinstance(res, LengthResolution):
                length_counts[res] = length_counts.get(res, 0) + 1
            elif isinstance(res, ScaleResolution):
                scale_counts[res] = scale_counts.get(res, 0) + 1
            else:
                unspecified += 1

    rows = []
    for res in sorted(
        length_counts,
        key=lambda r: (-r.min_meters, -(r.max_meters or float("inf")), r.band or ""),
    ):
        rows.append(StatsRow(render_resolution(res), length_counts[res]))
    na_count = none_recorded + unspecified
    if na_count:
        rows.append(StatsRow(NOT_AVAILABLE_LABEL, na_count))
    for res in sorted(scale_counts, key=lambda r: r.denominator):
        rows.append(StatsRow(render_resolution(res), scale_counts[res]))
    total = sum(r.count for r in rows)
    return StatsTable("Datasets by resolution", rows, total)


TABLES = {
    "journal-categories": publications_by_journal_category,
    "study-areas": publications_by_study_area,
    "themes": publications_by_theme,
    "years": publications_by_year,
    "providers": datasets_by_provider,
    "coverage": datasets_by_coverage,
    "cost": datasets_by_cost,
    "first-year": datasets_by_first_year,
    "resolutions": datasets_by_resolution,
}


def compute_table(
    store, name: str, area_buckets: Optional[Mapping[str, str]] = None
) -> StatsTable:
    try:
        fn = TABLES[name]
    except KeyError:
        valid = ", ".join(sorted(TABLES))
        raise KeyError(f"unknown stats table {name!r}; valid names: {valid}") from None
    if name == "study-areas":
        return fn(store, area_buckets)
    return fn(store)
