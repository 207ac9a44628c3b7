"""Covered-area gazetteer and map hotspot computation."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .model import normalize_term
from .search import DatasetQuery, search_datasets
from .store import CatalogStore, Snapshot

GAZETTEER_COLUMNS = ["area", "latitude", "longitude", "flag"]


class GazetteerError(ValueError):
    def __init__(self, issues: list[str]):
        self.issues = issues
        super().__init__("; ".join(issues))


@dataclass(frozen=True)
class GazetteerEntry:
    area: str
    latitude: float
    longitude: float
    flag: str = ""


@dataclass(frozen=True)
class Hotspot:
    area: str
    latitude: float
    longitude: float
    flag: str
    dataset_count: int


class Gazetteer:
    def __init__(self, entries: list[GazetteerEntry]):
        self.entries = entries
        self._by_area = {normalize_term(e.area): e for e in entries}

    def lookup(self, area: str) -> GazetteerEntry | None:
        return self._by_area.get(normalize_term(area))


def load_gazetteer(stream) -> Gazetteer:
    """Parse "area,latitude,longitude,flag" CSV; bad rows abort the load."""
    data = stream.read() if hasattr(stream, "read") else stream
    if isinstance(data, bytes):
        data = data.decode("utf-8-sig")
    reader = csv.DictReader(io.StringIO(data))
    if list(reader.fieldnames or []) != GAZETTEER_COLUMNS:
        raise GazetteerError(
            [f"bad header: expected {','.join(GAZETTEER_COLUMNS)}"]
        )

    issues: list[str] = []
    entries: list[GazetteerEntry] = []
    seen: set[str] = set()
    for row_number, row in enumerate(reader, start=2):
        area = row["area"].strip()
        if not area:
            issues.append(f"row {row_number}: empty area")
            continue
        key = normalize_term(area)
        if key in seen:
            issues.append(f"row {row_number}: duplicate area {area!r}")
            continue
        try:
            lat = float(row["latitude"])
            lon = float(row["longitude"])
        except (TypeError, ValueError):
            issues.append(f"row {row_number}: non-numeric coordinates for {area!r}")
            continue
        if not -90 <= lat <= 90:
            issues.append(f"row {row_number}: latitude {lat} out of [-90, 90]")
            continue
        if not -180 <= lon <= 180:
            issues.append(f"row {row_number}: longitude {lon} out of [-180, 180]")
            continue
        seen.add(key)
        entries.append(GazetteerEntry(area, lat, lon, (row["flag"] or "").strip()))
    if issues:
        raise GazetteerError(issues)
    return Gazetteer(entries)


def hotspots(
    store: CatalogStore | Snapshot, gazetteer: Gazetteer
) -> tuple[list[Hotspot], list[str]]:
    """One hotspot per gazetteer area with at least one covering dataset.

    Returns (hotspots, warnings); covered areas missing from the gazetteer are
    warned about, never silently dropped.
    """
    snap = store.snapshot() if isinstance(store, CatalogStore) else store

    store_areas: dict[str, str] = {}
    for ds in snap.datasets.values():
        for area in ds.coverage.areas:
            store_areas.setdefault(normalize_term(area), area)

    warnings = [
        f"covered area {original!r} has no gazetteer entry"
        for key, original in sorted(store_areas.items())
        if gazetteer.lookup(original) is None
    ]

    spots = []
    for entry in gazetteer.entries:
        count = len(search_datasets(snap, DatasetQuery(areas=[entry.area])))
        if count >= 1:
            spots.append(
                Hotspot(entry.area, entry.latitude, entry.longitude, entry.flag, count)
            )
    spots.sort(key=lambda h: h.area.casefold())
    return spots, warnings
