"""JSON record shapes shared by the HTTP API and the CLI's --format json.

Both sides serialize through these functions so their bytes agree for the
same store snapshot.
"""

from __future__ import annotations

import json

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
    slugify,
)
from .store import Snapshot


def dumps_compact(obj) -> str:
    """Match FastAPI's JSONResponse encoding byte for byte."""
    return json.dumps(obj, ensure_ascii=False, allow_nan=False, separators=(",", ":"))


def resolution_to_json(res: Resolution) -> dict:
    if isinstance(res, LengthResolution):
        return {
            "kind": "length",
            "min_meters": res.min_meters,
            "max_meters": res.max_meters,
            "band": res.band,
        }
    if isinstance(res, ScaleResolution):
        return {"kind": "scale", "denominator": res.denominator}
    return {"kind": "unspecified"}


def resolution_from_json(d: dict) -> Resolution:
    kind = d.get("kind")
    if kind == "length":
        return LengthResolution(
            min_meters=float(d["min_meters"]),
            max_meters=None if d.get("max_meters") is None else float(d["max_meters"]),
            band=d.get("band"),
        )
    if kind == "scale":
        return ScaleResolution(denominator=int(d["denominator"]))
    if kind == "unspecified":
        return UnspecifiedResolution()
    raise ModelError(f"unknown resolution kind {kind!r}")


def dataset_to_json(ds: DatasetRecord, snapshot: Snapshot) -> dict:
    return {
        "id": ds.id,
        "name": ds.name,
        "providers": [
            {"name": p.name, "category": p.category.value, "region": p.region.value}
            for p in ds.providers
        ],
        "first_available_year": ds.first_available_year,
        "update_frequency": ds.update_frequency.value,
        "still_updated_as_of": ds.still_updated_as_of,
        "cost": {"access": ds.cost.access.value, "notes": ds.cost.notes},
        "coverage": {
            "region": ds.coverage.region.value,
            "areas": list(ds.coverage.areas),
        },
        "resolutions": [resolution_to_json(r) for r in ds.resolutions],
        "url": ds.url,
        "health_applications": list(ds.health_applications),
        "publication_ids": list(ds.publication_ids),
        "publications": [
            {
                "id": pid,
                "title": snapshot.publications[pid].title,
                "year": snapshot.publications[pid].year,
            }
            for pid in ds.publication_ids
            if pid in snapshot.publications
        ],
    }


def publication_to_json(pub: PublicationRecord, snapshot: Snapshot) -> dict:
    return {
        "id": pub.id,
        "title": pub.title,
        "year": pub.year,
        "journal": pub.journal,
        "journal_category": pub.journal_category.value,
        "study_theme": pub.study_theme.value,
        "study_topics": list(pub.study_topics),
        "study_areas": list(pub.study_areas),
        "link": pub.link,
        "health_applications": list(pub.health_applications),
        "dataset_ids": list(pub.dataset_ids),
        "datasets": [
            {"id": did, "name": snapshot.datasets[did].name}
            for did in pub.dataset_ids
            if did in snapshot.datasets
        ],
    }


def _terms(value) -> tuple[str, ...]:
    if value is None:
        return ()
    if not isinstance(value, (list, tuple)):
        raise ModelError(f"expected a list of strings, got {value!r}")
    return tuple(str(v) for v in value)


def _enum(enum_cls, value, field_name):
    try:
        return enum_cls(value)
    except ValueError:
        accepted = ", ".join(m.value for m in enum_cls)
        raise ModelError(
            f"invalid {field_name} {value!r}; accepted: {accepted}"
        ) from None


def dataset_from_payload(payload: dict) -> DatasetRecord:
    """Build a DatasetRecord from an API payload, minting an id if absent."""
    if not isinstance(payload, dict):
        raise ModelError("payload must be an object")
    name = str(payload.get("name") or "").strip()
    record_id = str(payload.get("id") or "").strip() or slugify(name)
    providers = tuple(
        Provider(
            name=str(p.get("name") or ""),
            category=_enum(ProviderCategory, p.get("category"), "provider category"),
            region=_enum(ProviderRegion, p.get("region"), "provider region"),
        )
        for p in payload.get("providers") or []
    )
    cost_payload = payload.get("cost") or {}
    coverage_payload = payload.get("coverage") or {}
    return DatasetRecord(
        id=record_id,
        name=name,
        providers=providers,
        first_available_year=payload.get("first_available_year"),
        update_frequency=_enum(
            UpdateFrequency,
            payload.get("update_frequency", "unknown"),
            "update frequency",
        ),
        still_updated_as_of=payload.get("still_updated_as_of"),
        cost=CostInfo(
            access=_enum(CostAccess, cost_payload.get("access"), "cost access"),
            notes=cost_payload.get("notes"),
        ),
        coverage=CoverageInfo(
            region=_enum(
                CoverageRegion, coverage_payload.get("region"), "coverage region"
            ),
            areas=_terms(coverage_payload.get("areas")),
        ),
        resolutions=tuple(
            resolution_from_json(r) for r in payload.get("resolutions") or []
        ),
        url=str(payload.get("url") or ""),
        health_applications=_terms(payload.get("health_applications")),
        publication_ids=_terms(payload.get("publication_ids")),
    )


def publication_from_payload(payload: dict) -> PublicationRecord:
    if not isinstance(payload, dict):
        raise ModelError("payload must be an object")
    title = str(payload.get("title") or "").strip()
    record_id = str(payload.get("id") or "").strip() or slugify(title)
    year = payload.get("year")
    if not isinstance(year, int):
        raise ModelError(f"year must be an integer, got {year!r}")
    return PublicationRecord(
        id=record_id,
        title=title,
        year=year,
        journal=str(payload.get("journal") or ""),
        journal_category=_enum(
            JournalCategory, payload.get("journal_category"), "journal category"
        ),
        study_theme=_enum(StudyTheme, payload.get("study_theme"), "study theme"),
        study_topics=_terms(payload.get("study_topics")),
        study_areas=_terms(payload.get("study_areas")),
        link=str(payload.get("link") or ""),
        dataset_ids=_terms(payload.get("dataset_ids")),
        health_applications=_terms(payload.get("health_applications")),
    )
