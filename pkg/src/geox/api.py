"""JSON HTTP service: search, records, stats, hotspots, admin CRUD and the
public contribution queue. FastAPI app over the core package."""

from __future__ import annotations

import csv
import io
import os
import secrets
import threading
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Literal, Optional

from fastapi import Depends, FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import geo, search, serialize, stats
from .model import CostAccess, ModelError, ProviderCategory
from .persistence import (
    Contribution,
    ContributionKind,
    ContributionState,
    DataDir,
    new_contribution_id,
)
from .store import CatalogStore, ReferencedRecordError, UnknownRecordError


@dataclass
class ServiceConfig:
    data_dir: Path
    admin_token: Optional[str] = None
    bind_addr: str = "127.0.0.1"
    port: int = 8080

    @classmethod
    def from_env(cls) -> "ServiceConfig":
        return cls(
            data_dir=Path(os.environ.get("GEOX_DATA_DIR", "./data")),
            admin_token=os.environ.get("GEOX_ADMIN_TOKEN") or None,
            bind_addr=os.environ.get("GEOX_BIND_ADDR", "127.0.0.1"),
            port=int(os.environ.get("GEOX_PORT", "8080")),
        )


def _package_data(name: str) -> bytes:
    return resources.files("geox").joinpath("data", name).read_bytes()


def load_area_buckets(data: bytes) -> dict[str, str]:
    reader = csv.DictReader(io.StringIO(data.decode("utf-8-sig")))
    return {row["area"]: row["bucket"] for row in reader}


class CatalogService:
    """Store + sidecar files + the single-writer mutation contract."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.data_dir = DataDir(config.data_dir)
        self.write_lock = threading.Lock()

        store, report = self.data_dir.load_store()
        if not report.ok:
            detail = "; ".join(report.lines()[:5])
            raise RuntimeError(f"data dir failed validation: {detail}")
        self.store: CatalogStore = store
        self.contributions: list[Contribution] = self.data_dir.load_contributions()

        gaz_path = config.data_dir / "gazetteer.csv"
        gaz_bytes = (
            gaz_path.read_bytes() if gaz_path.exists() else _package_data("gazetteer.csv")
        )
        self.gazetteer = geo.load_gazetteer(gaz_bytes)

        buckets_path = config.data_dir / "study_area_buckets.csv"
        buckets_bytes = (
            buckets_path.read_bytes()
            if buckets_path.exists()
            else _package_data("study_area_buckets.csv")
        )
        self.area_buckets = load_area_buckets(buckets_bytes)

    def persist(self) -> None:
        self.data_dir.save_store(self.store)

    def persist_contributions(self) -> None:
        self.data_dir.save_contributions(self.contributions)

    def check_token(self, token: Optional[str]) -> bool:
        if not self.config.admin_token or not token:
            return False
        return secrets.compare_digest(token, self.config.admin_token)

    def find_contribution(self, cid: str) -> Optional[Contribution]:
        return next((c for c in self.contributions if c.id == cid), None)


def _error(status: int, message: str, details: Optional[list[dict]] = None):
    return JSONResponse(
        status_code=status, content={"error": message, "details": details or []}
    )


class ContributionSubmission(BaseModel):
    kind: Literal["dataset", "publication"]
    payload: dict
    submitter: Optional[str] = None


class ReviewRequest(BaseModel):
    note: Optional[str] = None


class DatasetPayload(BaseModel):
    id: Optional[str] = None
    name: str
    providers: list[dict] = []
    first_available_year: Optional[int] = None
    update_frequency: str = "unknown"
    still_updated_as_of: Optional[int] = None
    cost: dict = {}
    coverage: dict = {}
    resolutions: list[dict] = []
    url: str = ""
    health_applications: list[str] = []
    publication_ids: list[str] = []


class PublicationPayload(BaseModel):
    id: Optional[str] = None
    title: str
    year: int
    journal: str = ""
    journal_category: str
    study_theme: str
    study_topics: list[str] = []
    study_areas: list[str] = []
    link: str = ""
    dataset_ids: list[str] = []
    health_applications: list[str] = []


def create_app(config: Optional[ServiceConfig] = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    service = CatalogService(config)

    app = FastAPI(title="geox catalogue service")
    app.state.service = service

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        details = [
            {"field": ".".join(str(p) for p in e["loc"]), "message": e["msg"]}
            for e in exc.errors()
        ]
        return _error(422, "invalid request body", details)

    def admin_token(request: Request) -> Optional[str]:
        header = request.headers.get("authorization", "")
        if header.lower().startswith("bearer "):
            return header[7:].strip()
        return None

    def require_admin(token: Optional[str] = Depends(admin_token)):
        if not service.check_token(token):
            return _error(401, "missing or invalid admin token")
        return None

    # -- public reads ----------------------------------------------------

    @app.get("/api/datasets")
    def list_datasets(
        health: list[str] = Query(default=[]),
        cost: Optional[str] = None,
        area: list[str] = Query(default=[]),
        provider: list[str] = Query(default=[]),
        provider_category: list[str] = Query(default=[]),
        q: Optional[str] = None,
    ):
        cost_value = None
        if cost is not None:
            try:
                cost_value = CostAccess(cost.lower())
            except ValueError:
                return _error(
                    400,
                    f"invalid cost {cost!r}",
                    [{"field": "cost", "message": "accepted values: free, paid"}],
                )
        categories = []
        for raw in provider_category:
            try:
                categories.append(ProviderCategory(raw.lower()))
            except ValueError:
                accepted = ", ".join(m.value for m in ProviderCategory)
                return _error(
                    400,
                    f"invalid provider_category {raw!r}",
                    [{"field": "provider_category", "message": f"accepted values: {accepted}"}],
                )
        snap = service.store.snapshot()
        query = search.DatasetQuery(
            health_terms=health,
            cost=cost_value,
            areas=area,
            providers=provider,
            provider_categories=categories,
            free_text=q,
        )
        return [
            serialize.dataset_to_json(ds, snap)
            for ds in search.search_datasets(snap, query)
        ]

    @app.get("/api/datasets/{dataset_id}")
    def get_dataset(dataset_id: str):
        snap = service.store.snapshot()
        ds = snap.datasets.get(dataset_id)
        if ds is None:
            return _error(404, f"unknown dataset id {dataset_id!r}")
        return serialize.dataset_to_json(ds, snap)

    @app.get("/api/publications")
    def list_publications(
        health: list[str] = Query(default=[]),
        dataset: Optional[str] = None,
    ):
        snap = service.store.snapshot()
        query = search.PublicationQuery(health_terms=health, dataset_name=dataset)
        return [
            serialize.publication_to_json(pub, snap)
            for pub in search.search_publications(snap, query)
        ]

    @app.get("/api/publications/{publication_id}")
    def get_publication(publication_id: str):
        snap = service.store.snapshot()
        pub = snap.publications.get(publication_id)
        if pub is None:
            return _error(404, f"unknown publication id {publication_id!r}")
        return serialize.publication_to_json(pub, snap)

    @app.get("/api/stats/{table}")
    def get_stats(table: str):
        try:
            result = stats.compute_table(
                service.store, table, area_buckets=service.area_buckets
            )
        except KeyError as exc:
            return _error(404, str(exc.args[0]))
        return result.to_json_dict()

    @app.get("/api/hotspots")
    def get_hotspots():
        spots, _warnings = geo.hotspots(service.store, service.gazetteer)
        return [
            {
                "area": h.area,
                "latitude": h.latitude,
                "longitude": h.longitude,
                "flag": h.flag,
                "dataset_count": h.dataset_count,
            }
            for h in spots
        ]

    # -- admin CRUD ------------------------------------------------------

    def _store_dataset(payload: dict, forced_id: Optional[str] = None):
        try:
            if forced_id is not None:
                payload = {**payload, "id": forced_id}
            record = serialize.dataset_from_payload(payload)
        except ModelError as exc:
            return None, _error(422, "invalid dataset record", [{"field": "payload", "message": str(exc)}])
        with service.write_lock:
            service.store.upsert_dataset(record)
            service.persist()
        return record, None

    def _store_publication(payload: dict, forced_id: Optional[str] = None):
        try:
            if forced_id is not None:
                payload = {**payload, "id": forced_id}
            record = serialize.publication_from_payload(payload)
        except ModelError as exc:
            return None, _error(422, "invalid publication record", [{"field": "payload", "message": str(exc)}])
        with service.write_lock:
            service.store.upsert_publication(record)
            service.persist()
        return record, None

    @app.post("/api/admin/datasets", status_code=201)
    def admin_create_dataset(payload: DatasetPayload, auth=Depends(require_admin)):
        if auth is not None:
            return auth
        record, err = _store_dataset(payload.model_dump())
        if err is not None:
            return err
        return {"id": record.id}

    @app.put("/api/admin/datasets/{dataset_id}")
    def admin_update_dataset(
        dataset_id: str, payload: DatasetPayload, auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        record, err = _store_dataset(payload.model_dump(), forced_id=dataset_id)
        if err is not None:
            return err
        return {"id": record.id}

    @app.delete("/api/admin/datasets/{dataset_id}")
    def admin_delete_dataset(
        dataset_id: str, force: bool = False, auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        return _delete(dataset_id, "dataset", force)

    @app.post("/api/admin/publications", status_code=201)
    def admin_create_publication(
        payload: PublicationPayload, auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        record, err = _store_publication(payload.model_dump())
        if err is not None:
            return err
        return {"id": record.id}

    @app.put("/api/admin/publications/{publication_id}")
    def admin_update_publication(
        publication_id: str, payload: PublicationPayload, auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        record, err = _store_publication(payload.model_dump(), forced_id=publication_id)
        if err is not None:
            return err
        return {"id": record.id}

    @app.delete("/api/admin/publications/{publication_id}")
    def admin_delete_publication(
        publication_id: str, force: bool = False, auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        return _delete(publication_id, "publication", force)

    def _delete(record_id: str, kind: str, force: bool):
        with service.write_lock:
            try:
                service.store.delete_record(record_id, kind, force=force)
            except UnknownRecordError as exc:
                return _error(404, str(exc))
            except ReferencedRecordError as exc:
                return _error(409, str(exc))
            service.persist()
        return {"deleted": record_id}

    # -- contributions ---------------------------------------------------

    @app.post("/api/contributions", status_code=201)
    def submit_contribution(submission: ContributionSubmission):
        contribution = Contribution(
            id=new_contribution_id(),
            kind=ContributionKind(submission.kind),
            payload=submission.payload,
            submitter=submission.submitter,
        )
        with service.write_lock:
            service.contributions.append(contribution)
            service.persist_contributions()
        return {"id": contribution.id, "state": contribution.state.value}

    @app.get("/api/admin/contributions")
    def list_contributions(
        state: Optional[str] = None, auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        items = service.contributions
        if state is not None:
            try:
                wanted = ContributionState(state.lower())
            except ValueError:
                accepted = ", ".join(m.value for m in ContributionState)
                return _error(
                    400,
                    f"invalid state {state!r}",
                    [{"field": "state", "message": f"accepted values: {accepted}"}],
                )
            items = [c for c in items if c.state is wanted]
        return [c.to_json_dict() for c in items]

    @app.post("/api/admin/contributions/{cid}/approve")
    def approve_contribution(
        cid: str, review: ReviewRequest = ReviewRequest(), auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        with service.write_lock:
            contribution = service.find_contribution(cid)
            if contribution is None:
                return _error(404, f"unknown contribution {cid!r}")
            if contribution.state is not ContributionState.PENDING:
                return _error(
                    409, f"contribution {cid!r} already {contribution.state.value}"
                )
            try:
                if contribution.kind is ContributionKind.DATASET:
                    record = serialize.dataset_from_payload(contribution.payload)
                    service.store.upsert_dataset(record)
                else:
                    record = serialize.publication_from_payload(contribution.payload)
                    service.store.upsert_publication(record)
            except ModelError as exc:
                return _error(
                    422,
                    "contribution payload failed validation; still pending",
                    [{"field": "payload", "message": str(exc)}],
                )
            contribution.state = ContributionState.APPROVED
            contribution.reviewed_at = time.time()
            contribution.reviewer_note = review.note
            service.persist()
            service.persist_contributions()
        return {"id": cid, "state": "approved", "record_id": record.id}

    @app.post("/api/admin/contributions/{cid}/reject")
    def reject_contribution(
        cid: str, review: ReviewRequest = ReviewRequest(), auth=Depends(require_admin)
    ):
        if auth is not None:
            return auth
        with service.write_lock:
            contribution = service.find_contribution(cid)
            if contribution is None:
                return _error(404, f"unknown contribution {cid!r}")
            if contribution.state is not ContributionState.PENDING:
                return _error(
                    409, f"contribution {cid!r} already {contribution.state.value}"
                )
            contribution.state = ContributionState.REJECTED
            contribution.reviewed_at = time.time()
            contribution.reviewer_note = review.note
            service.persist_contributions()
        return {"id": cid, "state": "rejected"}

    return app


def serve(config: Optional[ServiceConfig] = None) -> None:
    import uvicorn

    config = config or ServiceConfig.from_env()
    uvicorn.run(create_app(config), host=config.bind_addr, port=config.port)
