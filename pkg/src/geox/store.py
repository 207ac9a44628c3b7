"""In-memory catalogue store with symmetric dataset <-> publication links.

Readers work against immutable snapshots; every mutation builds a fresh
snapshot under a single writer lock and swaps it in atomically, so a reader
never observes a half-applied change.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .model import DatasetRecord, PublicationRecord, ValidationReport


class StoreError(Exception):
    pass


class UnknownRecordError(StoreError):
    pass


class ReferencedRecordError(StoreError):
    """Deletion refused because other records still point at the target."""


@dataclass(frozen=True)
class Snapshot:
    """Point-in-time view of the store. Treat the dicts as read-only."""

    datasets: dict[str, DatasetRecord]
    publications: dict[str, PublicationRecord]

    def __eq__(self, other):
        if not isinstance(other, Snapshot):
            return NotImplemented
        return (
            self.datasets == other.datasets
            and self.publications == other.publications
        )


def _with_link(ids: tuple[str, ...], target: str) -> tuple[str, ...]:
    if target in ids:
        return ids
    return tuple(sorted(ids + (target,)))


def _without_link(ids: tuple[str, ...], target: str) -> tuple[str, ...]:
    return tuple(i for i in ids if i != target)


class CatalogStore:
    def __init__(self):
        self._lock = threading.Lock()
        self._snapshot = Snapshot({}, {})

    def snapshot(self) -> Snapshot:
        return self._snapshot

    # -- reads ----------------------------------------------------------

    def get_dataset(self, dataset_id: str) -> DatasetRecord:
        try:
            return self._snapshot.datasets[dataset_id]
        except KeyError:
            raise UnknownRecordError(f"unknown dataset id {dataset_id!r}") from None

    def get_publication(self, publication_id: str) -> PublicationRecord:
        try:
            return self._snapshot.publications[publication_id]
        except KeyError:
            raise UnknownRecordError(
                f"unknown publication id {publication_id!r}"
            ) from None

    def datasets(self) -> list[DatasetRecord]:
        return list(self._snapshot.datasets.values())

    def publications(self) -> list[PublicationRecord]:
        return list(self._snapshot.publications.values())

    def __len__(self) -> int:
        snap = self._snapshot
        return len(snap.datasets) + len(snap.publications)

    # -- mutations ------------------------------------------------------

    def upsert_dataset(self, record: DatasetRecord) -> str:
        with self._lock:
            snap = self._snapshot
            datasets = dict(snap.datasets)
            publications = dict(snap.publications)

            old = datasets.get(record.id)
            old_refs = set(old.publication_ids) if old else set()
            new_refs = set(record.publication_ids)

            datasets[record.id] = record
            for pid in old_refs - new_refs:
                if pid in publications:
                    pub = publications[pid]
                    publications[pid] = replace(
                        pub, dataset_ids=_without_link(pub.dataset_ids, record.id)
                    )
            for pid in new_refs:
                if pid in publications:
                    pub = publications[pid]
                    publications[pid] = replace(
                        pub, dataset_ids=_with_link(pub.dataset_ids, record.id)
                    )
            self._snapshot = Snapshot(datasets, publications)
        return record.id

    def upsert_publication(self, record: PublicationRecord) -> str:
        with self._lock:
            snap = self._snapshot
            datasets = dict(snap.datasets)
            publications = dict(snap.publications)

            old = publications.get(record.id)
            old_refs = set(old.dataset_ids) if old else set()
            new_refs = set(record.dataset_ids)

            publications[record.id] = record
            for did in old_refs - new_refs:
                if did in datasets:
                    ds = datasets[did]
                    datasets[did] = replace(
                        ds, publication_ids=_without_link(ds.publication_ids, record.id)
                    )
            for did in new_refs:
                if did in datasets:
                    ds = datasets[did]
                    datasets[did] = replace(
                        ds, publication_ids=_with_link(ds.publication_ids, record.id)
                    )
            self._snapshot = Snapshot(datasets, publications)
        return record.id

    def delete_record(self, record_id: str, kind: str, force: bool = False) -> None:
        if kind not in ("dataset", "publication"):
            raise ValueError(f"kind must be 'dataset' or 'publication', got {kind!r}")
        with self._lock:
            snap = self._snapshot
            datasets = dict(snap.datasets)
            publications = dict(snap.publications)

            if kind == "dataset":
                if record_id not in datasets:
                    raise UnknownRecordError(f"unknown dataset id {record_id!r}")
                inbound = [
                    p.id for p in publications.values() if record_id in p.dataset_ids
                ]
                if inbound and not force:
                    raise ReferencedRecordError(
                        f"dataset {record_id!r} is referenced by publications "
                        f"{inbound}; pass force to unlink and delete"
                    )
                del datasets[record_id]
                for pid in inbound:
                    pub = publications[pid]
                    publications[pid] = replace(
                        pub, dataset_ids=_without_link(pub.dataset_ids, record_id)
                    )
            else:
                if record_id not in publications:
                    raise UnknownRecordError(f"unknown publication id {record_id!r}")
                inbound = [
                    d.id for d in datasets.values() if record_id in d.publication_ids
                ]
                if inbound and not force:
                    raise ReferencedRecordError(
                        f"publication {record_id!r} is referenced by datasets "
                        f"{inbound}; pass force to unlink and delete"
                    )
                del publications[record_id]
                for did in inbound:
                    ds = datasets[did]
                    datasets[did] = replace(
                        ds, publication_ids=_without_link(ds.publication_ids, record_id)
                    )
            self._snapshot = Snapshot(datasets, publications)

    def load(
        self,
        datasets: Iterable[DatasetRecord],
        publications: Iterable[PublicationRecord],
    ) -> None:
        """Bulk-replace the store contents in one snapshot swap.

        Records are installed as given; callers are responsible for having
        symmetrized links beforehand (ingest does).
        """
        with self._lock:
            self._snapshot = Snapshot(
                {d.id: d for d in datasets},
                {p.id: p for p in publications},
            )


def validate_cross_references(
    snapshot: Snapshot, report: Optional[ValidationReport] = None
) -> ValidationReport:
    """Check referential closure and link symmetry across the two tables."""
    report = report if report is not None else ValidationReport()
    datasets, publications = snapshot.datasets, snapshot.publications

    for ds in datasets.values():
        for pid in ds.publication_ids:
            pub = publications.get(pid)
            if pub is None:
                report.error(
                    "publication_ids",
                    f"references nonexistent publication {pid!r}",
                    record_id=ds.id,
                )
            elif ds.id not in pub.dataset_ids:
                report.error(
                    "publication_ids",
                    f"links publication {pid!r} which does not link back",
                    record_id=ds.id,
                )
    for pub in publications.values():
        for did in pub.dataset_ids:
            ds = datasets.get(did)
            if ds is None:
                report.error(
                    "dataset_ids",
                    f"references nonexistent dataset {did!r}",
                    record_id=pub.id,
                )
            elif pub.id not in ds.publication_ids:
                report.error(
                    "dataset_ids",
                    f"links dataset {did!r} which does not link back",
                    record_id=pub.id,
                )
        if not pub.dataset_ids:
            report.warn(
                "dataset_ids", "publication references no datasets", record_id=pub.id
            )
    return report
