"""File-backed persistence: CSV pair plus a contributions.json sidecar.

All writes go through temp-file-then-rename so a crash at any point leaves
the data directory loadable as either the old or the new state.
"""

from __future__ import annotations

import dataclasses
import json
import os
import time
import uuid
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

from .ingest import WorkbookSource, export_csv, ingest_workbook
from .model import ValidationReport
from .store import CatalogStore

DATASETS_FILE = "datasets.csv"
PUBLICATIONS_FILE = "publications.csv"
CONTRIBUTIONS_FILE = "contributions.json"
STAGED_SUFFIX = ".new"
COMMIT_MARKER = ".commit"
GAZETTEER_FILE = "gazetteer.csv"
AREA_BUCKETS_FILE = "study_area_buckets.csv"


def atomic_write_bytes(path: Path, data: bytes) -> None:
    """Write via a temp file in the same directory, fsync, then rename."""
    path = Path(path)
    tmp = path.with_name(f".{path.name}.{uuid.uuid4().hex}.tmp")
    fd = os.open(tmp, os.O_WRONLY | os.O_CREAT | os.O_EXCL, 0o644)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    finally:
        if tmp.exists():
            tmp.unlink(missing_ok=True)


class ContributionState(str, Enum):
    PENDING = "pending"
    APPROVED = "approved"
    REJECTED = "rejected"


class ContributionKind(str, Enum):
    DATASET = "dataset"
    PUBLICATION = "publication"


@dataclass
class Contribution:
    id: str
    kind: ContributionKind
    payload: dict
    submitter: Optional[str] = None
    state: ContributionState = ContributionState.PENDING
    submitted_at: float = field(default_factory=time.time)
    reviewed_at: Optional[float] = None
    reviewer_note: Optional[str] = None

    def to_json_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["kind"] = self.kind.value
        d["state"] = self.state.value
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "Contribution":
        return cls(
            id=d["id"],
            kind=ContributionKind(d["kind"]),
            payload=d["payload"],
            submitter=d.get("submitter"),
            state=ContributionState(d["state"]),
            submitted_at=d.get("submitted_at", 0.0),
            reviewed_at=d.get("reviewed_at"),
            reviewer_note=d.get("reviewer_note"),
        )


def new_contribution_id() -> str:
    return uuid.uuid4().hex[:12]


class DataDir:
    """The on-disk source of truth for one catalogue instance."""

    def __init__(self, root: Path | str):
        self.root = Path(root)

    @property
    def datasets_path(self) -> Path:
        return self.root / DATASETS_FILE

    @property
    def publications_path(self) -> Path:
        return self.root / PUBLICATIONS_FILE

    @property
    def contributions_path(self) -> Path:
        return self.root / CONTRIBUTIONS_FILE

    def exists(self) -> bool:
        return self.datasets_path.exists() and self.publications_path.exists()

    def _staged(self, path: Path) -> Path:
        return path.with_name(path.name + STAGED_SUFFIX)

    def _recover(self) -> None:
        """Finish or discard an interrupted save of the CSV pair.

        A save stages both new files, then drops a commit marker, then renames
        them into place. Marker present means the save committed: roll the
        remaining staged files forward. Marker absent means it did not: the
        staged files are garbage from a crash and are rolled back.
        """
        marker = self.root / COMMIT_MARKER
        staged = [
            (self._staged(p), p)
            for p in (self.datasets_path, self.publications_path)
        ]
        if marker.exists():
            for src, dst in staged:
                if src.exists():
                    os.replace(src, dst)
            marker.unlink(missing_ok=True)
        else:
            for src, _ in staged:
                src.unlink(missing_ok=True)

    def load_store(self) -> tuple[CatalogStore, ValidationReport]:
        """Load the CSV pair; a missing pair yields an empty store."""
        if self.root.is_dir():
            self._recover()
        if not self.exists():
            return CatalogStore(), ValidationReport()
        source = WorkbookSource(
            datasets_csv=self.datasets_path.read_bytes(),
            publications_csv=self.publications_path.read_bytes(),
        )
        return ingest_workbook(source)

    def save_store(self, store: CatalogStore) -> None:
        """Replace the CSV pair as one transaction (see _recover)."""
        self.root.mkdir(parents=True, exist_ok=True)
        self._recover()
        source = export_csv(store)
        atomic_write_bytes(self._staged(self.datasets_path), source.datasets_csv)
        atomic_write_bytes(
            self._staged(self.publications_path), source.publications_csv
        )
        marker = self.root / COMMIT_MARKER
        atomic_write_bytes(marker, b"")  # commit point for the pair
        os.replace(self._staged(self.datasets_path), self.datasets_path)
        os.replace(self._staged(self.publications_path), self.publications_path)
        marker.unlink(missing_ok=True)

    def load_contributions(self) -> list[Contribution]:
        if not self.contributions_path.exists():
            return []
        raw = json.loads(self.contributions_path.read_text("utf-8"))
        return [Contribution.from_json_dict(d) for d in raw]

    def save_contributions(self, contributions: list[Contribution]) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        data = json.dumps(
            [c.to_json_dict() for c in contributions], ensure_ascii=False, indent=2
        )
        atomic_write_bytes(self.contributions_path, data.encode("utf-8"))
