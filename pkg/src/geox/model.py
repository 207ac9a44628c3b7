"""Domain types for the catalogue: datasets, publications, and their parts."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

SLUG_RE = re.compile(r"^[a-z0-9][a-z0-9-]*$")


class ProviderCategory(str, Enum):
    GOVERNMENT_AGENCY = "government"
    COMMERCIAL_COMPANY = "commercial"
    ACADEMIC_INSTITUTE = "academic"


class ProviderRegion(str, Enum):
    ASIA = "asia"
    EUROPE = "europe"
    AMERICA = "america"
    AFRICA = "africa"
    OTHER = "other"


class CostAccess(str, Enum):
    FREE = "free"
    PAID = "paid"


class CoverageRegion(str, Enum):
    GLOBAL = "global"
    AMERICAS = "americas"
    ASIA = "asia"
    AFRICA = "africa"
    EUROPE = "europe"


class UpdateFrequency(str, Enum):
    DAILY = "daily"
    EVERY_10_DAYS = "every_10_days"
    MONTHLY = "monthly"
    QUARTERLY = "quarterly"
    ANNUAL = "annual"
    EVERY_5_TO_10_YEARS = "every_5_to_10_years"
    IRREGULAR = "irregular"
    NOT_UPDATED = "not_updated"
    UNKNOWN = "unknown"


class JournalCategory(str, Enum):
    GEOGRAPHY = "geography"
    PUBLIC_HEALTH = "public_health"
    ENVIRONMENT = "environment"
    SCIENCE = "science"


class StudyTheme(str, Enum):
    HUMAN_ACTIVITY = "human_activity"
    PUBLIC_HEALTH = "public_health"
    ENVIRONMENT = "environment"


def normalize_term(text: str) -> str:
    """Canonical form used for all term comparisons.

    Unicode compatibility normalization, diacritics stripped, casefolded.
    The stored value keeps its original spelling; only comparisons use this.
    """
    decomposed = unicodedata.normalize("NFKD", text)
    stripped = "".join(c for c in decomposed if not unicodedata.combining(c))
    return stripped.casefold().strip()


def slugify(name: str) -> str:
    """Turn a record name into a lowercase id slug."""
    base = normalize_term(name)
    slug = re.sub(r"[^a-z0-9]+", "-", base).strip("-")
    return slug or "record"


class ModelError(ValueError):
    """A record violated one of its own field invariants."""


@dataclass(frozen=True)
class Provider:
    name: str
    category: ProviderCategory
    region: ProviderRegion

    def __post_init__(self):
        if not self.name.strip():
            raise ModelError("provider name must be nonempty")


@dataclass(frozen=True)
class LengthResolution:
    """Ground resolution in meters; a point resolution has min == max."""

    min_meters: float
    max_meters: Optional[float] = None  # None means open-ended (">10km")
    band: Optional[str] = None

    def __post_init__(self):
        if self.min_meters <= 0:
            raise ModelError("min_meters must be > 0")
        if self.max_meters is not None and self.max_meters < self.min_meters:
            raise ModelError("max_meters must be >= min_meters")


@dataclass(frozen=True)
class ScaleResolution:
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ModelError("scale denominator must be > 0")


@dataclass(frozen=True)
class UnspecifiedResolution:
    pass


Resolution = Union[LengthResolution, ScaleResolution, UnspecifiedResolution]


@dataclass(frozen=True)
class CostInfo:
    access: CostAccess
    notes: Optional[str] = None


@dataclass(frozen=True)
class CoverageInfo:
    region: CoverageRegion
    areas: tuple[str, ...]

    def __post_init__(self):
        if not self.areas:
            raise ModelError("coverage areas must be nonempty")
        object.__setattr__(self, "areas", tuple(sorted(self.areas, key=str.casefold)))
        if self.region is CoverageRegion.GLOBAL:
            names = {normalize_term(a) for a in self.areas}
            if not names & {"global", "global coastal zone (ocean)"}:
                raise ModelError(
                    "global coverage must include 'Global' or "
                    "'Global Coastal Zone (Ocean)' in areas"
                )


def _sorted_terms(values) -> tuple[str, ...]:
    return tuple(sorted(values, key=str.casefold))


def _resolution_sort_key(res: "Resolution"):
    if isinstance(res, LengthResolution):
        return (0, res.min_meters, res.max_meters or float("inf"), res.band or "")
    if isinstance(res, ScaleResolution):
        return (1, res.denominator, 0, "")
    return (2, 0, 0, "")


def _check_id(record_id: str) -> None:
    if not SLUG_RE.match(record_id):
        raise ModelError(f"invalid id {record_id!r}: must match {SLUG_RE.pattern}")


def _check_year(value: Optional[int], what: str) -> None:
    if value is not None and not (1000 <= value <= 9999):
        raise ModelError(f"{what} must be a 4-digit calendar year, got {value!r}")


@dataclass
class DatasetRecord:
    id: str
    name: str
    providers: tuple[Provider, ...]
    update_frequency: UpdateFrequency
    cost: CostInfo
    coverage: CoverageInfo
    url: str = ""
    first_available_year: Optional[int] = None
    still_updated_as_of: Optional[int] = None
    resolutions: tuple[Resolution, ...] = ()
    health_applications: tuple[str, ...] = ()
    publication_ids: tuple[str, ...] = ()

    def __post_init__(self):
        _check_id(self.id)
        if not self.name.strip():
            raise ModelError("dataset name must be nonempty")
        if not self.providers:
            raise ModelError("dataset must have at least one provider")
        _check_year(self.first_available_year, "first_available_year")
        _check_year(self.still_updated_as_of, "still_updated_as_of")
        if (
            self.first_available_year is not None
            and self.still_updated_as_of is not None
            and self.still_updated_as_of < self.first_available_year
        ):
            raise ModelError("still_updated_as_of must be >= first_available_year")
        # canonical ordering keeps export and JSON output deterministic
        self.providers = tuple(
            sorted(self.providers, key=lambda p: (p.name.casefold(), p.category.value))
        )
        self.resolutions = tuple(sorted(self.resolutions, key=_resolution_sort_key))
        self.health_applications = _sorted_terms(self.health_applications)
        self.publication_ids = tuple(sorted(set(self.publication_ids)))


@dataclass
class PublicationRecord:
    id: str
    title: str
    year: int
    journal: str
    journal_category: JournalCategory
    study_theme: StudyTheme
    study_topics: tuple[str, ...] = ()
    study_areas: tuple[str, ...] = ()
    link: str = ""
    dataset_ids: tuple[str, ...] = ()
    health_applications: tuple[str, ...] = ()

    def __post_init__(self):
        _check_id(self.id)
        if not self.title.strip():
            raise ModelError("publication title must be nonempty")
        _check_year(self.year, "year")
        self.study_topics = _sorted_terms(self.study_topics)
        self.study_areas = _sorted_terms(self.study_areas)
        self.health_applications = _sorted_terms(self.health_applications)
        self.dataset_ids = tuple(sorted(set(self.dataset_ids)))


@dataclass(frozen=True)
class Issue:
    """One validation finding, located by record id or source row."""

    field: str
    message: str
    record_id: Optional[str] = None
    row: Optional[int] = None

    def location(self) -> str:
        if self.record_id is not None:
            return self.record_id
        if self.row is not None:
            return f"row {self.row}"
        return "-"


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def error(self, fld: str, message: str, *, record_id=None, row=None) -> None:
        self.errors.append(Issue(fld, message, record_id=record_id, row=row))

    def warn(self, fld: str, message: str, *, record_id=None, row=None) -> None:
        self.warnings.append(Issue(fld, message, record_id=record_id, row=row))

    def extend(self, other: "ValidationReport") -> None:
        self.errors.extend(other.errors)
        self.warnings.extend(other.warnings)

    def lines(self) -> list[str]:
        out = []
        for issue in self.errors:
            out.append(f"error: {issue.location()}: {issue.field}: {issue.message}")
        for issue in self.warnings:
            out.append(f"warning: {issue.location()}: {issue.field}: {issue.message}")
        return out
