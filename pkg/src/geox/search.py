"""Faceted and phonetic search over the catalogue.

Free text matches per-token through Soundex codes so spelling variants
("haemorrhagic" / "hemorrhagic" / "hemoragic") retrieve the same records.
Synonyms do not match; that is a documented limitation, not a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .model import (
    CostAccess,
    DatasetRecord,
    ProviderCategory,
    PublicationRecord,
    normalize_term,
)
from .store import CatalogStore, Snapshot

_SOUNDEX_DIGITS = {
    "b": "1", "f": "1", "p": "1", "v": "1",
    "c": "2", "g": "2", "j": "2", "k": "2", "q": "2", "s": "2", "x": "2", "z": "2",
    "d": "3", "t": "3",
    "l": "4",
    "m": "5", "n": "5",
    "r": "6",
}


class NonPhoneticError(ValueError):
    """Token has no letters to encode; callers fall back to exact matching."""


def soundex(token: str) -> str:
    """American Soundex (archive coding rules): letter + three digits.

    h/w between two letters of equal code collapse them; vowels keep them
    apart; a second letter sharing the first letter's code is dropped.
    """
    letters = [c for c in normalize_term(token) if "a" <= c <= "z"]
    if not letters:
        raise NonPhoneticError(f"no letters to encode in {token!r}")

    digits = []
    prev = _SOUNDEX_DIGITS.get(letters[0])
    for c in letters[1:]:
        d = _SOUNDEX_DIGITS.get(c)
        if c in "hw":
            continue  # transparent: previous code stays in effect
        if d is None:  # vowel separates equal codes
            prev = None
            continue
        if d != prev:
            digits.append(d)
        prev = d
    return (letters[0].upper() + "".join(digits) + "000")[:4]


def normalize_tokens(text: str) -> list[str]:
    """Lowercased, diacritic-free tokens split on non-alphanumeric runs."""
    tokens, current = [], []
    for c in normalize_term(text):
        if c.isalnum():
            current.append(c)
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return tokens


def _tokens_match(query_token: str, field_token: str) -> bool:
    if query_token.isdigit() or field_token.isdigit():
        return query_token == field_token
    return soundex(query_token) == soundex(field_token)


def _value_covers(query_tokens: list[str], value_tokens: list[str]) -> bool:
    return all(
        any(_tokens_match(q, f) for f in value_tokens) for q in query_tokens
    )


def fuzzy_match(query: str, field_values: list[str] | tuple[str, ...]) -> bool:
    """True iff some single field value phonetically covers every query token."""
    query_tokens = normalize_tokens(query)
    if not query_tokens:
        return True
    return any(
        _value_covers(query_tokens, normalize_tokens(value))
        for value in field_values
    )


@dataclass
class DatasetQuery:
    health_terms: list[str] = field(default_factory=list)
    cost: Optional[CostAccess] = None
    areas: list[str] = field(default_factory=list)
    providers: list[str] = field(default_factory=list)
    provider_categories: list[ProviderCategory] = field(default_factory=list)
    free_text: Optional[str] = None


@dataclass
class PublicationQuery:
    health_terms: list[str] = field(default_factory=list)
    dataset_name: Optional[str] = None


class DatasetIndex:
    """Inverted index over a snapshot's datasets, one posting set per facet."""

    def __init__(self, snapshot: Snapshot):
        self.snapshot = snapshot
        self.by_health: dict[str, set[str]] = {}
        self.by_area: dict[str, set[str]] = {}
        self.by_provider: dict[str, set[str]] = {}
        self.by_provider_category: dict[ProviderCategory, set[str]] = {}
        self.by_cost: dict[CostAccess, set[str]] = {}
        # free text: record id -> token lists of each searchable field value
        self.text_values: dict[str, list[list[str]]] = {}

        for ds in snapshot.datasets.values():
            for term in ds.health_applications:
                self.by_health.setdefault(normalize_term(term), set()).add(ds.id)
            for area in ds.coverage.areas:
                self.by_area.setdefault(normalize_term(area), set()).add(ds.id)
            for provider in ds.providers:
                self.by_provider.setdefault(
                    normalize_term(provider.name), set()
                ).add(ds.id)
                self.by_provider_category.setdefault(
                    provider.category, set()
                ).add(ds.id)
            self.by_cost.setdefault(ds.cost.access, set()).add(ds.id)
            self.text_values[ds.id] = [
                normalize_tokens(v)
                for v in (*ds.health_applications, *ds.coverage.areas)
            ]

    def _facet_union(self, postings: dict, keys) -> set[str]:
        hits: set[str] = set()
        for key in keys:
            hits |= postings.get(key, set())
        return hits

    def search(self, query: DatasetQuery) -> list[DatasetRecord]:
        ids = set(self.snapshot.datasets)
        if query.health_terms:
            ids &= self._facet_union(
                self.by_health, (normalize_term(t) for t in query.health_terms)
            )
        if query.areas:
            ids &= self._facet_union(
                self.by_area, (normalize_term(t) for t in query.areas)
            )
        if query.providers:
            ids &= self._facet_union(
                self.by_provider, (normalize_term(t) for t in query.providers)
            )
        if query.provider_categories:
            ids &= self._facet_union(
                self.by_provider_category, query.provider_categories
            )
        if query.cost is not None:
            ids &= self.by_cost.get(query.cost, set())

        exact_hits = set(ids)
        if query.free_text:
            query_tokens = normalize_tokens(query.free_text)
            if query_tokens:
                ids = {
                    i
                    for i in ids
                    if any(
                        _value_covers(query_tokens, value)
                        for value in self.text_values[i]
                    )
                }
                exact_hits = {
                    i
                    for i in ids
                    if any(
                        all(q in value for q in query_tokens)
                        for value in self.text_values[i]
                    )
                }

        records = [self.snapshot.datasets[i] for i in ids]
        records.sort(
            key=lambda d: (0 if d.id in exact_hits else 1, d.name.casefold(), d.id)
        )
        return records


def search_datasets(
    store: CatalogStore | Snapshot, query: DatasetQuery
) -> list[DatasetRecord]:
    snap = store.snapshot() if isinstance(store, CatalogStore) else store
    return DatasetIndex(snap).search(query)


def search_publications(
    store: CatalogStore | Snapshot, query: PublicationQuery
) -> list[PublicationRecord]:
    snap = store.snapshot() if isinstance(store, CatalogStore) else store
    results = []
    for pub in snap.publications.values():
        if query.health_terms and not any(
            fuzzy_match(term, pub.health_applications)
            for term in query.health_terms
        ):
            continue
        if query.dataset_name:
            linked_names = [
                snap.datasets[d].name for d in pub.dataset_ids if d in snap.datasets
            ]
            if not fuzzy_match(query.dataset_name, linked_names):
                continue
        results.append(pub)
    results.sort(key=lambda p: (-p.year, p.title.casefold(), p.id))
    return results
