"""Machine-readable catalog of conjectural and proven-reference identities.

Entries are data, not code: summands, Gamma-quotient functions, congruence
cases and closed-form right-hand sides are JSON ASTs.  The built-in catalog
ships as package data (``data/catalog.json``) and is validated against the
schema in ``docs/catalog.schema.json``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import jsonschema

SCHEMA_VERSION = 1

KINDS = ("series", "derivative-series", "congruence", "integrality")
STATUSES = ("conjecture", "proven-reference")


class DuplicateId(ValueError):
    pass


class SchemaViolation(ValueError):
    pass


@dataclass(frozen=True)
class ConjectureEntry:
    id: str
    kind: str
    status: str
    source: str
    payload: dict
    rhs: Optional[dict] = None  # {"re": ConstExpr, "im": ConstExpr|None}
    date: Optional[str] = None
    group: Optional[str] = None
    anomalies: Tuple[str, ...] = ()
    expected_verdict: str = "PASS"
    digits_override: Optional[int] = None
    max_terms_override: Optional[int] = None
    note: Optional[str] = None

    def as_dict(self) -> dict:
        out = {
            "id": self.id,
            "kind": self.kind,
            "status": self.status,
            "source": self.source,
            "payload": self.payload,
        }
        if self.rhs is not None:
            out["rhs"] = self.rhs
        if self.date:
            out["date"] = self.date
        if self.group:
            out["group"] = self.group
        if self.anomalies:
            out["anomalies"] = list(self.anomalies)
        if self.expected_verdict != "PASS":
            out["expected_verdict"] = self.expected_verdict
        if self.digits_override is not None:
            out["digits_override"] = self.digits_override
        if self.max_terms_override is not None:
            out["max_terms_override"] = self.max_terms_override
        if self.note:
            out["note"] = self.note
        return out

    @staticmethod
    def from_dict(d: dict) -> "ConjectureEntry":
        return ConjectureEntry(
            id=d["id"],
            kind=d["kind"],
            status=d["status"],
            source=d["source"],
            payload=d["payload"],
            rhs=d.get("rhs"),
            date=d.get("date"),
            group=d.get("group"),
            anomalies=tuple(d.get("anomalies", ())),
            expected_verdict=d.get("expected_verdict", "PASS"),
            digits_override=d.get("digits_override"),
            max_terms_override=d.get("max_terms_override"),
            note=d.get("note"),
        )


@dataclass(frozen=True)
class Catalog:
    version: int
    entries: Tuple[ConjectureEntry, ...]

    def __post_init__(self):
        seen = set()
        for e in self.entries:
            if e.id in seen:
                raise DuplicateId(f"duplicate entry id {e.id!r}")
            seen.add(e.id)

    def by_id(self, entry_id: str) -> ConjectureEntry:
        for e in self.entries:
            if e.id == entry_id:
                return e
        raise KeyError(entry_id)

    def ids(self) -> List[str]:
        return [e.id for e in self.entries]

    def select(self, kind: Optional[str] = None,
               status: Optional[str] = None) -> List[ConjectureEntry]:
        out = []
        for e in self.entries:
            if kind and e.kind != kind:
                continue
            if status and e.status != status:
                continue
            out.append(e)
        return out


def _schema() -> dict:
    root = Path(__file__).resolve().parents[2]
    candidates = [
        root / "docs" / "catalog.schema.json",
        Path(__file__).parent / "data" / "catalog.schema.json",
    ]
    for c in candidates:
        if c.exists():
            return json.loads(c.read_text())
    raise FileNotFoundError("catalog.schema.json not found")


def validate_catalog_dict(doc: dict) -> None:
    try:
        jsonschema.validate(doc, _schema())
    except jsonschema.ValidationError as exc:
        raise SchemaViolation(str(exc)) from exc
    ids = [e["id"] for e in doc["entries"]]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise DuplicateId(f"duplicate entry ids: {dupes}")
    for e in doc["entries"]:
        kind = e["kind"]
        payload = e["payload"]
        if kind == "series" and "summand" not in payload:
            raise SchemaViolation(f"{e['id']}: series entry lacks summand")
        if kind == "derivative-series" and "fexpr" not in payload:
            raise SchemaViolation(f"{e['id']}: derivative entry lacks fexpr")
        if kind == "congruence" and "cases" not in payload:
            raise SchemaViolation(f"{e['id']}: congruence entry lacks cases")
        if kind == "integrality" and "divisor" not in payload:
            raise SchemaViolation(f"{e['id']}: integrality entry lacks divisor")
        if kind in ("series", "derivative-series") and "rhs" not in e:
            raise SchemaViolation(f"{e['id']}: series entry lacks rhs")


def catalog_from_dict(doc: dict, validate: bool = True) -> Catalog:
    if validate:
        validate_catalog_dict(doc)
    return Catalog(
        version=int(doc.get("version", SCHEMA_VERSION)),
        entries=tuple(ConjectureEntry.from_dict(e) for e in doc["entries"]),
    )


def serialize_catalog(cat: Catalog) -> dict:
    return {"version": cat.version,
            "entries": [e.as_dict() for e in cat.entries]}


def load_catalog(path: Optional[str] = None, validate: bool = True) -> Catalog:
    """Load a catalog from a file, or the built-in one if path is None."""
    if path is None:
        text = (resources.files("conjseries") / "data" /
                "catalog.json").read_text()
    else:
        text = Path(path).read_text()
    return catalog_from_dict(json.loads(text), validate=validate)


_BUILTIN: Optional[Catalog] = None


def builtin_catalog() -> Catalog:
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = load_catalog(None)
    return _BUILTIN
