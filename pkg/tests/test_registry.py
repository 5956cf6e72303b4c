import copy

import pytest

from conjseries.registry import (Catalog, DuplicateId, SchemaViolation,
                                 builtin_catalog, catalog_from_dict,
                                 load_catalog, serialize_catalog,
                                 validate_catalog_dict)
from conjseries.runner import rhs_evaluator


def test_round_trip_serialize_load():
    cat = builtin_catalog()
    doc = serialize_catalog(cat)
    cat2 = catalog_from_dict(doc)
    assert cat2.ids() == cat.ids()
    assert serialize_catalog(cat2) == doc


def test_builtin_catalog_validates_and_counts():
    cat = load_catalog(None, validate=True)
    conj = [e for e in cat.entries if e.status == "conjecture"]
    refs = [e for e in cat.entries if e.status == "proven-reference"]
    series_like = [e for e in conj
                   if e.kind in ("series", "derivative-series")]
    assert len(series_like) >= 75
    assert len(refs) >= 15
    assert len(conj) + len(refs) == len(cat.entries)


def test_duplicate_id_rejected():
    doc = serialize_catalog(builtin_catalog())
    doc = copy.deepcopy(doc)
    doc["entries"].append(copy.deepcopy(doc["entries"][0]))
    with pytest.raises(DuplicateId):
        validate_catalog_dict(doc)


def test_schema_violation_unknown_kind():
    doc = copy.deepcopy(serialize_catalog(builtin_catalog()))
    doc["entries"][0]["kind"] = "sorcery"
    with pytest.raises(SchemaViolation):
        validate_catalog_dict(doc)


def test_schema_violation_missing_payload_member():
    doc = copy.deepcopy(serialize_catalog(builtin_catalog()))
    series = next(e for e in doc["entries"] if e["kind"] == "series")
    del series["payload"]["summand"]
    with pytest.raises(SchemaViolation):
        validate_catalog_dict(doc)


def test_by_id_and_select():
    cat = builtin_catalog()
    assert cat.by_id("X1").kind == "series"
    with pytest.raises(KeyError):
        cat.by_id("does-not-exist")
    assert all(e.kind == "congruence" for e in cat.select(kind="congruence"))
    assert all(e.status == "proven-reference"
               for e in cat.select(status="proven-reference"))


def test_every_rhs_evaluates_at_64_bits():
    cat = builtin_catalog()
    for e in cat.entries:
        if e.kind in ("series", "derivative-series"):
            v = rhs_evaluator(e)(64)
            assert v.re.rad_man is not None  # a genuine ball came back
