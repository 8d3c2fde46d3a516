import json

import pytest

from surfsig.catalog import (
    CatalogError,
    GroupCatalog,
    builtin_catalog,
    default_catalog,
    load_catalog,
    named_groups_path,
    validate_catalog,
)
from surfsig.groups import cyclic


def write(tmp_path, data, name="cat.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return p


def test_bundled_catalog_validates():
    reports = validate_catalog(named_groups_path())
    assert [(r.name, r.declared_order, r.computed_order, r.ok) for r in reports] == [
        ("S4", 24, 24, True), ("A5", 60, 60, True), ("PSL(2,7)", 168, 168, True)]


def test_builtin_contents():
    cat = builtin_catalog()
    assert [g.name for g in cat.of_order(12)] == ["C12", "D6", "C2xC6"]
    assert [g.name for g in cat.of_order(168)] == ["PSL(2,7)"]
    assert [g.name for g in cat.of_order(48)] == ["C48", "D24", "C2xC24"]
    for g in cat:
        assert g in cat.of_order(g.order)
    assert all(r.ok for r in validate_catalog(cat))


def test_load_and_mismatch(tmp_path):
    good = write(tmp_path, {"groups": [{"name": "S3", "order": 6, "degree": 3,
                                         "generators": [[2, 1, 3], [2, 3, 1]]}]})
    cat = load_catalog(good)
    assert cat.of_order(6)[0].name == "S3"
    assert cat.sources == [str(good)]

    bad = write(tmp_path, {"groups": [{"name": "S3", "order": 5, "degree": 3,
                                        "generators": [[2, 1, 3], [2, 3, 1]]}]}, "bad.json")
    with pytest.raises(CatalogError, match="declares order 5"):
        load_catalog(bad)
    [report] = validate_catalog(bad)
    assert not report.ok and report.computed_order == 6


@pytest.mark.parametrize("data", [
    [],
    {"groups": {}},
    {"groups": [{"name": "x", "order": 2, "degree": 2}]},
    {"groups": [{"name": 3, "order": 2, "degree": 2, "generators": [[2, 1]]}]},
    {"groups": [{"name": "x", "order": 2, "degree": 0, "generators": []}]},
    {"groups": [{"name": "x", "order": 2, "degree": 2, "generators": [3]}]},
])
def test_schema_violations(tmp_path, data):
    with pytest.raises(CatalogError):
        load_catalog(write(tmp_path, data))


def test_invalid_permutation_in_file(tmp_path):
    p = write(tmp_path, {"groups": [{"name": "x", "order": 2, "degree": 2, "generators": [[1, 1]]}]})
    with pytest.raises(CatalogError, match="not a permutation"):
        load_catalog(p)


def test_invalid_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{")
    with pytest.raises(CatalogError, match="invalid JSON"):
        load_catalog(p)


def test_cap_exceeded(tmp_path):
    p = write(tmp_path, {"groups": [{"name": "S5", "order": 120, "degree": 5,
                                      "generators": [[2, 3, 4, 5, 1], [2, 1, 3, 4, 5]]}]})
    with pytest.raises(CatalogError, match="cap 50"):
        load_catalog(p, order_cap=50)


def test_duplicate_names():
    cat = GroupCatalog()
    cat.add(cyclic(3))
    with pytest.raises(CatalogError, match="duplicate"):
        cat.add(cyclic(3))


def test_env_catalog(tmp_path, monkeypatch):
    p = write(tmp_path, {"groups": [{"name": "S3", "order": 6, "degree": 3,
                                      "generators": [[2, 1, 3], [2, 3, 1]]}]})
    monkeypatch.setenv("SURFSIG_CATALOG", str(p))
    assert "S3" in [g.name for g in default_catalog().of_order(6)]
