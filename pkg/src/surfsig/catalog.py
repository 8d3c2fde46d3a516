"""Group catalogs: JSON files of permutation generators keyed by order,
plus the built-in cyclic/dihedral/C2 x C_n families."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupError,
    cyclic,
    dihedral,
    direct_product,
    from_generators,
    from_one_based,
)

CATALOG_ENV = "SURFSIG_CATALOG"


class CatalogError(ValueError):
    pass


@dataclass
class GroupCatalog:
    groups: dict[int, list[FiniteGroup]] = field(default_factory=dict)
    sources: list[str] = field(default_factory=list)

    def add(self, group: FiniteGroup) -> None:
        bucket = self.groups.setdefault(group.order, [])
        if any(g.name == group.name for g in bucket):
            raise CatalogError(f"duplicate group name {group.name!r} at order {group.order}")
        bucket.append(group)

    def of_order(self, n: int) -> list[FiniteGroup]:
        return self.groups.get(n, [])

    def merge(self, other: "GroupCatalog") -> "GroupCatalog":
        out = GroupCatalog({k: list(v) for k, v in self.groups.items()}, list(self.sources))
        for n in sorted(other.groups):
            for g in other.groups[n]:
                out.add(g)
        out.sources.extend(other.sources)
        return out

    def __iter__(self):
        for n in sorted(self.groups):
            yield from self.groups[n]

    def __len__(self) -> int:
        return sum(len(v) for v in self.groups.values())


@dataclass
class CatalogEntryReport:
    name: str
    declared_order: int
    computed_order: int | None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.declared_order == self.computed_order


def _read_entries(data) -> list[dict]:
    if not isinstance(data, dict) or not isinstance(data.get("groups"), list):
        raise CatalogError("catalog must be an object with a 'groups' array")
    for i, entry in enumerate(data["groups"]):
        if not isinstance(entry, dict):
            raise CatalogError(f"groups[{i}] is not an object")
        for key, typ in (("name", str), ("order", int), ("degree", int), ("generators", list)):
            if not isinstance(entry.get(key), typ) or isinstance(entry.get(key), bool):
                raise CatalogError(f"groups[{i}].{key} missing or not {typ.__name__}")
        if entry["degree"] < 1 or entry["order"] < 1:
            raise CatalogError(f"groups[{i}]: degree and order must be positive")
        if not all(isinstance(g, list) for g in entry["generators"]):
            raise CatalogError(f"groups[{i}].generators must be arrays of images")
    return data["groups"]


def _build(entry: dict, order_cap: int) -> FiniteGroup:
    d = entry["degree"]
    gens = [from_one_based(g, d) for g in entry["generators"]]
    return from_generators(entry["name"], d, gens, order_cap)


def _load_json(path) -> dict:
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: invalid JSON ({exc})") from None


def check_entries(data, order_cap: int = DEFAULT_ORDER_CAP) -> list[CatalogEntryReport]:
    """Build every entry and compare declared to computed order, without raising
    on individual mismatches."""
    reports = []
    for entry in _read_entries(data):
        try:
            g = _build(entry, order_cap)
            reports.append(CatalogEntryReport(entry["name"], entry["order"], g.order))
        except GroupError as exc:
            reports.append(CatalogEntryReport(entry["name"], entry["order"], None, str(exc)))
    return reports


def load_catalog(path, order_cap: int = DEFAULT_ORDER_CAP) -> GroupCatalog:
    catalog = GroupCatalog(sources=[str(path)])
    for entry in _read_entries(_load_json(path)):
        try:
            g = _build(entry, order_cap)
        except GroupError as exc:
            raise CatalogError(f"{path}: group {entry['name']!r}: {exc}") from None
        if g.order != entry["order"]:
            raise CatalogError(f"{path}: group {entry['name']!r} declares order "
                               f"{entry['order']} but closure has order {g.order}")
        catalog.add(g)
    return catalog


def validate_catalog(source) -> list[CatalogEntryReport]:
    """Report declared vs. computed order for a catalog file or a GroupCatalog."""
    if isinstance(source, GroupCatalog):
        reports = []
        for n in sorted(source.groups):
            names = [g.name for g in source.groups[n]]
            for g in source.groups[n]:
                err = None
                if names.count(g.name) > 1:
                    err = "duplicate name within order"
                reports.append(CatalogEntryReport(g.name, n, g.order, err))
        return reports
    return check_entries(_load_json(source))


def named_groups_path() -> Path:
    return Path(str(resources.files("surfsig") / "data" / "named_groups.json"))


def named_groups() -> GroupCatalog:
    """S4, A5 and PSL(2,7) from the bundled generator file."""
    return load_catalog(named_groups_path())


def builtin_catalog(*, max_cyclic: int = 100, max_dihedral: int = 50,
                    max_product: int = 50, include_named: bool = True) -> GroupCatalog:
    cat = GroupCatalog(sources=["builtin"])
    for n in range(1, max_cyclic + 1):
        cat.add(cyclic(n))
    for n in range(1, max_dihedral + 1):
        cat.add(dihedral(n))
    c2 = cyclic(2)
    for n in range(2, max_product + 1):
        cat.add(direct_product(c2, cyclic(n)))
    if include_named:
        cat = cat.merge(named_groups())
    return cat


def default_catalog() -> GroupCatalog:
    """Built-ins, plus the file named by $SURFSIG_CATALOG when set."""
    cat = builtin_catalog()
    path = os.environ.get(CATALOG_ENV)
    if path:
        cat = cat.merge(load_catalog(path))
    return cat
