"""Actual signatures relative to a group catalog."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .catalog import GroupCatalog
from .enumeration import enumerate_potential
from .signature import Signature, check_genus, format_signature, is_potential, required_group_order
from .vectors import (
    DEFAULT_NODE_LIMIT,
    GeneratingVector,
    SearchInconclusive,
    omnipersistent,
    search,
    vector_to_json,
    verify,
)

log = logging.getLogger(__name__)

REALIZED = "realized"
ABSENT = "absent-in-catalog"
NOT_REALIZABLE = "not-realizable"
INCONCLUSIVE = "inconclusive"

# Genus-2 actual signatures with their group order as a multiple of (sigma - 1).
TABLE2_GENUS2 = [
    (Signature(2), 1),
    (Signature(1, (2, 2)), 2),
    (Signature(0, (2, 3, 8)), 48),
    (Signature(0, (2, 4, 6)), 24),
    (Signature(0, (3, 3, 4)), 24),
    (Signature(0, (2, 4, 8)), 16),
    (Signature(0, (2, 2, 2, 3)), 12),
    (Signature(0, (2, 6, 6)), 12),
    (Signature(0, (3, 4, 4)), 12),
    (Signature(0, (2, 5, 10)), 10),
    (Signature(0, (2, 2, 2, 4)), 8),
    (Signature(0, (2, 8, 8)), 8),
    (Signature(0, (4, 4, 4)), 8),
    (Signature(0, (2, 2, 3, 3)), 6),
    (Signature(0, (3, 6, 6)), 6),
    (Signature(0, (5, 5, 5)), 5),
    (Signature(0, (2, 2, 2, 2, 2)), 4),
    (Signature(0, (2, 2, 4, 4)), 4),
    (Signature(0, (3, 3, 3, 3)), 3),
    (Signature(0, (2, 2, 2, 2, 2, 2)), 2),
]


@dataclass
class RealizationRecord:
    signature: Signature
    genus: int
    status: str
    group_order: int
    witness: GeneratingVector | None = None
    groups_examined: list[str] = field(default_factory=list)

    @property
    def group_name(self) -> str | None:
        return self.witness.group.name if self.witness else None

    def to_json(self) -> dict:
        return {
            "signature": format_signature(self.signature),
            "genus": self.genus,
            "status": self.status,
            "order": self.group_order,
            "group": self.group_name,
            "witness": vector_to_json(self.witness, self.signature) if self.witness else None,
            "groups_examined": self.groups_examined,
        }


def realize_signature(sig: Signature, genus: int, catalog: GroupCatalog, *,
                      complete_orders: Iterable[int] = (),
                      node_limit: int = DEFAULT_NODE_LIMIT,
                      order: int | None = None) -> RealizationRecord:
    """Search every catalog group of the Riemann-Hurwitz order for a vector.

    ``order`` overrides the group order (used for tabulated orders).
    """
    n = required_group_order(sig, genus) if order is None else order
    if n is None:
        raise ValueError(f"{format_signature(sig)} has no group order at genus {genus}")
    examined = []
    inconclusive = False
    for group in catalog.of_order(n):
        examined.append(group.name)
        log.info("searching %s in %s", format_signature(sig), group.name)
        try:
            vec = search(group, sig, node_limit=node_limit)
        except SearchInconclusive:
            inconclusive = True
            continue
        if vec is not None:
            assert verify(group, vec, sig), (group.name, sig)
            assert is_potential(sig, genus), sig
            return RealizationRecord(sig, genus, REALIZED, n, vec, examined)
    if inconclusive:
        status = INCONCLUSIVE
    elif n in set(complete_orders):
        status = NOT_REALIZABLE
    else:
        status = ABSENT
    return RealizationRecord(sig, genus, status, n, None, examined)


_worker_catalog: GroupCatalog | None = None


def _init_worker(catalog: GroupCatalog):
    global _worker_catalog
    _worker_catalog = catalog


def _realize_in_worker(args):
    sig, genus, complete, limit = args
    return realize_signature(sig, genus, _worker_catalog, complete_orders=complete,
                             node_limit=limit)


def actual_relative(genus: int, catalog: GroupCatalog, *,
                    complete_orders: Iterable[int] = (),
                    node_limit: int = DEFAULT_NODE_LIMIT,
                    jobs: int = 1) -> list[RealizationRecord]:
    """One record per potential signature at ``genus``, in canonical order.

    ``absent-in-catalog`` only says the catalog had no witness; it becomes
    ``not-realizable`` for orders the caller declares complete.
    """
    check_genus(genus)
    pset = enumerate_potential(genus)
    complete = frozenset(complete_orders)
    if jobs > 1:
        work = [(s, genus, complete, node_limit) for s in pset]
        with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(catalog,)) as pool:
            records = list(pool.map(_realize_in_worker, work))
    else:
        records = [realize_signature(s, genus, catalog, complete_orders=complete,
                                     node_limit=node_limit) for s in pset]
    members = pset.as_set()
    for rec in records:
        if rec.status == REALIZED:
            assert rec.signature in members, rec.signature
            assert rec.group_order == required_group_order(rec.signature, genus)
    return records


@dataclass
class ConstructionCheck:
    signature: Signature
    group_name: str
    group_order: int
    expected_order: int | None
    result: object  # Verification

    @property
    def ok(self) -> bool:
        return bool(self.result) and self.group_order == self.expected_order


@dataclass
class GenusCheck:
    genus: int
    checks: list[ConstructionCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_omnipersistent_actual(lo: int, hi: int, *,
                                 constructions: Callable = omnipersistent) -> list[GenusCheck]:
    """Verify the four omnipersistent constructions for every genus in lo..hi."""
    check_genus(lo)
    if hi < lo:
        raise ValueError(f"empty genus range {lo}..{hi}")
    out = []
    for genus in range(lo, hi + 1):
        checks = []
        for group, sig, vec in constructions(genus):
            checks.append(ConstructionCheck(sig, group.name, group.order,
                                            required_group_order(sig, genus),
                                            verify(group, vec, sig)))
        out.append(GenusCheck(genus, checks))
    return out


def table2_genus2_check(catalog: GroupCatalog, *,
                        node_limit: int = DEFAULT_NODE_LIMIT) -> list[RealizationRecord]:
    """Realization attempts for the tabulated genus-2 signatures at their
    tabulated orders."""
    records = []
    for sig, k in TABLE2_GENUS2:
        if required_group_order(sig, 2) != k:
            raise AssertionError(f"tabulated order {k} disagrees for {format_signature(sig)}")
        records.append(realize_signature(sig, 2, catalog, node_limit=node_limit, order=k))
    return records
