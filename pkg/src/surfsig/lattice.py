"""Divisibility order on the sets P_sigma, with empirical checks of the
meet/join formulas against full enumeration."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd, lcm

from .enumeration import enumerate_potential
from .signature import Signature, check_genus, format_signature, is_potential

DEFAULT_MAX_GENUS = 40


class GuardExceeded(ValueError):
    pass


def contains_genus(genus: int, other: int) -> bool:
    """True iff P_genus is a subset of P_other, i.e. (genus-1) | (other-1)."""
    return (check_genus(other) - 1) % (check_genus(genus) - 1) == 0


def meet_genus(genus: int, other: int) -> int:
    return gcd(check_genus(genus) - 1, check_genus(other) - 1) + 1


def join_genus(genus: int, other: int) -> int:
    return lcm(check_genus(genus) - 1, check_genus(other) - 1) + 1


def witness_non_containment(genus: int) -> Signature:
    """(0; 2, 2g+1, 4g+2): potential at ``genus``, not potential at any g'
    with (g-1) not dividing (g'-1)."""
    check_genus(genus)
    return Signature(0, (2, 2 * genus + 1, 4 * genus + 2))


@dataclass
class LatticeReport:
    kind: str  # containment | meet | join | consecutive-intersection
    genera: tuple[int, int]
    predicted: int | bool
    counterexamples: list[Signature] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "genera": list(self.genera),
            "predicted": self.predicted,
            "match": self.match,
            "counterexamples": [format_signature(s) for s in self.counterexamples],
        }


def _sorted(sigs) -> list[Signature]:
    return sorted(sigs, key=lambda s: s.sort_key)


def check_containment(a: int, b: int, sets: dict[int, frozenset]) -> LatticeReport:
    predicted = contains_genus(a, b)
    if predicted:
        bad = _sorted(sets[a] - sets[b])
    else:
        w = witness_non_containment(a)
        # the witness must separate the sets; report it if it does not
        separated = w in sets[a] and w not in sets[b] and not is_potential(w, b)
        bad = [] if separated and not sets[a] <= sets[b] else [w]
    return LatticeReport("containment", (a, b), predicted, bad)


def check_meet(a: int, b: int, sets: dict[int, frozenset], kind: str = "meet") -> LatticeReport:
    m = meet_genus(a, b)
    return LatticeReport(kind, (a, b), m, _sorted((sets[a] & sets[b]) ^ sets[m]))


def check_join(a: int, b: int, sets: dict[int, frozenset]) -> LatticeReport:
    # P_join usually strictly contains the union; only inclusion is checked,
    # membership-wise, so P_join itself is never enumerated
    j = join_genus(a, b)
    return LatticeReport("join", (a, b), j,
                         _sorted(s for s in sets[a] | sets[b] if not is_potential(s, j)))


def _enumerate_set(genus: int) -> tuple[int, frozenset]:
    return genus, enumerate_potential(genus).as_set()


def verify_lattice(max_genus: int, *, guard: int = DEFAULT_MAX_GENUS,
                   jobs: int = 1) -> list[LatticeReport]:
    """Check containment, meet and join for all pairs 2 <= g, g' <= max_genus."""
    check_genus(max_genus)
    if max_genus > guard:
        raise GuardExceeded(
            f"max genus {max_genus} exceeds the verification limit of {guard}")
    genera = range(2, max_genus + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            sets = dict(pool.map(_enumerate_set, genera))
    else:
        sets = dict(map(_enumerate_set, genera))

    reports = []
    for a in genera:
        for b in genera:
            reports.append(check_containment(a, b, sets))
    for a in genera:
        for b in genera:
            if a <= b:
                reports.append(check_meet(a, b, sets))
                reports.append(check_join(a, b, sets))
    for n in range(2, max_genus):
        reports.append(check_meet(n, n + 1, sets, kind="consecutive-intersection"))
    return reports
