"""Enumeration of the potential signature sets P_sigma."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .signature import (
    Signature,
    check_genus,
    format_signature,
    is_potential,
    required_group_order,
)

HURWITZ_FACTOR = 84


@dataclass(frozen=True)
class PotentialSignatureSet:
    genus: int
    signatures: tuple[Signature, ...]

    def __len__(self) -> int:
        return len(self.signatures)

    def __iter__(self):
        return iter(self.signatures)

    def __contains__(self, sig) -> bool:
        return sig in self.as_set()

    def as_set(self) -> frozenset[Signature]:
        return frozenset(self.signatures)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _multisets_for_order(n: int, target: int):
    """Yield non-decreasing tuples of divisors m >= 2 of n with
    sum(n - n/m) == target. Terms grow with m, so the loop breaks early."""
    divs = [d for d in _divisors(n) if d >= 2]
    terms = [n - n // d for d in divs]
    chosen: list[int] = []

    def rec(start: int, remaining: int):
        if remaining == 0:
            yield tuple(chosen)
            return
        for i in range(start, len(divs)):
            t = terms[i]
            if t > remaining:
                break
            # later terms are all >= t
            if remaining - t != 0 and remaining - t < t:
                continue
            chosen.append(divs[i])
            yield from rec(i, remaining - t)
            chosen.pop()

    yield from rec(0, target)


def _signatures_for_order(genus: int, n: int) -> list[Signature]:
    out = []
    s1 = genus - 1
    h = 0
    while n * (h - 1) <= s1:
        # N * sum(1 - 1/m) == 2(sigma-1) - 2N(h-1)
        target = 2 * s1 - 2 * n * (h - 1)
        if target == 0:
            if h >= 2:
                out.append(Signature(h, ()))
        elif target > 0:
            for periods in _multisets_for_order(n, target):
                out.append(Signature(h, periods))
        h += 1
    return out


@lru_cache(maxsize=128)
def enumerate_potential(genus: int) -> PotentialSignatureSet:
    """All potential signatures for ``genus``, sorted by (h, r, periods)."""
    check_genus(genus)
    found: dict[Signature, int] = {}
    for n in range(1, HURWITZ_FACTOR * (genus - 1) + 1):
        for sig in _signatures_for_order(genus, n):
            # N is determined by (signature, genus); a repeat would be a bug
            assert sig not in found, (sig, found.get(sig), n)
            found[sig] = n
    return PotentialSignatureSet(genus, tuple(sorted(found, key=lambda s: s.sort_key)))


def intersect_sets(*sets: PotentialSignatureSet) -> list[Signature]:
    if not sets:
        raise ValueError("need at least one set")
    common = sets[0].as_set()
    for s in sets[1:]:
        common &= s.as_set()
    return sorted(common, key=lambda s: s.sort_key)


def enumerate_potential_naive(genus: int, period_cap: int | None = None) -> list[Signature]:
    """Bound-sweep oracle: every h <= genus, r <= max(0, 2g+2-4h), periods up
    to ``period_cap`` (default 84(g-1)), each tested with is_potential.

    The r bound fails only for the trivial-group signature (g; -), which has
    r = 0 anyway. Necessary conditions prune the sweep: lcm(periods) <=
    period_cap, and chi * lcm(periods) <= g - 1 once chi > 0 (the final chi is
    (g-1)/N with the lcm dividing N). Adding a larger period raises chi and
    the lcm together, so the period loop can stop at the first violation.
    """
    check_genus(genus)
    cap = HURWITZ_FACTOR * (genus - 1) if period_cap is None else period_cap
    s1 = genus - 1
    terms = [None, None] + [Fraction(m - 1, 2 * m) for m in range(2, cap + 1)]
    out = []
    for h in range(0, genus + 1):
        max_r = max(0, 2 * genus + 2 - 4 * h)

        def rec(periods: list[int], chi: Fraction, l: int):
            if chi > 0:
                sig = Signature(h, tuple(periods))
                if is_potential(sig, genus):
                    out.append(sig)
            if len(periods) == max_r or (chi > 0 and (chi + terms[2]) * l > s1):
                return
            for m in range(periods[-1] if periods else 2, cap + 1):
                new_chi = chi + terms[m]
                if new_chi > 0 and new_chi * m > s1:
                    break
                new_l = lcm(l, m)
                if new_l > cap or (new_chi > 0 and new_chi * new_l > s1):
                    continue
                periods.append(m)
                rec(periods, new_chi, new_l)
                periods.pop()

        rec([], Fraction(h - 1), 1)
    return sorted(set(out), key=lambda s: s.sort_key)


def _row(sig: Signature, genus: int) -> dict:
    return {
        "h": sig.orbit_genus,
        "periods": list(sig.periods),
        "required_order": required_group_order(sig, genus),
    }


def export_text(pset: PotentialSignatureSet) -> str:
    return "".join(format_signature(s) + "\n" for s in pset)


def export_json(pset: PotentialSignatureSet) -> str:
    return json.dumps([_row(s, pset.genus) for s in pset], indent=1) + "\n"


def export_csv(pset: PotentialSignatureSet) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["h", "r", "periods", "required_order"])
    for s in pset:
        w.writerow([s.orbit_genus, s.r, ";".join(map(str, s.periods)),
                    required_group_order(s, pset.genus)])
    return buf.getvalue()


def parse_json_export(text: str) -> list[tuple[Signature, int]]:
    return [(Signature(d["h"], tuple(d["periods"])), d["required_order"])
            for d in json.loads(text)]


__all__ = [
    "HURWITZ_FACTOR",
    "PotentialSignatureSet",
    "enumerate_potential",
    "enumerate_potential_naive",
    "export_csv",
    "export_json",
    "export_text",
    "intersect_sets",
    "parse_json_export",
]
