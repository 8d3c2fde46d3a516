"""(h; m_1,...,m_r)-generating vectors: verification, search, and the
closed-form families.

A vector (a_1, b_1, ..., a_h, b_h, c_1, ..., c_r) must generate G, have
order(c_i) = m_i, and satisfy [a_1,b_1]...[a_h,b_h] c_1...c_r = 1 with
[a, b] = a b a^-1 b^-1, multiplied left to right.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .groups import (
    FiniteGroup,
    GroupError,
    Perm,
    compose,
    cyclic,
    dihedral,
    dihedral_generators,
    direct_product,
    from_one_based,
    identity_perm,
    invert,
    perm_order,
    perm_power,
    to_one_based,
)
from .signature import Signature, format_signature, parse_signature

DEFAULT_NODE_LIMIT = 10**8
# commutator lookup for the last hyperbolic pair costs order^2 memory
_COMMUTATOR_INDEX_MAX_ORDER = 1500


class SearchInconclusive(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search abandoned after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class GeneratingVector:
    group: FiniteGroup
    pairs: tuple[tuple[Perm, Perm], ...]
    elliptic: tuple[Perm, ...]

    @classmethod
    def from_indices(cls, group, pairs, elliptic) -> "GeneratingVector":
        el = group.elements
        return cls(group, tuple((el[a], el[b]) for a, b in pairs), tuple(el[c] for c in elliptic))

    def entries(self) -> list[Perm]:
        return [p for pair in self.pairs for p in pair] + list(self.elliptic)

    def conjugate(self, g: Perm) -> "GeneratingVector":
        """Entrywise g v g^-1."""
        gi = invert(g)

        def c(p):
            return compose(compose(g, p), gi)

        return GeneratingVector(self.group, tuple((c(a), c(b)) for a, b in self.pairs),
                                tuple(c(p) for p in self.elliptic))


@dataclass(frozen=True)
class Verification:
    ok: bool
    condition: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _generated(gens: list[Perm], degree: int) -> int:
    e = identity_perm(degree)
    seen = {e}
    queue = deque([e])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = compose(a, g)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen)


def verify(group: FiniteGroup, vec: GeneratingVector, sig: Signature) -> Verification:
    """Check the three generating-vector conditions in order.

    Works on raw permutations only (no multiplication table), so it can serve
    as an oracle for ``search``.
    """
    if len(vec.pairs) != sig.orbit_genus or len(vec.elliptic) != sig.r:
        raise ValueError(
            f"vector shape ({len(vec.pairs)} pairs, {len(vec.elliptic)} elliptic) "
            f"does not match {format_signature(sig)}")
    entries = vec.entries()
    for p in entries:
        if tuple(p) not in group:
            raise GroupError(f"{to_one_based(p)} is not an element of {group.name}")

    size = _generated(entries, group.degree)
    if size != group.order:
        return Verification(False, 1, f"entries generate a subgroup of order {size}, "
                                      f"not {group.order}")
    for i, (c, m) in enumerate(zip(vec.elliptic, sig.periods), start=1):
        o = perm_order(c)
        if o != m:
            return Verification(False, 2, f"c_{i} has order {o}, expected {m}")
    prod = identity_perm(group.degree)
    for a, b in vec.pairs:
        comm = compose(compose(compose(a, b), invert(a)), invert(b))
        prod = compose(prod, comm)
    for c in vec.elliptic:
        prod = compose(prod, c)
    if prod != identity_perm(group.degree):
        return Verification(False, 3, f"product is {to_one_based(prod)}, not the identity")
    return Verification(True)


def _generates_indices(group: FiniteGroup, idx: list[int]) -> bool:
    n = group.order
    if n == 1:
        return True
    t = group.table
    gens = list(dict.fromkeys(i for i in idx if i != group.identity))
    seen = bytearray(n)
    seen[group.identity] = 1
    count = 1
    queue = [group.identity]
    while queue:
        a = queue.pop()
        row = t[a]
        for g in gens:
            b = row[g]
            if not seen[b]:
                seen[b] = 1
                count += 1
                if count == n:
                    return True
                queue.append(b)
    return False


class _Search:
    """Depth-first search in a fixed slot order:

    c_1 (class representatives only), the pairs (a_i, b_i), c_2 .. c_{r-1},
    then the last entry is forced by the product relation: c_r directly, or
    the last pair through the commutator index when r <= 1.
    """

    def __init__(self, group: FiniteGroup, sig: Signature, node_limit: int):
        self.g = group
        self.sig = sig
        self.limit = node_limit
        self.nodes = 0
        self.t = group.table
        self.inv = group.inverses
        self.h = sig.orbit_genus
        self.r = sig.r
        self.by_order = {m: group.elements_of_order(m) for m in set(sig.periods)}
        self.reps = {c[0] for c in group.conjugacy_classes()}
        self.force_pair = (self.r <= 1 and self.h >= 1
                           and group.order <= _COMMUTATOR_INDEX_MAX_ORDER)

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise SearchInconclusive(self.nodes)

    def comm(self, a: int, b: int) -> int:
        t, inv = self.t, self.inv
        return t[t[t[a][b]][inv[a]]][inv[b]]

    def run(self):
        g = self.g
        e = g.identity
        if self.r >= 1:
            for c1 in self.by_order[self.sig.periods[0]]:
                if c1 not in self.reps:
                    continue
                self.tick()
                found = self.pairs([], e, c1)
                if found:
                    return found
            return None
        return self.pairs([], e, None)

    def pairs(self, chosen: list, q: int, c1):
        """Choose hyperbolic pairs; q is the running commutator product."""
        t, inv = self.t, self.inv
        k = len(chosen)
        if k == self.h:
            return self.elliptic(chosen, q, c1)
        restrict = self.r == 0 and k == 0
        if self.force_pair and k == self.h - 1:
            # q [a,b] c1 = 1  =>  [a,b] = q^-1 c1^-1
            target = inv[q] if c1 is None else t[inv[q]][inv[c1]]
            for a, b in self.g.commutator_pairs().get(target, ()):
                if restrict and a not in self.reps:
                    continue
                self.tick()
                found = self.finish(chosen + [(a, b)], [] if c1 is None else [c1])
                if found:
                    return found
            return None
        for a in range(self.g.order):
            if restrict and a not in self.reps:
                continue
            for b in range(self.g.order):
                self.tick()
                found = self.pairs(chosen + [(a, b)], t[q][self.comm(a, b)], c1)
                if found:
                    return found
        return None

    def elliptic(self, chosen_pairs: list, q: int, c1):
        t, inv = self.t, self.inv
        periods = self.sig.periods
        if self.r == 0:
            return self.finish(chosen_pairs, []) if q == self.g.identity else None
        p = t[q][c1]
        if self.r == 1:
            return self.finish(chosen_pairs, [c1]) if p == self.g.identity else None

        def rec(cs: list, p: int):
            if len(cs) == self.r - 1:
                last = inv[p]
                if self.g.orders[last] != periods[-1]:
                    return None
                return self.finish(chosen_pairs, cs + [last])
            for c in self.by_order[periods[len(cs)]]:
                self.tick()
                found = rec(cs + [c], t[p][c])
                if found:
                    return found
            return None

        return rec([c1], p)

    def finish(self, pairs: list, cs: list):
        idx = [i for pair in pairs for i in pair] + cs
        if _generates_indices(self.g, idx):
            return pairs, cs
        return None


def search(group: FiniteGroup, sig: Signature, *,
           node_limit: int = DEFAULT_NODE_LIMIT) -> GeneratingVector | None:
    """First generating vector in search order, or None when none exists.

    Raises SearchInconclusive if more than ``node_limit`` nodes are visited.
    """
    if any(group.order % m for m in sig.periods):
        return None
    if any(not group.elements_of_order(m) for m in set(sig.periods)):
        return None
    found = _Search(group, sig, node_limit).run()
    if found is None:
        return None
    return GeneratingVector.from_indices(group, *found)


def exhaustive_search(group: FiniteGroup, sig: Signature) -> GeneratingVector | None:
    """Unpruned sweep over every vector whose c_i have the right orders."""
    all_elements = range(group.order)
    domains = [all_elements] * (2 * sig.orbit_genus)
    domains += [group.elements_of_order(m) for m in sig.periods]
    t, inv, e = group.table, group.inverses, group.identity
    h = sig.orbit_genus
    for combo in itertools.product(*domains):
        prod = e
        for i in range(h):
            a, b = combo[2 * i], combo[2 * i + 1]
            prod = t[prod][t[t[t[a][b]][inv[a]]][inv[b]]]
        for c in combo[2 * h:]:
            prod = t[prod][c]
        if prod == e and _generates_indices(group, list(combo)):
            pairs = [(combo[2 * i], combo[2 * i + 1]) for i in range(h)]
            return GeneratingVector.from_indices(group, pairs, combo[2 * h:])
    return None


def kulkarni(genus: int) -> tuple[FiniteGroup, Signature, GeneratingVector]:
    """C_{4g+2} with (0; 2, 2g+1, 4g+2) and the vector (x^{2g+1}, x^{2g}, x)."""
    g = cyclic(4 * genus + 2)
    x = g.elements[g.generators[0]]
    sig = Signature(0, (2, 2 * genus + 1, 4 * genus + 2))
    vec = GeneratingVector(g, (), (perm_power(x, 2 * genus + 1), perm_power(x, 2 * genus), x))
    return g, sig, vec


def breuer_abelian(genus: int, *, node_limit: int = DEFAULT_NODE_LIMIT):
    """C_2 x C_{2g+2} with (0; 2, 2g+2, 2g+2); the vector comes from search."""
    g = direct_product(cyclic(2), cyclic(2 * genus + 2))
    sig = Signature(0, (2, 2 * genus + 2, 2 * genus + 2))
    vec = search(g, sig, node_limit=node_limit)
    if vec is None:
        raise RuntimeError(f"no generating vector for {format_signature(sig)} in {g.name}")
    return g, sig, vec


def omnipersistent(genus: int) -> list[tuple[FiniteGroup, Signature, GeneratingVector]]:
    """The four families realizing (2; -), (1; 2,2), (0; 2^6), (0; 2^5) in every genus."""
    k = genus - 1
    cyc = cyclic(k)
    x = cyc.elements[cyc.generators[0]]
    e = identity_perm(cyc.degree)
    out = [(cyc, Signature(2), GeneratingVector(cyc, ((x, e), (x, e)), ()))]

    dk = dihedral(k)
    _, x, y = dihedral_generators(k)
    e = identity_perm(dk.degree)
    xy = compose(x, y)
    out.append((dk, Signature(1, (2, 2)), GeneratingVector(dk, ((x, e),), (y, y))))
    out.append((dk, Signature(0, (2,) * 6), GeneratingVector(dk, (), (y, y, xy, xy, y, y))))

    d2k = dihedral(2 * k)
    _, x, y = dihedral_generators(2 * k)
    xy = compose(x, y)
    xk = perm_power(x, k)
    out.append((d2k, Signature(0, (2,) * 5),
                GeneratingVector(d2k, (), (xy, xy, y, compose(y, xk), xk))))
    return out


def vector_to_json(vec: GeneratingVector, sig: Signature) -> dict:
    return {
        "group": vec.group.name,
        "signature": format_signature(sig),
        "vector": {
            "pairs": [[to_one_based(a), to_one_based(b)] for a, b in vec.pairs],
            "elliptic": [to_one_based(c) for c in vec.elliptic],
        },
    }


def vector_from_json(data: dict, group: FiniteGroup) -> tuple[GeneratingVector, Signature]:
    if data.get("group") != group.name:
        raise ValueError(f"witness is for group {data.get('group')!r}, not {group.name!r}")
    d = group.degree
    v = data["vector"]
    pairs = tuple((from_one_based(a, d), from_one_based(b, d)) for a, b in v["pairs"])
    elliptic = tuple(from_one_based(c, d) for c in v["elliptic"])
    return GeneratingVector(group, pairs, elliptic), parse_signature(data["signature"])
