"""Explicit finite permutation groups.

Permutations are tuples of 0-based images; ``compose(p, q)`` applies p first
and then q. Files and JSON use 1-based image arrays.
"""

from __future__ import annotations

import threading
from collections import deque
from math import lcm
from typing import Iterable, Sequence

Perm = tuple[int, ...]

DEFAULT_ORDER_CAP = 100_000


class GroupError(ValueError):
    pass


class OrderCapExceeded(GroupError):
    def __init__(self, name: str, cap: int):
        super().__init__(f"closure of {name!r} exceeds order cap {cap}")
        self.cap = cap


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = invert(p), -k
    result = identity_perm(len(p))
    while k:
        if k & 1:
            result = compose(result, p)
        p = compose(p, p)
        k >>= 1
    return result


def perm_order(p: Perm) -> int:
    """lcm of the cycle lengths."""
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        order = lcm(order, length)
    return order


def check_perm(images: Sequence[int], degree: int) -> Perm:
    p = tuple(images)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise GroupError(f"not a permutation of degree {degree}: {list(images)}")
    return p


def from_cycles(degree: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation from 1-based cycles, e.g. from_cycles(3, (1, 2, 3))."""
    img = list(range(degree))
    for c in cycles:
        for i, a in enumerate(c):
            img[a - 1] = c[(i + 1) % len(c)] - 1
    return check_perm(img, degree)


def to_one_based(p: Perm) -> list[int]:
    return [i + 1 for i in p]


def from_one_based(images: Sequence[int], degree: int) -> Perm:
    if any(not isinstance(i, int) or isinstance(i, bool) for i in images):
        raise GroupError(f"images must be integers: {list(images)}")
    return check_perm([i - 1 for i in images], degree)


def _closure(gens: Sequence[Perm], degree: int, cap: int, name: str) -> set[Perm]:
    e = identity_perm(degree)
    seen = {e}
    queue = deque([e])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = compose(a, g)
            if b not in seen:
                seen.add(b)
                if len(seen) > cap:
                    raise OrderCapExceeded(name, cap)
                queue.append(b)
    return seen


class FiniteGroup:
    """A permutation group with its full, lexicographically sorted element list.

    Elements are addressed by index into ``elements``; ``table`` is the
    multiplication table on indices, built on first use.
    """

    def __init__(self, name: str, degree: int, generators: Sequence[Perm],
                 order_cap: int = DEFAULT_ORDER_CAP):
        if degree < 1:
            raise GroupError("degree must be >= 1")
        gens = [check_perm(g, degree) for g in generators]
        self.name = name
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(sorted(_closure(gens, degree, order_cap, name)))
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.identity = self._index[identity_perm(degree)]
        self.generators: tuple[int, ...] = tuple(self._index[g] for g in gens)
        self.orders: tuple[int, ...] = tuple(perm_order(p) for p in self.elements)
        self.inverses: tuple[int, ...] = tuple(self._index[invert(p)] for p in self.elements)
        self._lock = threading.RLock()
        self._table = None
        self._commutators = None
        self._classes = None

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        state["_table"] = None
        state["_commutators"] = None
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} order={self.order} degree={self.degree}>"

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, p: Perm) -> int:
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise GroupError(f"{list(p)} is not an element of {self.name}") from None

    def __contains__(self, p) -> bool:
        return tuple(p) in self._index

    def mul(self, i: int, j: int) -> int:
        return self._index[compose(self.elements[i], self.elements[j])]

    @property
    def table(self) -> list[list[int]]:
        if self._table is None:
            with self._lock:
                if self._table is None:
                    els, idx = self.elements, self._index
                    self._table = [[idx[compose(a, b)] for b in els] for a in els]
        return self._table

    def commutator_pairs(self) -> dict[int, list[tuple[int, int]]]:
        """Map each element k to the pairs (a, b) with a b a^-1 b^-1 = k."""
        with self._lock:
            if self._commutators is None:
                t, inv = self.table, self.inverses
                pairs: dict[int, list[tuple[int, int]]] = {}
                for a in range(self.order):
                    row = t[a]
                    for b in range(self.order):
                        k = t[t[row[b]][inv[a]]][inv[b]]
                        pairs.setdefault(k, []).append((a, b))
                self._commutators = pairs
            return self._commutators

    def elements_of_order(self, m: int) -> list[int]:
        return [i for i, o in enumerate(self.orders) if o == m]

    def is_abelian(self) -> bool:
        gens = [self.elements[g] for g in self.generators]
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def conjugacy_classes(self) -> list[list[int]]:
        """Classes as sorted index lists, ordered by least member."""
        if self._classes is None:
            gens = [self.elements[g] for g in self.generators]
            seen = [False] * self.order
            classes = []
            for i in range(self.order):
                if seen[i]:
                    continue
                orbit = {i}
                queue = deque([i])
                while queue:
                    p = self.elements[queue.popleft()]
                    for g in gens:
                        # g^-1 p g, an orbit under the generators is the full class
                        q = self._index[compose(compose(invert(g), p), g)]
                        if q not in orbit:
                            orbit.add(q)
                            queue.append(q)
                for j in orbit:
                    seen[j] = True
                classes.append(sorted(orbit))
            self._classes = classes
        return self._classes


def from_generators(name: str, degree: int, generators: Iterable[Sequence[int]],
                    order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Closure of 0-based permutation generators."""
    return FiniteGroup(name, degree, [tuple(g) for g in generators], order_cap)


def cyclic(n: int) -> FiniteGroup:
    """C_n on n points; its first generator is the n-cycle x."""
    if n < 1:
        raise GroupError(f"cyclic group needs n >= 1, got {n}")
    x = tuple((i + 1) % n for i in range(n))
    return FiniteGroup(f"C{n}", n, [x])


def dihedral_generators(n: int) -> tuple[int, Perm, Perm]:
    """Degree plus (rotation x, reflection y) with x^n = y^2 = yxyx = 1."""
    if n < 1:
        raise GroupError(f"dihedral group needs n >= 1, got {n}")
    if n == 1:
        return 2, (0, 1), (1, 0)
    if n == 2:
        return 4, (1, 0, 3, 2), (2, 3, 0, 1)
    x = tuple((i + 1) % n for i in range(n))
    y = tuple((-i) % n for i in range(n))
    return n, x, y


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n; generators are (x, y)."""
    degree, x, y = dihedral_generators(n)
    return FiniteGroup(f"D{n}", degree, [x, y])


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """G x H acting on the disjoint union of their points (G's points first)."""
    dg = g.degree

    def left(p: Perm) -> Perm:
        return p + tuple(range(dg, dg + h.degree))

    def right(p: Perm) -> Perm:
        return tuple(range(dg)) + tuple(dg + i for i in p)

    gens = [left(g.elements[i]) for i in g.generators] + [right(h.elements[i]) for i in h.generators]
    return FiniteGroup(name or f"{g.name}x{h.name}", dg + h.degree, gens,
                       order_cap=max(DEFAULT_ORDER_CAP, g.order * h.order))


def element_order(group: FiniteGroup, element: Perm) -> int:
    return group.orders[group.index(element)]


def subgroup_closure(group: FiniteGroup, subset: Iterable[int]) -> set[int]:
    """Indices of the subgroup generated by the given element indices."""
    gens = [group.elements[i] for i in subset]
    found = {group.identity}
    queue = deque([group.identity])
    while queue:
        a = group.elements[queue.popleft()]
        for g in gens:
            b = group._index[compose(a, g)]
            if b not in found:
                found.add(b)
                queue.append(b)
    return found


def generates(group: FiniteGroup, subset: Iterable[Perm]) -> bool:
    return len(subgroup_closure(group, [group.index(p) for p in subset])) == group.order


def conjugacy_class_representatives(group: FiniteGroup) -> list[Perm]:
    return [group.elements[c[0]] for c in group.conjugacy_classes()]
