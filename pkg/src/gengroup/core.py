"""Finite generalized groups (completely simple semigroups) as Cayley tables.

Elements are the dense indices ``0..order-1``; ``names`` only matter for I/O.
A :class:`FiniteGenGroup` cannot be built from a table that fails the axioms,
so everything downstream may assume associativity, unique local identities
and inverses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ClosureViolation,
    MalformedTable,
    NoInverse,
    NotAssociative,
    NoUniqueLocalIdentity,
)

__all__ = [
    "AxiomReport",
    "FiniteGenGroup",
    "FiniteGroup",
    "make_finite_gg",
    "verify_axioms",
    "local_identity",
    "inverse",
    "idempotents",
    "is_normal",
    "is_abelian",
    "is_group",
    "group_component",
    "component_elements",
    "direct_product",
    "generalized_subgroup_check",
    "subgroup_closure",
    "restrict",
    "to_cayley_doc",
    "from_cayley_doc",
    "parse_cayley_doc",
]


@dataclass(frozen=True)
class AxiomReport:
    associative: bool
    local_identity_failures: tuple[tuple[int, tuple[int, ...]], ...]
    inverse_failures: tuple[int, ...]
    associativity_witness: tuple[int, int, int] | None = None

    @property
    def verdict(self) -> bool:
        return self.associative and not self.local_identity_failures and not self.inverse_failures

    def lines(self, names: Sequence[str] | None = None) -> list[str]:
        """Human-readable rendering used by the CLI."""
        label = (lambda i: names[i]) if names is not None else str
        out = [f"associative: {'yes' if self.associative else 'no'}"]
        if self.associativity_witness is not None:
            x, y, z = self.associativity_witness
            out.append(f"  witness: ({label(x)}*{label(y)})*{label(z)} != {label(x)}*({label(y)}*{label(z)})")
        for x, cands in self.local_identity_failures:
            shown = ", ".join(label(c) for c in cands) or "none"
            out.append(f"local identity failure: {label(x)} (candidates: {shown})")
        for x in self.inverse_failures:
            out.append(f"inverse failure: {label(x)}")
        out.append(f"verdict: {'generalized group' if self.verdict else 'not a generalized group'}")
        return out


def _as_array(table) -> np.ndarray:
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise MalformedTable("table must be a list of rows") from exc
    n = len(rows)
    if n == 0:
        raise MalformedTable("empty table")
    if any(len(r) != n for r in rows):
        raise MalformedTable(f"table is not square ({n} rows)")
    for r in rows:
        for v in r:
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise MalformedTable(f"non-integer entry {v!r}")
            if not 0 <= v < n:
                raise MalformedTable(f"entry {v} out of range 0..{n - 1}")
    return np.array(rows, dtype=np.int64)


def _identity_candidates(t: np.ndarray) -> np.ndarray:
    # cand[z, x] <=> z*x == x and x*z == x
    idx = np.arange(len(t))
    return (t == idx[None, :]) & (t.T == idx[None, :])


def verify_axioms(table) -> AxiomReport:
    """Exhaustively check associativity, local identities and inverses.

    Every failure is collected; only a malformed table raises.
    """
    t = _as_array(table)
    n = len(t)

    left = t[t, :]  # (x*y)*z indexed [x, y, z]
    right = t[np.arange(n)[:, None, None], t[None, :, :]]  # x*(y*z)
    bad = np.argwhere(left != right)
    witness = tuple(int(v) for v in bad[0]) if len(bad) else None

    cand = _identity_candidates(t)
    id_failures = []
    inv_failures = []
    for x in range(n):
        zs = tuple(int(z) for z in np.flatnonzero(cand[:, x]))
        if len(zs) != 1:
            id_failures.append((x, zs))
            continue
        e = zs[0]
        if not np.any((t[x, :] == e) & (t[:, x] == e)):
            inv_failures.append(x)
    return AxiomReport(
        associative=witness is None,
        local_identity_failures=tuple(id_failures),
        inverse_failures=tuple(inv_failures),
        associativity_witness=witness,
    )


def _raise_for(report: AxiomReport) -> None:
    if report.associativity_witness is not None:
        raise NotAssociative(report.associativity_witness, report)
    if report.local_identity_failures:
        x, cands = report.local_identity_failures[0]
        raise NoUniqueLocalIdentity(x, cands, report)
    if report.inverse_failures:
        raise NoInverse(report.inverse_failures[0], report)


@dataclass(frozen=True)
class FiniteGenGroup:
    """A validated finite generalized group; ``table[x][y]`` is the index of x*y."""

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(str(s) for s in self.names))
        arr = _as_array(self.table)
        object.__setattr__(self, "table", tuple(tuple(int(v) for v in row) for row in arr))
        if len(self.names) != len(arr):
            raise MalformedTable(f"{len(self.names)} names for {len(arr)} elements")
        if len(set(self.names)) != len(self.names):
            raise MalformedTable("element names must be distinct")
        report = verify_axioms(arr)
        _raise_for(report)

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def _identity_map(self) -> tuple[int, ...]:
        cand = _identity_candidates(self.array)
        return tuple(int(np.flatnonzero(cand[:, x])[0]) for x in range(self.order))

    @cached_property
    def _inverse_map(self) -> tuple[int, ...]:
        t, e = self.array, self._identity_map
        return tuple(int(np.flatnonzero((t[x, :] == e[x]) & (t[:, x] == e[x]))[0]) for x in range(self.order))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def e(self, x: int) -> int:
        return self._identity_map[x]

    def inv(self, x: int) -> int:
        return self._inverse_map[x]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def power(self, x: int, m: int) -> int:
        """x**m inside the group component of x; x**0 is e(x)."""
        if m < 0:
            x, m = self.inv(x), -m
        acc = self.e(x)
        for _ in range(m % self.element_order(x)):
            acc = self.table[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        e, acc, k = self.e(x), x, 1
        while acc != e:
            acc = self.table[acc][x]
            k += 1
        return k

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order}, names={list(self.names)})"


@dataclass(frozen=True, repr=False)
class FiniteGroup(FiniteGenGroup):
    identity: int = field(default=0)

    def __post_init__(self):
        super().__post_init__()
        i = self.identity
        if not 0 <= i < self.order:
            raise MalformedTable(f"identity {i} out of range")
        if any(self.table[i][x] != x or self.table[x][i] != x for x in range(self.order)):
            raise MalformedTable(f"element {i} is not a two-sided identity")
        if len(idempotents(self)) != 1:
            raise MalformedTable("a group has exactly one idempotent")


def make_finite_gg(names: Iterable[str], table) -> FiniteGenGroup:
    """Validate ``table`` and wrap it; raises an :class:`AxiomError` subclass on failure."""
    return FiniteGenGroup(tuple(names), table)


def local_identity(G: FiniteGenGroup, x: int) -> int:
    return G.e(x)


def inverse(G: FiniteGenGroup, x: int) -> int:
    return G.inv(x)


def idempotents(G: FiniteGenGroup) -> frozenset[int]:
    t = G.array
    return frozenset(int(x) for x in np.flatnonzero(t[np.arange(G.order), np.arange(G.order)] == np.arange(G.order)))


def is_normal(G: FiniteGenGroup) -> bool:
    """e(xy) == e(x)e(y) for every pair."""
    t = G.array
    e = np.array([G.e(x) for x in range(G.order)])
    return bool(np.array_equal(e[t], t[e[:, None], e[None, :]]))


def is_abelian(G: FiniteGenGroup) -> bool:
    return bool(np.array_equal(G.array, G.array.T))


def is_group(G: FiniteGenGroup) -> bool:
    return len(idempotents(G)) == 1


def component_elements(G: FiniteGenGroup, a: int) -> list[int]:
    """Indices of G_{e(a)} = {g : e(g) = e(a)}, ascending."""
    ea = G.e(a)
    return [g for g in range(G.order) if G.e(g) == ea]


def restrict(G: FiniteGenGroup, subset: Sequence[int]) -> FiniteGenGroup:
    """The sub-table on ``subset`` (kept in the given order); subset must be closed."""
    members = list(subset)
    pos = {g: k for k, g in enumerate(members)}
    rows = []
    for x in members:
        row = []
        for y in members:
            xy = G.table[x][y]
            if xy not in pos:
                raise ClosureViolation(f"{G.names[x]}*{G.names[y]} = {G.names[xy]} leaves the subset")
            row.append(pos[xy])
        rows.append(row)
    return FiniteGenGroup(tuple(G.names[g] for g in members), rows)


def group_component(G: FiniteGenGroup, a: int) -> FiniteGroup:
    members = component_elements(G, a)
    sub = restrict(G, members)
    return FiniteGroup(sub.names, sub.table, identity=members.index(G.e(a)))


def direct_product(G: FiniteGenGroup, H: FiniteGenGroup) -> FiniteGenGroup:
    """Componentwise product; the pair (x, y) has index ``x * H.order + y``."""
    m = H.order
    names = [f"({a},{b})" for a in G.names for b in H.names]
    rows = [
        [G.table[x1][x2] * m + H.table[y1][y2] for x2 in range(G.order) for y2 in range(m)]
        for x1 in range(G.order)
        for y1 in range(m)
    ]
    return FiniteGenGroup(tuple(names), rows)


def generalized_subgroup_check(G: FiniteGenGroup, subset: Iterable[int]) -> bool:
    """True iff the nonempty ``subset`` is closed under products, inverses and e."""
    s = set(subset)
    if not s or not s <= set(range(G.order)):
        return False
    return all(G.table[x][y] in s for x, y in product(s, repeat=2)) and all(
        G.inv(x) in s and G.e(x) in s for x in s
    )


def subgroup_closure(G: FiniteGenGroup, generators: Iterable[int]) -> frozenset[int]:
    """Smallest generalized subgroup containing ``generators``."""
    s = set(generators)
    frontier = list(s)
    while frontier:
        new = set()
        for x in frontier:
            new.update((G.inv(x), G.e(x)))
            for y in s | new:
                new.update((G.table[x][y], G.table[y][x]))
        new -= s
        s |= new
        frontier = list(new)
    return frozenset(s)


def to_cayley_doc(G: FiniteGenGroup) -> dict:
    return {"names": list(G.names), "table": [list(r) for r in G.table]}


def parse_cayley_doc(doc) -> tuple[list[str], list[list[int]]]:
    """Structural parse without axiom checks (the ``verify`` command needs raw tables)."""
    if not isinstance(doc, dict) or "table" not in doc:
        raise MalformedTable("Cayley document must be an object with a 'table' key")
    table = doc["table"]
    _as_array(table)
    names = doc.get("names")
    if names is None:
        names = [str(i) for i in range(len(table))]
    if not isinstance(names, list) or len(names) != len(table):
        raise MalformedTable("'names' must list one label per element")
    return [str(s) for s in names], [list(r) for r in table]


def from_cayley_doc(doc) -> FiniteGenGroup:
    names, table = parse_cayley_doc(doc)
    return make_finite_gg(names, table)
