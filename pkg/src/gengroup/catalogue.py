"""Small named structures used as base groups and test fixtures."""

from __future__ import annotations

from itertools import permutations

from .core import FiniteGenGroup, FiniteGroup, direct_product
from .errors import UnknownName


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n written additively, element k labelled ``str(k)``."""
    return FiniteGroup(
        tuple(str(k) for k in range(n)),
        [[(a + b) % n for b in range(n)] for a in range(n)],
        identity=0,
    )


def trivial_group() -> FiniteGroup:
    return FiniteGroup(("e",), [[0]], identity=0)


def klein_group() -> FiniteGroup:
    z2 = cyclic_group(2)
    prod = direct_product(z2, z2)
    return FiniteGroup(prod.names, prod.table, identity=0)


def symmetric_group_3() -> FiniteGroup:
    """S3 as permutations of (0, 1, 2) in lexicographic order; composition (p*q)(i) = p(q(i))."""
    perms = list(permutations(range(3)))
    pos = {p: k for k, p in enumerate(perms)}
    names = ["".join(str(v) for v in p) for p in perms]
    table = [[pos[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return FiniteGroup(tuple(names), table, identity=0)


def right_zero(n: int) -> FiniteGenGroup:
    """x*y = y."""
    return FiniteGenGroup(tuple(f"r{k}" for k in range(n)), [list(range(n)) for _ in range(n)])


def left_zero(n: int) -> FiniteGenGroup:
    """x*y = x."""
    return FiniteGenGroup(tuple(f"l{k}" for k in range(n)), [[x] * n for x in range(n)])


BASE_GROUPS = {
    "trivial": trivial_group,
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z2xZ2": klein_group,
    "S3": symmetric_group_3,
}


def base_group(name: str) -> FiniteGroup:
    try:
        return BASE_GROUPS[name]()
    except KeyError:
        raise UnknownName(f"unknown base group {name!r}; choose from {sorted(BASE_GROUPS)}") from None
