"""Rees matrix construction over a finite group.

The carrier is I x G x Lambda with

    (i, g, l) * (j, h, m) = (i, g * P[l][j] * h, m)

where the sandwich matrix ``P`` has ``lambda_size`` rows and ``i_size``
columns. Every output is a completely simple semigroup, which makes these
tables the instance corpus for the property suites.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .catalogue import BASE_GROUPS, base_group
from .core import FiniteGenGroup, FiniteGroup, from_cayley_doc, to_cayley_doc
from .errors import GenGroupError, IndexOutOfRange, MalformedSpec


@dataclass(frozen=True)
class ReesSpec:
    base_group: FiniteGroup
    i_size: int
    lambda_size: int
    sandwich: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.base_group, FiniteGroup):
            raise MalformedSpec("base_group must be a FiniteGroup")
        for label, v in (("i_size", self.i_size), ("lambda_size", self.lambda_size)):
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise MalformedSpec(f"{label} must be a positive integer, got {v!r}")
        try:
            rows = tuple(tuple(r) for r in self.sandwich)
        except TypeError:
            raise MalformedSpec("sandwich must be a matrix") from None
        if len(rows) != self.lambda_size or any(len(r) != self.i_size for r in rows):
            raise MalformedSpec(f"sandwich must be {self.lambda_size}x{self.i_size} (lambda rows, I columns)")
        n = self.base_group.order
        for r in rows:
            for p in r:
                if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < n:
                    raise MalformedSpec(f"sandwich entry {p!r} is not an element of the base group")
        object.__setattr__(self, "sandwich", rows)

    @property
    def order(self) -> int:
        return self.i_size * self.base_group.order * self.lambda_size

    def element(self, i: int, g: int, lam: int) -> int:
        """Index of the triple (i, g, lam) in :func:`rees_build` output."""
        return (i * self.base_group.order + g) * self.lambda_size + lam

    def triple(self, x: int) -> tuple[int, int, int]:
        rest, lam = divmod(x, self.lambda_size)
        i, g = divmod(rest, self.base_group.order)
        return i, g, lam


def rees_build(spec: ReesSpec) -> FiniteGenGroup:
    G = spec.base_group
    mul = G.table
    P = spec.sandwich
    triples = [spec.triple(x) for x in range(spec.order)]
    names = [f"{i}:{G.names[g]}:{lam}" for i, g, lam in triples]
    table = [
        [spec.element(i, mul[mul[g][P[lam][j]]][h], mu) for (j, h, mu) in triples]
        for (i, g, lam) in triples
    ]
    return FiniteGenGroup(tuple(names), table)


def rees_idempotent(spec: ReesSpec, i: int, lam: int) -> int:
    """The idempotent (i, P[lam][i]^-1, lam), as an index into ``rees_build(spec)``."""
    if not 0 <= i < spec.i_size or not 0 <= lam < spec.lambda_size:
        raise IndexOutOfRange(f"(i={i}, lambda={lam}) outside {spec.i_size}x{spec.lambda_size}")
    return spec.element(i, spec.base_group.inv(spec.sandwich[lam][i]), lam)


def random_rees(seed: int, bounds: tuple[int, int] = (3, 3), groups=None) -> ReesSpec:
    """Deterministic spec for ``seed``; ``bounds`` caps (|I|, |Lambda|).

    ``groups`` restricts the base-group catalogue (names from ``BASE_GROUPS``).
    """
    i_cap, lam_cap = bounds
    if i_cap < 1 or lam_cap < 1:
        raise MalformedSpec("size caps must be >= 1")
    rng = random.Random(seed)
    choices = sorted(BASE_GROUPS) if groups is None else list(groups)
    G = base_group(rng.choice(choices))
    i_size = rng.randint(1, i_cap)
    lam_size = rng.randint(1, lam_cap)
    sandwich = [[rng.randrange(G.order) for _ in range(i_size)] for _ in range(lam_size)]
    return ReesSpec(G, i_size, lam_size, sandwich)


def spec_to_doc(spec: ReesSpec) -> dict:
    return {
        "group": to_cayley_doc(spec.base_group),
        "i_size": spec.i_size,
        "lambda_size": spec.lambda_size,
        "sandwich": [list(r) for r in spec.sandwich],
    }


def spec_from_doc(doc) -> ReesSpec:
    if not isinstance(doc, dict):
        raise MalformedSpec("Rees document must be a JSON object")
    missing = {"group", "i_size", "lambda_size", "sandwich"} - set(doc)
    if missing:
        raise MalformedSpec(f"Rees document missing {sorted(missing)}")
    try:
        G = from_cayley_doc(doc["group"])
    except GenGroupError as exc:
        raise MalformedSpec(f"base group: {exc}") from exc
    units = [x for x in range(G.order) if all(G.table[x][y] == y == G.table[y][x] for y in range(G.order))]
    if not units:
        raise MalformedSpec("base group table has no identity element")
    try:
        base = FiniteGroup(G.names, G.table, identity=units[0])
    except GenGroupError as exc:
        raise MalformedSpec(f"base group: {exc}") from exc
    return ReesSpec(base, doc["i_size"], doc["lambda_size"], doc["sandwich"])
