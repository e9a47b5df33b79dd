"""Element-wise maps between finite generalized groups."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FiniteGenGroup
from .errors import NotAHomomorphism, PreservationViolation, ShapeMismatch

__all__ = [
    "HomTable",
    "Enumeration",
    "check_hom",
    "first_violation",
    "check_preservation",
    "enumerate_homs",
    "is_isomorphism",
    "find_isomorphism",
    "compose",
    "image",
]


@dataclass(frozen=True)
class HomTable:
    source: FiniteGenGroup
    target: FiniteGenGroup
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        if len(imgs) != self.source.order:
            raise ShapeMismatch(f"{len(imgs)} images for a source of order {self.source.order}")
        for v in imgs:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.target.order:
                raise ShapeMismatch(f"image {v!r} outside target of order {self.target.order}")
        object.__setattr__(self, "images", imgs)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def to_doc(self) -> dict:
        return {"images": list(self.images)}


def first_violation(h: HomTable) -> tuple[int, int] | None:
    """Lexicographically first (a, b) with h(ab) != h(a)h(b)."""
    s, t, f = h.source.table, h.target.table, h.images
    n = h.source.order
    for a in range(n):
        for b in range(n):
            if f[s[a][b]] != t[f[a]][f[b]]:
                return a, b
    return None


def check_hom(h: HomTable) -> bool:
    return first_violation(h) is None


@dataclass(frozen=True)
class PreservationReport:
    identity_violations: tuple[int, ...] = ()
    inverse_violations: tuple[int, ...] = ()

    def __bool__(self):
        return bool(self.identity_violations or self.inverse_violations)


def check_preservation(h: HomTable) -> PreservationReport:
    """Check h(e(a)) = e(h(a)) and h(a^-1) = h(a)^-1 for every a.

    A violation on a verified homomorphism is a bug and raises
    :class:`PreservationViolation`; the returned report is therefore empty.
    """
    w = first_violation(h)
    if w is not None:
        raise NotAHomomorphism(w)
    G, H, f = h.source, h.target, h.images
    report = PreservationReport(
        identity_violations=tuple(a for a in range(G.order) if f[G.e(a)] != H.e(f[a])),
        inverse_violations=tuple(a for a in range(G.order) if f[G.inv(a)] != H.inv(f[a])),
    )
    if report:
        raise PreservationViolation(f"preservation fails: {report}")
    return report


@dataclass
class Enumeration:
    homs: list[HomTable] = field(default_factory=list)
    truncated: bool = False

    def __len__(self):
        return len(self.homs)

    def __iter__(self):
        return iter(self.homs)


def _pairs_by_stage(G: FiniteGenGroup) -> list[list[tuple[int, int, int]]]:
    # stage k holds the triples (a, b, ab) that become checkable once 0..k are assigned
    stages = [[] for _ in range(G.order)]
    for a in range(G.order):
        for b in range(G.order):
            ab = G.table[a][b]
            stages[max(a, b, ab)].append((a, b, ab))
    return stages


def _search(G, H, cap=None, injective=False):
    stages = _pairs_by_stage(G)
    t = H.table
    n, m = G.order, H.order
    f = [0] * n
    used = [False] * m
    found = []

    def rec(k):
        if k == n:
            found.append(tuple(f))
            return cap is not None and len(found) >= cap
        for v in range(m):
            if injective and used[v]:
                continue
            f[k] = v
            if all(f[ab] == t[f[a]][f[b]] for a, b, ab in stages[k]):
                used[v] = True
                stop = rec(k + 1)
                used[v] = False
                if stop:
                    return True
        return False

    stopped = rec(0)
    return found, stopped


def enumerate_homs(G: FiniteGenGroup, H: FiniteGenGroup, cap: int | None = None) -> Enumeration:
    """All homomorphisms G -> H in lexicographic order of their image tuples.

    With ``cap`` the search stops after ``cap`` results; ``truncated`` is set
    only if more homomorphisms exist beyond the cap.
    """
    if cap is not None and cap < 1:
        return Enumeration([], truncated=bool(_search(G, H, cap=1)[0]))
    found, stopped = _search(G, H, cap=None if cap is None else cap + 1)
    truncated = cap is not None and len(found) > cap
    if truncated:
        found = found[:cap]
    return Enumeration([HomTable(G, H, imgs) for imgs in found], truncated)


def is_isomorphism(h: HomTable) -> bool:
    n = h.source.order
    if h.target.order != n or len(set(h.images)) != n or not check_hom(h):
        return False
    back = [0] * n
    for x, y in enumerate(h.images):
        back[y] = x
    return check_hom(HomTable(h.target, h.source, tuple(back)))


def find_isomorphism(G: FiniteGenGroup, H: FiniteGenGroup) -> HomTable | None:
    """First isomorphism G -> H found by pruned backtracking, or None."""
    if G.order != H.order:
        return None
    found, _ = _search(G, H, cap=1, injective=True)
    return HomTable(G, H, found[0]) if found else None


def compose(second: HomTable, first: HomTable) -> HomTable:
    """``second`` after ``first``."""
    if first.target != second.source:
        raise ShapeMismatch("composition needs first.target == second.source")
    return HomTable(first.source, second.target, tuple(second.images[v] for v in first.images))


def image(h: HomTable) -> frozenset[int]:
    return frozenset(h.images)
