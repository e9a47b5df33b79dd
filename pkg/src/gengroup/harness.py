"""Mechanical checks of the slenderness results on desk-scale instances.

Homomorphisms out of the full integer product are not finitely describable,
so every check here quantifies over a *representable* class: maps that read
only a finite window of coordinates. Two building blocks:

``RepHom``
    a linear map Z^N -> Z^k applied to the first N coordinates of an element
    of the additive product.

``RepGGHom``
    a homomorphism out of the star product assembled from a ``RepHom`` and the
    coordinate maps ``map_f``/``map_g`` (and, for finite targets, a power map
    m -> c**m inside a group component).

Non-representable homomorphisms are out of scope, and so is any claim about
them. A finite target therefore looks slender to every check below. That is
a statement about this class, not about the target group.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Iterable, Sequence

from . import seqgg
from .catalogue import cyclic_group, klein_group, left_zero, right_zero, symmetric_group_3, trivial_group
from .core import (
    FiniteGenGroup,
    component_elements,
    direct_product,
    generalized_subgroup_check,
    group_component,
    idempotents,
    is_abelian,
    is_group,
    is_normal,
    restrict,
    subgroup_closure,
    verify_axioms,
)
from .errors import NotSurjective
from .hom import HomTable, check_preservation, enumerate_homs, find_isomorphism, first_violation
from .rees import ReesSpec, random_rees, rees_build, rees_idempotent
from .seqgg import FinSeq, add, basis, map_f, map_g, star, truncate
from .slender import IntMatrix, SnfResult, classify, is_slender_fg, named_verdict, smith_normal_form, snf_problems

VERIFIED, FALSIFIED, SKIPPED = "verified", "falsified", "skipped"

CLAIM_ORDER = (
    "Axioms",
    "Rees",
    "Thm-1.2",
    "Def-1.3",
    "Ex-1.4",
    "Rem-1.5",
    "Def-1.6",
    "Prop-1.7",
    "Prop-1.8",
    "Ex-1.9",
    "Thm-1.10",
    "Thm-1.11",
    "Thm-2.2",
    "Thm-2.3",
    "Thm-2.4",
    "SNF",
    "Slender-fg",
)

DEFAULT_SEED = 0
DEFAULT_BOUND = 100
MAX_WINDOW = 12
COORD = 9


# -- representable homomorphisms ------------------------------------------------


@dataclass(frozen=True)
class RepHom:
    """x -> matrix . (x_1, ..., x_N); coordinates past N are ignored."""

    window: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.matrix)
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if not rows or any(len(r) != self.window for r in rows):
            raise ValueError(f"matrix must have k >= 1 rows of length {self.window}")
        object.__setattr__(self, "matrix", rows)

    @property
    def target_rank(self) -> int:
        return len(self.matrix)

    def __call__(self, x: FinSeq) -> tuple[int, ...]:
        return eval_rep(self, x)

    def support(self) -> tuple[int, ...]:
        """Positions m (1-based) whose basis vector i_m is not sent to 0."""
        return tuple(m for m in range(1, self.window + 1) if any(r[m - 1] for r in self.matrix))

    def to_doc(self) -> dict:
        return {"window": self.window, "matrix": [list(r) for r in self.matrix]}


def eval_rep(h: RepHom, x: FinSeq) -> tuple[int, ...]:
    coords = [(k, v) for k, v in x.items() if k <= h.window]
    return tuple(sum(row[k - 1] * v for k, v in coords) for row in h.matrix)


def random_rephom(rng: random.Random, max_window: int = MAX_WINDOW, max_rank: int = 3, coef: int = 5) -> RepHom:
    window = rng.randint(1, max_window)
    rank = rng.randint(1, max_rank)
    density = rng.random()
    matrix = [
        [rng.randint(-coef, coef) if rng.random() < density else 0 for _ in range(window)]
        for _ in range(rank)
    ]
    return RepHom(window, matrix)


@dataclass(frozen=True)
class RepGGHom:
    """A homomorphism out of the star product, built from a ``RepHom``.

    rules:
      ``h∘f``     x -> h(map_f(x)), into Z^k
      ``h∘g``     x -> h(map_g(x)), into Z^k
      ``power``   x -> c ** h(map_f(x))[0] inside the component of c in ``target``
      ``product`` componentwise tuple of ``factors`` into their direct product
      ``raw``     x -> h(x); not a homomorphism unless h ignores positions 1, 2 (mod 3)
    ``declared_window`` overrides the natural window (used for corrupted fixtures).
    """

    rule: str
    base: RepHom | None = None
    target: FiniteGenGroup | None = None
    element: int | None = None
    factors: tuple["RepGGHom", ...] = ()
    declared_window: int | None = None

    @classmethod
    def via_f(cls, h: RepHom, window: int | None = None) -> "RepGGHom":
        return cls("h∘f", base=h, declared_window=window)

    @classmethod
    def via_g(cls, h: RepHom, window: int | None = None) -> "RepGGHom":
        return cls("h∘g", base=h, declared_window=window)

    @classmethod
    def raw(cls, h: RepHom) -> "RepGGHom":
        return cls("raw", base=h)

    @classmethod
    def power(cls, h: RepHom, target: FiniteGenGroup, element: int) -> "RepGGHom":
        if h.target_rank != 1:
            raise ValueError("power rule needs a rank-1 base map")
        return cls("power", base=h, target=target, element=element)

    @classmethod
    def product(cls, factors: Sequence["RepGGHom"]) -> "RepGGHom":
        if not factors or any(p.target is None for p in factors):
            raise ValueError("product needs factors with finite targets")
        target = reduce(direct_product, [p.target for p in factors])
        return cls("product", target=target, factors=tuple(factors))

    @property
    def natural_window(self) -> int:
        if self.rule == "product":
            return max(p.window for p in self.factors)
        if self.rule == "h∘g":
            return 3 * self.base.window
        return self.base.window

    @property
    def window(self) -> int:
        return self.natural_window if self.declared_window is None else self.declared_window

    def __call__(self, x: FinSeq):
        if self.rule == "h∘f":
            return self.base(map_f(x))
        if self.rule == "h∘g":
            return self.base(map_g(x))
        if self.rule == "raw":
            return self.base(x)
        if self.rule == "power":
            return self.target.power(self.element, self.base(map_f(x))[0])
        if self.rule == "product":
            idx = 0
            for p in self.factors:
                idx = idx * p.target.order + p(x)
            return idx
        raise ValueError(f"unknown rule {self.rule!r}")

    def mul(self, u, v):
        if self.target is None:
            return tuple(a + b for a, b in zip(u, v))
        return self.target.table[u][v]

    def e(self, value):
        if self.target is None:
            return (0,) * len(value)
        return self.target.e(value)

    def render(self, value) -> str:
        if self.target is None:
            return "(" + ",".join(str(v) for v in value) + ")"
        return self.target.names[value]

    def describe(self) -> dict:
        d = {"rule": self.rule, "window": self.window}
        if self.base is not None:
            d["base"] = self.base.to_doc()
        if self.target is not None:
            d["target_order"] = self.target.order
        if self.element is not None:
            d["element"] = self.target.names[self.element]
        if self.factors:
            d["factors"] = [p.describe() for p in self.factors]
        return d


def offdiagonal_set(h, bound: int) -> frozenset[int]:
    """{n <= bound : h(i_n) != e(h(i_n))}; e is 0 for abelian (Z^k) targets."""
    out = set()
    for n in range(1, bound + 1):
        v = h(basis(n))
        e = h.e(v) if isinstance(h, RepGGHom) else (0,) * len(v)
        if v != e:
            out.add(n)
    return frozenset(out)


# -- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    status: str
    witness: str | None = None
    params: dict = field(default_factory=dict, compare=False)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.status not in (VERIFIED, FALSIFIED, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FALSIFIED and not self.witness:
            raise ValueError("a falsified claim needs a witness")

    def line(self) -> str:
        out = f"CLAIM {self.claim} {self.status}"
        if self.witness:
            out += f" witness={self.witness}"
        return out

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "witness": self.witness,
            "params": self.params,
            "notes": list(self.notes),
        }


def _verified(claim, params=None, notes=()):
    return ClaimReport(claim, VERIFIED, None, params or {}, tuple(notes))


def _falsified(claim, witness, params=None, notes=()):
    return ClaimReport(claim, FALSIFIED, str(witness), params or {}, tuple(notes))


def _skipped(claim, reason, params=None):
    return ClaimReport(claim, SKIPPED, None, params or {}, (reason,))


# -- sampling -------------------------------------------------------------------


def _label(x: FinSeq) -> str:
    if len(x) == 1:
        ((k, v),) = x.items()
        if v == 1:
            return f"i{k}"
    return str(x)


def random_seq(rng: random.Random, max_pos: int, coord: int = COORD, max_support: int = 6) -> FinSeq:
    size = rng.randint(0, max_support)
    return FinSeq({rng.randint(1, max_pos): rng.randint(-coord, coord) for _ in range(size)})


def probe_pairs(rng: random.Random, bound: int, samples: int, max_pos: int) -> list[tuple[FinSeq, FinSeq]]:
    """Basis pairs (i_n, i_n), then mixed basis pairs, then seeded random pairs."""
    pairs = [(basis(n), basis(n)) for n in range(1, bound + 1)]
    small = range(1, min(bound, 6) + 1)
    pairs += [(basis(n), basis(m)) for n in small for m in small if n != m]
    pairs += [(random_seq(rng, max_pos), random_seq(rng, max_pos)) for _ in range(samples)]
    return pairs


def gg_law_violation(h: RepGGHom, pairs: Iterable[tuple[FinSeq, FinSeq]]):
    """First (x, y) with h(x*y) != h(x)h(y), as a display string, or None."""
    for x, y in pairs:
        if h(star(x, y)) != h.mul(h(x), h(y)):
            return f"({_label(x)},{_label(y)})"
    return None


def additive_law_violation(phi: Callable, pairs, combine) -> str | None:
    for x, y in pairs:
        if phi(add(x, y)) != combine(phi(x), phi(y)):
            return f"({_label(x)},{_label(y)})"
    return None


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


# -- claims: star product and the abelian theorems ------------------------------


def check_thm_1_10(h: RepHom, bound: int = DEFAULT_BOUND, *, samples: int = 200, seed: int = 0,
                   composite: RepGGHom | None = None) -> ClaimReport:
    """Abelian target, slender => slender as a generalized group.

    The homomorphism out of the star product is ``h∘f`` (``composite`` replaces
    it for mutation tests). Checks that the law holds, that i_n with n not
    divisible by 3 is killed (it is idempotent and the target is a group), and
    that composing back with map_f gives a group homomorphism whose nonzero
    basis images sit inside the window.
    """
    claim = "Thm-1.10"
    if bound <= 0:
        return _skipped(claim, "bound is 0")
    H = composite or RepGGHom.via_f(h)
    params = {"hom": H.describe(), "bound": bound, "samples": samples, "seed": seed}
    rng = random.Random(seed)
    pairs = probe_pairs(rng, bound, samples, max(3 * H.window, 6) + 3)
    w = gg_law_violation(H, pairs)
    if w:
        return _falsified(claim, w, params)
    for n in range(1, bound + 1):
        if n % 3 == 0:
            continue
        i_n = basis(n)
        if star(i_n, i_n) != i_n:
            return _falsified(claim, f"i{n}*i{n} != i{n}", params)
        v = H(i_n)
        if any(v):
            return _falsified(claim, f"h(i{n})={H.render(v)}", params)

    def back(x):
        return H(map_f(x))

    w = additive_law_violation(back, pairs, _vec_add)
    if w:
        return _falsified(claim, f"h∘f not additive at {w}", params)
    nonzero = {n for n in range(1, bound + 1) if any(back(basis(n)))}
    off = offdiagonal_set(H, bound)
    params["offdiagonal"] = sorted(off)
    if nonzero != off:
        return _falsified(claim, f"offdiagonal {sorted(off)} != nonzero basis images {sorted(nonzero)}", params)
    outside = sorted(n for n in off if n % 3 or n > H.window)
    if outside:
        return _falsified(claim, f"n={outside[0]} outside window {H.window}", params)
    return _verified(claim, params)


def check_thm_1_11(h: RepHom, bound: int = DEFAULT_BOUND, *, samples: int = 200, seed: int = 0) -> ClaimReport:
    """Abelian target, slender as a generalized group => slender, via ``h∘g``."""
    claim = "Thm-1.11"
    if bound <= 0:
        return _skipped(claim, "bound is 0")
    H = RepGGHom.via_g(h)
    params = {"hom": H.describe(), "bound": bound, "samples": samples, "seed": seed}
    rng = random.Random(seed)
    pairs = probe_pairs(rng, bound, samples, 3 * H.window + 3)
    w = gg_law_violation(H, pairs)
    if w:
        return _falsified(claim, w, params)
    nonzero = set()
    for n in range(1, bound + 1):
        v = H(basis(n))
        if H.e(v) != (0,) * h.target_rank:
            return _falsified(claim, f"e(h∘g(i{n})) != 0", params)
        if any(v):
            nonzero.add(n)
        if n % 3 == 0:
            if map_g(basis(n)) != basis(n // 3):
                return _falsified(claim, f"g(i{n}) != i{n // 3}", params)
            if v != h(basis(n // 3)):
                return _falsified(claim, f"h∘g(i{n}) != h(i{n // 3})", params)
    expected = {3 * m for m in h.support() if 3 * m <= bound}
    params["offdiagonal"] = sorted(nonzero)
    if nonzero != expected:
        diff = sorted(nonzero ^ expected)
        return _falsified(claim, f"n={diff[0]}: nonzero set {sorted(nonzero)} != {sorted(expected)}", params)
    return _verified(claim, params)


def check_def_1_6(homs: Sequence[RepHom], bound: int = DEFAULT_BOUND) -> ClaimReport:
    """Window property: h(i_n) = 0 past the window, so the off-diagonal set is finite.

    This is all that claim Thm-2.1, a restatement of the definition, adds on
    the representable class.
    """
    claim = "Def-1.6"
    if bound <= 0 or not homs:
        return _skipped(claim, "bound is 0" if bound <= 0 else "no maps")
    for k, h in enumerate(homs):
        off = offdiagonal_set(h, max(bound, h.window + 1))
        late = sorted(n for n in off if n > h.window)
        if late:
            return _falsified(claim, f"map {k}: h(i{late[0]}) != 0 past window {h.window}")
        if off != frozenset(h.support()):
            return _falsified(claim, f"map {k}: off-diagonal {sorted(off)} != support {list(h.support())}")
    return _verified(claim, {"maps": len(homs), "bound": bound}, ["covers Thm-2.1, which restates the definition"])


def check_ex_1_4(samples: int = 1000, seed: int = 0, max_pos: int = 40) -> ClaimReport:
    """Star product: associativity, e/inverse identities on seeded triples."""
    claim = "Ex-1.4"
    if samples <= 0:
        return _skipped(claim, "no samples")
    rng = random.Random(seed)
    e, inv = seqgg.e_g, seqgg.inv_g
    for _ in range(samples):
        x, y, z = (random_seq(rng, max_pos) for _ in range(3))
        if star(star(x, y), z) != star(x, star(y, z)):
            return _falsified(claim, f"associativity at ({x},{y},{z})")
        if not (star(e(x), x) == x == star(x, e(x)) and e(e(x)) == e(x)):
            return _falsified(claim, f"local identity at {x}")
        if not (star(x, inv(x)) == e(x) == star(inv(x), x) and inv(inv(x)) == x and e(inv(x)) == e(x)):
            return _falsified(claim, f"inverse at {x}")
    return _verified(claim, {"samples": samples, "seed": seed})


def check_def_1_3(samples: int = 1000, seed: int = 0, max_pos: int = 40) -> ClaimReport:
    """The star product is a normal generalized group."""
    claim = "Def-1.3"
    if samples <= 0:
        return _skipped(claim, "no samples")
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = random_seq(rng, max_pos), random_seq(rng, max_pos)
        if seqgg.e_g(star(x, y)) != star(seqgg.e_g(x), seqgg.e_g(y)):
            return _falsified(claim, f"({x},{y})")
    return _verified(claim, {"samples": samples, "seed": seed})


def check_rem_1_5(samples: int = 1000, seed: int = 0, max_pos: int = 40) -> ClaimReport:
    """f and g are homomorphisms; the identity from star to additive is not, witnessed at (i1, i1)."""
    claim = "Rem-1.5"
    if samples <= 0:
        return _skipped(claim, "no samples")
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = random_seq(rng, max_pos), random_seq(rng, max_pos)
        if map_f(add(x, y)) != star(map_f(x), map_f(y)):
            return _falsified(claim, f"f at ({x},{y})")
        if map_g(star(x, y)) != add(map_g(x), map_g(y)):
            return _falsified(claim, f"g at ({x},{y})")
    i1 = basis(1)
    lhs, rhs = star(i1, i1), add(i1, i1)
    if lhs == rhs:
        return _falsified(claim, "identity map satisfies the law at (i1,i1)")
    return _verified(
        claim,
        {"samples": samples, "seed": seed, "identity_counterexample": {"I(i1*i1)": str(lhs), "I(i1)+I(i1)": str(rhs)}},
    )


def check_ex_1_9(bound: int = DEFAULT_BOUND, samples: int = 200, seed: int = 0) -> ClaimReport:
    """The identity of the star product is a homomorphism missing e at every i_{3n}."""
    claim = "Ex-1.9"
    if bound < 3:
        return _skipped(claim, "bound contains no multiple of 3")
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = random_seq(rng, bound), random_seq(rng, bound)
        if star(x, y) != star(x, y):
            return _falsified(claim, f"identity law at ({x},{y})")
    off = {n for n in range(1, bound + 1) if basis(n) != seqgg.e_g(basis(n))}
    expected = set(range(3, bound + 1, 3))
    if off != expected:
        return _falsified(claim, f"off-diagonal {sorted(off)[:5]}... != multiples of 3")
    return _verified(claim, {"bound": bound, "offdiagonal_size": len(off)})


# -- claims: finite generalized groups -----------------------------------------


def _power_probes(rng: random.Random, G: FiniteGenGroup, count: int) -> list[RepGGHom]:
    out = []
    for _ in range(count):
        h = random_rephom(rng, max_rank=1)
        out.append(RepGGHom.power(h, G, rng.randrange(G.order)))
    return out


def _probe_hom(claim, H: RepGGHom, bound, pairs, params, tag=""):
    """Law on pairs plus a finite off-diagonal set inside the window; a report on failure."""
    w = gg_law_violation(H, pairs)
    if w:
        return _falsified(claim, f"{tag}law fails at {w}", params)
    off = offdiagonal_set(H, max(bound, H.window + 3))
    late = sorted(n for n in off if n > H.window)
    if late:
        return _falsified(claim, f"{tag}h(i{late[0]}) != e(h(i{late[0]})) past window {H.window}", params)
    return None


def check_prop_1_7(G: FiniteGenGroup, subset: Iterable[int], *, bound: int = DEFAULT_BOUND, probes: int = 8,
                   samples: int = 50, seed: int = 0, claim: str = "Prop-1.7") -> ClaimReport:
    """Generalized subgroups inherit the finiteness property from G.

    Probes land in the subgroup S; composing with the inclusion S -> G must give
    the same off-diagonal set in G, and each probe must be finite in S.
    """
    members = sorted(set(subset))
    if bound <= 0:
        return _skipped(claim, "bound is 0")
    if not generalized_subgroup_check(G, members):
        return _skipped(claim, "subset is not a generalized subgroup")
    S = restrict(G, members)
    incl = HomTable(S, G, tuple(members))
    params = {"order": G.order, "subset": [G.names[m] for m in members], "probes": probes, "seed": seed,
              "subgroup_is_group": is_group(S)}
    w = first_violation(incl)
    if w is not None:
        return _falsified(claim, f"inclusion not a homomorphism at {w}", params)
    rng = random.Random(seed)
    pairs = probe_pairs(rng, min(bound, 12), samples, 3 * MAX_WINDOW + 3)
    for k, P in enumerate(_power_probes(rng, S, probes)):
        bad = _probe_hom(claim, P, bound, pairs, params, tag=f"probe {k}: ")
        if bad:
            return bad
        PG = RepGGHom.power(P.base, G, members[P.element])
        for x, _ in pairs:
            if incl(P(x)) != PG(x):
                return _falsified(claim, f"probe {k}: inclusion∘h != h_G at {_label(x)}", params)
        off_s, off_g = offdiagonal_set(P, bound), offdiagonal_set(PG, bound)
        if off_s != off_g:
            return _falsified(claim, f"probe {k}: off-diagonal sets differ {sorted(off_s)} vs {sorted(off_g)}", params)
    return _verified(claim, params, ["finiteness is relative to the representable class"])


def check_prop_1_8(G: FiniteGenGroup, a: int, **kw) -> ClaimReport:
    """G_{e(a)} is a group and inherits the finiteness property as in Prop-1.7."""
    claim = "Prop-1.8"
    members = component_elements(G, a)
    comp = group_component(G, a)
    if not is_group(comp) or comp.identity != members.index(G.e(a)):
        return _falsified(claim, f"component of {G.names[a]} is not a group with identity e(a)")
    return check_prop_1_7(G, members, claim=claim, **kw)


def check_thm_2_2(f: HomTable, *, bound: int = DEFAULT_BOUND, probes: int = 8, samples: int = 50,
                  seed: int = 0) -> ClaimReport:
    """Slenderness passes to surjective images, checked at probe level.

    For each probe h = c**(...) into the target, the lift picks a preimage a of c
    and uses a**(...) into the source; then f(a_n) = h(i_n) for every n checked.
    """
    claim = "Thm-2.2"
    G, H = f.source, f.target
    if set(f.images) != set(range(H.order)):
        missing = sorted(set(range(H.order)) - set(f.images))
        raise NotSurjective(f"{H.names[missing[0]]} has no preimage")
    notes = ["proof-gap noted: the lift is defined by basis images; only its probe-level consistency is checked"]
    params = {"source_order": G.order, "target_order": H.order, "probes": probes, "seed": seed}
    w = first_violation(f)
    if w is not None:
        a, b = w
        return _falsified(claim, f"f not a homomorphism at ({G.names[a]},{G.names[b]})", params, notes)
    if bound <= 0:
        return _skipped(claim, "bound is 0", params)
    rng = random.Random(seed)
    pairs = probe_pairs(rng, min(bound, 12), samples, 3 * MAX_WINDOW + 3)
    for k, h in enumerate(_power_probes(rng, H, probes)):
        bad = _probe_hom(claim, h, bound, pairs, params, tag=f"probe {k}: ")
        if bad:
            return bad
        a = f.images.index(h.element)
        lift = RepGGHom.power(h.base, G, a)
        bad = _probe_hom(claim, lift, bound, pairs, params, tag=f"lift {k}: ")
        if bad:
            return bad
        for n in range(1, bound + 1):
            a_n = lift(basis(n))
            if f(a_n) != h(basis(n)):
                return _falsified(claim, f"lift {k}: f(a_{n}) != h(i{n})", params, notes)
        if not offdiagonal_set(h, bound) <= offdiagonal_set(lift, bound):
            return _falsified(claim, f"lift {k}: off-diagonal set of h not covered by the lift", params, notes)
    return _verified(claim, params, notes)


def check_thm_2_3(factors: Sequence[FiniteGenGroup], *, bound: int = DEFAULT_BOUND, probes: int = 8,
                  samples: int = 50, seed: int = 0) -> ClaimReport:
    """Finite direct products: a probe is off-diagonal at i_n iff some component is.

    "Identity component" is read as a component equal to its own local identity.
    """
    claim = "Thm-2.3"
    if not factors:
        return _skipped(claim, "no factors")
    if len(factors) > 4:
        raise ValueError("at most 4 factors")
    if bound <= 0:
        return _skipped(claim, "bound is 0")
    P = reduce(direct_product, factors)
    params = {"factor_orders": [F.order for F in factors], "probes": probes, "seed": seed}

    def split(v):
        out = []
        for F in reversed(factors):
            v, c = divmod(v, F.order)
            out.append(c)
        return out[::-1]

    for x in range(P.order):
        comps = split(x)
        if split(P.e(x)) != [F.e(c) for F, c in zip(factors, comps)]:
            return _falsified(claim, f"e({P.names[x]}) is not componentwise", params)
    rng = random.Random(seed)
    pairs = probe_pairs(rng, min(bound, 12), samples, 3 * MAX_WINDOW + 3)
    for k in range(probes):
        parts = [_power_probes(rng, F, 1)[0] for F in factors]
        h = RepGGHom.product(parts)
        bad = _probe_hom(claim, h, bound, pairs, params, tag=f"probe {k}: ")
        if bad:
            return bad
        for n in range(1, bound + 1):
            v = h(basis(n))
            nonid = [j for j, (F, c) in enumerate(zip(factors, split(v))) if c != F.e(c)]
            if (v != h.e(v)) != bool(nonid):
                return _falsified(claim, f"probe {k}: i{n} off-diagonal status disagrees with components", params)
        union = frozenset().union(*(offdiagonal_set(p, bound) for p in parts))
        if offdiagonal_set(h, bound) != union:
            return _falsified(claim, f"probe {k}: off-diagonal set is not the union over factors", params)
    return _verified(claim, params, ["finite direct products only; infinite direct sums are not modelled"])


def check_thm_2_4(h: RepGGHom, *, bound: int = DEFAULT_BOUND, samples: int = 1000, seed: int = 0) -> ClaimReport:
    """h is determined by the coordinates in its declared window."""
    claim = "Thm-2.4"
    N = h.window
    params = {"hom": h.describe(), "samples": samples, "seed": seed}
    if bound <= 0:
        return _skipped(claim, "bound is 0", params)
    if h.target is not None and not is_normal(h.target):
        return _skipped(claim, "target is not normal", params)
    S = offdiagonal_set(h, N + bound)
    params["S"] = sorted(S)
    late = sorted(n for n in S if n > N)
    if late:
        return _falsified(claim, f"n={late[0]} in S outside window {N}", params)
    rng = random.Random(seed)
    for _ in range(samples):
        x = random_seq(rng, 3 * N + 6)
        if h(x) != h(truncate(x, N)):
            return _falsified(claim, f"h({x}) != h({truncate(x, N)})", params)
    return _verified(claim, params)


def check_axioms(tables: Sequence[tuple[str, Sequence[str], Sequence[Sequence[int]]]]) -> ClaimReport:
    """Axioms and derived identities (e(e(x)), double inverse, e(x^-1), abelian => group)."""
    claim = "Axioms"
    if not tables:
        return _skipped(claim, "empty corpus")
    for name, names, table in tables:
        report = verify_axioms(table)
        if not report.verdict:
            lines = report.lines(names)
            detail = lines[1] if report.associativity_witness is not None else next(l for l in lines if "failure" in l)
            return _falsified(claim, f"{name}: {detail}")
        G = FiniteGenGroup(tuple(names), table)
        for x in range(G.order):
            if G.e(G.e(x)) != G.e(x) or G.inv(G.inv(x)) != x or G.e(G.inv(x)) != G.e(x):
                return _falsified(claim, f"{name}: identity fails at {G.names[x]}")
        if is_abelian(G) and not is_group(G):
            return _falsified(claim, f"{name}: abelian but not a group")
        if idempotents(G) != {G.e(x) for x in range(G.order)}:
            return _falsified(claim, f"{name}: idempotents differ from the image of e")
    return _verified(claim, {"instances": len(tables)})


def check_rees(specs: Sequence[ReesSpec], tables: Sequence[FiniteGenGroup] | None = None,
               iso_limit: int = 6) -> ClaimReport:
    """Idempotent count, local identity formula, components isomorphic to the base group."""
    claim = "Rees"
    if not specs:
        return _skipped(claim, "no specs")
    for k, spec in enumerate(specs):
        G = rees_build(spec) if tables is None else tables[k]
        if len(idempotents(G)) != spec.i_size * spec.lambda_size:
            return _falsified(claim, f"spec {k}: {len(idempotents(G))} idempotents")
        for x in range(G.order):
            i, _, lam = spec.triple(x)
            if G.e(x) != rees_idempotent(spec, i, lam):
                return _falsified(claim, f"spec {k}: e({G.names[x]})={G.names[G.e(x)]}, "
                                         f"expected {G.names[rees_idempotent(spec, i, lam)]}")
        if spec.base_group.order <= iso_limit:
            for z in sorted(idempotents(G)):
                if find_isomorphism(group_component(G, z), spec.base_group) is None:
                    return _falsified(claim, f"spec {k}: component of {G.names[z]} not isomorphic to base")
    return _verified(claim, {"specs": len(specs)})


def check_thm_1_2(homs: Iterable[HomTable]) -> ClaimReport:
    claim = "Thm-1.2"
    count = 0
    for h in homs:
        w = first_violation(h)
        if w is not None:
            a, b = w
            return _falsified(claim, f"not a homomorphism at ({h.source.names[a]},{h.source.names[b]})")
        check_preservation(h)
        count += 1
    if not count:
        return _skipped(claim, "no homomorphisms")
    return _verified(claim, {"homomorphisms": count})


def check_snf(cases: Sequence[tuple[IntMatrix, SnfResult | None]]) -> ClaimReport:
    """Certificate check of Smith forms; a given result is checked instead of recomputed."""
    claim = "SNF"
    if not cases:
        return _skipped(claim, "no matrices")
    for k, (A, res) in enumerate(cases):
        res = res or smith_normal_form(A)
        problems = snf_problems(A, res)
        if problems:
            return _falsified(claim, f"matrix {k}: {problems[0]}")
    return _verified(claim, {"matrices": len(cases)})


def check_slender_fg() -> ClaimReport:
    claim = "Slender-fg"
    for n in range(5):
        g = classify(IntMatrix(0, n, ()), n)
        if not is_slender_fg(g):
            return _falsified(claim, f"Z^{n} classified as not slender")
    for rows, gens in (([[6]], 1), ([[2, 0]], 2)):
        g = classify(IntMatrix.from_rows(rows, gens), gens)
        if is_slender_fg(g):
            return _falsified(claim, f"{g} classified as slender")
    for name, want in (("Z^n", True), ("free_abelian", True), ("Q", False), ("J_p", False), ("prod_Z", False)):
        if named_verdict(name).slender != want:
            return _falsified(claim, f"named verdict for {name}")
    return _verified(claim, notes=["torsion => not slender is the classical fact, not derived here"])


# -- corpus, mutations, driver --------------------------------------------------


def fixture_groups() -> list[tuple[str, FiniteGenGroup]]:
    z2 = cyclic_group(2)
    return [
        ("trivial", trivial_group()),
        ("Z2", z2),
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("Z2xZ2", klein_group()),
        ("S3", symmetric_group_3()),
        ("right-zero-2", right_zero(2)),
        ("right-zero-3", right_zero(3)),
        ("left-zero-3", left_zero(3)),
        ("right-zero-2xZ2", direct_product(right_zero(2), z2)),
    ]


def rees_corpus(seed: int, count: int, caps: tuple[int, int] = (3, 3)) -> list[ReesSpec]:
    return [random_rees(seed * 100_003 + k, caps) for k in range(count)]


def _broken_table():
    # Z/2 with 1*1 set to 1: element 1 gets two local identity candidates
    return ("Z2-broken", ["0", "1"], [[0, 1], [1, 1]])


def _non_hom_map() -> HomTable:
    z4 = cyclic_group(4)
    return HomTable(z4, z4, (1, 2, 3, 0))  # x -> x + 1


def _wrong_sandwich() -> tuple[ReesSpec, FiniteGenGroup]:
    good = ReesSpec(cyclic_group(3), 2, 2, [[0, 1], [2, 0]])
    bad = ReesSpec(cyclic_group(3), 2, 2, [[0, 1], [2, 1]])
    return good, rees_build(bad)


def _corrupted_composite() -> tuple[RepHom, RepGGHom]:
    h = RepHom(3, [[1, 0, 2]])
    return h, RepGGHom.raw(h)


def _non_unimodular() -> tuple[IntMatrix, SnfResult]:
    A = IntMatrix.from_rows([[1]])
    return A, SnfResult(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[1]]))


def _wrong_window() -> RepGGHom:
    return RepGGHom.via_g(RepHom(2, [[1, 1]]), window=3)  # really reads position 6


MUTATIONS = {
    "broken-table": ("Axioms", "Z/2 table with 1*1=1"),
    "non-hom-map": ("Thm-1.2", "Z/4 -> Z/4, x -> x+1"),
    "wrong-sandwich": ("Rees", "table built with P[1][1]=1 checked against P[1][1]=0 over Z/3"),
    "corrupted-composite": ("Thm-1.10", "h applied directly to the star product, no projection"),
    "non-unimodular": ("SNF", "U=[[2]] for A=[[1]], D=[[2]]"),
    "wrong-window": ("Thm-2.4", "h∘g for a window-2 map declared with window 3"),
}


def run_mutation(name: str) -> ClaimReport:
    """Run the single check that the named corrupted fixture should falsify."""
    if name == "broken-table":
        return check_axioms([_broken_table()])
    if name == "non-hom-map":
        return check_thm_1_2([_non_hom_map()])
    if name == "wrong-sandwich":
        spec, table = _wrong_sandwich()
        return check_rees([spec], [table])
    if name == "corrupted-composite":
        h, comp = _corrupted_composite()
        return check_thm_1_10(h, 30, composite=comp)
    if name == "non-unimodular":
        return check_snf([_non_unimodular()])
    if name == "wrong-window":
        return check_thm_2_4(_wrong_window())
    raise KeyError(f"unknown mutation {name!r}; known: {', '.join(MUTATIONS)}")


def run_all(seed: int = DEFAULT_SEED, bounds: int = DEFAULT_BOUND, *, inject: Sequence[str] = (),
            rephoms: int = 20, rees_count: int = 20, samples: int = 200) -> list[ClaimReport]:
    """Every claim over the fixture corpus, in ``CLAIM_ORDER``; ``inject`` adds corrupted fixtures."""
    for name in inject:
        if name not in MUTATIONS:
            raise KeyError(f"unknown mutation {name!r}; known: {', '.join(MUTATIONS)}")
    if bounds <= 0:
        return [_skipped(c, "bounds is 0", {"seed": seed, "bounds": bounds}) for c in CLAIM_ORDER]

    rng = random.Random(seed)
    groups = fixture_groups()
    specs = rees_corpus(seed, rees_count)
    reps = [random_rephom(rng) for _ in range(rephoms)]
    by_claim: dict[str, ClaimReport] = {}

    tables = [(n, list(G.names), [list(r) for r in G.table]) for n, G in groups]
    tables += [(f"rees-{k}", list(G.names), [list(r) for r in G.table])
               for k, G in enumerate(rees_build(s) for s in specs)]
    if "broken-table" in inject:
        tables.append(_broken_table())
    by_claim["Axioms"] = check_axioms(tables)

    rees_tables = [rees_build(s) for s in specs]
    if "wrong-sandwich" in inject:
        spec, table = _wrong_sandwich()
        specs, rees_tables = specs + [spec], rees_tables + [table]
    by_claim["Rees"] = check_rees(specs, rees_tables)

    small = [G for _, G in groups if G.order <= 4] + [G for G in rees_tables if G.order <= 6]
    homs = []
    for G in small[:8]:
        for H in small[:8]:
            homs.extend(enumerate_homs(G, H, cap=50))
    if "non-hom-map" in inject:
        homs.append(_non_hom_map())
    by_claim["Thm-1.2"] = check_thm_1_2(homs)

    by_claim["Def-1.3"] = check_def_1_3(samples * 5, seed)
    by_claim["Ex-1.4"] = check_ex_1_4(samples * 5, seed)
    by_claim["Rem-1.5"] = check_rem_1_5(samples * 5, seed)
    by_claim["Def-1.6"] = check_def_1_6(reps, bounds)

    def first_bad(reports):
        reports = list(reports)
        return next((r for r in reports if r.status == FALSIFIED), reports[0])

    prop7, prop8 = [], []
    for k, (name, G) in enumerate(groups + [(f"rees-{j}", T) for j, T in enumerate(rees_tables[:5])]):
        kw = {"bound": bounds, "seed": seed * 1000 + k, "probes": 3, "samples": 20}
        prop7.append(check_prop_1_7(G, range(G.order), **kw))
        for x in range(min(G.order, 2)):
            prop7.append(check_prop_1_7(G, subgroup_closure(G, [x, G.order - 1]), **kw))
        for a in sorted(idempotents(G))[:2]:
            prop8.append(check_prop_1_8(G, a, **kw))
    by_claim["Prop-1.7"], by_claim["Prop-1.8"] = first_bad(prop7), first_bad(prop8)

    by_claim["Ex-1.9"] = check_ex_1_9(bounds, seed=seed)

    t110 = [check_thm_1_10(h, bounds, seed=seed + k, samples=samples) for k, h in enumerate(reps)]
    if "corrupted-composite" in inject:
        h, comp = _corrupted_composite()
        t110.append(check_thm_1_10(h, bounds, seed=seed, composite=comp))
    by_claim["Thm-1.10"] = first_bad(t110)
    by_claim["Thm-1.11"] = first_bad(check_thm_1_11(h, bounds, seed=seed + k, samples=samples)
                                     for k, h in enumerate(reps))

    z4, z2 = cyclic_group(4), cyclic_group(2)
    surjections = [
        HomTable(z4, z4, tuple(range(4))),
        HomTable(z4, z2, (0, 1, 0, 1)),
        HomTable(direct_product(right_zero(2), z2), right_zero(2), (0, 0, 1, 1)),
        HomTable(symmetric_group_3(), z2, tuple(0 if _even(p) else 1 for p in symmetric_group_3().names)),
    ]
    by_claim["Thm-2.2"] = first_bad(check_thm_2_2(f, bound=bounds, seed=seed + k) for k, f in enumerate(surjections))

    factor_sets = [[right_zero(2), z2], [z2, cyclic_group(3)], [left_zero(2), z4, right_zero(2)],
                   [z2, z2, right_zero(2), trivial_group()]]
    by_claim["Thm-2.3"] = first_bad(check_thm_2_3(fs, bound=bounds, seed=seed + k) for k, fs in enumerate(factor_sets))

    t24 = [check_thm_2_4(RepGGHom.via_g(h), bound=bounds, seed=seed + k, samples=samples)
           for k, h in enumerate(reps[:10])]
    t24 += [check_thm_2_4(RepGGHom.via_f(h), bound=bounds, seed=seed + k, samples=samples)
            for k, h in enumerate(reps[10:])]
    if "wrong-window" in inject:
        t24.append(check_thm_2_4(_wrong_window(), bound=bounds, seed=seed))
    by_claim["Thm-2.4"] = first_bad(t24)

    mats = []
    for _ in range(50):
        r, c = rng.randint(0, 5), rng.randint(0, 5)
        mats.append((IntMatrix(r, c, tuple(rng.randint(-20, 20) for _ in range(r * c))), None))
    if "non-unimodular" in inject:
        mats.append(_non_unimodular())
    by_claim["SNF"] = check_snf(mats)
    by_claim["Slender-fg"] = check_slender_fg()

    reports = []
    for c in CLAIM_ORDER:
        r = by_claim[c]
        params = {**r.params, "seed": seed, "bounds": bounds}
        reports.append(ClaimReport(r.claim, r.status, r.witness, params, r.notes))
    return reports


def _even(perm_name: str) -> bool:
    p = [int(ch) for ch in perm_name]
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def report_document(reports: Sequence[ClaimReport], seed: int, bounds: int, inject: Sequence[str] = ()) -> dict:
    return {
        "seed": seed,
        "bounds": bounds,
        "inject": list(inject),
        "scope": "representable homomorphisms (finite coordinate window) only",
        "falsified": sum(r.status == FALSIFIED for r in reports),
        "claims": [r.to_dict() for r in reports],
    }
