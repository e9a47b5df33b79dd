"""Finitely supported integer sequences under two operations.

The same carrier models the direct product of countably many copies of Z
(coordinatewise ``add``) and the generalized group whose operation ``star``
takes the left coordinate at positions 1 (mod 3), the right coordinate at
positions 2 (mod 3) and the sum at positions 0 (mod 3).

Only finitely supported sequences are representable. The set is closed under
every operation here, and all identities involved are coordinatewise, so
they can be checked exactly on this fragment. Positions are 1-based.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from typing import Iterator

from .errors import InvalidIndex, ParseError

__all__ = [
    "FinSeq",
    "ZERO",
    "basis",
    "add",
    "neg",
    "star",
    "e_g",
    "inv_g",
    "map_f",
    "map_g",
    "is_idempotent_g",
    "truncate",
    "parse_seq",
    "evaluate",
]


class FinSeq(Mapping):
    """Immutable sparse sequence ``{position: value}`` with no stored zeros."""

    __slots__ = ("_items", "_hash")

    def __init__(self, coords=None):
        items = {}
        source = coords.items() if isinstance(coords, Mapping) else (coords or ())
        for k, v in source:
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise InvalidIndex(f"sequence positions are integers >= 1, got {k!r}")
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"coordinate values must be integers, got {v!r}")
            items[k] = items.get(k, 0) + v
        self._items = tuple(sorted((k, v) for k, v in items.items() if v != 0))
        self._hash = None

    @classmethod
    def _raw(cls, items: dict) -> "FinSeq":
        obj = cls.__new__(cls)
        obj._items = tuple(sorted((k, v) for k, v in items.items() if v != 0))
        obj._hash = None
        return obj

    def __getitem__(self, k):
        for key, v in self._items:
            if key == k:
                return v
        raise KeyError(k)

    def get(self, k, default=0):
        return dict(self._items).get(k, default)

    def __iter__(self) -> Iterator[int]:
        return (k for k, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, FinSeq):
            return self._items == other._items
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __str__(self):
        return "{" + ",".join(f"{k}:{v}" for k, v in self._items) + "}"

    def __repr__(self):
        return f"FinSeq({str(self)})"

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self._items)

    @property
    def max_index(self) -> int:
        return self._items[-1][0] if self._items else 0

    def dense(self, length: int | None = None) -> list[int]:
        n = self.max_index if length is None else length
        d = dict(self._items)
        return [d.get(k, 0) for k in range(1, n + 1)]


ZERO = FinSeq()


def basis(n: int) -> FinSeq:
    """i_n: 1 at position n, 0 elsewhere."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidIndex(f"basis index must be >= 1, got {n!r}")
    return FinSeq._raw({n: 1})


def add(x: FinSeq, y: FinSeq) -> FinSeq:
    out = dict(x._items)
    for k, v in y._items:
        out[k] = out.get(k, 0) + v
    return FinSeq._raw(out)


def neg(x: FinSeq) -> FinSeq:
    return FinSeq._raw({k: -v for k, v in x._items})


def star(x: FinSeq, y: FinSeq) -> FinSeq:
    out = {k: v for k, v in x._items if k % 3 != 2}
    for k, v in y._items:
        r = k % 3
        if r == 2:
            out[k] = v
        elif r == 0:
            out[k] = out.get(k, 0) + v
    return FinSeq._raw(out)


def e_g(x: FinSeq) -> FinSeq:
    """Local identity in the star product: zero the positions divisible by 3."""
    return FinSeq._raw({k: v for k, v in x._items if k % 3})


def inv_g(x: FinSeq) -> FinSeq:
    return FinSeq._raw({k: (v if k % 3 else -v) for k, v in x._items})


def map_f(x: FinSeq) -> FinSeq:
    """Keep positions divisible by 3 (additive product -> star product)."""
    return FinSeq._raw({k: v for k, v in x._items if k % 3 == 0})


def map_g(x: FinSeq) -> FinSeq:
    """Position k of the output is position 3k of the input (star product -> additive)."""
    return FinSeq._raw({k // 3: v for k, v in x._items if k % 3 == 0})


def is_idempotent_g(x: FinSeq) -> bool:
    return all(k % 3 for k, _ in x._items)


def truncate(x: FinSeq, window: int) -> FinSeq:
    return FinSeq._raw({k: v for k, v in x._items if k <= window})


_SPARSE = re.compile(r"^\{\s*(.*?)\s*\}$", re.S)


def parse_seq(text: str) -> FinSeq:
    """Parse ``"{3:3, 6:6}"`` or dense ``"[0,0,3,0,0,6]"`` (1-based, trailing zeros implied)."""
    s = text.strip()
    m = _SPARSE.match(s)
    if m:
        body = m.group(1)
        if not body:
            return ZERO
        pairs = {}
        for part in body.split(","):
            try:
                k, v = part.split(":")
                k, v = int(k), int(v)
            except ValueError:
                raise ParseError(f"bad sparse entry {part.strip()!r}") from None
            if k < 1:
                raise ParseError(f"position {k} must be >= 1")
            if k in pairs:
                raise ParseError(f"position {k} listed twice")
            pairs[k] = v
        return FinSeq._raw(pairs)
    if s.startswith("[") and s.endswith("]"):
        body = s[1:-1].strip()
        if not body:
            return ZERO
        try:
            vals = [int(v) for v in body.split(",")]
        except ValueError:
            raise ParseError(f"bad dense sequence {s!r}") from None
        return FinSeq._raw({k: v for k, v in enumerate(vals, start=1)})
    raise ParseError(f"not a sequence literal: {text!r}")


# star-eval expression language: binary operators share one precedence level
# and associate to the left; only parentheses group.

_TOKEN = re.compile(
    r"\s*(?:(?P<sparse>\{[^}]*\})|(?P<dense>\[[^\]]*\])|(?P<int>-?\d+)|(?P<name>[A-Za-z_]+)"
    r"|(?P<op>[*+⋆])|(?P<lpar>\()|(?P<rpar>\)))"
)

_UNARY = {"e": e_g, "inv": inv_g, "f": map_f, "g": map_g}


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at column {pos + 1}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.k = 0

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None)

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'}")
        self.k += 1
        return tok[1]

    def expr(self) -> FinSeq:
        acc = self.atom()
        while self.peek()[0] == "op":
            op = self.take("op")
            rhs = self.atom()
            acc = add(acc, rhs) if op == "+" else star(acc, rhs)
        return acc

    def atom(self) -> FinSeq:
        kind, val = self.peek()
        if kind in ("sparse", "dense"):
            self.k += 1
            return parse_seq(val)
        if kind == "lpar":
            self.k += 1
            inner = self.expr()
            self.take("rpar")
            return inner
        if kind == "name":
            self.k += 1
            self.take("lpar")
            if val == "i":
                n = int(self.take("int"))
                self.take("rpar")
                try:
                    return basis(n)
                except InvalidIndex as exc:
                    raise ParseError(str(exc)) from None
            if val not in _UNARY:
                raise ParseError(f"unknown function {val!r}")
            arg = self.expr()
            self.take("rpar")
            return _UNARY[val](arg)
        raise ParseError(f"unexpected {val or 'end of input'}")


def evaluate(text: str) -> FinSeq:
    """Evaluate a star-eval expression such as ``"g(f([1,2,3,4,5,6]))"``."""
    p = _Parser(_tokenize(text))
    value = p.expr()
    if p.k != len(p.tokens):
        raise ParseError(f"trailing input: {p.peek()[1]!r}")
    return value
