"""Smith normal form over Z and slenderness of finitely generated abelian groups.

A finitely generated abelian group is slender exactly when it is free of
finite rank. Free groups being slender is the positive half; groups with
torsion are never slender (slender groups are torsion-free, see L. Fuchs,
*Infinite Abelian Groups*, 1970/73). The negative half is taken as that
classical fact and not proved here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError, ShapeMismatch, UnknownName

__all__ = [
    "IntMatrix",
    "SnfResult",
    "FgAbelian",
    "smith_normal_form",
    "snf_problems",
    "determinant",
    "classify",
    "is_slender_fg",
    "named_verdict",
    "NamedVerdict",
    "matrix_to_doc",
    "matrix_from_doc",
]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative dimension")
        ents = tuple(self.entries)
        if len(ents) != self.rows * self.cols:
            raise ShapeMismatch(f"{len(ents)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out, other.cols)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == D`` with U, V unimodular and D diagonal with d1 | d2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    n = M.rows
    a = M.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Diagonalize A by unimodular row and column operations.

    Pivot on the smallest nonzero entry in the active block, clear its row and
    column by division with remainder, and when a later entry is not divisible
    by the pivot add that row to the pivot row and repeat.
    """
    m, n = A.rows, A.cols
    M = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def row_op(dst, src, q):  # row dst -= q * row src
        M[dst] = [x - q * y for x, y in zip(M[dst], M[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def col_op(dst, src, q):  # col dst -= q * col src
        for r in M:
            r[dst] -= q * r[src]
        for r in V:
            r[dst] -= q * r[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            if pi != t:
                M[t], M[pi] = M[pi], M[t]
                U[t], U[pi] = U[pi], U[t]
            if pj != t:
                for r in M:
                    r[t], r[pj] = r[pj], r[t]
                for r in V:
                    r[t], r[pj] = r[pj], r[t]
            p = M[t][t]
            for i in range(t + 1, m):
                if M[i][t]:
                    row_op(i, t, M[i][t] // p)
            for j in range(t + 1, n):
                if M[t][j]:
                    col_op(j, t, M[t][j] // p)
            if any(M[i][t] for i in range(t + 1, m)) or any(M[t][j] for j in range(t + 1, n)):
                continue
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p), None
            )
            if offender is None:
                break
            row_op(t, offender, -1)
        if t < m and M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]

    return SnfResult(
        IntMatrix.from_rows(U, m),
        IntMatrix.from_rows(M, n),
        IntMatrix.from_rows(V, n),
    )


def snf_problems(A: IntMatrix, result: SnfResult) -> list[str]:
    """Independent certificate check; an empty list means the decomposition is valid."""
    U, D, V = result.U, result.D, result.V
    problems = []
    if (U.rows, U.cols) != (A.rows, A.rows) or (V.rows, V.cols) != (A.cols, A.cols):
        return [f"U must be {A.rows}x{A.rows} and V {A.cols}x{A.cols}"]
    if (D.rows, D.cols) != (A.rows, A.cols):
        return [f"D must be {A.rows}x{A.cols}"]
    if U @ A @ V != D:
        problems.append("U*A*V != D")
    off = [(i, j) for i in range(D.rows) for j in range(D.cols) if i != j and D[i, j]]
    if off:
        problems.append(f"D has off-diagonal entry at {off[0]}")
    diag = D.diagonal()
    if any(d < 0 for d in diag):
        problems.append("negative diagonal entry")
    for k in range(len(diag) - 1):
        a, b = diag[k], diag[k + 1]
        if (a == 0 and b != 0) or (a != 0 and b % a):
            problems.append(f"divisibility fails: d{k + 1}={a} does not divide d{k + 2}={b}")
            break
    for label, M in (("U", U), ("V", V)):
        d = determinant(M)
        if abs(d) != 1:
            problems.append(f"det({label})={d}")
    return problems


@dataclass(frozen=True)
class FgAbelian:
    """Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di >= 2."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        tors = tuple(self.torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in tors):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise ValueError(f"invariant factors {tors} do not form a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"


def classify(relations: IntMatrix, generators: int) -> FgAbelian:
    """The group Z^generators / (row space of ``relations``)."""
    if relations.cols != generators:
        raise ShapeMismatch(f"relations have {relations.cols} columns for {generators} generators")
    diag = smith_normal_form(relations).D.diagonal()
    nonzero = [d for d in diag if d]
    return FgAbelian(generators - len(nonzero), tuple(d for d in nonzero if d > 1))


def is_slender_fg(g: FgAbelian) -> bool:
    return not g.torsion


@dataclass(frozen=True)
class NamedVerdict:
    name: str
    slender: bool
    citation: str

    @property
    def verdict(self) -> str:
        return "slender" if self.slender else "not slender"


_FUCHS = "L. Fuchs, Infinite Abelian Groups (1970)"

_NAMED = {
    "Q": (False, f"divisible groups are not slender; {_FUCHS}"),
    "J_p": (False, f"the p-adic integers are not slender; {_FUCHS}"),
    "prod_Z": (False, "the identity of the full product of Z is nonzero on every basis vector"),
    "Z^n": (True, f"free abelian groups are slender; {_FUCHS}"),
    "free_abelian": (True, f"free abelian groups are slender; {_FUCHS}"),
}


def named_verdict(name: str) -> NamedVerdict:
    try:
        slender, cite = _NAMED[name]
    except KeyError:
        raise UnknownName(f"unknown group {name!r}; known: {', '.join(_NAMED)}") from None
    return NamedVerdict(name, slender, cite)


def matrix_to_doc(M: IntMatrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "entries": list(M.entries)}


def matrix_from_doc(doc) -> IntMatrix:
    if not isinstance(doc, dict) or not {"rows", "cols", "entries"} <= set(doc):
        raise ParseError("matrix document needs 'rows', 'cols' and 'entries'")
    rows, cols, ents = doc["rows"], doc["cols"], doc["entries"]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in [rows, cols, *ents]):
        raise ParseError("matrix document fields must be integers")
    return IntMatrix(rows, cols, tuple(ents))
