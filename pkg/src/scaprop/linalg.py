"""Exact linear algebra over Q (``fractions.Fraction``) and F2.

Matrices are plain lists of rows.  Subspaces are stored by their reduced
row-echelon basis, which is unique, so subspace equality is a comparison of
tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, ParseError


class Field:
    name = ""

    def coerce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError


class Rationals(Field):
    name = "Q"

    def coerce(self, x):
        return Fraction(x)

    def inv(self, x):
        return 1 / x


class GF2(Field):
    name = "F2"

    def coerce(self, x):
        x = Fraction(x)
        if x.denominator % 2 == 0:
            raise ValueError(f"{x} has no image in F2")
        return int(x.numerator * x.denominator) % 2

    def inv(self, x):
        if x % 2 == 0:
            raise ZeroDivisionError("0 has no inverse in F2")
        return 1

    @staticmethod
    def reduce(x):
        return x % 2


QQ = Rationals()
F2 = GF2()


def _coerce_matrix(m: Sequence[Sequence], field: Field) -> list[list]:
    rows = [[field.coerce(x) for x in row] for row in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows


def rref(m: Sequence[Sequence], field: Field = QQ, cols: int | None = None):
    """Reduced row-echelon form.

    Returns ``(R, pivots, rank)``; ``R`` keeps the row count of ``m``.  Pass
    ``cols`` when ``m`` may have no rows.
    """
    rows = _coerce_matrix(m, field)
    ncols = len(rows[0]) if rows else (cols or 0)
    mod2 = field is F2
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        if mod2:
            rows[r] = [x % 2 for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                if mod2:
                    rows[i] = [x % 2 for x in rows[i]]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, tuple(pivots), len(pivots)


def rank(m: Sequence[Sequence], field: Field = QQ) -> int:
    return rref(m, field)[2]


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^dim`` in canonical RREF basis form."""

    dim: int
    basis: tuple[tuple, ...]
    field: Field = QQ

    @classmethod
    def span(cls, vectors: Sequence[Sequence], dim: int, field: Field = QQ) -> "Subspace":
        vectors = [list(v) for v in vectors]
        if any(len(v) != dim for v in vectors):
            raise DimensionMismatch(f"vectors do not live in dimension {dim}")
        r, _, k = rref(vectors, field, cols=dim)
        return cls(dim, tuple(tuple(row) for row in r[:k]), field)

    @classmethod
    def whole(cls, dim: int, field: Field = QQ) -> "Subspace":
        return cls.span([[int(i == j) for j in range(dim)] for i in range(dim)], dim, field)

    @classmethod
    def zero(cls, dim: int, field: Field = QQ) -> "Subspace":
        return cls(dim, (), field)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.dim, self.basis, self.field.name) == \
            (other.dim, other.basis, other.field.name)

    def __hash__(self):
        return hash((self.dim, self.basis, self.field.name))

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.dim:
            raise DimensionMismatch("vector dimension differs from the subspace")
        return rank(list(self.basis) + [list(v)], self.field) == self.rank

    def annihilator(self) -> "Subspace":
        """Vectors ``c`` with ``c . v = 0`` for every ``v`` in the subspace."""
        return kernel_basis(self.basis, self.field, cols=self.dim)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[list(map(str, b)) for b in self.basis]})"


def kernel_basis(m: Sequence[Sequence], field: Field = QQ, cols: int | None = None) -> Subspace:
    """Null space ``{x : m x = 0}``."""
    r, pivots, k = rref(m, field, cols)
    n = len(r[0]) if r else (cols or 0)
    free = [c for c in range(n) if c not in pivots]
    vectors = []
    for f in free:
        v = [field.coerce(0)] * n
        v[f] = field.coerce(1)
        for row, p in zip(r, pivots):
            v[p] = -row[f] if field is not F2 else row[f] % 2
        vectors.append(v)
    return Subspace.span(vectors, n, field)


def image_basis(m: Sequence[Sequence], field: Field = QQ, rows: int | None = None) -> Subspace:
    """Column space of ``m``."""
    m = [list(r) for r in m]
    nrows = len(m) if m else (rows or 0)
    ncols = len(m[0]) if m else 0
    columns = [[m[i][j] for i in range(nrows)] for j in range(ncols)]
    return Subspace.span(columns, nrows, field)


def subspace_equal(u: Subspace, v: Subspace) -> bool:
    if u.dim != v.dim:
        raise DimensionMismatch(f"ambient dimensions {u.dim} and {v.dim} differ")
    return u == v


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.dim != v.dim:
        raise DimensionMismatch(f"ambient dimensions {u.dim} and {v.dim} differ")
    return Subspace.span(list(u.basis) + list(v.basis), u.dim, u.field)


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    if u.dim != v.dim:
        raise DimensionMismatch(f"ambient dimensions {u.dim} and {v.dim} differ")
    constraints = list(u.annihilator().basis) + list(v.annihilator().basis)
    return kernel_basis(constraints, u.field, cols=u.dim)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], inner: int | None = None) -> list[list]:
    n = len(b[0]) if b else 0
    k = len(b) if b else (inner or 0)
    return [[sum((row[t] * b[t][j] for t in range(k)), 0) for j in range(n)] for row in a]


def stack(top: Sequence[Sequence], bottom: Sequence[Sequence], cols: int | None = None) -> list[list]:
    """Vertical concatenation ``(top; bottom)``."""
    widths = {len(r) for r in list(top) + list(bottom)}
    if len(widths) > 1:
        raise DimensionMismatch("stacked matrices need equal column counts")
    return [list(r) for r in top] + [list(r) for r in bottom]


def concat(left: Sequence[Sequence], right: Sequence[Sequence]) -> list[list]:
    """Horizontal concatenation ``(left | right)``."""
    if len(left) != len(right):
        raise DimensionMismatch("concatenated matrices need equal row counts")
    return [list(a) + list(b) for a, b in zip(left, right)]


# ---------------------------------------------------------------------------
# Matrix literals: rows separated by ';', entries by ',', rationals as p/q.
# An optional "RxC:" prefix gives the shape explicitly (needed when a
# dimension is zero).


def _parse_entry(tok: str):
    tok = tok.strip()
    if not tok:
        raise ParseError("empty matrix entry")
    try:
        value = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {tok!r}") from None
    return int(value) if value.denominator == 1 else value


def parse_matrix(text: str) -> tuple[list[list], tuple[int, int]]:
    """Parse a matrix literal; returns ``(rows, (nrows, ncols))``."""
    text = text.strip()
    shape = None
    if ":" in text:
        head, text = text.split(":", 1)
        try:
            r, c = (int(x) for x in head.lower().split("x"))
        except ValueError:
            raise ParseError(f"bad shape prefix {head!r}") from None
        shape = (r, c)
    text = text.strip()
    rows = [] if not text else [[_parse_entry(e) for e in row.split(",")]
                                for row in text.split(";")]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged matrix literal")
    found = (len(rows), len(rows[0]) if rows else 0)
    if shape is None:
        shape = found
    elif rows and shape != found:
        raise ParseError(f"shape prefix {shape} disagrees with entries {found}")
    elif not rows and shape[0] * shape[1] != 0:
        raise ParseError(f"missing entries for shape {shape}")
    if not rows:
        rows = [[] for _ in range(shape[0])] if shape[1] == 0 else []
    return rows, shape


def format_entry(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_matrix(rows: Sequence[Sequence], shape: tuple[int, int] | None = None,
                  fmt=format_entry) -> str:
    nrows = len(rows)
    ncols = len(rows[0]) if rows else (shape[1] if shape else 0)
    body = ";".join(",".join(fmt(x) for x in row) for row in rows)
    if nrows == 0 or ncols == 0:
        return f"{nrows if rows else (shape[0] if shape else 0)}x{ncols}:"
    return body
