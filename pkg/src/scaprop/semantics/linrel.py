"""Linear relations over Q.

A relation ``n -> m`` is a subspace of ``Q^(n+m)``; the first ``n``
coordinates are the input side.  Composition is relational composition and
the tensor product is the direct sum.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from ..errors import DimensionMismatch, ParseError
from ..linalg import (QQ, Field, Subspace, concat, format_matrix, image_basis,
                      kernel_basis, parse_matrix, stack, subspace_equal)
from .backends import Backend


@dataclass(frozen=True)
class LinearRelation:
    n: int
    m: int
    space: Subspace

    def __post_init__(self):
        if self.space.dim != self.n + self.m:
            raise DimensionMismatch(
                f"relation {self.n}->{self.m} needs a subspace of dimension {self.n + self.m}")

    @property
    def field(self) -> Field:
        return self.space.field

    @classmethod
    def spanned_by(cls, n: int, m: int, vectors: Sequence[Sequence],
                   field: Field = QQ) -> "LinearRelation":
        return cls(n, m, Subspace.span(vectors, n + m, field))

    def contains(self, x: Sequence, y: Sequence) -> bool:
        return self.space.contains(list(x) + list(y))

    def converse(self) -> "LinearRelation":
        vecs = [b[self.n:] + b[:self.n] for b in self.space.basis]
        return LinearRelation.spanned_by(self.m, self.n, vecs, self.field)

    def __str__(self):
        return f"{self.n}->{self.m}:" + format_matrix(
            [list(b) for b in self.space.basis], (len(self.space.basis), self.n + self.m))


def graph(a: Sequence[Sequence], cols: int | None = None, field: Field = QQ) -> LinearRelation:
    """``{(x, Ax)}`` for an ``m x n`` matrix ``A``."""
    a = [list(r) for r in a]
    m = len(a)
    n = len(a[0]) if a else (cols or 0)
    vecs = [[int(i == j) for i in range(n)] + [a[r][j] for r in range(m)] for j in range(n)]
    return LinearRelation.spanned_by(n, m, vecs, field)


def relation_from_span(a: Sequence[Sequence], b: Sequence[Sequence],
                       cols: int | None = None) -> LinearRelation:
    """Image of the stacked matrix ``(A; B)``: ``{(Az, Bz)}``."""
    a, b = [list(r) for r in a], [list(r) for r in b]
    ca = len(a[0]) if a else cols
    cb = len(b[0]) if b else cols
    if ca is not None and cb is not None and ca != cb:
        raise DimensionMismatch(f"span legs have {ca} and {cb} columns")
    n, m = len(a), len(b)
    space = image_basis(stack(a, b), QQ, rows=n + m)
    return LinearRelation(n, m, space)


def relation_from_cospan(c: Sequence[Sequence], d: Sequence[Sequence],
                         cols: tuple[int, int] | None = None) -> LinearRelation:
    """Kernel of ``(C | -D)``: ``{(x, y) : Cx = Dy}``.

    ``cols`` gives ``(n, m)`` when the matrices have no rows.
    """
    c, d = [list(r) for r in c], [list(r) for r in d]
    if len(c) != len(d):
        raise DimensionMismatch(f"cospan legs have {len(c)} and {len(d)} rows")
    n = len(c[0]) if c else cols[0]
    m = len(d[0]) if d else cols[1]
    space = kernel_basis(concat(c, [[-x for x in r] for r in d]), QQ, cols=n + m)
    return LinearRelation(n, m, space)


def span_cospan_condition(a, b, c, d) -> bool:
    """``Im(C; D) == Ker(A | -B)``, the condition for the span of ``C, D``
    and the cospan of ``A, B`` to be the same relation."""
    a, b, c, d = ([list(r) for r in x] for x in (a, b, c, d))
    if len(a) != len(b):
        raise DimensionMismatch("A and B need the same number of rows")
    if c and d and len(c[0]) != len(d[0]):
        raise DimensionMismatch("C and D need the same number of columns")
    n, m = len(c), len(d)
    if a and len(a[0]) != n or b and len(b[0]) != m:
        raise DimensionMismatch("A must have as many columns as C has rows (same for B, D)")
    image = image_basis(stack(c, d), QQ, rows=n + m)
    kernel = kernel_basis(concat(a, [[-x for x in r] for r in b]), QQ, cols=n + m)
    return subspace_equal(image, kernel)


class LinRelBackend(Backend):
    name = "linrel"

    def __init__(self, field: Field = QQ):
        self.field = field

    def compose(self, f, g):
        self._check_composable(f, g)
        n, k, m = f.n, f.m, g.m
        fb, gb = f.space.basis, g.space.basis
        # (a, b) with sum a_i y_i = sum b_j y'_j
        constraint = [[r[n + t] for r in fb] + [-s[t] for s in gb] for t in range(k)]
        coeffs = kernel_basis(constraint, self.field, cols=len(fb) + len(gb))
        vecs = []
        for c in coeffs.basis:
            a, b = c[:len(fb)], c[len(fb):]
            x = [sum((a[i] * fb[i][p] for i in range(len(fb))), 0) for p in range(n)]
            z = [sum((b[j] * gb[j][k + q] for j in range(len(gb))), 0) for q in range(m)]
            vecs.append(x + z)
        return LinearRelation.spanned_by(n, m, vecs, self.field)

    def tensor(self, f, g):
        vecs = []
        for r in f.space.basis:
            vecs.append(list(r[:f.n]) + [0] * g.n + list(r[f.n:]) + [0] * g.m)
        for r in g.space.basis:
            vecs.append([0] * f.n + list(r[:g.n]) + [0] * f.m + list(r[g.n:]))
        return LinearRelation.spanned_by(f.n + g.n, f.m + g.m, vecs, self.field)

    def permutation(self, perm):
        n = perm.n
        vecs = [[int(i == j) for j in range(n)] + [int(perm.images[i] == j) for j in range(n)]
                for i in range(n)]
        return LinearRelation.spanned_by(n, n, vecs, self.field)

    def permute_inputs(self, perm, v):
        # new coordinate i reads old input coordinate images[i]
        vecs = [[r[x] for x in perm.images] + list(r[v.n:]) for r in v.space.basis]
        return LinearRelation.spanned_by(v.n, v.m, vecs, self.field)

    def permute_outputs(self, v, perm):
        inv = perm.inverse().images
        vecs = [list(r[:v.n]) + [r[v.n + inv[k]] for k in range(v.m)] for r in v.space.basis]
        return LinearRelation.spanned_by(v.n, v.m, vecs, self.field)

    def arity(self, v):
        return v.n, v.m

    def equal(self, f, g):
        return (f.n, f.m) == (g.n, g.m) and f.space == g.space

    def coerce(self, v):
        if isinstance(v, LinearRelation):
            return v
        n, m, vecs = v
        return LinearRelation.spanned_by(n, m, vecs, self.field)

    def format(self, v):
        return str(v)

    def parse(self, text):
        mt = re.fullmatch(r"\s*(\d+)\s*->\s*(\d+)\s*:(.*)", text, re.S)
        if not mt:
            raise ParseError(f"relation literal must look like 1->1:1,1, got {text!r}")
        n, m = int(mt.group(1)), int(mt.group(2))
        body = mt.group(3).strip()
        rows, shape = parse_matrix(body) if body else ([], (0, n + m))
        if rows and shape[1] != n + m:
            raise ParseError(f"relation {n}->{m} needs vectors of length {n + m}")
        return LinearRelation.spanned_by(n, m, rows, self.field)


__all__ = ["LinearRelation", "LinRelBackend", "graph", "relation_from_span",
           "relation_from_cospan", "span_cospan_condition"]
