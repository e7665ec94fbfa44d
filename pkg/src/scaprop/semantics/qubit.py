"""Qubit-side constructions: the ZW column collapse, cups and caps, and
forward/backward matrix arrows.

Cups and caps use the copy spider and its transpose (``bunit ; bcomon`` and
``bmon ; bcounit``), so they are available in any language declaring those
four generators: the interacting Hopf language and the extended ZX
bialgebra.
"""
from __future__ import annotations

from ..core import Diagram, Gen, Id, Par, Seq, Sym, ones, par, permute_cables, seq_nontrivial


def zw_canonicalize(a) -> list[list[int]]:
    """Replace every column containing a 2 by a column of 2s."""
    rows = [[int(x) for x in r] for r in (a.tolist() if hasattr(a, "tolist") else a)]
    if any(x not in (0, 1, 2) for r in rows for x in r):
        raise ValueError("ZW arrows take entries in {0, 1, 2}")
    cols = len(rows[0]) if rows else 0
    full = [any(r[j] == 2 for r in rows) for j in range(cols)]
    return [[2 if full[j] else r[j] for j in range(cols)] for r in rows]


def cup() -> Diagram:
    return Seq(Gen("bunit", ones(0), ones(1)), Gen("bcomon", ones(1), ones(2)))


def cap() -> Diagram:
    return Seq(Gen("bmon", ones(2), ones(1)), Gen("bcounit", ones(1), ones(0)))


def cup_cap_zx() -> tuple[Diagram, Diagram]:
    return cup(), cap()


def cups(n: int) -> Diagram:
    """``0 -> 2n`` pairing wire ``i`` with wire ``n + i``."""
    images = []
    for i in range(n):
        images += [i, n + i]
    return seq_nontrivial(par(*[cup()] * n), permute_cables(ones(2 * n), images))


def caps(m: int) -> Diagram:
    """``2m -> 0`` pairing wire ``i`` with wire ``m + i``."""
    images = [2 * i for i in range(m)] + [2 * i + 1 for i in range(m)]
    return seq_nontrivial(permute_cables(ones(2 * m), images), par(*[cap()] * m))


def _shape(a) -> tuple[int, int]:
    if hasattr(a, "shape"):
        return tuple(a.shape)
    rows = list(a)
    return len(rows), len(rows[0]) if rows else 0


def forward_arrow(a, shape: tuple[int, int] | None = None) -> Diagram:
    from ..boxes import matrix_to_diagram
    return matrix_to_diagram(a, shape=shape)


TRANSPOSES = {"bcomon": "bmon", "bmon": "bcomon", "bcounit": "bunit", "bunit": "bcounit"}


def bend(g: Diagram) -> Diagram:
    """``g : p -> q`` bent into ``q -> p`` with a cup and a cap."""
    p, q = len(g.dom), len(g.cod)
    return seq_nontrivial(Par(Id(ones(q)), cups(p)), Par(Par(Id(ones(q)), g), Id(ones(p))),
                          Par(caps(q), Id(ones(p))))


def transpose_diagram(d: Diagram, transposes: dict[str, str] | None = None) -> Diagram:
    """The mirror image of ``d`` with every generator transposed.

    Generators listed in ``transposes`` are swapped for their partner; all
    others are bent locally, which keeps intermediate values as small as
    the diagram itself.
    """
    table = TRANSPOSES if transposes is None else transposes
    if isinstance(d, Seq):
        return Seq(transpose_diagram(d.second, table), transpose_diagram(d.first, table))
    if isinstance(d, Par):
        return Par(transpose_diagram(d.left, table), transpose_diagram(d.right, table))
    if isinstance(d, Id):
        return d
    if isinstance(d, Sym):
        return Sym(d.right, d.left)
    if isinstance(d, Gen):
        if d.name in table:
            return Gen(table[d.name], d.cod, d.dom, d.params)
        return bend(d)
    raise TypeError(f"cannot transpose {type(d).__name__}")


def backward_arrow(a, shape: tuple[int, int] | None = None) -> Diagram:
    """The matrix arrow of ``A`` (``m x n``) read backwards, ``m -> n``:
    its value is the transpose of the forward arrow's."""
    m, n = shape or _shape(a)
    return transpose_diagram(forward_arrow(a, (m, n)))


def backward_arrow_global(a, shape: tuple[int, int] | None = None) -> Diagram:
    """Same value as :func:`backward_arrow`, bent with one row of cups and
    one row of caps around the whole forward arrow."""
    m, n = shape or _shape(a)
    fwd = forward_arrow(a, (m, n))
    idn, idm = Id(ones(n)), Id(ones(m))
    return seq_nontrivial(Par(cups(n), idm), Par(Par(idn, fwd), idm), Par(idn, caps(m)))
