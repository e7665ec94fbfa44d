"""Boxes over a semantic prop, and their translation to scalable terms.

A box holds one value ``f : n -> m`` of a backend and is typed
``<n> -> <m>`` (one cable on each side).  Box terms are decided by
evaluation (:func:`unwrap`); :func:`boxed_normal_form` reframes the value
as a single box, and :func:`unbox` replaces it by a base term built from
the value (matrix arrows, function arrows, permutation networks).
"""
from __future__ import annotations

from typing import Callable, Iterator, Sequence

from .core import (Box, Diagram, Equation, Gen, Id, Par, Seq, Sym, cable, ones,
                   op_diagram, par, permute_cables, seq_nontrivial)
from .errors import (BackendError, BackendMismatch, BadArity, BoundaryMismatch,
                     NegativeEntry)
from .semantics.backends import Backend, FinFunction, backend_of, get_backend
from .semantics.evaluate import backend_interpretation, evaluate
from .wires import Permutation, gather_obj, permutation_diagram, regroup, split_obj


def box(f, backend: Backend | str | None = None) -> Box:
    """The box ``<n> -> <m>`` holding ``f``."""
    try:
        b = get_backend(backend) if isinstance(backend, str) else backend or backend_of(f)
        f = b.coerce(f)
        n, m = b.arity(f)
    except BackendError as exc:
        raise BadArity(f"cannot box {f!r}: {exc}") from None
    return Box(b.name, f, cable(n), cable(m))


def box_on_wires(f, backend: Backend | str | None = None) -> Diagram:
    """The box of ``f`` framed to simple wires: ``n`` wires to ``m`` wires."""
    bx = box(f, backend)
    n, m = bx.dom.global_size, bx.cod.global_size
    return seq_nontrivial(regroup(ones(n), bx.dom), bx, regroup(bx.cod, ones(m)))


def box_backend(d: Diagram, default: Backend | str | None = None) -> Backend:
    names = {node.backend for node in d.nodes() if isinstance(node, Box)}
    if len(names) > 1:
        raise BackendMismatch(f"boxes over several backends: {sorted(names)}")
    if names:
        return get_backend(names.pop())
    if default is None:
        raise BackendError("a term without boxes needs an explicit backend")
    return get_backend(default) if isinstance(default, str) else default


def unwrap(d: Diagram, backend: Backend | str | None = None):
    """Evaluate a box term in its backend: boxes give their value, wires
    act on strands."""
    b = box_backend(d, backend)
    return evaluate(d, backend_interpretation(b))


def boxed_normal_form(d: Diagram, backend: Backend | str | None = None) -> Diagram:
    """``regroup(dom, <N>) ; box(unwrap d) ; regroup(<M>, cod)``."""
    b = box_backend(d, backend)
    bx = box(unwrap(d, b), b)
    return seq_nontrivial(regroup(d.dom, bx.dom), bx, regroup(bx.cod, d.cod))


def unbox(d: Diagram, value_to_diagram: Callable, backend: Backend | str | None = None) -> Diagram:
    """``split(dom) ; value_to_diagram(unwrap d) ; gather(cod)``."""
    core = value_to_diagram(unwrap(d, backend))
    return seq_nontrivial(split_obj(d.dom), core, gather_obj(d.cod))


# ---------------------------------------------------------------------------
# The coherence equations between boxes and wires


def swap_equation(backend: Backend | str, n: int, m: int) -> Equation:
    """The box of a block symmetry equals the wire symmetry."""
    b = get_backend(backend) if isinstance(backend, str) else backend
    lhs = box(b.symmetry(n, m), b)
    a, c = cable(n), cable(m)
    rhs = seq_nontrivial(regroup(lhs.dom, a + c), Sym(a, c), regroup(c + a, lhs.cod))
    return Equation(lhs, rhs, "swap")


def comp_equation(f, g, backend: Backend | str | None = None) -> Equation:
    b = get_backend(backend) if isinstance(backend, str) else backend or backend_of(f)
    return Equation(Seq(box(f, b), box(g, b)), box(b.compose(f, g), b), "comp")


def tens_equation(f, g, backend: Backend | str | None = None) -> Equation:
    b = get_backend(backend) if isinstance(backend, str) else backend or backend_of(f)
    bf, bg = box(f, b), box(g, b)
    lhs = box(b.tensor(f, g), b)
    rhs = seq_nontrivial(regroup(lhs.dom, bf.dom + bg.dom), Par(bf, bg),
                         regroup(bf.cod + bg.cod, lhs.cod))
    return Equation(lhs, rhs, "tens")


def _local_box_steps(d: Diagram, b: Backend) -> Iterator[tuple[str, Diagram]]:
    if isinstance(d, Seq) and isinstance(d.first, Box) and isinstance(d.second, Box):
        yield "comp", box(b.compose(d.first.value, d.second.value), b)
    if isinstance(d, Par) and isinstance(d.left, Box) and isinstance(d.right, Box):
        f, g = d.left, d.right
        merged = box(b.tensor(f.value, g.value), b)
        yield "tens", seq_nontrivial(regroup(d.dom, merged.dom), merged,
                                     regroup(merged.cod, d.cod))
    if isinstance(d, Sym) and d.left and d.right:
        s = box(b.symmetry(d.left.global_size, d.right.global_size), b)
        yield "swap", seq_nontrivial(regroup(d.dom, s.dom), s, regroup(s.cod, d.cod))


def box_rewrite_steps(d: Diagram, backend: Backend | str | None = None
                      ) -> Iterator[tuple[str, Diagram]]:
    """Every single swap/comp/tens rewrite (box-introducing direction) at
    any position of ``d``."""
    b = box_backend(d, backend)
    yield from _local_box_steps(d, b)
    if isinstance(d, Seq):
        for rule, f in box_rewrite_steps(d.first, b):
            yield rule, Seq(f, d.second)
        for rule, g in box_rewrite_steps(d.second, b):
            yield rule, Seq(d.first, g)
    elif isinstance(d, Par):
        for rule, f in box_rewrite_steps(d.left, b):
            yield rule, Par(f, d.right)
        for rule, g in box_rewrite_steps(d.right, b):
            yield rule, Par(d.left, g)


# ---------------------------------------------------------------------------
# Values as base terms


def copy_tree(k: int, copy: str = "bcomon", erase: str = "bcounit") -> Diagram:
    """One wire to ``k`` wires, left-combed."""
    if k == 0:
        return Gen(erase, ones(1), ones(0))
    if k == 1:
        return Id(ones(1))
    out = Gen(copy, ones(1), ones(2))
    for j in range(3, k + 1):
        out = Seq(out, Par(Gen(copy, ones(1), ones(2)), Id(ones(j - 2))))
    return out


def merge_tree(k: int, merge: str = "mon", unit: str = "unit") -> Diagram:
    """``k`` wires to one wire; the mirror of :func:`copy_tree`."""
    return op_diagram(copy_tree(k, "_c", "_e"), {"_c": merge, "_e": unit})


def _layer(items: Sequence[Diagram]) -> Diagram:
    """Parallel composite with adjacent identities merged."""
    out: list[Diagram] = []
    for it in items:
        if out and isinstance(it, Id) and isinstance(out[-1], Id):
            out[-1] = Id(out[-1].obj + it.obj)
        else:
            out.append(it)
    return par(*out)


def _matrix_rows(a, shape=None) -> tuple[list[list[int]], int, int]:
    if hasattr(a, "tolist") and hasattr(a, "shape"):
        rows, (m, n) = a.tolist(), a.shape
    else:
        rows = [list(r) for r in a]
        m, n = shape or (len(rows), len(rows[0]) if rows else 0)
    out = [[int(x) for x in r] for r in rows]
    if out != rows:
        raise BadArity("matrix arrows need integer entries")
    return out, m, n


def matrix_to_diagram(a, antipode: str | None = None, copy: str = "bcomon",
                      erase: str = "bcounit", merge: str = "mon",
                      unit: str = "unit", shape: tuple[int, int] | None = None) -> Diagram:
    """The matrix arrow of an ``m x n`` integer matrix: input ``j`` is
    copied once per unit of ``|A[i][j]|``, every copy is routed to output
    ``i``, and outputs add their incoming legs.  Negative entries thread an
    ``antipode`` node through each of their legs."""
    rows, m, n = _matrix_rows(a, shape)
    negative = any(x < 0 for r in rows for x in r)
    if negative and antipode is None:
        raise NegativeEntry("negative entries need an antipode generator")
    col_major = []  # (row, col, sign) per leg, column by column
    for j in range(n):
        for i in range(m):
            col_major += [(i, j, rows[i][j] < 0)] * abs(rows[i][j])
    row_major = sorted(range(len(col_major)), key=lambda p: (col_major[p][0], col_major[p][1]))
    images = [0] * len(col_major)
    for pos, p in enumerate(row_major):
        images[p] = pos
    legs = [sum(abs(rows[i][j]) for i in range(m)) for j in range(n)]
    fan_in = [sum(abs(x) for x in rows[i]) for i in range(m)]
    layers = [par(*(copy_tree(k, copy, erase) for k in legs))]
    if negative:
        layers.append(_layer([Gen(antipode, ones(1), ones(1)) if neg else Id(ones(1))
                              for (_, _, neg) in col_major]))
    layers.append(permute_cables(ones(len(col_major)), images))
    layers.append(par(*(merge_tree(k, merge, unit) for k in fan_in)))
    return seq_nontrivial(*layers)


def copy_wires(n: int, copy: str = "bcomon") -> Diagram:
    """``n -> 2n`` wires, ``x -> x x`` with the two copies as blocks."""
    images = []
    for i in range(n):
        images += [i, n + i]
    return seq_nontrivial(par(*[Gen(copy, ones(1), ones(2))] * n),
                          permute_cables(ones(2 * n), images))


def erase_wires(n: int, erase: str = "bcounit") -> Diagram:
    return par(*[Gen(erase, ones(1), ones(0))] * n)


def merge_wires(n: int, merge: str = "mon") -> Diagram:
    """``2n -> n`` wires adding the two blocks; the mirror of :func:`copy_wires`."""
    return op_diagram(copy_wires(n, "_c"), {"_c": merge})


def arrow_sum(f: Diagram, g: Diagram, copy: str = "bcomon", merge: str = "mon") -> Diagram:
    """Copy the inputs, run ``f`` and ``g`` side by side, add the outputs;
    for matrix arrows this is the arrow of ``A + B``."""
    if f.type != g.type:
        raise BoundaryMismatch("arrow_sum", f.type, g.type)
    n, m = len(f.dom), len(f.cod)
    return seq_nontrivial(copy_wires(n, copy), Par(f, g), merge_wires(m, merge))


def function_to_diagram(f: FinFunction, merge: str = "mon", unit: str = "unit") -> Diagram:
    """The function arrow of ``f`` over the commutative monoid: inputs are
    sorted by image (stably) and merged per output."""
    order = sorted(range(f.dom), key=lambda i: f.table[i])
    images = [0] * f.dom
    for pos, i in enumerate(order):
        images[i] = pos
    fan_in = [sum(1 for x in f.table if x == y) for y in range(f.cod)]
    return seq_nontrivial(permute_cables(ones(f.dom), images),
                          par(*(merge_tree(k, merge, unit) for k in fan_in)))


def permutation_to_diagram(p: Permutation) -> Diagram:
    return permutation_diagram(p)


__all__ = [
    "box", "box_on_wires", "box_backend", "unwrap", "boxed_normal_form", "unbox",
    "swap_equation", "comp_equation", "tens_equation", "box_rewrite_steps",
    "copy_tree", "merge_tree", "copy_wires", "erase_wires", "merge_wires",
    "arrow_sum", "matrix_to_diagram", "function_to_diagram",
    "permutation_to_diagram",
]
