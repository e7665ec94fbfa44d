"""The scalable construction over a monochromatic language.

Base terms live on simple wires; the scalable language adds dividers and
gatherers.  Every scalable term ``d : a -> b`` factors as
``split(a) ; core ; gather(b)`` with ``core`` a base term, and ``core`` is
obtained by erasing the wire structure (:func:`strip`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .core import (Box, Diagram, Div, Gat, Gen, GraphicalLanguage, Id, Obj,
                   Par, Seq, Signature, Sym, ones, par, permute_cables,
                   seq_nontrivial, typecheck)
from .errors import (DisciplineMismatch, ParameterArityMismatch, TypingError)
from .languages import DEFAULT_MAX_SIZE, wire_equations
from .semantics.evaluate import Interpretation, evaluate
from .wires import gather_obj, split_obj


@dataclass(frozen=True)
class ScalableLanguage:
    """``base`` on simple wires plus the wire calculus."""

    base: GraphicalLanguage
    max_size: int = DEFAULT_MAX_SIZE

    def __post_init__(self):
        if self.base.discipline != "mono":
            raise DisciplineMismatch("the scalable construction needs a monochromatic base")

    @property
    def language(self) -> GraphicalLanguage:
        sig = Signature("sized", self.base.sig.generators, {"div", "gat"})
        return GraphicalLanguage(sig, self.base.equations
                                 + tuple(wire_equations(self.max_size)),
                                 f"S{self.base.name}")

    @property
    def sig(self) -> Signature:
        return self.language.sig

    def typecheck(self, d: Diagram):
        return typecheck(d, self.sig)


def embed(d: Diagram, lang: GraphicalLanguage | None = None) -> Diagram:
    """A base term seen as a scalable term (objects ``n`` become ``n``
    simple wires, which is already how base objects are stored)."""
    if lang is not None:
        typecheck(d, lang.sig)
    for node in d.nodes():
        if isinstance(node, (Div, Gat, Box)) or not node.dom.is_simple \
                or not node.cod.is_simple:
            raise TypingError(f"{type(node).__name__} node is not a base term")
    return d


def strip(d: Diagram) -> Diagram:
    """Erase the wire structure: every object becomes its global size in
    simple wires, dividers and gatherers become identities."""
    if isinstance(d, Gen):
        if not (d.dom.is_simple and d.cod.is_simple):
            raise TypingError(f"generator {d.name} is not on simple wires")
        return d
    if isinstance(d, Id):
        return Id(ones(d.obj.global_size))
    if isinstance(d, Sym):
        return Sym(ones(d.left.global_size), ones(d.right.global_size))
    if isinstance(d, (Div, Gat)):
        return Id(ones(d.dom.global_size))
    if isinstance(d, Seq):
        return Seq(strip(d.first), strip(d.second))
    if isinstance(d, Par):
        return Par(strip(d.left), strip(d.right))
    if isinstance(d, Box):
        raise TypingError("boxes cannot be stripped; unbox them first")
    raise TypeError(f"not a diagram: {d!r}")


def simplify_units(d: Diagram) -> Diagram:
    """Apply the unit laws of composition and tensor bottom-up."""
    if isinstance(d, Seq):
        f, g = simplify_units(d.first), simplify_units(d.second)
        if isinstance(f, Id):
            return g
        if isinstance(g, Id):
            return f
        return Seq(f, g)
    if isinstance(d, Par):
        f, g = simplify_units(d.left), simplify_units(d.right)
        if isinstance(f, Id) and not f.obj:
            return g
        if isinstance(g, Id) and not g.obj:
            return f
        if isinstance(f, Id) and isinstance(g, Id):
            return Id(f.obj + g.obj)
        return Par(f, g)
    if isinstance(d, Sym) and (not d.left or not d.right):
        return Id(d.dom)
    return d


@dataclass(frozen=True)
class StructureNormalForm:
    dom: Obj
    core: Diagram
    cod: Obj

    def __post_init__(self):
        if self.core.dom != ones(self.dom.global_size) or \
                self.core.cod != ones(self.cod.global_size):
            raise TypingError("core of a normal form must live on simple wires")

    def reconstitute(self) -> Diagram:
        """``split(dom) ; core ; gather(cod)`` with identity parts left out."""
        return seq_nontrivial(split_obj(self.dom), self.core, gather_obj(self.cod))


def structure_normal_form(d: Diagram) -> StructureNormalForm:
    return StructureNormalForm(d.dom, simplify_units(strip(d)), d.cod)


# ---------------------------------------------------------------------------
# Scaled generators


def _cable_shuffle(n: int, k: int) -> tuple[Obj, list[int]]:
    """Cables ``[1, k] * n`` regrouped as ``[1] * n + [k] * n``."""
    obj = Obj((1, k) * n)
    images = []
    for i in range(n):
        images += [i, n + i]
    return obj, images


def _scaled(copies: Sequence[Diagram]) -> Diagram:
    g = copies[0]
    if not (g.dom.is_simple and g.cod.is_simple):
        raise TypingError("only diagrams on simple wires can be scaled")
    for c in copies[1:]:
        if c.type != g.type:
            raise TypingError("all copies of a scaled diagram need the same type")
    if len(copies) == 1:
        return g
    k = len(copies) - 1
    n, m = len(g.dom), len(g.cod)
    rest = _scaled(copies[1:])
    obj_in, images_in = _cable_shuffle(n, k)
    obj_out, images_out = _cable_shuffle(m, k)
    back = [0] * len(images_out)
    for i, x in enumerate(images_out):
        back[x] = i
    return seq_nontrivial(
        par(*[Div(k)] * n),
        permute_cables(obj_in, images_in),
        Par(g, rest),
        permute_cables(Obj((1,) * m + (k,) * m), back),
        par(*[Gat(k)] * m),
    )


def multiplex(g: Diagram, k: int) -> Diagram:
    """``g_k``: ``k`` transversal copies of ``g``; type ``n`` cables of size
    ``k`` to ``m`` cables of size ``k``.  Strand ``j`` of every cable feeds
    copy ``j``."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise TypingError(f"scale factor must be a positive integer, got {k!r}")
    return _scaled([g] * k)


def multiplex_indexed(family: Callable[[Any], Diagram], params: Sequence) -> Diagram:
    """Like :func:`multiplex`; copy ``j`` is ``family(params[j])``."""
    params = list(params)
    if not params:
        raise ParameterArityMismatch("an indexed scaled generator needs at least one parameter")
    return _scaled([family(p) for p in params])


# ---------------------------------------------------------------------------
# Equality and evaluation


def sl_equal(d1: Diagram, d2: Diagram, interp: Interpretation) -> bool:
    """Equal types and equal stripped values (exact when ``interp`` is
    complete for the base language)."""
    if d1.type != d2.type:
        return False
    b = interp.backend
    return b.equal(evaluate(strip(d1), interp), evaluate(strip(d2), interp))


@dataclass(frozen=True)
class ScaledValue:
    value: Any
    dom: Obj
    cod: Obj


def scaled_evaluate(d: Diagram, interp: Interpretation) -> ScaledValue:
    return ScaledValue(evaluate(strip(d), interp), d.dom, d.cod)
