"""Evaluation of diagrams in a semantic backend.

Pure wire subterms are folded into strand permutations first and only
applied to values through the backend's ``permute_inputs`` and
``permute_outputs``; this avoids materializing large permutation values.
Dividers and gatherers act as the identity on strands, so sized diagrams
evaluate to the value of their stripped image.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from ..core import (Box, Diagram, Div, Gat, Gen, GraphicalLanguage, Id, Par,
                    Seq, Sym, Translation, apply_translation)
from ..errors import BackendMismatch, BadArity, MissingAssignment
from ..wires import Permutation
from .backends import Backend, get_backend


@dataclass(frozen=True)
class Interpretation:
    """A language, a backend, and a value (or a parameter -> value
    function) for every generator."""

    name: str
    language: GraphicalLanguage
    backend: Backend
    assignment: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.backend, str):
            object.__setattr__(self, "backend", get_backend(self.backend))
        values = {}
        for g in self.language.sig.generators:
            if g.name not in self.assignment:
                raise MissingAssignment(f"{self.name}: no value for generator {g.name!r}")
            v = self.assignment[g.name]
            if not callable(v):
                v = self.backend.coerce(v)
                expected = (g.dom.global_size, g.cod.global_size)
                if self.backend.arity(v) != expected:
                    raise BadArity(f"{self.name}: {g.name} has arity "
                                   f"{self.backend.arity(v)}, expected {expected}")
            values[g.name] = v
        for k, v in self.assignment.items():
            values.setdefault(k, v)
        object.__setattr__(self, "assignment", values)

    def value_of(self, gen: Gen):
        try:
            v = self.assignment[gen.name]
        except KeyError:
            raise MissingAssignment(f"{self.name}: no value for generator {gen.name!r}") from None
        if callable(v):
            v = self.backend.coerce(v(*gen.params))
        expected = (gen.dom.global_size, gen.cod.global_size)
        if self.backend.arity(v) != expected:
            raise BadArity(f"{gen.name}{gen.params or ''} evaluates to arity "
                           f"{self.backend.arity(v)}, expected {expected}")
        return v

    def evaluate(self, d: Diagram):
        return evaluate(d, self)


@dataclass(frozen=True)
class _Wires:
    perm: Permutation


def _strands(d: Diagram) -> Permutation:
    if isinstance(d, (Id, Div, Gat)):
        return Permutation.identity(d.dom.global_size)
    return Permutation.block(d.left.global_size, d.right.global_size)


def _materialize(backend: Backend, v):
    return backend.permutation(v.perm) if isinstance(v, _Wires) else v


def _fold(d: Diagram, interp: Interpretation, box_backend: Backend | None):
    backend = interp.backend
    if isinstance(d, (Id, Sym, Div, Gat)):
        return _Wires(_strands(d))
    if isinstance(d, Gen):
        return interp.value_of(d)
    if isinstance(d, Box):
        target = box_backend or backend
        if d.backend != target.name:
            raise BackendMismatch(
                f"box over {d.backend!r} evaluated in backend {target.name!r}")
        return d.value
    if isinstance(d, Seq):
        f = _fold(d.first, interp, box_backend)
        g = _fold(d.second, interp, box_backend)
        if isinstance(f, _Wires) and isinstance(g, _Wires):
            return _Wires(f.perm.then(g.perm))
        if isinstance(f, _Wires):
            return backend.permute_inputs(f.perm, g) if not f.perm.is_identity else g
        if isinstance(g, _Wires):
            return backend.permute_outputs(f, g.perm) if not g.perm.is_identity else f
        return backend.compose(f, g)
    if isinstance(d, Par):
        f = _fold(d.left, interp, box_backend)
        g = _fold(d.right, interp, box_backend)
        if isinstance(f, _Wires) and isinstance(g, _Wires):
            return _Wires(f.perm.tensor(g.perm))
        return backend.tensor(_materialize(backend, f), _materialize(backend, g))
    raise TypeError(f"not a diagram: {d!r}")


def evaluate(d: Diagram, interp: Interpretation):
    """Fold ``d`` into ``interp.backend``: ``Seq`` is composition, ``Par``
    tensor, wires act on strands, boxes contribute their stored value."""
    return _materialize(interp.backend, _fold(d, interp, None))


def backend_interpretation(backend: Backend | str, language: GraphicalLanguage | None = None,
                           assignment: Mapping[str, Any] | None = None) -> Interpretation:
    """An interpretation with no (or the given) generators, e.g. for
    evaluating box and wire terms."""
    from ..core import empty_language
    backend = get_backend(backend) if isinstance(backend, str) else backend
    return Interpretation(backend.name, language or empty_language("sized"), backend,
                          assignment or {})


def check_translation_soundness(t: Translation, interp: Interpretation) -> bool:
    """True iff every source equation still holds in ``interp`` once
    translated."""
    b = interp.backend
    for eq in t.source.equations:
        lhs = evaluate(apply_translation(t, eq.lhs), interp)
        rhs = evaluate(apply_translation(t, eq.rhs), interp)
        if not b.equal(lhs, rhs):
            return False
    return True

