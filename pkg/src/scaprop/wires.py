"""The wire calculus: dividers, gatherers and strand permutations.

Every wire term (built from ``Id``, ``Sym``, ``Div`` and ``Gat`` only) is
equal, modulo expansion and elimination, to ``split(dom) ; sigma ;
gather(cod)`` for a unique strand permutation ``sigma``.  We compute
``sigma`` by tracing strands through the term.

Permutations use the convention ``images[i]`` = output position of input
strand ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (Diagram, Div, Gat, Id, Obj, Par, Seq, Sym, ones,
                   op_diagram, par, permute_cables, seq, seq_nontrivial)
from .errors import NotAWireTerm


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def block(cls, p: int, q: int) -> "Permutation":
        """Symmetry moving the first ``p`` strands past the next ``q``."""
        return cls(tuple(q + i for i in range(p)) + tuple(range(q)))

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def then(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("composing permutations of different sizes")
        return Permutation(tuple(other.images[i] for i in self.images))

    def tensor(self, other: "Permutation") -> "Permutation":
        return Permutation(self.images + tuple(self.n + i for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def apply(self, items: Sequence) -> list:
        """Rearrange ``items`` so that ``items[i]`` ends at ``images[i]``."""
        out = [None] * self.n
        for i, x in enumerate(self.images):
            out[x] = items[i]
        return out

    def __str__(self):
        return "[" + " ".join(str(i + 1) for i in self.images) + "]"


@dataclass(frozen=True)
class WiringNormalForm:
    dom: Obj
    perm: Permutation
    cod: Obj

    def __post_init__(self):
        object.__setattr__(self, "dom", Obj(self.dom))
        object.__setattr__(self, "cod", Obj(self.cod))
        if not (self.dom.global_size == self.cod.global_size == self.perm.n):
            raise ValueError("wiring normal form sizes disagree")


def split_all(n: int) -> Diagram:
    """``<n> -> n`` simple wires, peeling one strand per divider."""
    if n < 1:
        raise ValueError("split_all needs n >= 1")
    if n == 1:
        return Id(ones(1))
    if n == 2:
        return Div(1)
    return Seq(Div(n - 1), Par(Id(ones(1)), split_all(n - 1)))


def gather_all(m: int) -> Diagram:
    """``m`` simple wires ``-> <m>``; the mirror image of :func:`split_all`."""
    return op_diagram(split_all(m))


def split_obj(a: Sequence[int]) -> Diagram:
    a = Obj(a)
    if len(a) == 1:
        return split_all(a[0])
    return par(*(split_all(n) for n in a))


def gather_obj(b: Sequence[int]) -> Diagram:
    b = Obj(b)
    if len(b) == 1:
        return gather_all(b[0])
    return par(*(gather_all(m) for m in b))


def regroup(a: Sequence[int], b: Sequence[int]) -> Diagram:
    """The wire term ``a -> b`` whose strand permutation is the identity."""
    a, b = Obj(a), Obj(b)
    if a.global_size != b.global_size:
        raise ValueError(f"cannot regroup {a} into {b}")
    if a == b:
        return Id(a)
    return seq_nontrivial(split_obj(a), gather_obj(b))


def permutation_diagram(perm: Permutation) -> Diagram:
    """Simple-wire symmetry network realizing ``perm``."""
    return permute_cables(ones(perm.n), perm.images)


def _trace(d: Diagram, strands: list) -> list:
    if isinstance(d, (Id, Div, Gat)):
        return strands
    if isinstance(d, Sym):
        k = d.left.global_size
        return strands[k:] + strands[:k]
    if isinstance(d, Seq):
        return _trace(d.second, _trace(d.first, strands))
    if isinstance(d, Par):
        k = d.left.dom.global_size
        return _trace(d.left, strands[:k]) + _trace(d.right, strands[k:])
    raise NotAWireTerm(f"{type(d).__name__} node in a wire term")


def trace_permutation(d: Diagram) -> Permutation:
    """Strand permutation of a wire term."""
    n = d.dom.global_size
    out = _trace(d, list(range(n)))
    images = [0] * n
    for pos, strand in enumerate(out):
        images[strand] = pos
    return Permutation(tuple(images))


def normalize_wiring(d: Diagram) -> WiringNormalForm:
    return WiringNormalForm(d.dom, trace_permutation(d), d.cod)


def wiring_from_normal_form(nf: WiringNormalForm) -> Diagram:
    """``split(dom) ; sigma ; gather(cod)`` with identity parts left out."""
    parts = []
    if not nf.dom.is_simple:
        parts.append(split_obj(nf.dom))
    if not nf.perm.is_identity:
        parts.append(permutation_diagram(nf.perm))
    if not nf.cod.is_simple:
        parts.append(gather_obj(nf.cod))
    if not parts:
        return gather_obj(nf.cod)
    return seq(*parts)


def wire_equal(d1: Diagram, d2: Diagram) -> bool:
    return normalize_wiring(d1) == normalize_wiring(d2)


def inverse_wire(d: Diagram) -> Diagram:
    """A wire term realizing the inverse permutation (the mirror image)."""
    if not d.is_wire:
        raise NotAWireTerm("inverse_wire expects a wire term")
    return op_diagram(d)


# ---------------------------------------------------------------------------
# Expansion / elimination rewrites, used to cross-check normalization.


def _local_rewrites(d: Diagram) -> Iterator[tuple[str, Diagram]]:
    if isinstance(d, Seq):
        f, g = d.first, d.second
        if isinstance(f, Div) and isinstance(g, Gat) and f.n == g.n:
            yield "exp", Id(f.dom)
        if isinstance(f, Gat) and isinstance(g, Div) and f.n == g.n:
            yield "elim", Id(f.dom)
        # redexes hidden by associativity
        if isinstance(f, Seq) and isinstance(f.second, Div) \
                and isinstance(g, Gat) and f.second.n == g.n:
            yield "exp", Seq(f.first, Id(g.cod))
        if isinstance(f, Seq) and isinstance(f.second, Gat) \
                and isinstance(g, Div) and f.second.n == g.n:
            yield "elim", Seq(f.first, Id(g.cod))
        if isinstance(g, Seq) and isinstance(f, Div) \
                and isinstance(g.first, Gat) and f.n == g.first.n:
            yield "exp", Seq(Id(f.dom), g.second)
        if isinstance(g, Seq) and isinstance(f, Gat) \
                and isinstance(g.first, Div) and f.n == g.first.n:
            yield "elim", Seq(Id(f.dom), g.second)
        # redexes hidden by interchange
        if isinstance(f, Par) and isinstance(g, Par):
            for rule, a, b in (("exp", Div, Gat), ("elim", Gat, Div)):
                if isinstance(f.left, a) and isinstance(g.left, b) \
                        and f.left.n == g.left.n and f.right.cod == g.right.dom:
                    yield rule, Par(Id(f.left.dom), Seq(f.right, g.right))
                if isinstance(f.right, a) and isinstance(g.right, b) \
                        and f.right.n == g.right.n and f.left.cod == g.left.dom:
                    yield rule, Par(Seq(f.left, g.left), Id(f.right.dom))
    elif isinstance(d, Id) and len(d.obj) == 1 and d.obj[0] >= 2:
        n = d.obj[0] - 1
        yield "exp-1", Seq(Div(n), Gat(n))
    elif isinstance(d, Id) and len(d.obj) == 2 and d.obj[0] == 1:
        n = d.obj[1]
        yield "elim-1", Seq(Gat(n), Div(n))


def wire_redexes(d: Diagram) -> Iterator[tuple[str, Diagram]]:
    """Every single application of an expansion or elimination equation
    (either direction) at any position of ``d``, as ``(rule, new_term)``."""
    yield from _local_rewrites(d)
    if isinstance(d, Seq):
        for rule, f in wire_redexes(d.first):
            yield rule, Seq(f, d.second)
        for rule, g in wire_redexes(d.second):
            yield rule, Seq(d.first, g)
    elif isinstance(d, Par):
        for rule, f in wire_redexes(d.left):
            yield rule, Par(f, d.right)
        for rule, g in wire_redexes(d.right):
            yield rule, Par(d.left, g)


__all__ = [
    "Permutation", "WiringNormalForm", "split_all", "gather_all", "split_obj",
    "gather_obj", "regroup", "permutation_diagram", "trace_permutation",
    "normalize_wiring", "wiring_from_normal_form", "wire_equal",
    "inverse_wire", "wire_redexes",
]
