"""Terms of free colored props.

Objects are lists of positive wire sizes (:class:`Obj`).  Diagrams are
immutable terms built from generators, identities, block symmetries,
dividers, gatherers and boxes, glued by sequential (:class:`Seq`) and
parallel (:class:`Par`) composition.  Types are computed and checked at
construction, so an ill-typed ``Seq`` can never exist.

``f >> g`` is ``Seq(f, g)`` (``f`` first) and ``f @ g`` is ``Par(f, g)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from .errors import (BadObject, BadParameterArity, BoundaryMismatch,
                     DisciplineMismatch, TypingError, UndeclaredGenerator)

PARAM_SORTS = ("none", "rational", "complex", "token")
STRUCTURAL = ("div", "gat")


class Obj(tuple):
    """An object of an N0-colored prop: a tuple of positive wire sizes."""

    __slots__ = ()

    def __new__(cls, sizes: Iterable[int] = ()):
        sizes = tuple(sizes)
        for s in sizes:
            if isinstance(s, bool) or not isinstance(s, int) or s < 1:
                raise BadObject(f"wire sizes must be positive integers, got {s!r}")
        return super().__new__(cls, sizes)

    @property
    def global_size(self) -> int:
        return sum(self)

    @property
    def is_simple(self) -> bool:
        return all(s == 1 for s in self)

    def __add__(self, other):
        return Obj(tuple(self) + tuple(other))

    def __repr__(self):
        return "<" + ",".join(map(str, self)) + ">"

    __str__ = __repr__


def ones(n: int) -> Obj:
    """``n`` simple wires."""
    return Obj((1,) * n)


def cable(n: int) -> Obj:
    """A single cable of size ``n``; the empty object when ``n == 0``."""
    return Obj((n,)) if n else Obj()


def global_size(a: Sequence[int]) -> int:
    return sum(Obj(a))


# ---------------------------------------------------------------------------
# Diagrams


class Diagram:
    """Base class of diagram terms."""

    dom: Obj
    cod: Obj
    is_wire: bool

    def __rshift__(self, other: "Diagram") -> "Diagram":
        return Seq(self, other)

    def __matmul__(self, other: "Diagram") -> "Diagram":
        return Par(self, other)

    @property
    def type(self) -> tuple[Obj, Obj]:
        return self.dom, self.cod

    def nodes(self):
        """Yield the atomic nodes of the term, left to right."""
        stack = [self]
        while stack:
            d = stack.pop()
            if isinstance(d, Seq):
                stack.extend((d.second, d.first))
            elif isinstance(d, Par):
                stack.extend((d.right, d.left))
            else:
                yield d

    def __str__(self):
        from .dsl import print_diagram
        return print_diagram(self)


@dataclass(frozen=True)
class Gen(Diagram):
    name: str
    dom: Obj
    cod: Obj
    params: tuple = ()

    is_wire = False

    def __post_init__(self):
        object.__setattr__(self, "dom", Obj(self.dom))
        object.__setattr__(self, "cod", Obj(self.cod))
        object.__setattr__(self, "params", tuple(self.params))


@dataclass(frozen=True)
class Id(Diagram):
    obj: Obj = Obj()

    is_wire = True

    def __post_init__(self):
        object.__setattr__(self, "obj", Obj(self.obj))

    @property
    def dom(self):
        return self.obj

    @property
    def cod(self):
        return self.obj


@dataclass(frozen=True)
class Sym(Diagram):
    """Block symmetry ``a (x) b -> b (x) a``."""

    left: Obj
    right: Obj

    is_wire = True

    def __post_init__(self):
        object.__setattr__(self, "left", Obj(self.left))
        object.__setattr__(self, "right", Obj(self.right))

    @property
    def dom(self):
        return self.left + self.right

    @property
    def cod(self):
        return self.right + self.left


@dataclass(frozen=True)
class Div(Diagram):
    """Divider of size n: ``<n+1> -> <1, n>``."""

    n: int

    is_wire = True

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise BadObject(f"divider size must be >= 1, got {self.n!r}")

    @property
    def dom(self):
        return Obj((self.n + 1,))

    @property
    def cod(self):
        return Obj((1, self.n))


@dataclass(frozen=True)
class Gat(Diagram):
    """Gatherer of size n: ``<1, n> -> <n+1>``."""

    n: int

    is_wire = True

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise BadObject(f"gatherer size must be >= 1, got {self.n!r}")

    @property
    def dom(self):
        return Obj((1, self.n))

    @property
    def cod(self):
        return Obj((self.n + 1,))


@dataclass(frozen=True)
class Box(Diagram):
    """A box holding a value of a semantic prop (see :mod:`scaprop.boxes`)."""

    backend: str
    value: Any
    dom: Obj
    cod: Obj

    is_wire = False

    def __post_init__(self):
        object.__setattr__(self, "dom", Obj(self.dom))
        object.__setattr__(self, "cod", Obj(self.cod))


@dataclass(frozen=True)
class Seq(Diagram):
    first: Diagram
    second: Diagram
    dom: Obj = field(init=False, repr=False, compare=False)
    cod: Obj = field(init=False, repr=False, compare=False)
    is_wire: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.first.cod != self.second.dom:
            raise BoundaryMismatch(None, self.first.cod, self.second.dom)
        object.__setattr__(self, "dom", self.first.dom)
        object.__setattr__(self, "cod", self.second.cod)
        object.__setattr__(self, "is_wire",
                           self.first.is_wire and self.second.is_wire)


@dataclass(frozen=True)
class Par(Diagram):
    left: Diagram
    right: Diagram
    dom: Obj = field(init=False, repr=False, compare=False)
    cod: Obj = field(init=False, repr=False, compare=False)
    is_wire: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "dom", self.left.dom + self.right.dom)
        object.__setattr__(self, "cod", self.left.cod + self.right.cod)
        object.__setattr__(self, "is_wire",
                           self.left.is_wire and self.right.is_wire)


def seq(*diagrams: Diagram) -> Diagram:
    """Left-nested sequential composite of one or more diagrams."""
    if not diagrams:
        raise ValueError("seq() needs at least one diagram")
    out = diagrams[0]
    for d in diagrams[1:]:
        out = Seq(out, d)
    return out


def par(*diagrams: Diagram) -> Diagram:
    """Left-nested parallel composite; the empty composite is ``Id(<>)``."""
    if not diagrams:
        return Id(Obj())
    out = diagrams[0]
    for d in diagrams[1:]:
        out = Par(out, d)
    return out


def is_identity(d: Diagram) -> bool:
    """True for ``Id`` and parallel composites of ``Id``."""
    if isinstance(d, Id):
        return True
    if isinstance(d, Par):
        return is_identity(d.left) and is_identity(d.right)
    return False


def seq_nontrivial(*diagrams: Diagram) -> Diagram:
    """Sequential composite dropping identity factors; keeps the last
    factor if all of them are identities."""
    kept = [d for d in diagrams if not is_identity(d)]
    if not kept:
        return diagrams[-1]
    return seq(*kept)


# ---------------------------------------------------------------------------
# Signatures and languages


def _check_param(sort: str, value) -> None:
    from fractions import Fraction
    from numbers import Complex
    ok = {
        "rational": lambda v: isinstance(v, (int, Fraction)) and not isinstance(v, bool),
        "complex": lambda v: isinstance(v, Complex) and not isinstance(v, bool),
        "token": lambda v: isinstance(v, str),
    }[sort](value)
    if not ok:
        raise BadParameterArity(f"parameter {value!r} is not of sort {sort}")


@dataclass(frozen=True)
class GeneratorDecl:
    name: str
    dom: Obj
    cod: Obj
    param: str = "none"

    def __post_init__(self):
        object.__setattr__(self, "dom", Obj(self.dom))
        object.__setattr__(self, "cod", Obj(self.cod))
        if self.param not in PARAM_SORTS:
            raise ValueError(f"unknown parameter sort {self.param!r}")
        if not self.name.isidentifier():
            raise ValueError(f"generator name {self.name!r} is not an identifier")

    @property
    def monochromatic(self) -> bool:
        return self.dom.is_simple and self.cod.is_simple

    def check_params(self, params: tuple) -> None:
        if self.param == "none":
            if params:
                raise BadParameterArity(
                    f"{self.name} takes no parameters, got {len(params)}")
            return
        if len(params) != 1:
            raise BadParameterArity(
                f"{self.name} takes one {self.param} parameter, got {len(params)}")
        _check_param(self.param, params[0])

    def __call__(self, *params) -> Gen:
        self.check_params(params)
        return Gen(self.name, self.dom, self.cod, params)


@dataclass(frozen=True)
class Signature:
    """A set of generator declarations under a discipline.

    ``structural`` lists which of the built-in wire nodes (``"div"``,
    ``"gat"``) terms over this signature may use; only sized signatures may
    use them.
    """

    discipline: str
    generators: tuple[GeneratorDecl, ...] = ()
    structural: frozenset = frozenset()

    def __post_init__(self):
        if self.discipline not in ("mono", "sized"):
            raise ValueError(f"unknown discipline {self.discipline!r}")
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "structural", frozenset(self.structural))
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if not self.structural <= set(STRUCTURAL):
            raise ValueError(f"unknown structural nodes {set(self.structural)}")
        if self.discipline == "mono":
            bad = [g.name for g in self.generators if not g.monochromatic]
            if bad:
                raise DisciplineMismatch(
                    f"monochromatic signature has sized generators {bad}")
            if self.structural:
                raise DisciplineMismatch("dividers/gatherers need a sized signature")

    def __contains__(self, name: str) -> bool:
        return any(g.name == name for g in self.generators)

    def __getitem__(self, name: str) -> GeneratorDecl:
        for g in self.generators:
            if g.name == name:
                return g
        raise UndeclaredGenerator(name)

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def gen(self, name: str, *params) -> Gen:
        return self[name](*params)


def typecheck(d: Diagram, sig: Signature, _path: str = "root") -> tuple[Obj, Obj]:
    """Return ``(dom, cod)`` of ``d`` if it is a well-typed term over ``sig``."""
    if isinstance(d, Gen):
        decl = sig[d.name]
        if (decl.dom, decl.cod) != (d.dom, d.cod):
            raise BoundaryMismatch(_path, (decl.dom, decl.cod), (d.dom, d.cod))
        decl.check_params(d.params)
    elif isinstance(d, (Id, Sym)):
        if sig.discipline == "mono" and not d.dom.is_simple:
            raise BoundaryMismatch(_path, ones(d.dom.global_size), d.dom)
    elif isinstance(d, Div):
        if "div" not in sig.structural:
            raise TypingError(f"dividers are not part of this signature ({_path})")
    elif isinstance(d, Gat):
        if "gat" not in sig.structural:
            raise TypingError(f"gatherers are not part of this signature ({_path})")
    elif isinstance(d, Box):
        if sig.discipline == "mono":
            raise TypingError(f"boxes need a sized signature ({_path})")
    elif isinstance(d, Seq):
        _, mid = typecheck(d.first, sig, _path + ".first")
        mid2, _ = typecheck(d.second, sig, _path + ".second")
        if mid != mid2:
            raise BoundaryMismatch(_path, mid, mid2)
    elif isinstance(d, Par):
        typecheck(d.left, sig, _path + ".left")
        typecheck(d.right, sig, _path + ".right")
    else:
        raise TypeError(f"not a diagram: {d!r}")
    return d.dom, d.cod


@dataclass(frozen=True)
class Equation:
    lhs: Diagram
    rhs: Diagram
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.lhs.type != self.rhs.type:
            raise BoundaryMismatch(self.name or None, self.lhs.type, self.rhs.type)


@dataclass(frozen=True)
class GraphicalLanguage:
    """A signature together with a list of equations over it."""

    sig: Signature
    equations: tuple[Equation, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        seen = []
        for eq in self.equations:
            typecheck(eq.lhs, self.sig)
            typecheck(eq.rhs, self.sig)
            if eq not in seen:
                seen.append(eq)
        object.__setattr__(self, "equations", tuple(seen))

    @property
    def discipline(self) -> str:
        return self.sig.discipline

    def gen(self, name: str, *params) -> Gen:
        return self.sig.gen(name, *params)

    def equation(self, name: str) -> Equation:
        for eq in self.equations:
            if eq.name == name:
                return eq
        raise KeyError(name)


def empty_language(discipline: str = "mono") -> GraphicalLanguage:
    return GraphicalLanguage(Signature(discipline), (), "empty")


def rename_generators(d: Diagram, mapping: Mapping[str, str]) -> Diagram:
    if isinstance(d, Gen):
        if d.name in mapping:
            return Gen(mapping[d.name], d.dom, d.cod, d.params)
        return d
    if isinstance(d, Seq):
        return Seq(rename_generators(d.first, mapping),
                   rename_generators(d.second, mapping))
    if isinstance(d, Par):
        return Par(rename_generators(d.left, mapping),
                   rename_generators(d.right, mapping))
    return d


def _fresh(name: str, taken: set[str]) -> str:
    i = 2
    while f"{name}_{i}" in taken:
        i += 1
    return f"{name}_{i}"


def language_sum(lang: GraphicalLanguage, other: GraphicalLanguage,
                 name: str = "") -> GraphicalLanguage:
    """Disjoint union of generators, concatenation of equations.

    Generators of ``other`` whose names collide with ``lang`` are renamed
    ``name_2``, ``name_3``, ... (first free suffix); so are equation names.
    """
    if lang.discipline != other.discipline:
        raise DisciplineMismatch(
            f"cannot sum {lang.discipline} and {other.discipline} languages")
    taken = set(lang.sig.names) | set(other.sig.names)
    mapping = {}
    for g in other.sig.generators:
        if g.name in lang.sig:
            mapping[g.name] = new = _fresh(g.name, taken)
            taken.add(new)
    gens = lang.sig.generators + tuple(
        GeneratorDecl(mapping.get(g.name, g.name), g.dom, g.cod, g.param)
        for g in other.sig.generators)
    eq_names = {e.name for e in lang.equations}
    eqs = list(lang.equations)
    for e in other.equations:
        eq_name = e.name
        if eq_name and eq_name in eq_names:
            eq_name = _fresh(eq_name, eq_names | {x.name for x in other.equations})
        eq_names.add(eq_name)
        eqs.append(Equation(rename_generators(e.lhs, mapping),
                            rename_generators(e.rhs, mapping), eq_name))
    sig = Signature(lang.discipline, gens, lang.sig.structural | other.sig.structural)
    return GraphicalLanguage(sig, tuple(eqs), name or f"{lang.name}+{other.name}")


def language_quotient(lang: GraphicalLanguage, extra: Iterable[Equation],
                      name: str = "") -> GraphicalLanguage:
    extra = tuple(extra)
    return GraphicalLanguage(lang.sig, lang.equations + extra, name or lang.name)


def language_extend(lang: GraphicalLanguage, decls: Iterable[GeneratorDecl],
                    name: str = "") -> GraphicalLanguage:
    """Add generators (no equations) to a language."""
    sig = Signature(lang.discipline, lang.sig.generators + tuple(decls),
                    lang.sig.structural)
    return GraphicalLanguage(sig, lang.equations, name or lang.name)


def op_diagram(d: Diagram, rename: Mapping[str, str] | None = None) -> Diagram:
    """Mirror a diagram top to bottom, optionally renaming generators."""
    rename = rename or {}
    if isinstance(d, Gen):
        return Gen(rename.get(d.name, d.name), d.cod, d.dom, d.params)
    if isinstance(d, Id):
        return d
    if isinstance(d, Sym):
        return Sym(d.right, d.left)
    if isinstance(d, Div):
        return Gat(d.n)
    if isinstance(d, Gat):
        return Div(d.n)
    if isinstance(d, Seq):
        return Seq(op_diagram(d.second, rename), op_diagram(d.first, rename))
    if isinstance(d, Par):
        return Par(op_diagram(d.left, rename), op_diagram(d.right, rename))
    raise TypeError(f"cannot mirror {type(d).__name__}")


def language_op(lang: GraphicalLanguage, rename: Mapping[str, str],
                name: str = "") -> GraphicalLanguage:
    gens = tuple(GeneratorDecl(rename.get(g.name, g.name), g.cod, g.dom, g.param)
                 for g in lang.sig.generators)
    eqs = tuple(Equation(op_diagram(e.lhs, rename), op_diagram(e.rhs, rename),
                         e.name + "_op" if e.name else "")
                for e in lang.equations)
    structural = {"div": "gat", "gat": "div"}
    sig = Signature(lang.discipline, gens,
                    frozenset(structural[s] for s in lang.sig.structural))
    return GraphicalLanguage(sig, eqs, name or f"{lang.name}^op")


# ---------------------------------------------------------------------------
# Translations


Assignment = Diagram | Callable[..., Diagram]


@dataclass(frozen=True)
class Translation:
    """A type-preserving assignment of target diagrams to source generators.

    A mapping value may be a callable taking the generator's parameters.
    """

    source: GraphicalLanguage
    target: GraphicalLanguage
    mapping: Mapping[str, Assignment]

    def __post_init__(self):
        for g in self.source.sig.generators:
            if g.name not in self.mapping:
                raise UndeclaredGenerator(g.name)
            image = self.mapping[g.name]
            if isinstance(image, Diagram):
                typecheck(image, self.target.sig)
                if image.type != (g.dom, g.cod):
                    raise BoundaryMismatch(g.name, (g.dom, g.cod), image.type)

    @classmethod
    def identity(cls, lang: GraphicalLanguage) -> "Translation":
        return cls(lang, lang, {g.name: g() if g.param == "none"
                                else (lambda *p, g=g: g(*p))
                                for g in lang.sig.generators})


def apply_translation(t: Translation, d: Diagram) -> Diagram:
    if isinstance(d, Gen):
        if d.name not in t.mapping:
            raise UndeclaredGenerator(d.name)
        image = t.mapping[d.name]
        if not isinstance(image, Diagram):
            image = image(*d.params)
        if image.type != d.type:
            raise BoundaryMismatch(d.name, d.type, image.type)
        return image
    if isinstance(d, Seq):
        return Seq(apply_translation(t, d.first), apply_translation(t, d.second))
    if isinstance(d, Par):
        return Par(apply_translation(t, d.left), apply_translation(t, d.right))
    return d


# ---------------------------------------------------------------------------
# Symmetry networks


def transposition_layers(images: Sequence[int]) -> list[list[int]]:
    """Odd-even transposition sort of ``images``.

    Returns layers of positions ``p`` at which adjacent items ``p, p+1`` are
    swapped; applying them in order sends the item at position ``i`` to
    ``images[i]``.
    """
    cur = list(images)
    if sorted(cur) != list(range(len(cur))):
        raise ValueError(f"not a permutation: {images}")
    layers = []
    parity = 0
    while cur != sorted(cur):
        swaps = [p for p in range(parity, len(cur) - 1, 2) if cur[p] > cur[p + 1]]
        for p in swaps:
            cur[p], cur[p + 1] = cur[p + 1], cur[p]
        if swaps:
            layers.append(swaps)
        parity ^= 1
    return layers


def permute_cables(obj: Sequence[int], images: Sequence[int]) -> Diagram:
    """Wire term moving cable ``i`` of ``obj`` to position ``images[i]``.

    Built from adjacent cable transpositions ``Sym(<x>, <y>)`` only.
    """
    obj = Obj(obj)
    if len(images) != len(obj):
        raise ValueError("permutation length differs from the number of cables")
    sizes = list(obj)
    layers = []
    for swaps in transposition_layers(images):
        items, run, p = [], [], 0
        swap_at = set(swaps)
        while p < len(sizes):
            if p in swap_at:
                if run:
                    items.append(Id(Obj(run)))
                    run = []
                items.append(Sym(Obj((sizes[p],)), Obj((sizes[p + 1],))))
                sizes[p], sizes[p + 1] = sizes[p + 1], sizes[p]
                p += 2
            else:
                run.append(sizes[p])
                p += 1
        if run:
            items.append(Id(Obj(run)))
        layers.append(par(*items))
    if not layers:
        return Id(obj)
    return seq(*layers)


def block_symmetry(a: Sequence[int], b: Sequence[int]) -> Diagram:
    """``sigma_{a,b} : a (x) b -> b (x) a`` from adjacent cable transpositions."""
    a, b = Obj(a), Obj(b)
    if not a or not b:
        return Id(a + b)
    images = [len(b) + i for i in range(len(a))] + list(range(len(b)))
    return permute_cables(a + b, images)
