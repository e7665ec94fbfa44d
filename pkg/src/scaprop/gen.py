"""Random terms and values for property tests and the self-test command.

All generators take a :class:`random.Random` so runs are reproducible.
Terms are built layer by layer and then bracketed randomly, which hides
redexes behind associativity the way hand-written terms do.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .core import (Diagram, Div, Gat, GraphicalLanguage, Id, Obj, Par,
                   Seq, Sym, ones)
from .scalable import multiplex
from .semantics.backends import FinFunction, get_backend
from .wires import Permutation


def random_obj(rng: random.Random, max_cables: int = 6, max_size: int = 5,
               min_cables: int = 1) -> Obj:
    n = rng.randint(min_cables, max_cables)
    return Obj(rng.randint(1, max_size) for _ in range(n))


def bracket(rng: random.Random, layers: Sequence[Diagram]) -> Diagram:
    """Sequential composite of ``layers`` under a random bracketing."""
    if len(layers) == 1:
        return layers[0]
    cut = rng.randint(1, len(layers) - 1)
    return Seq(bracket(rng, layers[:cut]), bracket(rng, layers[cut:]))


def _tensor(rng: random.Random, parts: Sequence[Diagram]) -> Diagram:
    parts = [p for p in parts if not (isinstance(p, Id) and not p.obj)] or [Id(Obj())]
    if len(parts) == 1:
        return parts[0]
    cut = rng.randint(1, len(parts) - 1)
    return Par(_tensor(rng, parts[:cut]), _tensor(rng, parts[cut:]))


def _framed(rng: random.Random, cur: Obj, pos: int, width: int, d: Diagram) -> Diagram:
    """``d`` placed on cables ``pos .. pos+width`` of ``cur``."""
    return _tensor(rng, [Id(Obj(cur[:pos])), d, Id(Obj(cur[pos + width:]))])


def _wire_move(rng: random.Random, cur: Obj, max_cables: int, max_size: int):
    """A random divider, gatherer, symmetry or identity on ``cur``; returns
    ``(node, position, width)``."""
    moves = []
    if len(cur) < max_cables:
        moves += [("div", i) for i, s in enumerate(cur) if s >= 2]
    moves += [("gat", i) for i in range(len(cur) - 1)
              if cur[i] == 1 and cur[i + 1] + 1 <= max_size]
    if len(cur) >= 2:
        moves.append(("sym", None))
    kind, i = rng.choice(moves) if moves else ("id", None)
    if kind == "div":
        return Div(cur[i] - 1), i, 1
    if kind == "gat":
        return Gat(cur[i + 1]), i, 2
    if kind == "sym":
        i = rng.randrange(len(cur) - 1)
        j = rng.randint(i + 1, len(cur) - 1)
        k = rng.randint(j + 1, len(cur))
        return Sym(Obj(cur[i:j]), Obj(cur[j:k])), i, k - i
    return Id(cur), 0, len(cur)


def random_wire_term(rng: random.Random, dom: Obj | None = None, max_layers: int = 8,
                     max_size: int = 5, max_cables: int = 6) -> Diagram:
    """A wire term (dividers, gatherers, symmetries, identities)."""
    cur = dom if dom is not None else random_obj(rng, max_cables, max_size)
    layers = []
    for _ in range(rng.randint(1, max_layers)):
        node, pos, width = _wire_move(rng, cur, max_cables, max_size)
        layer = _framed(rng, cur, pos, width, node)
        layers.append(layer)
        cur = layer.cod
    return bracket(rng, layers)


def _decls(lang: GraphicalLanguage):
    return [g for g in lang.sig.generators if g.param == "none"]


def random_base_term(rng: random.Random, lang: GraphicalLanguage, dom: int | None = None,
                     max_layers: int = 6, max_wires: int = 5) -> Diagram:
    """A term on simple wires over the generators of ``lang``."""
    n = rng.randint(0, 3) if dom is None else dom
    decls = _decls(lang)
    layers = []
    for _ in range(rng.randint(1, max_layers)):
        cur = ones(n)
        options = [g for g in decls if len(g.dom) <= n
                   and n - len(g.dom) + len(g.cod) <= max_wires]
        if n >= 2 and rng.random() < 0.2:
            i = rng.randrange(n - 1)
            node, width = Sym(ones(1), ones(1)), 2
        elif options:
            g = rng.choice(options)
            node, width = g(), len(g.dom)
            i = rng.randint(0, n - width)
        else:
            node, width, i = Id(cur), n, 0
        layer = _framed(rng, cur, i, width, node)
        layers.append(layer)
        n = len(layer.cod)
    return bracket(rng, layers)


def random_composable_pair(rng: random.Random, lang: GraphicalLanguage,
                           max_layers: int = 4) -> tuple[Diagram, Diagram]:
    f = random_base_term(rng, lang, max_layers=max_layers)
    g = random_base_term(rng, lang, dom=len(f.cod), max_layers=max_layers)
    return f, g


def random_sl_term(rng: random.Random, lang: GraphicalLanguage, max_layers: int = 6,
                   max_size: int = 4, max_cables: int = 5) -> Diagram:
    """A scalable term over ``lang``: wire moves, generators on simple
    wires and multiplexed generators on cables of equal size."""
    decls = _decls(lang)
    cur = random_obj(rng, 3, max_size)
    layers = []
    for _ in range(rng.randint(1, max_layers)):
        roll = rng.random()
        layer = None
        if roll < 0.6 and decls:
            g = rng.choice(decls)
            n, m = len(g.dom), len(g.cod)
            k = 1 if roll < 0.3 else rng.randint(1, max_size)
            spots = [i for i in range(len(cur) - n + 1) if all(s == k for s in cur[i:i + n])]
            if spots and len(cur) - n + m <= max_cables and (n or len(cur) < max_cables):
                i = rng.choice(spots)
                layer = _framed(rng, cur, i, n, multiplex(g(), k) if k > 1 else g())
        if layer is None:
            node, pos, width = _wire_move(rng, cur, max_cables, max_size)
            layer = _framed(rng, cur, pos, width, node) if cur else Id(cur)
        layers.append(layer)
        cur = layer.cod
    return bracket(rng, layers)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_function(rng: random.Random, n: int, m: int) -> FinFunction:
    if m == 0 and n > 0:
        raise ValueError("no functions into the empty set")
    return FinFunction(tuple(rng.randrange(m) for _ in range(n)), m)


def random_matrix(rng: random.Random, m: int, n: int, lo: int = 0, hi: int = 3) -> list[list[int]]:
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def random_value(rng: random.Random, backend: str, n: int | None = None,
                 m: int | None = None):
    """A random value ``n -> m`` of a box backend."""
    n = rng.randint(0, 3) if n is None else n
    m = rng.randint(0, 3) if m is None else m
    if backend == "perm":
        return random_permutation(rng, n)
    if backend == "fun":
        return random_function(rng, n, max(m, 1 if n else 0))
    b = get_backend(backend)
    if backend == "linrel":
        from .semantics.linrel import LinearRelation
        vecs = [[Fraction(rng.randint(-2, 2)) for _ in range(n + m)]
                for _ in range(rng.randint(0, n + m))]
        return LinearRelation.spanned_by(n, m, vecs)
    if backend == "qubit":
        import numpy as np
        from .semantics.backends import QubitMap
        a = np.array([[complex(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(2 ** n)]
                      for _ in range(2 ** m)], dtype=complex)
        return QubitMap(a)
    lo = -3 if b.semiring.negatives else 0
    if backend == "rat":
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(m)]
    else:
        rows = random_matrix(rng, m, n, lo, 3)
    return b.matrix(rows, (m, n))


def random_box_term(rng: random.Random, backend: str, max_depth: int = 3) -> Diagram:
    """A term built from boxes with ``;``, ``*`` and symmetries."""
    from .boxes import box, box_on_wires
    from .wires import regroup

    def go(depth: int, dom: Obj | None) -> Diagram:
        if depth == 0 or rng.random() < 0.3:
            n = dom.global_size if dom is not None else rng.randint(0, 2)
            if backend == "perm":
                v = random_value(rng, backend, n, n)
            else:
                v = random_value(rng, backend, n, rng.randint(0, 2))
            d = box(v, backend) if rng.random() < 0.5 else box_on_wires(v, backend)
            if dom is not None and d.dom != dom:
                d = Seq(regroup(dom, d.dom), d)
            return d
        roll = rng.random()
        if roll < 0.45:
            f = go(depth - 1, dom)
            return Seq(f, go(depth - 1, f.cod))
        if roll < 0.9 and dom is None:
            f, g = go(depth - 1, None), go(depth - 1, None)
            if rng.random() < 0.3 and f.cod and g.cod:
                return Seq(Par(f, g), Sym(f.cod, g.cod))
            return Par(f, g)
        return go(depth - 1, dom)

    return go(max_depth, None)


def random_term_any(rng: random.Random, lang: GraphicalLanguage) -> Diagram:
    """A mix of the generators above, for parse/print round trips."""
    roll = rng.random()
    if roll < 0.35:
        return random_wire_term(rng)
    if roll < 0.7:
        return random_sl_term(rng, lang)
    if roll < 0.85:
        return random_base_term(rng, lang)
    return random_box_term(rng, rng.choice(["nat", "int", "perm", "fun", "f2"]), 2)


__all__ = [
    "random_obj", "bracket", "random_wire_term", "random_base_term",
    "random_composable_pair", "random_sl_term", "random_permutation",
    "random_function", "random_matrix", "random_value", "random_box_term",
    "random_term_any",
]
