"""Graphviz (dot) rendering of diagrams.

Every generator, box, divider and gatherer becomes a node; every input and
output cable of the whole diagram becomes a point node.  Edges carry the
size of the cable they stand for and nodes are ranked by depth.  Node ids
are assigned in left-to-right term order, so the output is deterministic.
"""
from __future__ import annotations

from .core import Box, Diagram, Div, Gat, Gen, Id, Par, Seq, Sym
from .dsl import format_param


def _label(d: Diagram) -> str:
    if isinstance(d, Gen):
        if d.params:
            return f"{d.name}({', '.join(format_param(p) for p in d.params)})"
        return d.name
    if isinstance(d, Div):
        return f"div<{d.n}>"
    if isinstance(d, Gat):
        return f"gat<{d.n}>"
    from .semantics.backends import get_backend
    return f"{d.backend}: {get_backend(d.backend).format(d.value)}"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


class _Graph:
    def __init__(self):
        self.nodes: list[tuple[str, str, int]] = []  # id, label, rank
        self.edges: list[tuple[str, str, int]] = []
        self.rank: dict[str, int] = {}

    def walk(self, d: Diagram, inputs: list[tuple[str, int]]) -> list[tuple[str, int]]:
        """``inputs`` holds one ``(source node, size)`` per input cable."""
        if isinstance(d, Id):
            return inputs
        if isinstance(d, Sym):
            k = len(d.left)
            return inputs[k:] + inputs[:k]
        if isinstance(d, Seq):
            return self.walk(d.second, self.walk(d.first, inputs))
        if isinstance(d, Par):
            k = len(d.left.dom)
            return self.walk(d.left, inputs[:k]) + self.walk(d.right, inputs[k:])
        if isinstance(d, (Gen, Box, Div, Gat)):
            node = f"n{len(self.nodes)}"
            rank = 1 + max((self.rank[src] for src, _ in inputs), default=0)
            self.rank[node] = rank
            self.nodes.append((node, _label(d), rank))
            for src, size in inputs:
                self.edges.append((src, node, size))
            return [(node, size) for size in d.cod]
        raise TypeError(f"not a diagram: {d!r}")


def to_dot(d: Diagram, name: str = "diagram") -> str:
    g = _Graph()
    inputs = [(f"in{i}", size) for i, size in enumerate(d.dom)]
    for src, _ in inputs:
        g.rank[src] = 0
    outputs = g.walk(d, inputs)
    last = 1 + max(g.rank.values(), default=0)
    for i, (src, size) in enumerate(outputs):
        g.edges.append((src, f"out{i}", size))

    lines = [f"digraph {_quote(name)} {{", "  rankdir=TB;", "  node [shape=box];"]
    for i in range(len(d.dom)):
        lines.append(f"  in{i} [shape=point];")
    for node, label, _ in g.nodes:
        lines.append(f"  {node} [label={_quote(label)}];")
    for i in range(len(d.cod)):
        lines.append(f"  out{i} [shape=point];")
    for src, dst, size in g.edges:
        lines.append(f"  {src} -> {dst} [label=\"{size}\"];")
    ranks: dict[int, list[str]] = {0: [f"in{i}" for i in range(len(d.dom))]}
    for node, _, rank in g.nodes:
        ranks.setdefault(rank, []).append(node)
    ranks.setdefault(last, []).extend(f"out{i}" for i in range(len(d.cod)))
    for rank in sorted(ranks):
        if ranks[rank]:
            lines.append("  { rank=same; " + " ".join(f"{n};" for n in ranks[rank]) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_stats(text: str) -> tuple[int, int]:
    """``(non-boundary nodes, edges)`` of a document produced by :func:`to_dot`."""
    nodes = sum(1 for ln in text.splitlines() if ln.strip().startswith("n")
                and "[label=" in ln and "->" not in ln)
    edges = sum(1 for ln in text.splitlines() if "->" in ln)
    return nodes, edges
