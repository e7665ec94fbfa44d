"""JSON documents for signatures and languages.

Signature::

    {"discipline": "mono" | "sized",
     "generators": [{"name": ..., "dom": [..], "cod": [..], "param": ...}]}

A language document adds ``"equations": [{"lhs": EXPR, "rhs": EXPR}]`` with
expressions in the text syntax of :mod:`scaprop.dsl` (an optional ``"name"``
is kept).  Sized signatures may use dividers and gatherers unless a
``"structural"`` list says otherwise.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import Equation, GeneratorDecl, GraphicalLanguage, Signature
from .dsl import parse, print_diagram
from .errors import ParseError


def signature_to_json(sig: Signature) -> dict:
    doc = {
        "discipline": sig.discipline,
        "generators": [{"name": g.name, "dom": list(g.dom), "cod": list(g.cod),
                        "param": g.param} for g in sig.generators],
    }
    if sig.discipline == "sized" and sig.structural != {"div", "gat"}:
        doc["structural"] = sorted(sig.structural)
    return doc


def signature_from_json(doc: dict) -> Signature:
    try:
        discipline = doc["discipline"]
        gens = tuple(GeneratorDecl(g["name"], g["dom"], g["cod"], g.get("param", "none"))
                     for g in doc.get("generators", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed signature document: {exc}") from None
    default = ["div", "gat"] if discipline == "sized" else []
    return Signature(discipline, gens, frozenset(doc.get("structural", default)))


def language_to_json(lang: GraphicalLanguage) -> dict:
    doc = signature_to_json(lang.sig)
    doc["equations"] = [{"lhs": print_diagram(e.lhs), "rhs": print_diagram(e.rhs),
                         **({"name": e.name} if e.name else {})} for e in lang.equations]
    return doc


def language_from_json(doc: dict, name: str = "") -> GraphicalLanguage:
    sig = signature_from_json(doc)
    eqs = []
    for i, e in enumerate(doc.get("equations", [])):
        try:
            lhs, rhs = e["lhs"], e["rhs"]
        except (KeyError, TypeError):
            raise ParseError(f"equation {i} needs 'lhs' and 'rhs'") from None
        eqs.append(Equation(parse(lhs, sig), parse(rhs, sig), e.get("name", f"eq{i}")))
    return GraphicalLanguage(sig, tuple(eqs), doc.get("name", name))


def _load(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", exc.lineno, exc.colno) from None


def load_signature(path: str | Path) -> Signature:
    return signature_from_json(_load(path))


def load_language(path: str | Path) -> GraphicalLanguage:
    return language_from_json(_load(path), Path(path).stem)


def dump_language(lang: GraphicalLanguage) -> str:
    return json.dumps(language_to_json(lang), indent=2, ensure_ascii=False)
