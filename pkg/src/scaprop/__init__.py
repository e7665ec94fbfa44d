"""Scalable props: string diagrams with sized wires, their normal forms and
their semantics."""
from __future__ import annotations

from .core import (Box, Diagram, Div, Equation, Gat, Gen, GeneratorDecl,
                   GraphicalLanguage, Id, Obj, Par, Seq, Signature, Sym,
                   Translation, apply_translation, cable, global_size,
                   language_op, language_quotient, language_sum, ones, op_diagram,
                   par, permute_cables, seq, typecheck)
from .dsl import parse, print_diagram
from .errors import (BackendError, BoundaryMismatch, ParseError, ScapropError,
                     TypingError, UndeclaredGenerator)
from .scalable import (ScalableLanguage, embed, multiplex, multiplex_indexed,
                       scaled_evaluate, sl_equal, strip, structure_normal_form)
from .semantics.catalog import get_interpretation
from .semantics.evaluate import Interpretation, evaluate
from .wires import (Permutation, normalize_wiring, split_obj, gather_obj,
                    wiring_from_normal_form)

__version__ = "0.1.0"

__all__ = [
    "Box", "Diagram", "Div", "Equation", "Gat", "Gen", "GeneratorDecl",
    "GraphicalLanguage", "Id", "Obj", "Par", "Seq", "Signature", "Sym",
    "Translation", "apply_translation", "cable", "global_size", "language_op",
    "language_quotient", "language_sum", "ones", "op_diagram", "par",
    "permute_cables", "seq", "typecheck", "parse", "print_diagram",
    "BackendError", "BoundaryMismatch", "ParseError", "ScapropError",
    "TypingError", "UndeclaredGenerator", "ScalableLanguage", "embed",
    "multiplex", "multiplex_indexed", "scaled_evaluate", "sl_equal", "strip",
    "structure_normal_form", "get_interpretation", "Interpretation", "evaluate",
    "Permutation", "normalize_wiring", "split_obj", "gather_obj",
    "wiring_from_normal_form",
]
