"""Text syntax for diagrams.

::

    term   := factor (';' factor)*          sequential, left to right
    factor := atom ('*' atom)*              parallel
    atom   := 'id<' obj '>' | 'sym<' side ',' side '>'
            | 'div<' n '>' | 'gat<' n '>'
            | 'split<' obj '>' | 'gather<' obj '>'
            | 'scale<' k '>(' term ')'
            | 'box<' backend '>[' literal ']'
            | NAME [ '(' params ')' ] | '(' term ')'
    obj    := INT (',' INT)*                '0' is the empty object
    side   := INT | '(' obj ')'             a single cable, or any object

Both operators associate to the left.  :func:`print_diagram` inserts only
the parentheses needed so that ``parse(print_diagram(d)) == d``.
"""
from __future__ import annotations

from fractions import Fraction

from .core import (Box, Diagram, Div, Gat, Gen, GraphicalLanguage, Id, Obj,
                   Par, Seq, Signature, Sym, typecheck)
from .errors import BoundaryMismatch, ParseError, ScapropError

KEYWORDS = {"id", "sym", "div", "gat", "split", "gather", "scale", "box"}
_SEQ, _PAR, _ATOM = 0, 1, 2


def _signature(sig) -> Signature:
    if isinstance(sig, Signature):
        return sig
    if isinstance(sig, GraphicalLanguage):
        return sig.sig
    if hasattr(sig, "sig"):
        return sig.sig
    raise TypeError(f"expected a signature or language, got {type(sig).__name__}")


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.pos = 0
        self.sig = sig

    # -- scanning ---------------------------------------------------------

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, *self.where(pos))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        word = self.text[start:self.pos]
        if not word or not (word[0].isalpha() or word[0] == "_"):
            self.pos = start
            raise self.error("expected a name")
        return word

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a non-negative integer")
        return int(self.text[start:self.pos])

    def raw(self, open_: str, close: str) -> str:
        """Text up to the bracket closing the one just consumed."""
        depth, start = 1, self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == open_:
                depth += 1
            elif ch == close:
                depth -= 1
                if depth == 0:
                    self.pos += 1
                    return self.text[start:self.pos - 1]
            self.pos += 1
        raise self.error(f"unclosed {open_!r}", start - 1)

    # -- grammar ----------------------------------------------------------

    def obj(self) -> Obj:
        start = self.pos
        sizes = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            sizes.append(self.integer())
        if sizes == [0]:
            return Obj()
        if 0 in sizes:
            raise self.error("wire sizes must be positive (use 0 alone for the empty object)",
                             start)
        return Obj(sizes)

    def side(self) -> Obj:
        if self.peek() == "(":
            self.pos += 1
            o = self.obj()
            self.expect(")")
            return o
        n = self.integer()
        return Obj((n,)) if n else Obj()

    def positive(self, what: str) -> int:
        start = self.pos
        n = self.integer()
        if n < 1:
            raise self.error(f"{what} must be at least 1", start)
        return n

    def combine(self, left: Diagram, right: Diagram, at: int) -> Diagram:
        try:
            return Seq(left, right)
        except BoundaryMismatch as exc:
            line, col = self.where(at)
            raise BoundaryMismatch(f"{line}:{col} in {print_diagram(left)} ; "
                                   f"{print_diagram(right)}", exc.expected, exc.found) from None

    def term(self) -> Diagram:
        d = self.factor()
        while self.peek() == ";":
            at = self.pos
            self.pos += 1
            d = self.combine(d, self.factor(), at)
        return d

    def factor(self) -> Diagram:
        d = self.atom()
        while self.peek() == "*":
            self.pos += 1
            d = Par(d, self.atom())
        return d

    def atom(self) -> Diagram:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            d = self.term()
            self.expect(")")
            return d
        if not ch:
            raise self.error("unexpected end of input")
        start = self.pos
        word = self.name()
        if word in KEYWORDS and self.peek() == "<":
            return self.keyword(word, start)
        return self.generator(word, start)

    def keyword(self, word: str, start: int) -> Diagram:
        from .scalable import multiplex
        from .wires import gather_obj, split_obj
        self.expect("<")
        if word == "id":
            d = Id(self.obj())
        elif word == "sym":
            a = self.side()
            self.expect(",")
            d = Sym(a, self.side())
        elif word == "div":
            d = Div(self.positive("divider size"))
        elif word == "gat":
            d = Gat(self.positive("gatherer size"))
        elif word in ("split", "gather"):
            o = self.obj()
            self.expect(">")
            return split_obj(o) if word == "split" else gather_obj(o)
        elif word == "scale":
            k = self.positive("scale factor")
            self.expect(">")
            self.expect("(")
            inner = self.term()
            self.expect(")")
            return multiplex(inner, k)
        else:  # box
            return self.box(start)
        self.expect(">")
        return d

    def box(self, start: int) -> Diagram:
        from .boxes import box
        from .semantics.backends import get_backend
        backend = self.name()
        self.expect(">")
        self.expect("[")
        lit_pos = self.pos
        literal = self.raw("[", "]")
        try:
            b = get_backend(backend)
        except ScapropError:
            raise self.error(f"unknown box backend {backend!r}", start) from None
        try:
            value = b.parse(literal)
        except ParseError as exc:
            raise self.error(f"bad {backend} literal: {exc}", lit_pos) from None
        return box(value, b)

    def generator(self, name: str, start: int) -> Diagram:
        decl = self.sig[name]
        params = ()
        if self.pos < len(self.text) and self.peek() == "(" and decl.param != "none":
            self.pos += 1
            raw_pos = self.pos
            body = self.raw("(", ")")
            params = tuple(_parse_param(decl.param, p.strip(), self, raw_pos)
                           for p in body.split(","))
        return decl(*params)


def _parse_param(sort: str, text: str, parser: _Parser, pos: int):
    try:
        if sort == "rational":
            v = Fraction(text)
            return int(v) if v.denominator == 1 else v
        if sort == "complex":
            return complex(text.replace("i", "j").replace(" ", ""))
        if text.isidentifier():
            return text
    except (ValueError, ZeroDivisionError):
        pass
    raise parser.error(f"bad {sort} parameter {text!r}", pos)


def parse(text: str, sig, check: bool = True) -> Diagram:
    """Parse ``text`` against a signature (or language); with ``check`` the
    result is also typechecked, so dividers need a sized signature."""
    s = _signature(sig)
    p = _Parser(text, s)
    d = p.term()
    if p.peek():
        raise p.error(f"unexpected {p.peek()!r}")
    if check:
        typecheck(d, s)
    return d


# ---------------------------------------------------------------------------
# Printing


def format_obj(o: Obj) -> str:
    return ",".join(map(str, o)) if o else "0"


def _side(o: Obj) -> str:
    return str(o[0]) if len(o) == 1 else f"({format_obj(o)})"


def format_param(p) -> str:
    if isinstance(p, complex):
        im = repr(p.imag)
        return f"{p.real!r}{'' if im.startswith('-') else '+'}{im}i"
    return str(p)


def _print(d: Diagram, ctx: int) -> str:
    if isinstance(d, Seq):
        s = f"{_print(d.first, _SEQ)} ; {_print(d.second, _PAR)}"
        return f"({s})" if ctx > _SEQ else s
    if isinstance(d, Par):
        s = f"{_print(d.left, _PAR)} * {_print(d.right, _ATOM)}"
        return f"({s})" if ctx > _PAR else s
    if isinstance(d, Gen):
        if d.params:
            return f"{d.name}({', '.join(format_param(p) for p in d.params)})"
        return d.name
    if isinstance(d, Id):
        return f"id<{format_obj(d.obj)}>"
    if isinstance(d, Sym):
        return f"sym<{_side(d.left)},{_side(d.right)}>"
    if isinstance(d, Div):
        return f"div<{d.n}>"
    if isinstance(d, Gat):
        return f"gat<{d.n}>"
    if isinstance(d, Box):
        from .semantics.backends import get_backend
        return f"box<{d.backend}>[{get_backend(d.backend).format(d.value)}]"
    raise TypeError(f"not a diagram: {d!r}")


def print_diagram(d: Diagram) -> str:
    return _print(d, _SEQ)


def explode_identities(d: Diagram) -> Diagram:
    """Write every multi-cable identity as a parallel composite of
    single-cable identities (display form)."""
    if isinstance(d, Id) and len(d.obj) > 1:
        out = Id(Obj(d.obj[:1]))
        for s in d.obj[1:]:
            out = Par(out, Id(Obj((s,))))
        return out
    if isinstance(d, Seq):
        return Seq(explode_identities(d.first), explode_identities(d.second))
    if isinstance(d, Par):
        return Par(explode_identities(d.left), explode_identities(d.right))
    return d
