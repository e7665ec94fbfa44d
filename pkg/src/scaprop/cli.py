"""``scaprop`` command-line front end.

Exit codes::

    0  success, or "equal" for ``eq``
    1  "not equal" for ``eq``, or a failed self-test
    2  typing error (undeclared generator, boundary mismatch, ...)
    3  parse error (expression syntax, malformed --sig/--lang document,
       bad command line)
    4  backend error (unknown backend, missing assignment, mismatch, ...)

Values go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import random
import sys

from . import languages
from .boxes import boxed_normal_form, matrix_to_diagram, unwrap
from .core import Box, Diagram, GraphicalLanguage, Par
from .dsl import explode_identities, format_obj, parse, print_diagram
from .errors import BackendError, ParseError, ScapropError
from .render import to_dot
from .scalable import (ScalableLanguage, multiplex, strip, structure_normal_form)
from .semantics.backends import get_backend
from .semantics.catalog import std_interpretations
from .semantics.evaluate import Interpretation, backend_interpretation, evaluate
from .serialize import dump_language, load_language, load_signature
from .wires import normalize_wiring, wiring_from_normal_form

DEFAULT_BACKEND = "nat"
EXIT_TRUE, EXIT_FALSE = 0, 1


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 3 so that 2 always means a typing error."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ParseError.exit_code, f"{self.prog}: error: {message}\n")


class Context:
    """The signature used for parsing and the interpretation used for
    evaluation, resolved from the command-line flags."""

    def __init__(self, args: argparse.Namespace):
        self.backend_name = args.backend
        if args.lang:
            base = _read(load_language, args.lang)
        elif args.sig:
            base = GraphicalLanguage(_read(load_signature, args.sig), (), "sig")
        else:
            interp = std_interpretations().get(args.backend or DEFAULT_BACKEND)
            base = interp.language if interp else languages.bialgebra()
        self.language = base
        self.sig = ScalableLanguage(base).sig if base.discipline == "mono" else base.sig

    def parse(self, text: str) -> Diagram:
        return parse(text, self.sig)

    def interpretation(self, d: Diagram) -> Interpretation:
        name = self.backend_name
        if name is None:
            boxed = {n.backend for n in d.nodes() if isinstance(n, Box)}
            name = boxed.pop() if len(boxed) == 1 else DEFAULT_BACKEND
        interp = std_interpretations().get(name)
        if interp is not None:
            return interp
        return backend_interpretation(get_backend(name))


def _read(loader, path):
    try:
        return loader(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _type(d: Diagram) -> str:
    return f"<{format_obj(d.dom)}> -> <{format_obj(d.cod)}>"


# ---------------------------------------------------------------------------
# Commands


def cmd_check(ctx: Context, args) -> int:
    print(_type(ctx.parse(args.expr)))
    return EXIT_TRUE


def cmd_eval(ctx: Context, args) -> int:
    d = ctx.parse(args.expr)
    interp = ctx.interpretation(d)
    print(interp.backend.format(evaluate(d, interp)))
    return EXIT_TRUE


def cmd_eq(ctx: Context, args) -> int:
    d1, d2 = ctx.parse(args.lhs), ctx.parse(args.rhs)
    interp = ctx.interpretation(Par(d1, d2))
    b = interp.backend
    if d1.type != d2.type:
        verdict = f"not equal: types differ, {_type(d1)} vs {_type(d2)}"
        try:
            verdict += f"; values {b.format(evaluate(d1, interp))} vs {b.format(evaluate(d2, interp))}"
        except ScapropError:
            pass
        print(verdict)
        return EXIT_FALSE
    v1, v2 = evaluate(d1, interp), evaluate(d2, interp)
    if b.equal(v1, v2):
        print(f"equal in {interp.name}")
        return EXIT_TRUE
    print(f"not equal in {interp.name}: {b.format(v1)} vs {b.format(v2)}")
    return EXIT_FALSE


def cmd_normalize(ctx: Context, args) -> int:
    d = ctx.parse(args.expr)
    if d.is_wire:
        out = wiring_from_normal_form(normalize_wiring(d))
    elif any(isinstance(n, Box) for n in d.nodes()):
        out = boxed_normal_form(d, ctx.backend_name)
    else:
        out = structure_normal_form(d).reconstitute()
    print(print_diagram(out))
    return EXIT_TRUE


def cmd_strip(ctx: Context, args) -> int:
    print(print_diagram(explode_identities(strip(ctx.parse(args.expr)))))
    return EXIT_TRUE


def cmd_scale(ctx: Context, args) -> int:
    print(print_diagram(multiplex(ctx.parse(args.expr), args.k)))
    return EXIT_TRUE


def cmd_render(ctx: Context, args) -> int:
    sys.stdout.write(to_dot(ctx.parse(args.expr), args.name))
    return EXIT_TRUE


def cmd_language(ctx: Context, args) -> int:
    if args.name is None:
        lang = ctx.language
    elif args.name in languages.LANGUAGES:
        lang = languages.get_language(args.name)
    else:
        raise ParseError(f"unknown language {args.name!r}; known: {sorted(languages.LANGUAGES)}")
    print(dump_language(lang))
    return EXIT_TRUE


def cmd_selftest(ctx: Context, args) -> int:
    raw = os.environ.get("SCAPROP_SEED", "0")
    try:
        seed = int(raw)
    except ValueError:
        raise ParseError(f"SCAPROP_SEED must be an integer, got {raw!r}") from None
    failures = selftest(random.Random(seed), args.count)
    for msg in failures:
        print(f"FAIL {msg}", file=sys.stderr)
    print(f"selftest seed={seed}: {args.count * len(_CHECKS) - len(failures)}"
          f"/{args.count * len(_CHECKS)} checks passed")
    return EXIT_FALSE if failures else EXIT_TRUE


# ---------------------------------------------------------------------------
# Self-test: a few randomized round trips over the bundled interpretations


def _check_wiring(rng):
    from .gen import random_wire_term
    d = random_wire_term(rng)
    nf = normalize_wiring(d)
    back = wiring_from_normal_form(nf)
    return normalize_wiring(back) == nf and back.type == d.type, d


def _check_structure(rng):
    from .gen import random_sl_term
    d = random_sl_term(rng, languages.bialgebra())
    interp = std_interpretations()["nat"]
    nf = structure_normal_form(d).reconstitute()
    ok = nf.type == d.type and interp.backend.equal(evaluate(nf, interp), evaluate(d, interp))
    return ok, d


def _check_matrix_arrow(rng):
    from .gen import random_matrix
    m, n = rng.randint(0, 4), rng.randint(0, 4)
    a = random_matrix(rng, m, n)
    interp = std_interpretations()["nat"]
    value = evaluate(matrix_to_diagram(a, shape=(m, n)), interp)
    return interp.backend.equal(value, interp.backend.matrix(a, (m, n))), a


def _check_round_trip(rng):
    from .gen import random_term_any
    lang = languages.bialgebra()
    d = random_term_any(rng, lang)
    return parse(print_diagram(d), ScalableLanguage(lang).sig) == d, d


def _check_boxes(rng):
    from .gen import random_box_term
    d = random_box_term(rng, rng.choice(["nat", "int", "f2", "perm", "fun"]))
    b = get_backend(next(n.backend for n in d.nodes() if isinstance(n, Box)))
    return b.equal(unwrap(boxed_normal_form(d)), unwrap(d)), d


_CHECKS = {"wiring": _check_wiring, "structure": _check_structure,
           "matrix-arrow": _check_matrix_arrow, "round-trip": _check_round_trip,
           "boxes": _check_boxes}


def selftest(rng: random.Random, count: int = 50) -> list[str]:
    failures = []
    for name, check in _CHECKS.items():
        for _ in range(count):
            ok, witness = check(rng)
            if not ok:
                shown = print_diagram(witness) if isinstance(witness, Diagram) else witness
                failures.append(f"{name}: {shown}")
    return failures


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--sig", metavar="FILE", help="signature document (JSON)")
    src.add_argument("--lang", metavar="FILE", help="language document (JSON)")
    common.add_argument("--backend", metavar="NAME",
                        help="interpretation or box backend (default: nat, or the "
                             "backend of the boxes in the term)")

    parser = _Parser(prog="scaprop", description="Scalable props: typecheck, evaluate, "
                                                 "compare and normalize diagrams.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_)
        for pos, kw in positionals:
            p.add_argument(pos, **kw)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "typecheck and print dom -> cod", ("expr", {}))
    add("eval", cmd_eval, "print the value in the backend", ("expr", {}))
    add("eq", cmd_eq, "decide equality (exit 0 equal, 1 not)", ("lhs", {}), ("rhs", {}))
    add("normalize", cmd_normalize, "print a normal form", ("expr", {}))
    add("strip", cmd_strip, "erase the wire structure", ("expr", {}))
    add("scale", cmd_scale, "print the k-fold multiplexed term",
        ("k", {"type": int}), ("expr", {}))
    r = add("render", cmd_render, "emit a graph document", ("expr", {}))
    r.add_argument("--format", choices=["dot"], default="dot")
    r.add_argument("--name", default="diagram", help="graph name")
    lang = add("language", cmd_language, "print a language document")
    lang.add_argument("name", nargs="?", help=f"one of {sorted(languages.LANGUAGES)}")
    st = add("selftest", cmd_selftest, "randomized self-test (seed: SCAPROP_SEED)")
    st.add_argument("--count", type=int, default=50, help="cases per check")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:   # usage errors and --help
        return exc.code if isinstance(exc.code, int) else 0
    try:
        if args.backend is not None and args.backend not in std_interpretations():
            get_backend(args.backend)
        return args.func(Context(args), args)
    except ScapropError as exc:
        kind = type(exc).__name__
        print(f"scaprop: {kind}: {exc}", file=sys.stderr)
        return exc.exit_code if exc.exit_code > 1 else BackendError.exit_code


if __name__ == "__main__":
    sys.exit(main())
