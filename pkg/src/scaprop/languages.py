"""The standard graphical languages.

``permutations``   the swap with involution and Yang-Baxter
``monoid``         commutative monoid (mon, unit)
``bialgebra``      monoid + comonoid (bcomon, bcounit) + bialgebra laws
``hopf``           bialgebra + antipode ``ant``
``interacting``    bialgebra + its mirror (comon, counit, bmon, bunit)
                   + Frobenius, special and scalar laws
``zx_bialgebra``   bialgebra + bmon, bunit (needed for cups and caps)
``dividers`` / ``gatherers`` / ``wire_calculus``  the sized wire languages;
the expansion and elimination families are truncated at ``max_size``.
"""
from __future__ import annotations

from functools import lru_cache

from .core import (Div, Equation, Gat, GeneratorDecl, GraphicalLanguage, Id,
                   Obj, Par, Seq, Signature, Sym, language_extend,
                   language_op, language_quotient, language_sum, ones, seq)

DEFAULT_MAX_SIZE = 4


def _id(n: int = 1) -> Id:
    return Id(ones(n))


_SWAP = Sym(ones(1), ones(1))


@lru_cache(maxsize=None)
def permutations() -> GraphicalLanguage:
    sig = Signature("mono", (GeneratorDecl("swap", ones(2), ones(2)),))
    s = sig.gen("swap")
    eqs = (
        Equation(Seq(s, s), _id(2), "inv"),
        Equation(seq(Par(s, _id()), Par(_id(), s), Par(s, _id())),
                 seq(Par(_id(), s), Par(s, _id()), Par(_id(), s)), "yb"),
    )
    return GraphicalLanguage(sig, eqs, "P")


@lru_cache(maxsize=None)
def monoid() -> GraphicalLanguage:
    sig = Signature("mono", (GeneratorDecl("mon", ones(2), ones(1)),
                             GeneratorDecl("unit", ones(0), ones(1))))
    mon, unit = sig.gen("mon"), sig.gen("unit")
    eqs = (
        Equation(Seq(Par(mon, _id()), mon), Seq(Par(_id(), mon), mon), "assoc"),
        Equation(Seq(Par(unit, _id()), mon), _id(), "unit"),
        Equation(Seq(_SWAP, mon), mon, "cmt"),
    )
    return GraphicalLanguage(sig, eqs, "M")


@lru_cache(maxsize=None)
def bialgebra() -> GraphicalLanguage:
    co = language_op(monoid(), {"mon": "bcomon", "unit": "bcounit"})
    pre = language_sum(monoid(), co)
    g = pre.gen
    mon, unit, bcomon, bcounit = g("mon"), g("unit"), g("bcomon"), g("bcounit")
    eqs = (
        Equation(Seq(mon, bcomon),
                 seq(Par(bcomon, bcomon), Par(Par(_id(), _SWAP), _id()), Par(mon, mon)),
                 "bialg"),
        Equation(Seq(unit, bcomon), Par(unit, unit), "cp"),
        Equation(Seq(mon, bcounit), Par(bcounit, bcounit), "cocp"),
        Equation(Seq(unit, bcounit), Id(Obj()), "sca"),
    )
    return language_quotient(pre, eqs, "B")


@lru_cache(maxsize=None)
def hopf() -> GraphicalLanguage:
    pre = language_extend(bialgebra(), [GeneratorDecl("ant", ones(1), ones(1))])
    g = pre.gen
    hopf_law = Equation(seq(g("bcomon"), Par(g("ant"), _id()), g("mon")),
                        Seq(g("bcounit"), g("unit")), "hopf")
    return language_quotient(pre, [hopf_law], "H")


MIRROR = {"mon": "comon", "unit": "counit", "bcomon": "bmon", "bcounit": "bunit"}


@lru_cache(maxsize=None)
def interacting() -> GraphicalLanguage:
    pre = language_sum(bialgebra(), language_op(bialgebra(), MIRROR))
    g = pre.gen
    eqs = (
        Equation(Seq(Par(g("bcomon"), _id()), Par(_id(), g("bmon"))),
                 Seq(g("bmon"), g("bcomon")), "bfrob"),
        Equation(Seq(g("bcomon"), g("bmon")), _id(), "bspe"),
        Equation(Seq(Par(g("comon"), _id()), Par(_id(), g("mon"))),
                 Seq(g("mon"), g("comon")), "wfrob"),
        Equation(Seq(g("comon"), g("mon")), _id(), "wspe"),
        Equation(Seq(g("bunit"), g("bcounit")), Id(Obj()), "bsca"),
        Equation(Seq(g("unit"), g("counit")), Id(Obj()), "wsca"),
    )
    return language_quotient(pre, eqs, "IH")


@lru_cache(maxsize=None)
def zx_bialgebra() -> GraphicalLanguage:
    """The bialgebra with the transposes of the copy spider added, so that
    cups and caps can be drawn."""
    return language_extend(bialgebra(), [GeneratorDecl("bmon", ones(2), ones(1)),
                                         GeneratorDecl("bunit", ones(0), ones(1))],
                           "ZX")


@lru_cache(maxsize=None)
def dividers() -> GraphicalLanguage:
    return GraphicalLanguage(Signature("sized", (), {"div"}), (), "D")


@lru_cache(maxsize=None)
def gatherers() -> GraphicalLanguage:
    return GraphicalLanguage(Signature("sized", (), {"gat"}), (), "G")


def wire_equations(max_size: int = DEFAULT_MAX_SIZE) -> list[Equation]:
    eqs = []
    for n in range(1, max_size + 1):
        eqs.append(Equation(Seq(Div(n), Gat(n)), Id(Obj((n + 1,))), f"exp_{n}"))
        eqs.append(Equation(Seq(Gat(n), Div(n)), Id(Obj((1, n))), f"elim_{n}"))
    return eqs


@lru_cache(maxsize=None)
def wire_calculus(max_size: int = DEFAULT_MAX_SIZE) -> GraphicalLanguage:
    return language_quotient(language_sum(dividers(), gatherers()),
                             wire_equations(max_size), "W")


LANGUAGES = {
    "P": permutations, "M": monoid, "B": bialgebra, "H": hopf,
    "IH": interacting, "ZX": zx_bialgebra, "W": wire_calculus,
}


def get_language(name: str) -> GraphicalLanguage:
    try:
        return LANGUAGES[name]()
    except KeyError:
        raise KeyError(f"unknown language {name!r}; known: {sorted(LANGUAGES)}") from None
