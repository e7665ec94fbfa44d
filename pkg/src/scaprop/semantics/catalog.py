"""The standard interpretations and box flavors.

Interpretations (CLI names): ``perm``, ``fun``, ``nat``, ``int``, ``bool``,
``sat2``, ``f2``, ``linrel``, ``zh``, ``zw``, ``zx``.  A flavor ties a box
backend to the base language and interpretation in which its values can be
drawn (used by unboxing).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .. import languages
from ..core import Diagram, GraphicalLanguage
from ..errors import BackendError
from ..wires import Permutation
from .backends import FinFunction, QubitMap, get_backend
from .evaluate import Interpretation
from .linrel import LinearRelation

# Qubit matrices shared by the three bialgebras (comonoid) and their monoids
QUBIT_BCOMON = [[1, 0], [0, 0], [0, 0], [0, 1]]
QUBIT_BCOUNIT = [[1, 1]]
QUBIT_UNIT = [[1], [0]]
ZH_MON = [[1, 1, 1, 0], [0, 0, 0, 1]]
ZW_MON = [[1, 0, 0, 0], [0, 1, 1, 0]]
ZX_MON = [[1, 0, 0, 1], [0, 1, 1, 0]]
ZX_BMON = [[1, 0, 0, 0], [0, 0, 0, 1]]
ZX_BUNIT = [[1], [1]]


def _mat(backend: str, rows, shape=None):
    b = get_backend(backend)
    return b.matrix(rows, shape)


def _bialgebra_values(backend: str) -> dict:
    return {
        "mon": _mat(backend, [[1, 1]]),
        "unit": _mat(backend, [[]], (1, 0)),
        "bcomon": _mat(backend, [[1], [1]]),
        "bcounit": _mat(backend, [], (0, 1)),
    }


def _qubit(rows) -> QubitMap:
    return QubitMap(np.array(rows, dtype=complex))


def _qubit_values(mon) -> dict:
    return {"mon": _qubit(mon), "unit": _qubit(QUBIT_UNIT),
            "bcomon": _qubit(QUBIT_BCOMON), "bcounit": _qubit(QUBIT_BCOUNIT)}


def _rel(n: int, m: int, vecs) -> LinearRelation:
    return LinearRelation.spanned_by(n, m, vecs)


def _linrel_values() -> dict:
    copy = [[1, 1, 1]]
    return {
        "mon": _rel(2, 1, [[1, 0, 1], [0, 1, 1]]),      # x + y = z
        "unit": _rel(0, 1, []),                          # {0}
        "bcomon": _rel(1, 2, copy),
        "bcounit": _rel(1, 0, [[1]]),                    # Q x {0}
        "comon": _rel(1, 2, [[1, 1, 0], [1, 0, 1]]),     # x = y + z
        "counit": _rel(1, 0, []),
        "bmon": _rel(2, 1, copy),
        "bunit": _rel(0, 1, [[1]]),                      # {0} x Q
    }


@lru_cache(maxsize=None)
def std_interpretations() -> dict[str, Interpretation]:
    cat = {
        "perm": Interpretation("perm", languages.permutations(), get_backend("perm"),
                               {"swap": Permutation((1, 0))}),
        "fun": Interpretation("fun", languages.monoid(), get_backend("fun"),
                              {"mon": FinFunction((0, 0), 1), "unit": FinFunction((), 1)}),
    }
    for name in ("nat", "bool", "sat2", "f2"):
        cat[name] = Interpretation(name, languages.bialgebra(), get_backend(name),
                                   _bialgebra_values(name))
    cat["int"] = Interpretation("int", languages.hopf(), get_backend("int"),
                                {**_bialgebra_values("int"), "ant": _mat("int", [[-1]])})
    cat["linrel"] = Interpretation("linrel", languages.interacting(), get_backend("linrel"),
                                   _linrel_values())
    qb = get_backend("qubit")
    cat["zh"] = Interpretation("zh", languages.bialgebra(), qb, _qubit_values(ZH_MON))
    cat["zw"] = Interpretation("zw", languages.bialgebra(), qb, _qubit_values(ZW_MON))
    cat["zx"] = Interpretation("zx", languages.zx_bialgebra(), qb,
                               {**_qubit_values(ZX_MON), "bmon": _qubit(ZX_BMON),
                                "bunit": _qubit(ZX_BUNIT)})
    return cat


def get_interpretation(name: str) -> Interpretation:
    try:
        return std_interpretations()[name]
    except KeyError:
        raise BackendError(f"unknown interpretation {name!r}; known: "
                           f"{sorted(std_interpretations())}") from None


@dataclass(frozen=True)
class Flavor:
    """How values of a box backend are drawn in a base language."""

    name: str
    box_backend: str
    language: GraphicalLanguage
    interpretation: Interpretation
    value_to_diagram: Callable[..., Diagram]


@lru_cache(maxsize=None)
def flavors() -> dict[str, Flavor]:
    from ..boxes import function_to_diagram, matrix_to_diagram, permutation_to_diagram
    interps = std_interpretations()
    out = {
        "perm": Flavor("perm", "perm", languages.permutations(), interps["perm"],
                       permutation_to_diagram),
        "fun": Flavor("fun", "fun", languages.monoid(), interps["fun"], function_to_diagram),
        "int": Flavor("int", "int", languages.hopf(), interps["int"],
                      lambda a: matrix_to_diagram(a, antipode="ant")),
    }
    for name in ("nat", "bool", "sat2", "f2"):
        out[name] = Flavor(name, name, languages.bialgebra(), interps[name], matrix_to_diagram)
    return out


def get_flavor(name: str) -> Flavor:
    try:
        return flavors()[name]
    except KeyError:
        raise BackendError(f"no unboxing flavor for backend {name!r}") from None


__all__ = ["std_interpretations", "get_interpretation", "Flavor", "flavors",
           "get_flavor", "ZH_MON", "ZW_MON", "ZX_MON"]
