"""Commutative semirings used as matrix coefficients.

Quotients of the naturals are represented by finite canonical carriers:
``bool`` is {0, 1} (2 = 1), ``sat2`` is {0, 1, 2} with 2 standing for
"at least two" (2 = 3) and ``f2`` is {0, 1} (2 = 0).  Every arithmetic
result is passed through :attr:`Semiring.reduce`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable


def _nat(x):
    x = int(x) if Fraction(x).denominator == 1 else x
    if not isinstance(x, int) or x < 0:
        raise ValueError(f"{x!r} is not a natural number")
    return x


def _int(x):
    if Fraction(x).denominator != 1:
        raise ValueError(f"{x!r} is not an integer")
    return int(x)


def _bool(x):
    return min(_nat(x), 1)


def _sat2(x):
    return min(_nat(x), 2)


def _f2(x):
    return _int(x) % 2


def _rat(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class Semiring:
    name: str
    reduce: Callable
    negatives: bool = False
    carrier: tuple | None = None

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return self.reduce(x + y)

    def mul(self, x, y):
        return self.reduce(x * y)

    def __repr__(self):
        return f"Semiring({self.name})"


NAT = Semiring("nat", _nat)
INT = Semiring("int", _int, negatives=True)
BOOL = Semiring("bool", _bool, carrier=(0, 1))
SAT2 = Semiring("sat2", _sat2, carrier=(0, 1, 2))
F2 = Semiring("f2", _f2, negatives=True, carrier=(0, 1))
RAT = Semiring("rat", _rat, negatives=True)

SEMIRINGS = {s.name: s for s in (NAT, INT, BOOL, SAT2, F2, RAT)}
