"""Semantic props: values with identity, composition, tensor and symmetries.

Every backend exposes the same small API so that the evaluator can fold a
diagram into any of them.  ``compose(f, g)`` means ``f`` first, then ``g``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import BackendError, BadArity, DimensionMismatch, ParseError
from ..linalg import format_entry, format_matrix, parse_matrix
from ..wires import Permutation
from .semirings import SEMIRINGS, Semiring

QUBIT_ATOL = 1e-9


class Backend:
    name = ""

    def identity(self, n: int):
        return self.permutation(Permutation.identity(n))

    def compose(self, f, g):
        raise NotImplementedError

    def tensor(self, f, g):
        raise NotImplementedError

    def permutation(self, perm: Permutation):
        raise NotImplementedError

    def permute_inputs(self, perm: Permutation, v):
        """``perm`` followed by ``v``."""
        return self.compose(self.permutation(perm), v)

    def permute_outputs(self, v, perm: Permutation):
        """``v`` followed by ``perm``."""
        return self.compose(v, self.permutation(perm))

    def symmetry(self, a: int, b: int):
        return self.permutation(Permutation.block(a, b))

    def arity(self, v) -> tuple[int, int]:
        raise NotImplementedError

    def equal(self, f, g) -> bool:
        return self.arity(f) == self.arity(g) and f == g

    def coerce(self, v):
        """Accept a backend value or a convenient Python description of one."""
        return v

    def format(self, v) -> str:
        return str(v)

    def parse(self, text: str):
        raise NotImplementedError

    def _check_composable(self, f, g):
        if self.arity(f)[1] != self.arity(g)[0]:
            raise DimensionMismatch(
                f"cannot compose {self.arity(f)} with {self.arity(g)} in {self.name}")

    def __repr__(self):
        return f"<backend {self.name}>"


# ---------------------------------------------------------------------------
# Permutations


class PermBackend(Backend):
    name = "perm"

    def compose(self, f, g):
        self._check_composable(f, g)
        return f.then(g)

    def tensor(self, f, g):
        return f.tensor(g)

    def permutation(self, perm):
        return perm

    def arity(self, v):
        return v.n, v.n

    def coerce(self, v):
        return v if isinstance(v, Permutation) else Permutation(tuple(v))

    def format(self, v):
        return str(v)

    def parse(self, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ParseError(f"permutation literal must look like [2 1], got {text!r}")
        try:
            images = tuple(int(t) - 1 for t in text[1:-1].replace(",", " ").split())
            return Permutation(images)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Finite functions


@dataclass(frozen=True)
class FinFunction:
    """A function ``{0..n-1} -> {0..cod-1}`` given by its table."""

    table: tuple[int, ...]
    cod: int

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(x) for x in self.table))
        if self.cod < 0 or any(not 0 <= x < self.cod for x in self.table):
            raise BadArity(f"function table {self.table} does not land in {self.cod}")

    @property
    def dom(self) -> int:
        return len(self.table)

    def __str__(self):
        return f"{self.dom}->{self.cod}:" + ",".join(str(x + 1) for x in self.table)


class FunBackend(Backend):
    name = "fun"

    def compose(self, f, g):
        self._check_composable(f, g)
        return FinFunction(tuple(g.table[x] for x in f.table), g.cod)

    def tensor(self, f, g):
        return FinFunction(f.table + tuple(f.cod + x for x in g.table), f.cod + g.cod)

    def permutation(self, perm):
        return FinFunction(perm.images, perm.n)

    def permute_inputs(self, perm, v):
        return FinFunction(tuple(v.table[x] for x in perm.images), v.cod)

    def permute_outputs(self, v, perm):
        return FinFunction(tuple(perm.images[x] for x in v.table), v.cod)

    def arity(self, v):
        return v.dom, v.cod

    def coerce(self, v):
        if isinstance(v, FinFunction):
            return v
        table, cod = v
        return FinFunction(tuple(table), cod)

    def parse(self, text):
        m = re.fullmatch(r"\s*(\d+)\s*->\s*(\d+)\s*:\s*([\d,\s]*)", text)
        if not m:
            raise ParseError(f"function literal must look like 2->1:1,1, got {text!r}")
        n, cod = int(m.group(1)), int(m.group(2))
        body = m.group(3).strip()
        table = tuple(int(t) - 1 for t in body.split(",")) if body else ()
        if len(table) != n:
            raise ParseError(f"function literal declares {n} inputs, lists {len(table)}")
        try:
            return FinFunction(table, cod)
        except BadArity as exc:
            raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Semiring matrices; the tensor product is the direct sum


class Matrix:
    """An immutable ``rows x cols`` matrix over a semiring.

    A morphism ``n -> m`` is an ``m x n`` matrix.
    """

    __slots__ = ("data", "semiring", "_key")

    def __init__(self, data, semiring: Semiring, shape: tuple[int, int] | None = None):
        arr = np.array(data, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        if arr.ndim != 2:
            raise BadArity(f"matrix data must be two-dimensional, got shape {arr.shape}")
        if arr.size:
            arr = np.frompyfunc(semiring.reduce, 1, 1)(arr).astype(object)
        self.data = arr
        self.semiring = semiring
        self._key = None

    @classmethod
    def _raw(cls, arr: np.ndarray, semiring: Semiring) -> "Matrix":
        out = cls.__new__(cls)
        out.data = arr
        out.semiring = semiring
        out._key = None
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def tolist(self) -> list[list]:
        return self.data.tolist()

    def key(self):
        if self._key is None:
            self._key = (self.semiring.name, self.shape, tuple(self.data.ravel().tolist()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __getitem__(self, idx):
        return self.data[idx]

    def __repr__(self):
        return f"Matrix[{self.semiring.name}]({format_matrix(self.tolist(), self.shape)})"


def _reduce_array(arr: np.ndarray, semiring: Semiring) -> np.ndarray:
    if not arr.size:
        return arr.astype(object)
    return np.frompyfunc(semiring.reduce, 1, 1)(arr).astype(object)


class MatBackend(Backend):
    def __init__(self, semiring: Semiring):
        self.semiring = semiring
        self.name = semiring.name

    def matrix(self, rows, shape=None) -> Matrix:
        return Matrix(rows, self.semiring, shape)

    def compose(self, f, g):
        self._check_composable(f, g)
        return Matrix._raw(_reduce_array(g.data.dot(f.data), self.semiring), self.semiring)

    def tensor(self, f, g):
        out = np.zeros((f.rows + g.rows, f.cols + g.cols), dtype=object)
        out[:f.rows, :f.cols] = f.data
        out[f.rows:, f.cols:] = g.data
        return Matrix._raw(out, self.semiring)

    def permutation(self, perm):
        out = np.zeros((perm.n, perm.n), dtype=object)
        for i, x in enumerate(perm.images):
            out[x, i] = 1
        return Matrix._raw(out, self.semiring)

    def permute_inputs(self, perm, v):
        return Matrix._raw(v.data[:, list(perm.images)], self.semiring)

    def permute_outputs(self, v, perm):
        return Matrix._raw(v.data[list(perm.inverse().images), :], self.semiring)

    def arity(self, v):
        return v.cols, v.rows

    def equal(self, f, g):
        return f.shape == g.shape and f == g

    def coerce(self, v):
        if isinstance(v, Matrix):
            if v.semiring is not self.semiring:
                return Matrix(v.data, self.semiring)
            return v
        return Matrix(v, self.semiring)

    def format(self, v):
        return format_matrix(v.tolist(), v.shape, format_entry)

    def parse(self, text):
        rows, shape = parse_matrix(text)
        try:
            return Matrix(rows, self.semiring, shape)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Qubits; the tensor product is the Kronecker product and wire 0 is the most
# significant bit of a basis index


class QubitMap:
    """A linear map ``(C^2)^n -> (C^2)^m`` as a dense ``2^m x 2^n`` array."""

    __slots__ = ("n", "m", "data")

    def __init__(self, data, n: int | None = None, m: int | None = None):
        arr = np.asarray(data, dtype=complex)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2:
            raise BadArity("qubit maps are two-dimensional arrays")
        rows, cols = arr.shape
        n = cols.bit_length() - 1 if n is None else n
        m = rows.bit_length() - 1 if m is None else m
        if rows != 2 ** m or cols != 2 ** n:
            raise BadArity(f"qubit map shape {arr.shape} is not 2^m x 2^n")
        self.n, self.m, self.data = n, m, arr

    def allclose(self, other: "QubitMap", atol: float = QUBIT_ATOL) -> bool:
        return (self.n, self.m) == (other.n, other.m) and \
            bool(np.allclose(self.data, other.data, rtol=0, atol=atol))

    def __eq__(self, other):
        if not isinstance(other, QubitMap):
            return NotImplemented
        return self.allclose(other)

    __hash__ = None

    def __mul__(self, scalar):
        return QubitMap(self.data * scalar, self.n, self.m)

    __rmul__ = __mul__

    def __repr__(self):
        return f"QubitMap({self.n}->{self.m}, {self.data.tolist()})"


def format_complex(z: complex) -> str:
    re_, im = z.real + 0.0, z.imag + 0.0
    return f"{re_:.12g}{im:+.12g}i"


def parse_complex(tok: str) -> complex:
    tok = tok.strip().replace(" ", "")
    if not tok:
        raise ParseError("empty complex entry")
    try:
        return complex(tok.replace("i", "j"))
    except ValueError:
        pass
    try:
        return complex(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad complex number {tok!r}") from None


class QubitBackend(Backend):
    name = "qubit"

    def compose(self, f, g):
        self._check_composable(f, g)
        return QubitMap(g.data @ f.data, f.n, g.m)

    def tensor(self, f, g):
        return QubitMap(np.kron(f.data, g.data), f.n + g.n, f.m + g.m)

    def permutation(self, perm):
        return self.permute_inputs(perm, QubitMap(np.eye(2 ** perm.n), perm.n, perm.n))

    def permute_inputs(self, perm, v):
        n, m = v.n, v.m
        arr = v.data.reshape((2 ** m,) + (2,) * n)
        arr = arr.transpose([0] + [1 + perm.images[i] for i in range(n)])
        return QubitMap(arr.reshape(2 ** m, 2 ** n), n, m)

    def permute_outputs(self, v, perm):
        n, m = v.n, v.m
        inv = perm.inverse().images
        arr = v.data.reshape((2,) * m + (2 ** n,))
        arr = arr.transpose([inv[k] for k in range(m)] + [m])
        return QubitMap(arr.reshape(2 ** m, 2 ** n), n, m)

    def arity(self, v):
        return v.n, v.m

    def equal(self, f, g):
        return f.allclose(g)

    def coerce(self, v):
        return v if isinstance(v, QubitMap) else QubitMap(v)

    def format(self, v):
        rows = v.data.tolist()
        return format_matrix(rows, v.data.shape, format_complex)

    def parse(self, text):
        text = text.strip()
        shape = None
        m = re.match(r"^(\d+)x(\d+):", text)
        if m:
            shape = (int(m.group(1)), int(m.group(2)))
            text = text[m.end():].strip()
        rows = [[parse_complex(e) for e in row.split(",")] for row in text.split(";")] \
            if text else []
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ParseError("ragged matrix literal")
        if not rows:
            if shape is None:
                raise ParseError("empty qubit literal needs a shape prefix")
            arr = np.zeros(shape, dtype=complex)
        else:
            arr = np.array(rows, dtype=complex)
        try:
            return QubitMap(arr)
        except BadArity as exc:
            raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Registry


_BACKENDS: dict[str, Backend] = {}


def get_backend(name: str) -> Backend:
    """Backend by id: perm, fun, nat, int, bool, sat2, f2, rat, linrel, qubit."""
    if not _BACKENDS:
        _BACKENDS["perm"] = PermBackend()
        _BACKENDS["fun"] = FunBackend()
        for s in SEMIRINGS.values():
            _BACKENDS[s.name] = MatBackend(s)
        _BACKENDS["qubit"] = QubitBackend()
        from .linrel import LinRelBackend
        _BACKENDS["linrel"] = LinRelBackend()
    try:
        return _BACKENDS[name]
    except KeyError:
        raise BackendError(f"unknown backend {name!r}") from None


def backend_of(value) -> Backend:
    """The backend a value natively belongs to."""
    from .linrel import LinearRelation
    if isinstance(value, Permutation):
        return get_backend("perm")
    if isinstance(value, FinFunction):
        return get_backend("fun")
    if isinstance(value, Matrix):
        return get_backend(value.semiring.name)
    if isinstance(value, QubitMap):
        return get_backend("qubit")
    if isinstance(value, LinearRelation):
        return get_backend("linrel")
    raise BackendError(f"no backend for values of type {type(value).__name__}")
