from __future__ import annotations

import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scaprop.boxes import (arrow_sum, box, box_backend, box_on_wires, box_rewrite_steps,
                           boxed_normal_form, comp_equation, copy_tree, copy_wires,
                           erase_wires, function_to_diagram, matrix_to_diagram,
                           merge_tree, merge_wires, permutation_to_diagram,
                           swap_equation, tens_equation, unbox, unwrap)
from scaprop.core import Box, Gen, Id, Obj, Par, Seq, Sym, cable, ones
from scaprop.errors import (BackendError, BackendMismatch, BadArity, BoundaryMismatch,
                            NegativeEntry)
from scaprop.gen import random_box_term, random_matrix
from scaprop.semantics.backends import FinFunction, get_backend
from scaprop.semantics.catalog import get_interpretation
from scaprop.wires import Permutation

NAT = get_backend("nat")
INT = get_backend("int")


def census(d):
    return Counter(n.name for n in d.nodes() if isinstance(n, Gen))


def test_box_types():
    b = box(NAT.matrix([[1, 2, 3]]))
    assert b.type == (cable(3), cable(1))
    assert b.backend == "nat"
    assert box(Permutation((1, 0))).type == (cable(2), cable(2))
    assert box(FinFunction((0, 0, 0), 1)).type == (cable(3), cable(1))


def test_box_on_wires():
    d = box_on_wires(NAT.matrix([[1, 1]]))
    assert d.type == (ones(2), ones(1))
    assert unwrap(d) == NAT.matrix([[1, 1]])


def test_box_of_nullary_value_has_empty_sides():
    b = box(NAT.matrix([[]], (1, 0)))
    assert b.type == (Obj(), cable(1))


def test_box_rejects_foreign_values():
    with pytest.raises(BadArity):
        box(object())


def test_box_backend_resolution():
    d = Par(box(NAT.matrix([[1]])), box(NAT.matrix([[2]])))
    assert box_backend(d).name == "nat"
    with pytest.raises(BackendMismatch):
        box_backend(Par(box(NAT.matrix([[1]])), box(INT.matrix([[1]]))))
    with pytest.raises(BackendError):
        box_backend(Id(ones(1)))
    assert box_backend(Id(ones(1)), "f2").name == "f2"


@pytest.mark.parametrize("f,g,expected", [
    ([[1, 1]], [[2]], [[2, 2]]),
    ([[1], [1]], [[1, 1]], [[2]]),
    ([[1, 0], [0, 1]], [[0, 1], [1, 0]], [[0, 1], [1, 0]]),
])
def test_unwrap_composite(f, g, expected):
    d = Seq(box(NAT.matrix(f)), box(NAT.matrix(g)))
    assert unwrap(d).tolist() == expected


def test_unwrap_tensor_is_block_diagonal():
    d = Par(box(NAT.matrix([[1]])), box(NAT.matrix([[2, 3]])))
    assert unwrap(d).tolist() == [[1, 0, 0], [0, 2, 3]]


def test_boxed_normal_form_has_one_box():
    rng = random.Random(31)
    for backend in ("nat", "int", "f2", "perm", "fun"):
        for _ in range(20):
            d = random_box_term(rng, backend)
            nf = boxed_normal_form(d)
            assert nf.type == d.type
            assert sum(isinstance(n, Box) for n in nf.nodes()) == 1
            b = get_backend(backend)
            assert b.equal(unwrap(nf), unwrap(d))


def test_coherence_equations_hold():
    for n, m in [(0, 1), (1, 2), (2, 2)]:
        eq = swap_equation("nat", n, m)
        assert NAT.equal(unwrap(eq.lhs), unwrap(eq.rhs, "nat"))
    f, g = NAT.matrix([[1, 2]]), NAT.matrix([[3], [1]])
    eq = comp_equation(f, g)
    assert NAT.equal(unwrap(eq.lhs), unwrap(eq.rhs))
    eq = tens_equation(f, g)
    assert eq.lhs.type == eq.rhs.type
    assert NAT.equal(unwrap(eq.lhs), unwrap(eq.rhs))


def test_rewrite_steps_preserve_value():
    rng = random.Random(32)
    for _ in range(30):
        d = random_box_term(rng, "nat")
        v = unwrap(d)
        for _rule, e in box_rewrite_steps(d):
            assert e.type == d.type and NAT.equal(unwrap(e), v)


@pytest.mark.parametrize("k,counts", [
    (0, {"bcounit": 1}), (1, {}), (2, {"bcomon": 1}), (4, {"bcomon": 3}),
])
def test_copy_tree_census(k, counts):
    d = copy_tree(k)
    assert d.type == (ones(1), ones(k))
    assert census(d) == Counter(counts)


def test_merge_tree_is_mirror():
    d = merge_tree(3)
    assert d.type == (ones(3), ones(1))
    assert census(d) == Counter({"mon": 2})
    assert census(merge_tree(0)) == Counter({"unit": 1})


def test_matrix_to_diagram_example():
    d = matrix_to_diagram([[1, 0], [2, 1]])
    assert d.type == (ones(2), ones(2))
    assert census(d) == Counter({"bcomon": 2, "mon": 2})
    assert get_interpretation("nat").evaluate(d).tolist() == [[1, 0], [2, 1]]


@pytest.mark.parametrize("shape", [(0, 0), (0, 2), (2, 0)])
def test_empty_matrix_arrows(shape):
    m, n = shape
    d = matrix_to_diagram([[0] * n for _ in range(m)], shape=shape)
    assert d.type == (ones(n), ones(m))
    v = get_interpretation("nat").evaluate(d)
    assert v.shape == (m, n) and not any(x for r in v.tolist() for x in r)


def test_negative_entries_need_antipode():
    with pytest.raises(NegativeEntry):
        matrix_to_diagram([[1, -1]])
    d = matrix_to_diagram([[1, -1]], antipode="ant")
    assert census(d)["ant"] == 1
    assert get_interpretation("int").evaluate(d).tolist() == [[1, -1]]


def test_fractional_entries_rejected():
    with pytest.raises(BadArity):
        matrix_to_diagram([[0.5]])


@settings(max_examples=40)
@given(st.integers(0, 2 ** 32))
def test_matrix_arrows_compose_like_matrices(seed):
    rng = random.Random(seed)
    n, k, m = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
    a, b = random_matrix(rng, k, n), random_matrix(rng, m, k)
    interp = get_interpretation("nat")
    d = Seq(matrix_to_diagram(a, shape=(k, n)), matrix_to_diagram(b, shape=(m, k)))
    expected = [[sum(b[i][t] * a[t][j] for t in range(k)) for j in range(n)] for i in range(m)]
    assert interp.evaluate(d) == NAT.matrix(expected, (m, n))


def test_arrow_sum_adds_matrices():
    rng = random.Random(33)
    interp = get_interpretation("nat")
    for _ in range(20):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        a, b = random_matrix(rng, m, n), random_matrix(rng, m, n)
        d = arrow_sum(matrix_to_diagram(a), matrix_to_diagram(b))
        total = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
        assert interp.evaluate(d).tolist() == total
    with pytest.raises(BoundaryMismatch):
        arrow_sum(matrix_to_diagram([[1]]), matrix_to_diagram([[1, 1]]))


def test_copy_and_merge_wires():
    interp = get_interpretation("nat")
    assert interp.evaluate(copy_wires(2)).tolist() == [[1, 0], [0, 1], [1, 0], [0, 1]]
    assert interp.evaluate(merge_wires(2)).tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert erase_wires(2).type == (ones(2), ones(0))


@pytest.mark.parametrize("table,cod", [
    ((0, 0), 1), ((), 2), ((1, 0, 1), 2), ((2, 0), 3),
])
def test_function_to_diagram(table, cod):
    f = FinFunction(table, cod)
    d = function_to_diagram(f)
    assert d.type == (ones(len(table)), ones(cod))
    assert get_interpretation("fun").evaluate(d) == f


def test_permutation_to_diagram():
    p = Permutation((2, 0, 1))
    assert get_interpretation("perm").evaluate(permutation_to_diagram(p)) == p


def test_unbox_gives_base_term_with_same_value():
    rng = random.Random(34)
    interp = get_interpretation("nat")
    for _ in range(20):
        d = random_box_term(rng, "nat")
        u = unbox(d, matrix_to_diagram)
        assert u.type == d.type
        assert not any(isinstance(n, Box) for n in u.nodes())
        assert NAT.equal(interp.evaluate(u), unwrap(d))


def test_unbox_example():
    d = box(NAT.matrix([[1, 1]]))
    u = unbox(d, matrix_to_diagram)
    assert u.type == (Obj((2,)), Obj((1,)))
    assert census(u) == Counter({"mon": 1})


def test_box_symmetry_matches_wire_symmetry():
    s = Sym(cable(2), cable(1))
    v = unwrap(s, "nat")
    assert v.tolist() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
