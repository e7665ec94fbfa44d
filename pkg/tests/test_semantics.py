from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from scaprop import languages
from scaprop.core import Box, Div, Gat, Gen, Id, Obj, Par, Seq, Sym, cable, ones
from scaprop.errors import (BackendError, BackendMismatch, BadArity, MissingAssignment,
                            ParseError)
from scaprop.gen import random_value
from scaprop.semantics.backends import FinFunction, Matrix, QubitMap, backend_of, get_backend
from scaprop.semantics.catalog import (ZH_MON, ZW_MON, get_flavor, get_interpretation,
                                       std_interpretations)
from scaprop.semantics.evaluate import (Interpretation, backend_interpretation,
                                        check_translation_soundness, evaluate)
from scaprop.semantics.semirings import SEMIRINGS
from scaprop.wires import Permutation

from oracles import int_matmul, perm_matrix

BACKENDS = ["perm", "fun", "nat", "int", "bool", "sat2", "f2", "rat", "linrel", "qubit"]


def _size(rng, name, hi):
    # there is no function from a nonempty set to the empty one
    return rng.randint(1 if name == "fun" else 0, hi)


# -- prop laws for every backend -----------------------------------------------

@pytest.mark.parametrize("name", BACKENDS)
def test_identity_and_associativity(name):
    b = get_backend(name)
    rng = random.Random(len(name))
    for _ in range(10):
        n, k, l, m = (_size(rng, name, 3) for _ in range(4))
        if name == "perm":
            k = l = m = n
        f, g, h = random_value(rng, name, n, k), random_value(rng, name, k, l), \
            random_value(rng, name, l, m)
        assert b.equal(b.compose(b.identity(n), f), f)
        assert b.equal(b.compose(f, b.identity(k)), f)
        assert b.equal(b.compose(b.compose(f, g), h), b.compose(f, b.compose(g, h)))


@pytest.mark.parametrize("name", BACKENDS)
def test_interchange_and_symmetry(name):
    b = get_backend(name)
    rng = random.Random(7 * len(name))
    for _ in range(10):
        n1, m1, n2, m2 = (_size(rng, name, 2) for _ in range(4))
        if name == "perm":
            m1, m2 = n1, n2
        f1, g1 = random_value(rng, name, n1, m1), random_value(rng, name, m1, m1)
        f2, g2 = random_value(rng, name, n2, m2), random_value(rng, name, m2, m2)
        lhs = b.compose(b.tensor(f1, f2), b.tensor(g1, g2))
        rhs = b.tensor(b.compose(f1, g1), b.compose(f2, g2))
        assert b.equal(lhs, rhs)
        # naturality of the symmetry
        left = b.compose(b.tensor(f1, f2), b.symmetry(m1, m2))
        right = b.compose(b.symmetry(n1, n2), b.tensor(f2, f1))
        assert b.equal(left, right)
        assert b.equal(b.compose(b.symmetry(n1, n2), b.symmetry(n2, n1)),
                       b.identity(n1 + n2))


@pytest.mark.parametrize("name", BACKENDS)
def test_permute_helpers_agree_with_composition(name):
    b = get_backend(name)
    rng = random.Random(3)
    for _ in range(10):
        n = _size(rng, name, 3)
        m = n if name == "perm" else _size(rng, name, 3)
        v = random_value(rng, name, n, m)
        p = Permutation(tuple(rng.sample(range(n), n)))
        q = Permutation(tuple(rng.sample(range(m), m)))
        assert b.equal(b.permute_inputs(p, v), b.compose(b.permutation(p), v))
        assert b.equal(b.permute_outputs(v, q), b.compose(v, b.permutation(q)))


@pytest.mark.parametrize("name", BACKENDS)
def test_format_parse_round_trip(name):
    b = get_backend(name)
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(0, 3)
        m = n if name == "perm" else rng.randint(0, 3)
        v = random_value(rng, name, n, m)
        assert b.equal(b.parse(b.format(v)), v)


@pytest.mark.parametrize("name,text", [
    ("perm", "2 1"), ("perm", "[1 1]"), ("fun", "2->1:1"), ("fun", "1->1:2"),
    ("nat", "1,2;3"), ("nat", "-1"), ("qubit", "1,1,1"), ("qubit", ""),
    ("linrel", "1->1:1,1,1"), ("linrel", "x"),
])
def test_parse_errors(name, text):
    with pytest.raises(ParseError):
        get_backend(name).parse(text)


def test_unknown_backend():
    with pytest.raises(BackendError):
        get_backend("reals")


def test_backend_of():
    assert backend_of(Permutation((0,))).name == "perm"
    assert backend_of(FinFunction((0,), 1)).name == "fun"
    assert backend_of(Matrix([[1]], SEMIRINGS["sat2"])).name == "sat2"
    assert backend_of(QubitMap(np.eye(2))).name == "qubit"


# -- concrete values -----------------------------------------------------------

def test_perm_composition_matches_matrix_product():
    b = get_backend("perm")
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 5)
        p = Permutation(tuple(rng.sample(range(n), n)))
        q = Permutation(tuple(rng.sample(range(n), n)))
        assert perm_matrix(b.compose(p, q).images) == \
            int_matmul(perm_matrix(q.images), perm_matrix(p.images))


@pytest.mark.parametrize("name,a,b,expected", [
    ("nat", [[1, 1]], [[1], [1]], [[2]]),
    ("bool", [[1, 1]], [[1], [1]], [[1]]),
    ("sat2", [[2, 1]], [[1], [1]], [[2]]),
    ("f2", [[1, 1]], [[1], [1]], [[0]]),
    ("int", [[1, -1]], [[2], [1]], [[1]]),
    ("rat", [[Fraction(1, 2), 1]], [[2], [1]], [[2]]),
])
def test_semiring_products(name, a, b, expected):
    be = get_backend(name)
    # b is 1 -> 2 (2x1), a is 2 -> 1 (1x2): b then a
    assert be.compose(be.matrix(b), be.matrix(a)) == be.matrix(expected)


def test_matrix_tensor_is_direct_sum():
    b = get_backend("nat")
    f = b.tensor(b.matrix([[1, 2]]), b.matrix([[3]]))
    assert f.tolist() == [[1, 2, 0], [0, 0, 3]]


def test_zero_dimensional_matrices():
    b = get_backend("nat")
    assert b.compose(b.matrix([], (0, 2)), b.matrix([[]], (1, 0))).tolist() == [[0, 0]]
    assert b.format(b.matrix([], (0, 2))) == "0x2:"


def test_semiring_reduction():
    assert Matrix([[5, 0]], SEMIRINGS["sat2"]).tolist() == [[2, 0]]
    assert Matrix([[3]], SEMIRINGS["f2"]).tolist() == [[1]]
    with pytest.raises(ValueError):
        Matrix([[-1]], SEMIRINGS["nat"])


def test_fun_tensor_and_symmetry():
    b = get_backend("fun")
    f = b.tensor(FinFunction((0, 0), 1), FinFunction((1, 0), 2))
    assert f == FinFunction((0, 0, 2, 1), 3)
    assert b.symmetry(1, 2) == FinFunction((2, 0, 1), 3)


def test_qubit_symmetry_is_swap_gate():
    swap = get_backend("qubit").symmetry(1, 1)
    expected = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert np.allclose(swap.data, expected)


def test_qubit_wire_zero_is_most_significant():
    b = get_backend("qubit")
    x = QubitMap(np.array([[0, 1], [1, 0]]))
    state = b.tensor(QubitMap([[0], [1]]), QubitMap([[1], [0]]))   # |10>
    out = b.compose(state, b.tensor(x, b.identity(1)))
    assert np.allclose(out.data.ravel(), [1, 0, 0, 0])


def test_qubit_map_shape_check():
    with pytest.raises(BadArity):
        QubitMap(np.zeros((3, 2)))


# -- standard interpretations ---------------------------------------------------

def test_catalog_names():
    assert set(std_interpretations()) == {"perm", "fun", "nat", "int", "bool", "sat2",
                                          "f2", "linrel", "zh", "zw", "zx"}
    with pytest.raises(BackendError):
        get_interpretation("zy")


@pytest.mark.parametrize("name,expected", [
    ("nat", {"mon": [[1, 1]], "bcomon": [[1], [1]]}),
    ("int", {"ant": [[-1]]}),
])
def test_matrix_catalog_values(name, expected):
    interp = get_interpretation(name)
    for gen, rows in expected.items():
        assert interp.assignment[gen].tolist() == rows


def test_monoid_in_functions():
    interp = get_interpretation("fun")
    assert interp.assignment["mon"] == FinFunction((0, 0), 1)
    assert interp.assignment["unit"] == FinFunction((), 1)


@pytest.mark.parametrize("name", sorted({"perm", "fun", "nat", "int", "bool", "sat2",
                                          "f2", "linrel", "zx"}))
def test_complete_interpretations_satisfy_their_equations(name):
    interp = get_interpretation(name)
    b = interp.backend
    for eq in interp.language.equations:
        assert b.equal(evaluate(eq.lhs, interp), evaluate(eq.rhs, interp)), eq.name


def _failing(name):
    interp = get_interpretation(name)
    b = interp.backend
    return {eq.name for eq in interp.language.equations
            if not b.equal(evaluate(eq.lhs, interp), evaluate(eq.rhs, interp))}


def test_zh_values_break_exactly_the_unit_law():
    # |0> is not a unit for the AND-like monoid: ZH_MON (|0> x I) = [[1,1],[0,0]]
    assert _failing("zh") == {"unit"}
    mon = np.array(ZH_MON)
    assert mon[:, [0, 1]].tolist() == [[1, 1], [0, 0]]


def test_zw_values_break_exactly_the_counit_law():
    # deleting after merging: [1,1] ZW_MON = [1,1,1,0], not [1,1,1,1]
    assert _failing("zw") == {"cocp"}
    assert (np.array([[1, 1]]) @ np.array(ZW_MON)).tolist() == [[1, 1, 1, 0]]


def test_linrel_symmetry():
    interp = get_interpretation("linrel")
    v = evaluate(Sym(ones(1), ones(1)), interp)
    assert v.contains([1, 2], [2, 1])
    assert not v.contains([1, 2], [1, 2])
    assert v.space.rank == 2


# -- evaluation -----------------------------------------------------------------

def test_dividers_and_gatherers_are_identities():
    interp = get_interpretation("nat")
    mon = interp.language.gen("mon")
    d = Seq(Gat(1), Seq(Div(1), mon))
    assert evaluate(d, interp) == evaluate(mon, interp)


def test_evaluation_respects_wires_inside_sequences():
    interp = get_interpretation("nat")
    lang = interp.language
    d = Seq(lang.gen("bcomon"), Seq(Sym(ones(1), ones(1)), Par(Id(ones(1)), lang.gen("bcounit"))))
    assert evaluate(d, interp).tolist() == [[1]]


def test_box_backend_mismatch():
    nat = get_backend("nat")
    d = Box("int", get_backend("int").matrix([[1]]), cable(1), cable(1))
    with pytest.raises(BackendMismatch):
        evaluate(d, backend_interpretation(nat))


def test_missing_assignment():
    with pytest.raises(MissingAssignment):
        Interpretation("half", languages.monoid(), get_backend("nat"),
                       {"mon": [[1, 1]]})
    interp = backend_interpretation("nat")
    with pytest.raises(MissingAssignment):
        evaluate(Gen("mon", ones(2), ones(1)), interp)


def test_assignment_arity_is_checked():
    with pytest.raises(BadArity):
        Interpretation("bad", languages.monoid(), get_backend("nat"),
                       {"mon": get_backend("nat").matrix([[1]]),
                        "unit": get_backend("nat").matrix([[]], (1, 0))})


def test_parametric_generator_values():
    from scaprop.core import GeneratorDecl, GraphicalLanguage, Signature
    decl = GeneratorDecl("scale", ones(1), ones(1), "rational")
    lang = GraphicalLanguage(Signature("mono", (decl,)))
    nat = get_backend("nat")
    interp = Interpretation("scales", lang, nat, {"scale": lambda k: nat.matrix([[k]])})
    assert evaluate(Seq(decl(2), decl(3)), interp).tolist() == [[6]]


def test_translation_soundness_check():
    from scaprop.core import Translation
    m = languages.monoid()
    fun = get_interpretation("fun")
    swapped = Translation(m, m, {"mon": Seq(Sym(ones(1), ones(1)), m.gen("mon")),
                                 "unit": m.gen("unit")})
    assert check_translation_soundness(swapped, fun)
    assert check_translation_soundness(Translation.identity(m), fun)


@pytest.mark.parametrize("name", ["perm", "fun", "nat", "int", "bool", "sat2", "f2"])
def test_flavors_draw_values(name):
    flavor = get_flavor(name)
    rng = random.Random(4)
    b = flavor.interpretation.backend
    for _ in range(10):
        n = rng.randint(0, 3)
        m = n if name == "perm" else rng.randint(0, 3)
        v = random_value(rng, name, n, m)
        d = flavor.value_to_diagram(v)
        assert b.equal(evaluate(d, flavor.interpretation), v)


def test_no_flavor_for_qubits():
    with pytest.raises(BackendError):
        get_flavor("qubit")


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4), st.integers(1, 5))
def test_fun_compose_matches_tables(table, cod):
    cod = max(cod, max(table) + 1)
    b = get_backend("fun")
    f = FinFunction(tuple(table), cod)
    g = FinFunction(tuple((x * 7) % 3 for x in range(cod)), 3)
    assert b.compose(f, g).table == tuple(g.table[x] for x in table)
