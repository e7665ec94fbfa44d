from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scaprop import languages
from scaprop.core import (Box, Div, Equation, Gat, Gen, GeneratorDecl, GraphicalLanguage,
                          Id, Obj, Par, Seq, Signature, Sym, Translation, apply_translation,
                          block_symmetry, cable, empty_language, global_size,
                          language_extend, language_op, language_quotient, language_sum,
                          ones, op_diagram, par, permute_cables, seq, seq_nontrivial,
                          typecheck)
from scaprop.errors import (BadParameterArity, BoundaryMismatch, DisciplineMismatch,
                            TypingError, UndeclaredGenerator)
from scaprop.gen import random_base_term, random_wire_term
from scaprop.wires import trace_permutation

M = languages.monoid()
sizes = st.lists(st.integers(1, 6), max_size=6)


# -- objects -----------------------------------------------------------------

@pytest.mark.parametrize("obj,size", [((), 0), ((5,), 5), ((3, 1, 2), 6)])
def test_global_size(obj, size):
    assert global_size(obj) == size
    assert Obj(obj).global_size == size


@given(sizes, sizes)
def test_global_size_is_additive(a, b):
    assert (Obj(a) + Obj(b)).global_size == global_size(a) + global_size(b)


@pytest.mark.parametrize("bad", [(0,), (2, -1), (1.5,)])
def test_objects_need_positive_integer_sizes(bad):
    with pytest.raises(TypingError):
        Obj(bad)


def test_cable_and_ones():
    assert cable(0) == Obj() and cable(4) == Obj((4,))
    assert ones(3) == Obj((1, 1, 1)) and ones(3).is_simple
    assert not Obj((1, 2)).is_simple


# -- terms ---------------------------------------------------------------------

def test_divider_then_gatherer_types():
    d = Seq(Div(2), Gat(2))
    assert d.dom == Obj((3,)) and d.cod == Obj((3,))


def test_gatherer_twice_is_ill_typed():
    with pytest.raises(BoundaryMismatch):
        Seq(Gat(2), Gat(2))


def test_monoid_generator_type():
    mon = M.gen("mon")
    assert (mon.dom, mon.cod) == (ones(2), ones(1))


@pytest.mark.parametrize("d,dom,cod", [
    (Div(3), (4,), (1, 3)),
    (Gat(1), (1, 1), (2,)),
    (Sym(Obj((2,)), Obj((1, 3))), (2, 1, 3), (1, 3, 2)),
    (Par(Div(1), Id(Obj((2,)))), (2, 2), (1, 1, 2)),
    (Id(Obj()), (), ()),
])
def test_constructor_types(d, dom, cod):
    assert d.dom == Obj(dom) and d.cod == Obj(cod)


@pytest.mark.parametrize("n", [0, -1])
def test_divider_index_must_be_positive(n):
    with pytest.raises(TypingError):
        Div(n)


def test_cached_types_agree_with_typecheck():
    rng = random.Random(3)
    lang = languages.wire_calculus()
    for _ in range(200):
        d = random_wire_term(rng)
        assert typecheck(d, lang.sig) == (d.dom, d.cod)


def test_typecheck_rejects_undeclared_generator():
    with pytest.raises(UndeclaredGenerator):
        typecheck(Gen("nope", ones(1), ones(1)), M.sig)


def test_typecheck_rejects_mistyped_generator():
    with pytest.raises(BoundaryMismatch):
        typecheck(Gen("mon", ones(1), ones(1)), M.sig)


def test_mono_signature_rejects_dividers_and_cables():
    with pytest.raises(TypingError):
        typecheck(Div(1), M.sig)
    with pytest.raises(BoundaryMismatch):
        typecheck(Id(Obj((2,))), M.sig)
    with pytest.raises(DisciplineMismatch):
        Signature("mono", (GeneratorDecl("g", Obj((2,)), Obj((2,))),))


def test_boxes_need_sized_signature():
    with pytest.raises(TypingError):
        typecheck(Box("nat", None, cable(1), cable(1)), M.sig)


def test_parameter_sorts():
    decl = GeneratorDecl("phase", ones(1), ones(1), "rational")
    assert decl(3).params == (3,)
    with pytest.raises(BadParameterArity):
        decl()
    with pytest.raises(BadParameterArity):
        decl("x")
    with pytest.raises(BadParameterArity):
        GeneratorDecl("g", ones(1), ones(1))(1)


def test_seq_par_helpers():
    mon = M.gen("mon")
    assert seq(mon) is mon
    assert par() == Id(Obj())
    assert par(mon, mon).dom == ones(4)
    assert seq_nontrivial(Id(ones(2)), mon, Id(ones(1))) == mon
    assert seq_nontrivial(Id(ones(2)), Par(Id(ones(1)), Id(ones(1)))) == Par(Id(ones(1)), Id(ones(1)))


def test_operators():
    mon = M.gen("mon")
    assert (Par(mon, Id(ones(1))) >> mon) == Seq(Par(mon, Id(ones(1))), mon)
    assert (mon @ mon) == Par(mon, mon)


# -- languages -------------------------------------------------------------------

def test_sum_of_monoid_and_its_mirror_before_quotient():
    co = language_op(M, {"mon": "bcomon", "unit": "bcounit"})
    pre = language_sum(M, co)
    assert len(pre.sig.generators) == 4
    assert len(pre.equations) == 6
    assert {e.name for e in pre.equations} >= {"assoc_op", "cmt_op"}


def test_sum_with_empty_language():
    s = language_sum(M, empty_language())
    assert s.sig.generators == M.sig.generators and s.equations == M.equations


def test_sum_renames_collisions():
    s = language_sum(M, M)
    assert s.sig.names == ["mon", "unit", "mon_2", "unit_2"]
    assert [e.name for e in s.equations] == ["assoc", "unit", "cmt",
                                             "assoc_2", "unit_2", "cmt_2"]


def test_interacting_equation_names_are_unique():
    names = [e.name for e in languages.interacting().equations]
    assert len(names) == len(set(names))


def test_sum_is_associative_up_to_renaming():
    p = languages.permutations()
    left = language_sum(language_sum(M, p), M)
    right = language_sum(M, language_sum(p, M))
    assert len(left.sig.generators) == len(right.sig.generators)
    assert [(g.dom, g.cod) for g in left.sig.generators] == \
        [(g.dom, g.cod) for g in right.sig.generators]
    assert len(left.equations) == len(right.equations)


def test_sum_rejects_mixed_disciplines():
    with pytest.raises(DisciplineMismatch):
        language_sum(M, languages.dividers())


def test_quotient_laws():
    assert language_quotient(M, []) == M
    mon, unit = M.gen("mon"), M.gen("unit")
    e1 = Equation(Seq(Par(Id(ones(1)), unit), mon), Id(ones(1)), "runit")
    e2 = Equation(Seq(Par(mon, Id(ones(1))), mon), Seq(Par(Id(ones(1)), mon), mon), "dup")
    twice = language_quotient(language_quotient(M, [e1]), [e2])
    assert twice == language_quotient(M, [e1, e2])
    # identical pairs are deduplicated
    assert len(twice.equations) == len(M.equations) + 1


def test_wire_calculus_is_quotient_of_sum():
    w = languages.wire_calculus(3)
    names = {e.name for e in w.equations}
    assert names == {f"{r}_{n}" for r in ("exp", "elim") for n in (1, 2, 3)}
    assert w.sig.structural == {"div", "gat"}


def test_hopf_is_bialgebra_plus_antipode():
    h, b = languages.hopf(), languages.bialgebra()
    assert set(h.sig.names) == set(b.sig.names) | {"ant"}
    assert h.equation("hopf").lhs.type == (ones(1), ones(1))


def test_extend_adds_generators_only():
    ext = language_extend(M, [GeneratorDecl("g", ones(1), ones(1))])
    assert "g" in ext.sig and ext.equations == M.equations


def test_language_equation_lookup():
    assert M.equation("cmt").rhs == M.gen("mon")
    with pytest.raises(KeyError):
        M.equation("missing")


# -- translations -------------------------------------------------------------------

def test_identity_translation_is_identity():
    t = Translation.identity(M)
    rng = random.Random(1)
    for _ in range(50):
        d = random_base_term(rng, M)
        assert apply_translation(t, d) == d


def test_swapped_monoid_translation():
    mon = M.gen("mon")
    swapped = Seq(Sym(ones(1), ones(1)), mon)
    t = Translation(M, M, {"mon": swapped, "unit": M.gen("unit")})
    assert apply_translation(t, mon) == swapped


def test_translation_must_preserve_types():
    with pytest.raises(BoundaryMismatch):
        Translation(M, M, {"mon": Id(ones(1)), "unit": M.gen("unit")})
    with pytest.raises(UndeclaredGenerator):
        Translation(M, M, {"mon": M.gen("mon")})


def test_translation_commutes_with_seq_and_par():
    mon, unit = M.gen("mon"), M.gen("unit")
    t = Translation(M, M, {"mon": Seq(Sym(ones(1), ones(1)), mon), "unit": unit})
    rng = random.Random(2)
    for _ in range(50):
        f = random_base_term(rng, M)
        g = random_base_term(rng, M, dom=len(f.cod))
        assert apply_translation(t, Seq(f, g)) == Seq(apply_translation(t, f), apply_translation(t, g))
        assert apply_translation(t, Par(f, g)) == Par(apply_translation(t, f), apply_translation(t, g))


def test_parametric_translation_is_called_with_parameters():
    decl = GeneratorDecl("z", ones(1), ones(1), "rational")
    lang = GraphicalLanguage(Signature("mono", (decl,)))
    t = Translation.identity(lang)
    assert apply_translation(t, decl(2)) == decl(2)


# -- symmetry networks -----------------------------------------------------------

def test_block_symmetry_unit_cases():
    assert block_symmetry((), (2,)) == Id(Obj((2,)))
    assert block_symmetry((1,), (1,)) == Sym(ones(1), ones(1))


def test_block_symmetry_strands():
    d = block_symmetry((2,), (3,))
    assert d.type == (Obj((2, 3)), Obj((3, 2)))
    assert trace_permutation(d).images == (3, 4, 0, 1, 2)


@given(st.permutations(range(6)), st.lists(st.integers(1, 3), min_size=6, max_size=6))
@settings(max_examples=60)
def test_permute_cables_moves_cable_i_to_images_i(images, obj):
    d = permute_cables(obj, images)
    assert [d.cod[images[i]] for i in range(6)] == obj
    for node in d.nodes():
        if isinstance(node, Sym):
            assert len(node.left) == len(node.right) == 1


def test_op_diagram_is_an_involution():
    rng = random.Random(5)
    for _ in range(50):
        d = random_wire_term(rng)
        m = op_diagram(d)
        assert m.type == (d.cod, d.dom)
        assert op_diagram(m) == d
