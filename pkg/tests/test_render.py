from __future__ import annotations

import random

import pytest

from scaprop import languages
from scaprop.core import Div, Id, Par, Seq, Sym, ones
from scaprop.dsl import parse
from scaprop.gen import random_sl_term
from scaprop.render import dot_stats, to_dot
from scaprop.scalable import ScalableLanguage

B = languages.bialgebra()
SB = ScalableLanguage(B).sig


@pytest.mark.parametrize("text,stats", [
    ("div<2>", (1, 3)),
    ("mon ; bcomon", (2, 5)),
    ("id<1>", (0, 1)),
    ("sym<1,1>", (0, 2)),
    ("unit ; bcounit", (2, 1)),
    ("scale<2>(mon)", (5, 9)),
])
def test_dot_stats(text, stats):
    assert dot_stats(to_dot(parse(text, SB))) == stats


def test_edges_carry_cable_sizes():
    text = to_dot(Div(2))
    assert 'in0 -> n0 [label="3"];' in text
    assert 'n0 -> out1 [label="2"];' in text


def test_symmetry_crosses_edges():
    text = to_dot(Seq(Sym(ones(1), ones(1)), Par(B.gen("bcounit"), Id(ones(1)))))
    assert "in1 -> n0" in text and "in0 -> out0" in text


def test_graph_name_is_quoted():
    assert to_dot(Id(ones(1)), 'a "b"').startswith('digraph "a \\"b\\"" {')


def test_output_is_deterministic():
    rng = random.Random(41)
    for _ in range(20):
        d = random_sl_term(rng, B)
        assert to_dot(d) == to_dot(d)
        nodes, edges = dot_stats(to_dot(d))
        assert nodes == sum(1 for n in d.nodes() if not isinstance(n, (Id, Sym)))
        assert edges >= len(d.cod)


@pytest.mark.parametrize("name,text", [("div2", "div<2>"), ("mon_bcomon", "mon ; bcomon")])
def test_golden_documents(golden_dir, name, text):
    assert to_dot(parse(text, SB)) == (golden_dir / f"{name}.dot").read_text()
