from __future__ import annotations

import json

import pytest

from scaprop import languages
from scaprop.core import GeneratorDecl, Signature, ones
from scaprop.errors import ParseError, TypingError
from scaprop.serialize import (dump_language, language_from_json, language_to_json,
                               load_language, load_signature, signature_from_json,
                               signature_to_json)


@pytest.mark.parametrize("name", sorted(languages.LANGUAGES))
def test_language_round_trip(name):
    lang = languages.get_language(name)
    back = language_from_json(json.loads(dump_language(lang)), lang.name)
    assert back.sig.generators == lang.sig.generators
    assert back.sig.structural == lang.sig.structural
    assert [(e.lhs, e.rhs, e.name) for e in back.equations] == \
        [(e.lhs, e.rhs, e.name) for e in lang.equations]


def test_signature_document_shape():
    sig = Signature("mono", (GeneratorDecl("z", ones(1), ones(1), "rational"),))
    assert signature_to_json(sig) == {
        "discipline": "mono",
        "generators": [{"name": "z", "dom": [1], "cod": [1], "param": "rational"}]}


def test_sized_defaults_to_dividers_and_gatherers():
    sig = signature_from_json({"discipline": "sized", "generators": []})
    assert sig.structural == {"div", "gat"}
    assert "structural" not in signature_to_json(sig)
    only_div = signature_from_json({"discipline": "sized", "structural": ["div"]})
    assert signature_to_json(only_div)["structural"] == ["div"]


@pytest.mark.parametrize("doc", [
    {},
    {"discipline": "mono", "generators": [{"dom": [1], "cod": [1]}]},
    {"discipline": "mono", "generators": 3},
    {"discipline": "mono", "generators": [{"name": "g", "dom": [1], "cod": [1],
                                          "param": "matrix"}]},
])
def test_malformed_signatures(doc):
    with pytest.raises(ParseError):
        signature_from_json(doc)


def test_bad_equations():
    base = {"discipline": "mono",
            "generators": [{"name": "g", "dom": [1], "cod": [1]}]}
    with pytest.raises(ParseError):
        language_from_json({**base, "equations": [{"lhs": "g"}]})
    with pytest.raises(ParseError):
        language_from_json({**base, "equations": [{"lhs": "g ;", "rhs": "g"}]})
    with pytest.raises(TypingError):
        language_from_json({**base, "equations": [{"lhs": "g", "rhs": "id<2>"}]})


def test_equation_names_default_to_position():
    doc = {"discipline": "mono", "generators": [{"name": "g", "dom": [1], "cod": [1]}],
           "equations": [{"lhs": "g ; g", "rhs": "g"}]}
    lang = language_from_json(doc)
    assert lang.equations[0].name == "eq0"
    assert language_to_json(lang)["equations"] == [{"lhs": "g ; g", "rhs": "g", "name": "eq0"}]


def test_files(tmp_path):
    path = tmp_path / "mon.json"
    path.write_text(dump_language(languages.monoid()))
    lang = load_language(path)
    assert lang.name == "mon" and len(lang.equations) == 3
    assert load_signature(path).names == ["mon", "unit"]


def test_invalid_json_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "discipline": mono\n}')
    with pytest.raises(ParseError) as info:
        load_signature(path)
    assert str(info.value).startswith("2:")
