import json

import pytest

from skewpbw import (
    ParseError,
    SchemaError,
    catalog_names,
    dump_document,
    load_catalog,
    parse_document,
    validate_presentation,
)
from skewpbw.catalog import catalog_text

from conftest import DEMO_RINGS, demo


def base(**over):
    doc = {
        "name": "t",
        "backend": {"kind": "laurent", "params": ["q"]},
        "variables": {"n": 2, "r": 0},
        "relations": {"c": {"2,1": "q"}},
    }
    doc.update(over)
    return doc


def test_catalog_names():
    assert catalog_names() == sorted(
        ["quantum-plane", "quantum-torus", "multiplicative-weyl", "skew-3dim", "diffusion", "dqsq"])


def test_quantum_plane_document():
    doc = load_catalog("quantum-plane")
    assert doc.presentation.n == 2
    assert doc.ring is doc.presentation
    assert validate_presentation(doc.presentation).ok


def test_diffusion_lower_terms():
    doc = load_catalog("diffusion")
    assert set(doc.presentation.d_lower) == {(1, 0)}


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_round_trip(name):
    doc = load_catalog(name)
    again = parse_document(dump_document(doc))
    assert again == doc
    assert again.presentation == doc.presentation
    assert dump_document(again) == dump_document(doc)


@pytest.mark.parametrize("path", sorted(DEMO_RINGS.glob("*.json")), ids=lambda p: p.stem)
def test_demo_round_trip(path):
    doc = demo(path.stem)
    assert parse_document(dump_document(doc)) == doc


def test_negative_exponent_on_polynomial_variable():
    data = base(variables={"n": 3, "r": 0},
                relations={"c": {"2,1": "q", "3,1": "1", "3,2": "1"}},
                endomorphisms={"bad": ["x1", "x2", "x3^-1"]})
    with pytest.raises(SchemaError, match="negative exponent on non-Laurent variable"):
        parse_document(json.dumps(data))


def test_inverse_from_upper_key():
    doc = parse_document(json.dumps(base(relations={"c": {"1,2": "q"}})))
    q = doc.presentation.backend.domain.param("q")
    assert doc.presentation.c[1][0] == q.inverse()


def test_directives():
    doc = parse_document(json.dumps(base(directives={"localize": True, "laurent": 1},
                                         endomorphisms={"e": ["x1^-1", "x2"]})))
    assert doc.ring.r == 1
    assert doc.ring.backend.kind == "fraction"
    assert doc.presentation.r == 0


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.pop("backend"), "missing key 'backend'"),
    (lambda d: d.update(extra=1), "unknown key"),
    (lambda d: d["backend"].update(kind="complex"), "unknown kind"),
    (lambda d: d["variables"].update(n="two"), "variables.n"),
    (lambda d: d["relations"].update(c={}), "missing \"2,1\""),
    (lambda d: d["relations"].update(c={"2,2": "q"}), "distinct indices"),
    (lambda d: d["relations"].update(d_lower={"2,1": "x1*x2"}), r"d_lower\(2,1\) must lie in R \+ R x_1"),
    (lambda d: d["backend"].update(sigma={"1": {"q": "q+1"}}), "unit monomial"),
    (lambda d: d["backend"].update(kind="prime", p=4, params=[]), "backend.p"),
    (lambda d: d.update(endomorphisms={"e": ["x1"]}), "need 2 images"),
    (lambda d: d["variables"].update(names=["q", "y"]), "also used as parameter"),
])
def test_schema_errors(mutate, message):
    data = base()
    mutate(data)
    with pytest.raises(SchemaError, match=message):
        parse_document(json.dumps(data))


def test_expression_errors_carry_path():
    with pytest.raises(ParseError) as info:
        parse_document(json.dumps(base(relations={"c": {"2,1": "q +"}})))
    assert "relations.c.2,1" in str(info.value)
    assert info.value.column == 4


def test_invalid_json_position():
    with pytest.raises(ParseError) as info:
        parse_document('{\n  "name": }')
    assert info.value.line == 2


def test_unknown_endomorphism():
    with pytest.raises(SchemaError, match="known: antidiagonal, diag, identity"):
        load_catalog("quantum-plane").endomorphism("nope")


def test_catalog_text_is_json():
    for name in catalog_names():
        assert json.loads(catalog_text(name))["name"] == name
