import json
from fractions import Fraction

import pytest

from src.algebra.root_system import CompactAlgebra, SimpleType
from src.pairs.constructions import CircleSpec, FoldSpec, ProductSpec, RegularSpec
from src.pairs.spec_document import load_pair_spec
from src.utils.errors import SpecDocumentError


def read(fixtures_dir, name):
    return (fixtures_dir / name).read_text(encoding="utf-8")


def test_trace_zero_circle(fixtures_dir):
    spec, label = load_pair_spec(read(fixtures_dir, "su3_circle_123.json"))
    assert label == "SU(3) / S(1,2,-3)"
    assert spec == CircleSpec(CompactAlgebra.parse("A2"), (Fraction(1), Fraction(2), Fraction(-3)), "trace_zero")


def test_named_fold(fixtures_dir):
    spec, _ = load_pair_spec(read(fixtures_dir, "d4_triality.json"))
    assert spec == FoldSpec(SimpleType("D", 4), "triality")


def test_fold_with_image_list(fixtures_dir):
    spec, _ = load_pair_spec(read(fixtures_dir, "a2_identity_fold.json"))
    assert spec.automorphism == (1, 2)


def test_regular_document(fixtures_dir):
    spec, label = load_pair_spec(read(fixtures_dir, "g2_long_a2.json"))
    assert isinstance(spec, RegularSpec)
    assert spec.sub_roots == ((0, 1), (3, 1))
    assert spec.extra_center == 0
    assert label == "G2 / SU(3)"


def test_product_document(fixtures_dir):
    spec, _ = load_pair_spec(read(fixtures_dir, "su2_squared_diagonal.json"))
    assert isinstance(spec, ProductSpec)
    assert spec.blocks[0].copies == 2
    assert spec.blocks[0].factor == SimpleType("A", 1)


def test_algebra_object_and_rational_strings(fixtures_dir):
    spec, label = load_pair_spec(read(fixtures_dir, "mixed_circle.json"))
    assert label is None
    assert spec.g == CompactAlgebra(1, (SimpleType("A", 1),))
    assert spec.direction == (Fraction(1, 2), Fraction(1, 2))


def test_unknown_field_reports_position(fixtures_dir):
    with pytest.raises(SpecDocumentError) as err:
        load_pair_spec(read(fixtures_dir, "invalid_extra_field.json"))
    assert err.value.line == 4
    assert "colour" in str(err.value)


def test_malformed_json_reports_position():
    with pytest.raises(SpecDocumentError) as err:
        load_pair_spec('{\n  "construction": "fold",\n  "g_type": \n}')
    assert err.value.line == 4


def test_missing_construction_tag():
    with pytest.raises(SpecDocumentError):
        load_pair_spec(json.dumps({"g_type": "A2"}))


def test_unknown_construction_tag():
    with pytest.raises(SpecDocumentError):
        load_pair_spec(json.dumps({"construction": "sphere", "g": "A2"}))


@pytest.mark.parametrize("direction", [[0.5, 1], ["1.5", "1"], ["1e2", "1"], ["x", "1"]])
def test_inexact_directions_rejected(direction):
    with pytest.raises(SpecDocumentError) as err:
        load_pair_spec(json.dumps({"construction": "circle", "g": "A2", "direction": direction}))
    assert "direction" in str(err.value)


def test_negative_extra_center_rejected():
    doc = {"construction": "regular", "g": "A2", "sub_roots": [], "extra_center": -1}
    with pytest.raises(SpecDocumentError):
        load_pair_spec(json.dumps(doc))


def test_zero_copies_rejected():
    doc = {"construction": "product", "blocks": [{"factor": "A1", "copies": 0}]}
    with pytest.raises(SpecDocumentError):
        load_pair_spec(json.dumps(doc))


def test_invalid_type_label_wrapped():
    with pytest.raises(SpecDocumentError) as err:
        load_pair_spec(json.dumps({"construction": "fold", "g_type": "B1"}))
    assert err.value.line is None
