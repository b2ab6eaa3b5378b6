"""
End-to-end checks against known quotients, sphere identifications and
the Weyl order formula
"""

import pytest

from src.algebra.root_system import CompactAlgebra, SimpleType, build_root_system
from src.algebra.weyl_group import enumerate_weyl
from src.catalog.builtin_catalog import builtin_catalog
from src.classification.cohomology import equal_rank_transfer
from src.classification.formality import COUNTED, line_negated
from src.pairs.constructions import (
    CircleSpec, FoldSpec, ProductBlock, ProductSpec, RegularSpec, resolve_circle, resolve_fold,
    resolve_regular, sample_circle_directions
)

ORACLE_TYPES = (
    [f"A{n}" for n in range(1, 7)] + [f"B{n}" for n in range(2, 7)] + [f"C{n}" for n in range(2, 7)]
    + [f"D{n}" for n in range(3, 7)] + ["G2", "F4", "E6"]
)


def test_su3_circle_counterexample(engine):
    p = resolve_circle(CircleSpec(CompactAlgebra.parse("A2"), (1, 2, -3), "trace_zero"))
    report = engine.analyze(p)
    assert report.dim_quotient == 4
    assert report.fp_dim == 2
    assert report.formal is False
    assert report.ncz is False
    assert report.fp_components == 1


@pytest.mark.parametrize("label", ORACLE_TYPES)
def test_weyl_order_oracle(label):
    t = SimpleType.parse(label)
    rs = build_root_system(t)
    degrees = rs.primitive_degrees
    expected = 1
    for d in degrees:
        expected *= (d + 1) // 2
    assert enumerate_weyl(rs).order == expected


@pytest.mark.parametrize("label,automorphism", [
    ("A3", "flip"), ("A2", "flip"),
    ("D3", "flip"), ("D4", "flip"), ("D5", "flip"), ("D6", "flip"),
])
def test_sphere_quotients(engine, label, automorphism):
    report = engine.analyze(resolve_fold(FoldSpec(SimpleType.parse(label), automorphism)))
    assert report.dim_quotient == 2


@pytest.mark.parametrize("entry", [e for e in builtin_catalog("fold") if e.name != "D7 leaf swap"],
                         ids=lambda e: e.name)
def test_fold_pairs_are_counted_formal(engine, entry):
    report = engine.analyze_spec(entry.spec)
    assert report.verdict_source == COUNTED
    assert report.formal is True
    assert report.ncz is True
    assert report.fp_components == 1


@pytest.mark.slow
def test_d7_leaf_swap(engine):
    report = engine.analyze_spec(FoldSpec(SimpleType("D", 7), "flip"))
    assert report.formal is True and report.fp_components == 1


@pytest.mark.parametrize("spec,dim", [
    (RegularSpec(CompactAlgebra.parse("A2")), 6),
    (RegularSpec(CompactAlgebra.parse("G2"), ((0, 1), (3, 1))), 2),
    (RegularSpec(CompactAlgebra.parse("A3"), ((1, 0, 0), (0, 0, 1))), 6),
    (RegularSpec(CompactAlgebra.parse("B3"), ((1, 0, 0), (0, 1, 0), (0, 1, 2))), 2),
])
def test_equal_rank_suite(engine, spec, dim):
    report = engine.analyze_spec(spec)
    assert report.dim_quotient == dim
    assert report.fp_components == dim
    assert report.formal is True
    # dim = |W(G)| / |W(K)|
    assert spec.g.weyl_order == dim * resolve_regular(spec).k_weyl_order


def test_transfer_in_su3():
    g = CompactAlgebra.parse("A2")
    so3 = resolve_fold(FoldSpec(SimpleType("A", 2), "flip"))
    line = resolve_circle(CircleSpec(g, (1, 0, -1), "trace_zero"))
    report = equal_rank_transfer(so3, line, weyl=enumerate_weyl(build_root_system(SimpleType("A", 2))))
    assert report.dim_h == 4
    assert report.dim_k * report.weyl_k == 2 * 2
    assert report.dim_h * report.weyl_h == report.dim_k * report.weyl_k


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
def test_circle_dichotomy(engine, weyl_cache, label):
    g = CompactAlgebra.parse(label)
    w = weyl_cache.get(g, engine.cap)
    for direction in sample_circle_directions(g, 50, seed=20240601):
        p = resolve_circle(CircleSpec(g, direction))
        report = engine.analyze(p)
        assert report.fp_dim <= report.dim_quotient
        assert report.formal == line_negated(w, p), direction


def test_product_kunneth(engine):
    su2 = engine.analyze_spec(ProductSpec(0, (ProductBlock(SimpleType("A", 1), 2),)))
    assert (su2.dim_quotient, su2.formal, su2.ncz) == (2, True, True)

    spin8 = engine.analyze_spec(ProductSpec(0, (ProductBlock(SimpleType("D", 4), 2, "triality"),)))
    assert spin8.dim_quotient == 64
    assert spin8.formal is all(b.formal for b in spin8.blocks)
    assert spin8.ncz is True


@pytest.mark.parametrize("entry", [e for e in builtin_catalog() if e.name != "D7 leaf swap"],
                         ids=lambda e: e.name)
def test_ncz_routes_agree_on_catalog(engine, entry):
    report = engine.analyze_spec(entry.spec)
    known = {v for v in report.ncz_routes.values() if v is not None}
    assert known == {report.ncz}
