import pytest

from src.algebra.exact_linalg import Subspace
from src.algebra.root_system import CompactAlgebra, SimpleType, build_root_system
from src.algebra.weyl_group import enumerate_weyl
from src.cache.weyl_cache import WeylGroupCache
from src.classification.formality import (
    CITED, COUNTED, FormalityEngine, analyze, fixed_point_components, fixed_point_dim, line_negated
)
from src.pairs.constructions import (
    CircleSpec, Construction, FoldSpec, PairData, ProductBlock, ProductSpec, RegularSpec,
    resolve_circle, resolve_fold, resolve_product, resolve_regular
)
from src.utils.errors import InternalInconsistency, NonIntegralComponents


def su3_circle(direction):
    return resolve_circle(CircleSpec(CompactAlgebra.parse("A2"), tuple(direction), "trace_zero"))


def w_a2():
    return enumerate_weyl(build_root_system(SimpleType("A", 2)))


class TestCircles:

    def test_generic_circle_is_not_formal(self, engine):
        report = engine.analyze(su3_circle((1, 2, -3)))
        assert report.dim_quotient == 4
        assert report.fp_dim == 2
        assert report.fp_components == 1
        assert report.formal is False
        assert report.ncz is False
        assert report.fixed_set_connected is True
        assert report.verdict_source == COUNTED

    @pytest.mark.parametrize("direction", [(1, -1, 0), (1, 0, -1)])
    def test_negated_circles_are_formal_but_disconnected(self, engine, direction):
        report = engine.analyze(su3_circle(direction))
        assert (report.dim_quotient, report.fp_dim, report.fp_components) == (4, 4, 2)
        assert report.formal is True
        assert report.ncz is False
        assert report.ncz_routes == {
            'dimension_identity': False, 'weil_trivial': False, 'formal_and_connected': False,
        }

    def test_circle_in_su2(self, engine):
        report = engine.analyze(resolve_circle(CircleSpec(CompactAlgebra.parse("A1"), (1,))))
        assert (report.dim_quotient, report.fp_dim, report.fp_components) == (2, 2, 2)

    def test_central_circle(self, engine):
        report = engine.analyze(resolve_circle(CircleSpec(CompactAlgebra.parse("T1"), (1,))))
        assert (report.dim_quotient, report.fp_dim, report.fp_components) == (1, 1, 1)
        assert report.ncz is True

    def test_mixed_circle_warns_and_is_ncz(self, engine):
        report = engine.analyze(resolve_circle(CircleSpec(CompactAlgebra.parse("T1+A1"), (1, 1))))
        assert (report.dim_quotient, report.fp_dim, report.fp_components) == (2, 2, 1)
        assert report.formal is True
        assert report.ncz is True
        assert report.samelson_degrees == [3]
        assert any("mixes central and semisimple" in w for w in report.warnings)

    def test_line_negated(self):
        w = w_a2()
        assert line_negated(w, su3_circle((1, 0, -1)))
        assert not line_negated(w, su3_circle((1, 2, -3)))


class TestTheoremBackedPairs:

    def test_fold_is_formal_and_ncz(self, engine):
        report = engine.analyze(resolve_fold(FoldSpec(SimpleType("A", 3), "flip")))
        assert report.dim_quotient == report.fp_dim == 2
        assert report.fp_components == 1
        assert report.formal is True
        assert report.ncz is True
        assert report.license == "automorphism-fixed-subgroup"

    def test_torus_transfer_is_reported(self, engine):
        report = engine.analyze(resolve_fold(FoldSpec(SimpleType("A", 3), "flip")))
        assert report.torus_transfer == {
            'dim_quotient': 16, 'weyl_order_k': 8, 'formal': True, 'holds': True,
        }

    def test_equal_rank_components_equal_dimension(self, engine):
        report = engine.analyze_spec(RegularSpec(CompactAlgebra.parse("G2"), ((0, 1), (3, 1)), 0))
        assert report.dim_quotient == report.fp_components == 2
        assert report.formal is True
        assert report.samelson_degrees == []

    def test_capped_group_cites_the_theorem(self, desk_settings):
        capped = FormalityEngine(desk_settings.with_overrides(cap=100), WeylGroupCache())
        report = capped.analyze(resolve_fold(FoldSpec(SimpleType("D", 4), "triality")))
        assert report.fp_dim is None
        assert report.formal is True
        assert report.verdict_source == CITED
        assert report.ncz is True
        assert any("exceeds enumeration cap" in w for w in report.warnings)

    def test_capped_circle_has_no_verdict(self, desk_settings):
        capped = FormalityEngine(desk_settings.with_overrides(cap=1), WeylGroupCache())
        report = capped.analyze(su3_circle((1, 2, -3)))
        assert report.formal is None
        assert report.verdict_source is None
        assert report.ncz is False


class TestProducts:

    def test_diagonal_su2(self, engine):
        report = engine.analyze(resolve_product(ProductSpec(0, (ProductBlock(SimpleType("A", 1), 2),))))
        assert (report.dim_quotient, report.fp_dim, report.fp_components) == (2, 2, 1)
        assert report.formal is True
        assert len(report.blocks) == 1
        assert report.blocks[0].construction == "diagonal"

    def test_center_times_su2(self, engine):
        spec = ProductSpec(1, (ProductBlock(SimpleType("A", 1)),))
        report = engine.analyze_spec(spec)
        assert report.dim_quotient == report.fp_dim == 1
        assert [b.construction for b in report.blocks] == ["central", "fold"]

    def test_fixed_point_helpers_take_one_group_per_block(self):
        p = resolve_product(ProductSpec(0, (ProductBlock(SimpleType("A", 2), 1, "flip"),)))
        assert fixed_point_components(p, [w_a2()]) == 1
        assert fixed_point_dim(p, [w_a2()]) == 2


class TestWeylGroupOfK:

    def line_pair(self, weyl_roots, weyl_order=1):
        return PairData(
            g=CompactAlgebra.parse("A2"), k_degrees=(1,), k_weyl_order=weyl_order,
            tk=Subspace.span([(1, 3)]), construction=Construction.CIRCLE, k_label="T1",
            provenance="test", k_weyl_roots=weyl_roots,
        )

    def test_regular_reflections_lie_in_h(self):
        p = resolve_regular(RegularSpec(CompactAlgebra.parse("G2"), ((0, 1), (3, 1)), 0))
        w = enumerate_weyl(build_root_system(SimpleType("G", 2)))
        assert len(p.k_weyl_roots) == 2
        assert fixed_point_components(p, w) == 2

    def test_u2_in_su3(self):
        p = resolve_regular(RegularSpec(CompactAlgebra.parse("A2"), ((1, 0),)))
        assert fixed_point_components(p, w_a2()) == 3

    def test_reflection_outside_h_is_inconsistent(self):
        # s_1 moves the line through (1, 3) to the line through (2, 3)
        with pytest.raises(InternalInconsistency):
            fixed_point_components(self.line_pair(((1, 0),)), w_a2())

    def test_weyl_order_must_divide_h(self):
        with pytest.raises(NonIntegralComponents):
            fixed_point_components(self.line_pair((), weyl_order=4), w_a2())


def test_report_dict_key_order(engine):
    keys = list(engine.analyze(su3_circle((1, 2, -3))).to_dict())
    assert keys[:6] == ['dim_quotient', 'fp_dim', 'formal', 'ncz', 'fp_components', 'fixed_set_connected']
    assert keys[-3:] == ['torus_transfer', 'blocks', 'warnings']


def test_module_level_analyze(desk_settings):
    report = analyze(su3_circle((1, 2, -3)), desk_settings)
    assert report.pair == "(A2, T1)"
