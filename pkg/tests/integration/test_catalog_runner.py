import pytest

from src.catalog.builtin_catalog import CatalogEntry, builtin_catalog
from src.catalog.catalog_runner import CatalogRunner, check_row
from src.pairs.constructions import CircleSpec, FoldSpec
from src.algebra.root_system import CompactAlgebra, SimpleType


def test_catalog_shape():
    rows = builtin_catalog()
    assert len(rows) == len({r.name for r in rows})
    assert [r.kind for r in builtin_catalog("product")] == ["product"] * 5
    with pytest.raises(ValueError):
        builtin_catalog("sphere")


@pytest.mark.asyncio
async def test_runner_keeps_catalog_order(desk_settings, weyl_cache):
    entries = [e for e in builtin_catalog() if e.name != "D7 leaf swap"]
    runner = CatalogRunner(desk_settings, weyl_cache)
    rows = await runner.run(entries)
    assert [r.entry.name for r in rows] == [e.name for e in entries]
    failures = {r.entry.name: r.error or r.violations for r in rows if not r.ok}
    assert failures == {}
    assert runner.stats['rows'] == len(entries)


@pytest.mark.slow
@pytest.mark.asyncio
async def test_full_catalog_sweep(desk_settings, weyl_cache):
    rows = await CatalogRunner(desk_settings, weyl_cache).run(builtin_catalog())
    assert all(r.ok for r in rows)


@pytest.mark.asyncio
async def test_errors_are_recorded_not_raised(desk_settings, weyl_cache):
    bad = CatalogEntry("bad fold", "fold", FoldSpec(SimpleType("B", 3), "flip"))
    (row,) = await CatalogRunner(desk_settings, weyl_cache).run([bad])
    assert not row.ok
    assert row.error.startswith("UnsupportedFold")
    assert row.to_dict()["report"] is None


def test_check_row_reports_wrong_expectations(engine):
    entry = CatalogEntry("wrong", "circle", CircleSpec(CompactAlgebra.parse("A2"), (1, 3)),
                         {"dim_quotient": 5})
    report = engine.analyze_spec(entry.spec)
    violations = check_row(entry, report, negated=True)
    assert "dim_quotient = 4, expected 5" in violations
    assert any("circle dichotomy" in v for v in violations)


def test_negated_circles_are_tracked(desk_settings, weyl_cache):
    entry = builtin_catalog("circle")[1]
    row = CatalogRunner(desk_settings, weyl_cache).evaluate(entry)
    assert row.ok
    assert row.line_negated is True
