import io
import json

import pytest

from src.cli.commands import EXIT_ERROR, EXIT_NOT_FORMAL, EXIT_OK, run


def invoke(argv, desk_settings, stdin_text=""):
    out = io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin_text), stdout=out, config=desk_settings)
    return code, out.getvalue()


def test_analyze_counterexample_text(desk_settings, fixtures_dir):
    code, out = invoke(["analyze", str(fixtures_dir / "su3_circle_123.json")], desk_settings)
    assert code == EXIT_OK
    assert out.rstrip().endswith("equivariantly formal: NO (4 ≠ 2)")
    assert out.startswith("Pair: SU(3) / S(1,2,-3)")


def test_expect_formal_fails_on_counterexample(desk_settings, fixtures_dir):
    code, _ = invoke(["analyze", "--expect-formal", str(fixtures_dir / "su3_circle_123.json")], desk_settings)
    assert code == EXIT_NOT_FORMAL


def test_expect_formal_fails_when_verdict_unknown(desk_settings, fixtures_dir):
    code, out = invoke(["analyze", "--json", "--expect-formal", "--cap", "1", str(fixtures_dir / "su3_circle_123.json")],
                       desk_settings)
    assert json.loads(out)["formal"] is None
    assert code == EXIT_NOT_FORMAL


def test_expect_formal_accepts_cited_verdict(desk_settings, fixtures_dir):
    code, _ = invoke(["analyze", "--expect-formal", "--cap", "100", str(fixtures_dir / "d4_triality.json")],
                     desk_settings)
    assert code == EXIT_OK


def test_analyze_json_triality(desk_settings, fixtures_dir):
    code, out = invoke(["analyze", "--json", str(fixtures_dir / "d4_triality.json")], desk_settings)
    assert code == EXIT_OK
    data = json.loads(out)
    assert list(data)[:4] == ["dim_quotient", "fp_dim", "formal", "ncz"]
    assert (data["dim_quotient"], data["fp_dim"], data["formal"], data["ncz"]) == (4, 4, True, True)
    assert json.dumps(data, indent=2) == out.rstrip("\n")


def test_identity_fold_is_trivially_formal(desk_settings, fixtures_dir):
    code, out = invoke(["analyze", "--json", "--expect-formal", str(fixtures_dir / "a2_identity_fold.json")],
                       desk_settings)
    assert code == EXIT_OK
    assert json.loads(out)["dim_quotient"] == 1


def test_analyze_reads_stdin(desk_settings, fixtures_dir):
    text = (fixtures_dir / "g2_long_a2.json").read_text(encoding="utf-8")
    code, out = invoke(["analyze", "--json", "-"], desk_settings, text)
    assert code == EXIT_OK
    assert json.loads(out)["fp_components"] == 2


def test_schema_error_exits_one(desk_settings, fixtures_dir, capsys):
    code, out = invoke(["analyze", str(fixtures_dir / "invalid_extra_field.json")], desk_settings)
    assert code == EXIT_ERROR
    assert out == ""
    assert "line 4" in capsys.readouterr().err


def test_missing_file_exits_one(desk_settings, tmp_path):
    code, _ = invoke(["analyze", str(tmp_path / "nope.json")], desk_settings)
    assert code == EXIT_ERROR


def test_cap_flag_turns_fixed_point_side_off(desk_settings, fixtures_dir):
    code, out = invoke(["analyze", "--json", "--cap", "100", str(fixtures_dir / "d4_triality.json")],
                       desk_settings)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["fp_dim"] is None
    assert data["formal"] is True
    assert data["warnings"]


def test_bad_cap_is_a_usage_error(desk_settings):
    with pytest.raises(SystemExit):
        invoke(["analyze", "--cap", "0", "x.json"], desk_settings)


def test_catalog_filter_and_check(desk_settings):
    code, out = invoke(["catalog", "--check", "--filter", "circle"], desk_settings)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[-1] == "6 rows, 0 failed"
    assert all("circle" in line for line in lines[2:-1])


def test_catalog_json_is_deterministic(desk_settings):
    argv = ["catalog", "--json", "--filter", "regular"]
    _, first = invoke(argv + ["--workers", "1"], desk_settings)
    _, second = invoke(argv + ["--workers", "3"], desk_settings)
    assert first == second
    rows = json.loads(first)
    assert [r["name"] for r in rows][:2] == ["A2 maximal torus", "A2 U(2)"]
    assert all(r["ok"] for r in rows)
