import json

import pytest
from click.testing import CliRunner

from perfcodes.cli import (
    CodeFileError,
    main,
    parse_code_lines,
    read_code_file,
    write_code_file,
)
from perfcodes.codes import Code


@pytest.fixture()
def runner():
    return CliRunner()


def test_field_table_json_roundtrip(runner):
    result = runner.invoke(main, ["field", "--m", "3", "table", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["m"] == 3
    assert payload["antilog"] == [1, 2, 4, 3, 6, 7, 5]
    assert payload["coordinate_order"][0] == 0


def test_field_rejects_bad_degree(runner):
    result = runner.invoke(main, ["field", "--m", "9", "table"])
    assert result.exit_code == 2


def test_code_build_with_oracle(runner, tmp_path):
    out = tmp_path / "c.code"
    result = runner.invoke(
        main,
        ["code", "build", "--m", "3", "--alpha", "2", "--parity", "1",
         "--oracle", "--out", str(out)],
    )
    assert result.exit_code == 0
    code = read_code_file(out)
    assert code.length == 8
    assert len(code) == 16


def test_code_build_zero_anchor(runner):
    result = runner.invoke(
        main, ["code", "build", "--m", "3", "--alpha", "zero", "--parity", "0"]
    )
    assert result.exit_code == 0
    assert "# length: 8" in result.output


def test_code_stats(runner, tmp_path):
    out = tmp_path / "c.code"
    runner.invoke(
        main,
        ["code", "build", "--m", "3", "--alpha", "0", "--parity", "0",
         "--out", str(out)],
    )
    result = runner.invoke(main, ["code", "stats", str(out), "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["size"] == 16
    assert payload["min_distance"] == 4


def test_code_file_roundtrip(tmp_path, h7):
    path = tmp_path / "h7.code"
    write_code_file(h7, path)
    again = read_code_file(path)
    assert again.words == h7.words
    assert again.length == h7.length
    assert again.label == h7.label


def test_parse_errors_carry_line_numbers():
    with pytest.raises(CodeFileError, match=":3:"):
        parse_code_lines(["# length: 8", "# label: x", "0110100"], source="f")
    with pytest.raises(CodeFileError, match=":2:"):
        parse_code_lines(["# length: 4", "01a0"], source="f")
    with pytest.raises(CodeFileError, match="length"):
        parse_code_lines(["0101"], source="f")


def test_partition_verify_m3(runner):
    result = runner.invoke(main, ["partition", "verify", "--m", "3"])
    assert result.exit_code == 0
    assert "aggregate: PASS" in result.output


def test_partition_verify_m4_fails(runner):
    result = runner.invoke(main, ["partition", "verify", "--m", "4"])
    assert result.exit_code == 1


def test_partition_build_dump(runner, tmp_path):
    dump = tmp_path / "classes"
    result = runner.invoke(
        main, ["partition", "build", "--m", "3", "--dump", str(dump)]
    )
    assert result.exit_code == 0
    files = sorted(p.name for p in dump.iterdir())
    assert len(files) == 16
    code = read_code_file(dump / "odd_00.code")
    assert len(code) == 16


def test_product_build_and_census(runner, tmp_path):
    out = tmp_path / "prod.code"
    result = runner.invoke(
        main, ["product", "build", "--perm", "reversal", "--out", str(out)]
    )
    assert result.exit_code == 0
    result = runner.invoke(
        main,
        ["components", "census", str(out), "--pair", "0", "9", "--format", "json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["census"][0]["sizes"] == [1024, 1024]


def test_census_requires_pair_choice(runner, tmp_path):
    path = tmp_path / "c.code"
    write_code_file(Code(4, frozenset({0, 15})), path)
    result = runner.invoke(main, ["components", "census", str(path)])
    assert result.exit_code == 2


def test_product_verify_prop1_sampled(runner):
    result = runner.invoke(
        main,
        ["product", "verify-prop1", "--samples", "40", "--seed", "2"],
    )
    assert result.exit_code == 0


def test_components_theorem1_small(runner):
    result = runner.invoke(
        main,
        ["components", "theorem1", "--m", "3", "--samples", "1", "--seed", "2"],
    )
    assert result.exit_code == 0


def test_components_prop3(runner):
    result = runner.invoke(main, ["components", "prop3", "--n", "7", "--i", "4"])
    assert result.exit_code == 0


def test_components_corollary5(runner):
    result = runner.invoke(main, ["components", "corollary5", "--n", "7", "--i", "0"])
    assert result.exit_code == 0


def test_components_minimal(runner):
    result = runner.invoke(
        main, ["components", "minimal", "--n", "15", "--format", "json"]
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["aggregate"] == "pass"


def test_coloring_verify(runner):
    result = runner.invoke(
        main, ["coloring", "verify", "--n", "7", "--i", "1", "--colors", "4"]
    )
    assert result.exit_code == 0


def test_global_format_flag_propagates(runner):
    result = runner.invoke(
        main,
        ["--format", "json", "components", "minimal", "--n", "7"],
    )
    assert result.exit_code == 0
    json.loads(result.output)


def test_run_all_reduced(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(
        main,
        ["run-all", "--samples", "1", "--prop1-samples", "20",
         "--format", "json", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text())
    assert payload["aggregate"] == "pass"
    suites = [r["suite"] for r in payload["reports"]]
    assert suites[0] == "field-tables"
    assert "minimal-component" in suites
