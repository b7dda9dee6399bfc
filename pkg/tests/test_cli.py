import json

import pytest
from click.testing import CliRunner

from quintic.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_classify_json_envelope(runner):
    res = invoke(runner, "classify", "95", "--json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["command"] == "classify"
    assert doc["result"]["verdict"] == "I"
    assert doc["warnings"]


def test_classify_fifth_power_exits_2(runner):
    res = runner.invoke(main, ["classify", "32"])
    assert res.exit_code == 2


def test_classify_none_still_reports_checks(runner):
    res = invoke(runner, "classify", "2")
    doc = json.loads(res.output)
    assert doc["result"]["verdict"] == "none"
    assert len(doc["result"]["checks"]) == 14


def test_factor_round_trip(runner):
    res = invoke(runner, "factor", "95")
    doc = json.loads(res.output)
    assert doc["result"]["factors"][0]["prime"]["p"] == 5
    assert doc["result"]["factors"][0]["exponent"] == 4


def test_symbol_command_legend_and_values(runner):
    res = invoke(runner, "symbol", "3", "11")
    doc = json.loads(res.output)
    rows = doc["result"]["symbols"]
    assert len(rows) == 4
    assert all(0 <= row["exponent"] <= 4 for row in rows)
    by_image = {tuple(row["zeta_image"]): row["exponent"] for row in rows}
    assert by_image[(3,)] == 2
    assert doc["result"]["legend"]["0"].endswith("(a is a fifth power)")


def test_symbol_accepts_coordinates(runner):
    res = invoke(runner, "symbol", "0,1,0,0", "11")
    assert res.exit_code == 0


def test_symbol_rejects_lambda(runner):
    res = runner.invoke(main, ["symbol", "3", "5"])
    assert res.exit_code == 2


def test_report_149(runner):
    res = invoke(runner, "report", "149")
    doc = json.loads(res.output)
    r = doc["result"]
    assert r["radicand"]["verdict"] == "III"
    assert r["genus"]["d"] == 2 and r["genus"]["qstar_inferred"] == 2
    assert r["capitulation"]["admissible_types"] == [
        [0, 0, 0, 0, 0, 0],
        [0, 1, 1, 1, 1, 1],
        [1, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, 1, 1],
    ]
    assert r["capitulation"]["tau2_permutation"] == [1, 2, 6, 5, 4, 3]
    assert any("involution" in w for w in doc["warnings"])


def test_report_95(runner):
    res = invoke(runner, "report", "95")
    r = json.loads(res.output)["result"]
    assert r["radicand"]["verdict"] == "I"
    assert r["genus"]["d"] == 3 and r["genus"]["qstar_inferred"] == 1


def test_report_contradiction_is_surfaced_not_fatal(runner):
    res = invoke(runner, "report", "341", "--h-gamma", "5")
    assert res.exit_code == 0
    r = json.loads(res.output)["result"]
    assert r["corollary"]["error"]["code"] == "contradiction-witness"


def test_report_with_class_number_table(runner, tmp_path):
    table = tmp_path / "h.csv"
    table.write_text("# demo\n11,5\n")
    res = invoke(runner, "report", "11", "--table", str(table))
    r = json.loads(res.output)["result"]
    assert r["corollary"]["five_divides_exactly"] is True


def test_genus_command(runner):
    res = invoke(runner, "genus", "149")
    doc = json.loads(res.output)
    assert doc["result"]["qstar_inferred"] == 2
    assert doc["result"]["relative_candidates"]


def test_report_is_deterministic(runner):
    a = invoke(runner, "report", "95").output
    b = invoke(runner, "report", "95").output
    assert a == b


def test_enumerate_jsonl_round_trip(runner):
    res = invoke(runner, "enumerate", "2", "100", "--form", "I")
    lines = res.output.splitlines()
    rows = [json.loads(line) for line in lines]
    assert [r["n"] for r in rows] == [95]
    assert rows[0]["verdict"] == "I"


def test_enumerate_ascending_and_skipping(runner):
    res = invoke(runner, "enumerate", "2", "100")
    ns = [json.loads(line)["n"] for line in res.output.splitlines()]
    assert ns == sorted(ns)
    assert 32 not in ns


def test_enumerate_csv_header(runner):
    res = invoke(runner, "enumerate", "2", "40", "--csv")
    lines = res.output.splitlines()
    assert lines[0].startswith("n,verdict,e,p,q,no-prime-factor-1-mod-5")
    assert all(len(line.split(",")) == len(lines[0].split(",")) for line in lines)


def test_enumerate_invalid_range_exits_2(runner):
    res = runner.invoke(main, ["enumerate", "100", "2"])
    assert res.exit_code == 2


def test_enumerate_resume_from(runner):
    full = invoke(runner, "enumerate", "2", "200").output.splitlines()
    resumed = invoke(runner, "enumerate", "2", "200", "--from", "100").output.splitlines()
    tail = [line for line in full if json.loads(line)["n"] >= 100]
    assert resumed == tail


def test_enumerate_out_file(runner, tmp_path):
    out = tmp_path / "rows.jsonl"
    res = invoke(runner, "enumerate", "2", "50", "--out", str(out))
    assert res.output == ""
    assert out.read_text().count("\n") == len(out.read_text().splitlines())


def test_report_capitulation_wire_shape(runner):
    res = invoke(runner, "report", "57")
    cap = json.loads(res.output)["result"]["capitulation"]
    assert set(cap) == {"n", "form", "admissible_types", "certificate", "tau2_permutation", "subgroups"}
    assert cap["form"] == "II"
    assert cap["certificate"]["form"] == "II"
    assert len(cap["subgroups"]) == 6
    assert cap["subgroups"][0]["field"].startswith("K1")


def test_report_for_unclassified_n_has_no_capitulation_section(runner):
    res = invoke(runner, "report", "6")
    r = json.loads(res.output)["result"]
    assert r["radicand"]["verdict"] == "none"
    assert r["capitulation"] is None


def test_selftest_single_suite(runner):
    res = runner.invoke(main, ["selftest", "--suite", "capitulation"])
    assert res.exit_code == 0
    assert "suite capitulation" in res.output and "0 failures" in res.output


def test_selftest_reports_failing_suites_by_name(runner, monkeypatch):
    from quintic import selftest as st_mod

    def broken():
        res = st_mod.SuiteResult("capitulation")
        res.note(False, "injected fault")
        return res

    monkeypatch.setitem(st_mod.SUITES, "capitulation", broken)
    res = runner.invoke(main, ["selftest", "--suite", "capitulation"])
    assert res.exit_code == 1
    assert "suite capitulation" in res.output and "FAIL" in res.output
    assert "injected fault" in res.output
