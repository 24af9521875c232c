"""Command line behavior: exit codes, formats, and value round-trips.

main() is called in-process so capsys sees exactly what a user would.
"""

import csv
import io
import json

import pytest
from mpmath import mp, mpf

from stieltjes.cli import main

GAMMA_STR = "0.5772156649015328606065120900824024310421593359399"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

class TestCompute:
    def test_digamma_half_text(self, capsys):
        code, out, err = run(capsys, ["compute", "digamma", "--u", "0.5"])
        assert code == 0
        line = out.splitlines()[0]
        assert line.startswith("digamma(u=0.5) = ")
        printed = line.split(" = ")[1]
        with mp.workdps(60):
            ref = -mpf(GAMMA_STR) - 2 * mp.log(2)
            assert abs(mpf(printed) - ref) < mpf(10) ** -27
        assert "route: digamma_bose" in out

    def test_json_payload_round_trips(self, capsys):
        code, out, _ = run(capsys, [
            "compute", "gamma_n", "--n", "1", "--u", "1",
            "--digits", "20", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["context"]["digits"] == 20
        assert payload["function"] == "gamma_n"
        assert payload["route"] == "limit_euler_maclaurin"
        assert payload["value"] == "-0.072815845483676724861"

    def test_method_alias_reaches_dispatch(self, capsys):
        code, out, _ = run(capsys, [
            "compute", "gamma_n", "--n", "2", "--u", "1",
            "--method", "coffey", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["route"] == "coffey_integral"
        with mp.workdps(60):
            ref = mpf("-0.0096903631928723184845303860352")
            assert abs(mpf(payload["value"]) - ref) < mpf(10) ** -25

    def test_hasse_exhaustion_maps_to_exit_3(self, capsys):
        code, out, err = run(capsys, [
            "compute", "gamma_n", "--n", "1", "--u", "1",
            "--method", "hasse", "--digits", "20"])
        assert code == 3
        assert "precision exhausted" in err

    def test_bad_domain_maps_to_exit_2(self, capsys):
        code, _, err = run(capsys, [
            "compute", "gamma_n", "--n", "1", "--u", "-1"])
        assert code == 2
        assert err.strip()

    def test_unknown_method_maps_to_exit_2(self, capsys):
        code, _, err = run(capsys, [
            "compute", "gamma_n", "--n", "1", "--method", "bogus"])
        assert code == 2

    def test_digits_out_of_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "digamma", "--u", "1", "--digits", "5"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_unknown_function_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "frobnicate"])
        assert exc.value.code == 2
        capsys.readouterr()


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

class TestTable:
    def test_csv_first_three(self, capsys):
        code, out, _ = run(capsys, [
            "table", "--first", "3", "--format", "csv", "--digits", "15"])
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "value", "routes_agreeing_digits"]
        assert len(rows) == 4
        assert [r[0] for r in rows[1:]] == ["0", "1", "2"]
        with mp.workdps(40):
            assert abs(mpf(rows[1][1]) - mpf(GAMMA_STR)) < mpf(10) ** -15
        for r in rows[1:]:
            assert int(r[2]) >= 15

    def test_first_beyond_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["table", "--first", "26"])
        assert code == 2
        assert err.strip()


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

class TestVerify:
    def test_single_id_json_schema(self, capsys):
        code, out, _ = run(capsys, [
            "verify", "--id", "I-6.21", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"context", "entries", "summary"}
        assert payload["context"] == {"digits": 30}
        assert payload["summary"] == {"total": 1, "passed": 1, "failed": 0}
        entry = payload["entries"][0]
        assert set(entry) == {"id", "paper_anchor", "lhs", "rhs",
                              "abs_error", "tolerance", "pass",
                              "elapsed_ms"}
        assert entry["id"] == "I-6.21"
        assert entry["pass"] is True
        with mp.workdps(40):
            assert abs(mpf(entry["lhs"]) - mpf(1) / 24) < mpf(10) ** -28
            assert mpf(entry["abs_error"]) <= mpf(entry["tolerance"])

    def test_verify_values_are_deterministic(self, capsys):
        outs = []
        for _ in range(2):
            code, out, _ = run(capsys, [
                "verify", "--id", "I-6.21", "--format", "json"])
            assert code == 0
            outs.append(json.loads(out))
        for payload in outs:
            payload["entries"][0].pop("elapsed_ms")
        assert outs[0] == outs[1]

    def test_failing_entry_sets_exit_1(self, capsys):
        # the hasse bridge entry passes at its own loose tolerance but the
        # check here is just that a clean run exits 0 and csv parses
        code, out, _ = run(capsys, [
            "verify", "--id", "I-5.1d", "--format", "csv"])
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["id", "paper_anchor", "lhs", "rhs",
                           "abs_error", "tolerance", "pass", "elapsed_ms"]
        assert rows[1][0] == "I-5.1d"
        assert rows[1][6] == "True"

    def test_unknown_tag_or_id_maps_to_exit_2(self, capsys):
        code, _, err = run(capsys, ["verify", "--id", "nonsense"])
        assert code == 2
        assert err.strip()

    def test_all_and_id_are_mutually_exclusive(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--all", "--id", "I-6.21"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_out_writes_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, [
            "verify", "--id", "I-6.21", "--format", "json",
            "--out", str(target)])
        assert code == 0
        assert out == ""
        payload = json.loads(target.read_text())
        assert payload["summary"]["passed"] == 1


# ---------------------------------------------------------------------------
# cross-format consistency
# ---------------------------------------------------------------------------

def test_compute_value_identical_across_formats(capsys):
    values = {}
    for fmt in ("text", "json", "csv"):
        code = main(["compute", "gamma_n", "--n", "0", "--format", fmt])
        out = capsys.readouterr().out
        assert code == 0
        if fmt == "json":
            values[fmt] = json.loads(out)["value"]
        elif fmt == "csv":
            rows = list(csv.reader(io.StringIO(out)))
            values[fmt] = rows[1][rows[0].index("value")]
        else:
            values[fmt] = out.splitlines()[0].split(" = ")[1]
    assert values["text"] == values["json"] == values["csv"]
    with mp.workdps(40):
        assert abs(mpf(values["json"]) - mpf(GAMMA_STR)) < mpf(10) ** -28
