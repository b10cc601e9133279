import json

import pytest
from pydantic import ValidationError

from cli.commands import (
    EXIT_INVALID,
    EXIT_MISMATCH,
    EXIT_OK,
    FamilyTask,
    ParameterSweep,
    SweepSpec,
    evaluate_family,
    main,
    parse_k_range,
)
from codes.grs_codes import admissible_families
from quantum.quantum_params import QuantumCodeRecord

Q11_CSV = """k,n,K,d,c,exact,eaqmds
8,45,31,9,2,True,True
9,45,29,10,2,True,True
10,45,29,11,4,True,True
11,45,29,12,6,True,True
12,45,29,13,8,True,True
13,45,27,14,8,True,True
14,45,25,15,8,True,True
15,45,25,16,10,True,True
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseKRange:
    def test_valid(self):
        assert parse_k_range("8..15") == (8, 15)
        assert parse_k_range("3..3") == (3, 3)

    @pytest.mark.parametrize("text", ["8-15", "a..b", "15..8", "1..2..3"])
    def test_invalid(self, text):
        with pytest.raises(ValueError):
            parse_k_range(text)


class TestParams:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "params", "11", "5", "3", "4", "3", "9")
        assert code == EXIT_OK
        assert "[[45,29,10;2]]_11" in out
        assert "EAQMDS" in out
        assert "first=(3,6)" in out

    def test_q83(self, capsys):
        code, out, _ = run(capsys, "params", "83", "41", "6", "84", "2", "48")
        assert code == EXIT_OK
        assert "[[492,398,49;2]]_83" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "params", "11", "5", "3", "4", "3", "9", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["record"] == {"q": 11, "n": 45, "K": 29, "d": 10, "c": 2,
                                     "exact": True, "eaqmds": True}
        assert payload["T"] == [3, 6]
        assert payload["P"] == [1, 13]
        assert payload["P_case"] == 8
        assert payload["oracle_c"] is None

    def test_with_oracle(self, capsys):
        code, out, _ = run(capsys, "params", "11", "5", "3", "4", "3", "9", "--with-oracle")
        assert code == EXIT_OK
        assert "gram rank   2" in out

    def test_invalid_sigma(self, capsys):
        code, out, err = run(capsys, "params", "11", "5", "3", "4", "5", "9")
        assert code == EXIT_INVALID
        assert "sigma_out_of_range" in err
        assert out == ""

    def test_k_beyond_length(self, capsys):
        code, _, err = run(capsys, "params", "11", "5", "3", "4", "3", "46")
        assert code == EXIT_INVALID
        assert err.startswith("error:")

    def test_bad_arguments(self, capsys):
        code, _, _ = run(capsys, "params", "11", "five")
        assert code == EXIT_INVALID

    def test_help(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == EXIT_OK
        assert "verify" in out


class TestTable:
    def test_published_rows(self, capsys):
        code, out, _ = run(capsys, "table", "q11", "--k-range", "8..15")
        assert code == EXIT_OK
        assert out == Q11_CSV

    def test_default_range_is_the_exact_range(self, capsys):
        code, out, _ = run(capsys, "table", "q11")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 16
        assert lines[-1] == "15,45,25,16,10,True,True"

    def test_explicit_params(self, capsys):
        code, out, _ = run(capsys, "table", "--params", "11", "5", "3", "4", "3", "--k-range", "8..15")
        assert code == EXIT_OK
        assert out == Q11_CSV

    def test_output_is_byte_stable(self, capsys):
        _, first, _ = run(capsys, "table", "q29", "--k-range", "25..44")
        _, second, _ = run(capsys, "table", "q29", "--k-range", "25..44")
        assert first == second
        assert "28,280,226,29,2,True,True" in first.splitlines()

    def test_json(self, capsys):
        code, out, _ = run(capsys, "table", "q11", "--k-range", "9..10", "--format", "json")
        assert code == EXIT_OK
        rows = json.loads(out)
        assert rows[0] == {"q": 11, "k": 9, "n": 45, "K": 29, "d": 10, "c": 2,
                           "exact": True, "eaqmds": True}
        assert str(QuantumCodeRecord.from_json_dict(rows[1])) == "[[45,29,11;4]]_11"

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "tables" / "q11.csv"
        code, out, _ = run(capsys, "table", "q11", "--k-range", "8..15", "--output", str(path))
        assert code == EXIT_OK
        assert out == ""
        assert path.read_text(encoding="utf-8") == Q11_CSV

    def test_default_format_comes_from_config(self, capsys, monkeypatch):
        monkeypatch.setenv("EAQMDS_DEFAULT_FORMAT", "json")
        code, out, _ = run(capsys, "table", "q11", "--k-range", "9..9")
        assert code == EXIT_OK
        assert json.loads(out)[0]["K"] == 29
        code, out, _ = run(capsys, "table", "q11", "--k-range", "9..9", "--format", "csv")
        assert out.startswith("k,n,K,d,c,exact,eaqmds\n")

    def test_relative_output_goes_to_output_directory(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("EAQMDS_OUTPUT_DIRECTORY", str(tmp_path / "out"))
        code, out, _ = run(capsys, "table", "q11", "--k-range", "8..15", "--output", "q11.csv")
        assert code == EXIT_OK
        assert out == ""
        assert (tmp_path / "out" / "q11.csv").read_text(encoding="utf-8") == Q11_CSV

    @pytest.mark.parametrize("k_range", ["0..5", "40..46"])
    def test_range_outside_length(self, capsys, k_range):
        code, out, _ = run(capsys, "table", "q11", "--k-range", k_range)
        assert code == EXIT_INVALID
        assert out == ""

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "table", "q12")
        assert code == EXIT_INVALID
        assert "unknown family" in err


class TestVerify:
    def test_fields_without_families(self, capsys):
        code, out, _ = run(capsys, "verify", "4", "5")
        assert code == EXIT_OK
        assert "q=4: no admissible families" in out
        assert "q=5: no admissible families" in out
        assert "families=0" in out

    def test_q7(self, capsys):
        code, out, _ = run(capsys, "verify", "7")
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "verify: families=4 instances=66 skipped=0 mismatches=0"

    def test_oracle_cap_skips_families(self, capsys):
        code, out, _ = run(capsys, "verify", "7", "--max-n", "12")
        assert code == EXIT_OK
        assert "skipped=2" in out

    def test_default_fields_come_from_config(self, capsys, monkeypatch):
        monkeypatch.setenv("EAQMDS_VERIFY_Q_LIST", "[4, 6]")
        code, out, _ = run(capsys, "verify")
        assert code == EXIT_OK
        assert "q=4: no admissible families" in out
        assert "q=6: no admissible families" in out

    def test_injected_fault_is_detected(self, capsys):
        code, out, _ = run(capsys, "verify", "7", "--inject-fault")
        assert code == EXIT_MISMATCH
        assert "MISMATCH" in out


class TestSweep:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "7")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "q,lam,tau,rho,sigma,k,n,K,d,c,exact,eaqmds"
        assert len(lines) == 1 + 66

    def test_with_oracle_column(self, capsys):
        code, out, _ = run(capsys, "sweep", "7", "--with-oracle", "--k-range", "1..4")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].endswith(",oracle_c")
        assert len(lines) == 1 + 4 * 4

    def test_default_format_applies_to_sweep(self, capsys, monkeypatch):
        monkeypatch.setenv("EAQMDS_DEFAULT_FORMAT", "json")
        code, out, _ = run(capsys, "sweep", "7", "--k-range", "1..2")
        assert code == EXIT_OK
        rows = json.loads(out)
        assert len(rows) == 4 * 2
        assert rows[0]["q"] == 7

    def test_bad_k_range(self, capsys):
        code, _, _ = run(capsys, "sweep", "7", "--k-range", "9..1")
        assert code == EXIT_INVALID


class TestParameterSweep:
    def test_serial_and_parallel_agree(self):
        tasks = [FamilyTask(params=p, k_range=(1, 8)) for p in admissible_families(7)]
        serial = ParameterSweep(1).run(tasks)
        parallel = ParameterSweep(2).run(list(reversed(tasks)))
        assert [r.params.key for r in serial] == [r.params.key for r in parallel]
        assert [r.rows for r in serial] == [r.rows for r in parallel]

    def test_evaluate_family_reports_no_mismatch(self, q11_params):
        result = evaluate_family(FamilyTask(params=q11_params, k_range=(1, 20), with_oracle=True))
        assert result.mismatches == []
        assert [row["oracle_c"] for row in result.rows[7:15]] == [2, 2, 4, 6, 8, 8, 8, 10]

    def test_rows_beyond_exact_range_keep_c_at_most_k(self, q11_params):
        result = evaluate_family(FamilyTask(params=q11_params, with_oracle=True))
        assert result.mismatches == []
        assert len(result.rows) == q11_params.n
        assert all(row["c"] <= row["k"] for row in result.rows)
        assert all(row["oracle_c"] <= row["c"] for row in result.rows)


class TestSweepSpec:
    def test_tasks(self):
        spec = SweepSpec(q_list=[4, 7], k_range=(1, 3), verify=True)
        tasks, empty = spec.tasks()
        assert empty == [4]
        assert [t.params.key for t in tasks] == [p.key for p in admissible_families(7)]
        assert all(t.with_oracle and t.k_range == (1, 3) for t in tasks)

    def test_rejects_empty_q_list(self):
        with pytest.raises(ValidationError):
            SweepSpec(q_list=[])

    def test_rejects_unknown_format(self):
        with pytest.raises(ValidationError):
            SweepSpec(q_list=[7], output_format="xml")
