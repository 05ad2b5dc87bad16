import json
import subprocess
import sys

import pytest

from modulidim.cli import main, parse_sweep_config


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *args):
    code, out, err = run_cli(capsys, *args)
    return code, json.loads(out), err


class TestToyReport:
    def test_document(self, capsys):
        code, doc, _ = run_json(capsys, "report", "toy", "--m", "1", "--n", "-1")
        assert code == 0
        assert doc["results"]["domain_dim"]["value"] == 6
        assert doc["results"]["codim"]["value"] == 3
        assert doc["results"]["c2"]["value"] == 2
        assert doc["results"]["moduli_real_dim"]["value"] == 10
        assert doc["results"]["domain_dim"]["provenance"] == "closed-form"

    def test_precondition_violation_exits_one(self, capsys):
        code, out, err = run_cli(capsys, "report", "toy", "--m", "0", "--n", "-1")
        assert code == 1
        assert not out and "error" in err


class TestSplitReport:
    def test_margin_and_ledger(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "split",
            "--g1", "2", "--g2", "2", "--m", "3", "--n", "-2",
            "--alpha", "1", "--beta", "1",
        )
        assert code == 0
        assert doc["results"]["margin"]["value"] == 21
        assert doc["results"]["margin_stated"]["value"] == 15
        assert doc["results"]["c2"]["value"] == 12
        assert doc["verdicts"]["margin_exceeds_c2"] is True
        ids = [e["id"] for e in doc["discrepancy_ledger"]]
        assert "nu1-obstruction-count" in ids

    def test_not_established_exits_three(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "split",
            "--g1", "2", "--g2", "3", "--m", "1", "--n", "-1",
            "--alpha", "1", "--beta", "1",
        )
        assert code == 3
        assert doc["verdicts"]["margin_established"] is False

    def test_require_exact_exits_two(self, capsys):
        code, _, _ = run_json(
            capsys,
            "report", "split",
            "--g1", "0", "--g2", "4", "--m", "1", "--n", "-2",
            "--alpha", "2", "--beta", "1", "--require-exact",
        )
        assert code == 2

    def test_markdown_renders(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "report", "split",
            "--g1", "2", "--g2", "2", "--m", "3", "--n", "-2",
            "--alpha", "1", "--beta", "1", "--format", "markdown",
        )
        assert code == 0
        assert "| margin |" in out and "Discrepancy ledger" in out


class TestNonfiltrableReport:
    def test_matches_split_at_zero_length(self, capsys):
        _, split_doc, _ = run_json(
            capsys,
            "report", "split",
            "--g1", "2", "--g2", "2", "--m", "3", "--n", "-2",
            "--alpha", "1", "--beta", "1",
        )
        _, nf_doc, _ = run_json(
            capsys,
            "report", "nonfiltrable",
            "--g1", "2", "--g2", "2", "--m", "3", "--n", "-2",
            "--alpha", "1", "--beta", "1", "--l", "0",
        )
        assert split_doc["results"] == nf_doc["results"]

    def test_length_shifts_c2(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "nonfiltrable",
            "--g1", "2", "--g2", "2", "--m", "3", "--n", "-2",
            "--alpha", "1", "--beta", "1", "--l", "4",
        )
        assert code == 0
        assert doc["results"]["c2"]["value"] == 16
        assert doc["results"]["t_o"]["value"] == 12


class TestCompareReport:
    def test_lines_verdict_true(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "compare",
            "--g1", "0", "--g2", "0", "--c2", "2",
            "--alpha", "1", "--beta", "1", "--bound", "5",
        )
        assert code == 0
        assert doc["verdicts"]["margin_exceeds_c2"] == "true"
        assert doc["results"]["min_margin"]["value"] == 3

    def test_not_established_exits_three(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "compare",
            "--g1", "2", "--g2", "3", "--c2", "2",
            "--alpha", "1", "--beta", "1", "--bound", "5",
        )
        assert code == 3
        assert doc["results"]["not_established"]


class TestUnstableReport:
    def test_family_bounds(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "unstable",
            "--g1", "0", "--g2", "0", "--H", "1,1", "--R", "0,0",
            "--L", "2,2", "--c2", "8",
        )
        assert code == 0
        assert doc["results"]["q_length"]["value"] == 16
        assert doc["results"]["dim_lower_bound"]["value"] == 32

    def test_failing_family_reports_conditions(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "unstable",
            "--g1", "0", "--g2", "0", "--H", "1,1", "--R", "0,0",
            "--L", "0,0", "--c2", "8",
        )
        assert code == 0
        assert doc["verdicts"]["family_admissible"] == "fail"
        statuses = {c["name"]: c["status"] for c in doc["conditions"]}
        assert statuses["slope"] == "fail"

    def test_undecidable_exits_three(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "unstable",
            "--g1", "2", "--g2", "2", "--H", "1,1", "--R", "3,3",
            "--L", "2,2", "--c2", "100",
        )
        assert code == 3
        assert doc["verdicts"]["family_admissible"] == "undecidable"

    def test_hard_fail_beats_undecidable(self, capsys):
        # slope fails outright while the vanishing check is undecidable;
        # the verdict is an established failure, not exit 3
        code, doc, _ = run_json(
            capsys,
            "report", "unstable",
            "--g1", "2", "--g2", "2", "--H", "1,1", "--R", "4,4",
            "--L", "1,3", "--c2", "100",
        )
        assert code == 0
        assert doc["verdicts"]["family_admissible"] == "fail"

    def test_select_twist(self, capsys):
        code, doc, _ = run_json(
            capsys,
            "report", "unstable",
            "--g1", "0", "--g2", "0", "--H", "1,1", "--R", "0,0",
            "--c2", "0", "--select-t", "--a", "4",
        )
        assert code == 0
        assert doc["results"]["t"]["value"] == 2
        assert doc["results"]["dim_lower_bound"]["value"] >= 8
        assert doc["discrepancy_ledger"][0]["id"] == "twist-degree-inequality"

    def test_select_twist_needs_target(self, capsys):
        code, _, err = run_cli(
            capsys,
            "report", "unstable",
            "--g1", "0", "--g2", "0", "--H", "1,1", "--R", "0,0",
            "--c2", "0", "--select-t",
        )
        assert code == 1 and "error" in err


class TestOracleCommands:
    def test_p1(self, capsys):
        code, doc, _ = run_json(capsys, "oracle", "p1", "--k", "-4")
        assert code == 0
        assert doc["results"]["h1"]["value"] == 3
        assert doc["results"]["h1"]["provenance"] == "oracle"
        assert doc["stabilized"] is True

    def test_product(self, capsys):
        code, doc, _ = run_json(capsys, "oracle", "product", "--a", "2", "--b", "-2")
        assert code == 0
        assert doc["results"]["h1"]["value"] == 3

    def test_koszul(self, capsys):
        code, doc, _ = run_json(capsys, "oracle", "koszul", "--a", "1", "--b", "1")
        assert code == 0
        values = doc["results"]
        assert (values["hom"]["value"], values["ext1"]["value"], values["ext2"]["value"]) == (1, 2, 1)
        assert doc["zero_differentials"] is True

    def test_window_too_small_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "oracle", "p1", "--k", "9", "--window", "4")
        assert code == 1 and "error" in err


class TestSweep:
    CONFIG = """
# grid over a genus (2, 2) product
g1 = 2
g2 = 2
m_range = 2..3
n_range = -2..-1
l_range = 0..1
alpha = 1
beta = 1
"""

    def test_config_parsing(self):
        config = parse_sweep_config(self.CONFIG)
        assert config["m_range"] == [2, 3]
        assert config["n_range"] == [-2, -1]
        assert config["alpha"] == 1

    def test_unknown_key_rejected(self):
        with pytest.raises(ValueError):
            parse_sweep_config("g1 = 2\nbogus = 3\n")

    def test_missing_key_rejected(self):
        with pytest.raises(ValueError):
            parse_sweep_config("g1 = 2\n")

    def test_rows_sorted_and_complete(self, capsys, tmp_path):
        path = tmp_path / "sweep.cfg"
        path.write_text(self.CONFIG)
        code, doc, _ = run_json(capsys, "sweep", "--config", str(path))
        rows = doc["results"]["rows"]
        coords = [(r["m"], r["n"], r["l"]) for r in rows]
        assert coords == sorted(coords)
        assert len(rows) == 8
        assert all(r["status"] in ("ok", "not-established", "not-destabilizing",
                                   "outside-validity: needs m >= 1") for r in rows)
        assert code == 0

    def test_markdown_table(self, capsys, tmp_path):
        path = tmp_path / "sweep.cfg"
        path.write_text(self.CONFIG)
        code, out, _ = run_cli(capsys, "sweep", "--config", str(path), "--format", "markdown")
        assert code == 0
        assert out.count("|") > 20

    def test_not_established_rows_exit_three(self, capsys, tmp_path):
        config = self.CONFIG.replace("g2 = 2", "g2 = 5")
        path = tmp_path / "sweep.cfg"
        path.write_text(config)
        code, doc, _ = run_json(capsys, "sweep", "--config", str(path))
        assert code == 3
        assert any(r["status"] == "not-established" for r in doc["results"]["rows"])

    def test_missing_file_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--config", "/nonexistent.cfg")
        assert code == 1 and "error" in err


class TestDocumentContract:
    def test_json_round_trips_byte_identically(self, capsys):
        commands = [
            ("report", "toy", "--m", "2", "--n", "-3"),
            ("report", "split", "--g1", "1", "--g2", "1", "--m", "2", "--n", "-1",
             "--alpha", "1", "--beta", "1"),
            ("report", "compare", "--g1", "0", "--g2", "0", "--c2", "2",
             "--alpha", "1", "--beta", "1", "--bound", "4"),
            ("oracle", "koszul", "--a", "2", "--b", "2"),
        ]
        for args in commands:
            _, out, _ = run_cli(capsys, *args)
            assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out

    def test_no_floats_anywhere(self, capsys):
        _, doc, _ = run_json(
            capsys,
            "report", "compare",
            "--g1", "2", "--g2", "2", "--c2", "8",
            "--alpha", "1", "--beta", "1", "--bound", "6",
        )

        def walk(node):
            assert not isinstance(node, float)
            if isinstance(node, dict):
                for v in node.values():
                    walk(v)
            elif isinstance(node, list):
                for v in node:
                    walk(v)

        walk(doc)

    def test_every_result_numeric_carries_provenance(self, capsys):
        _, doc, _ = run_json(
            capsys,
            "report", "split",
            "--g1", "2", "--g2", "2", "--m", "3", "--n", "-2",
            "--alpha", "1", "--beta", "1",
        )
        for key, value in doc["results"].items():
            assert isinstance(value, dict), key
            assert "provenance" in value, key
            assert value["provenance"] in ("closed-form", "chi-derived", "oracle")

    def test_unknown_flag_prints_usage_and_exits_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["report", "toy", "--m", "1", "--n", "-1", "--bogus"])
        assert exc.value.code == 1
        err = capsys.readouterr().err
        assert "usage" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "modulidim.cli", "report", "toy", "--m", "1", "--n", "-1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["c2"]["value"] == 2
