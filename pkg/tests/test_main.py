"""Tests for the command-line entry point."""

import json

import pytest

import main
from phasedesign.circuits import circuit_from_truth_table, dump_classical, dump_ht, build_gbin_circuit
from phasedesign.persistence import load_key


@pytest.fixture
def run_cli(capsys):
    """Runs main.main(argv) and returns (exit code, stdout)."""

    def run(*argv):
        code = main.main(list(argv))
        return code, capsys.readouterr().out

    return run


class TestGenState:
    def test_zero_table(self, run_cli, table_file):
        code, out = run_cli("gen-state", "--source", "table", "--table", str(table_file([0, 0, 0, 0])))
        assert code == main.EXIT_OK
        assert out.splitlines()[1:] == ["0,0.5,0.0", "1,0.5,0.0", "2,0.5,0.0", "3,0.5,0.0"]

    def test_complex_table(self, run_cli, table_file):
        path = table_file([0, 1, 2, 3], modulus=4)
        code, out = run_cli("gen-state", "--phase", "complex", "--source", "table", "--table", str(path))
        assert code == main.EXIT_OK
        assert out.splitlines()[2] == "1,0.0,0.5"

    def test_kwise_is_deterministic(self, run_cli):
        first = run_cli("gen-state", "--n", "3", "--k", "4", "--seed", "7")
        second = run_cli("gen-state", "--n", "3", "--k", "4", "--seed", "7")
        assert first == second
        assert first[0] == main.EXIT_OK

    def test_via_circuit_matches_direct(self, run_cli, key_file):
        direct = run_cli("gen-state", "--key", str(key_file))
        via_circuit = run_cli("gen-state", "--key", str(key_file), "--via-circuit")
        assert direct == via_circuit

    def test_via_circuit_over_budget_is_usage_error(self, run_cli, key_file, mocker):
        mocker.patch("phasedesign.circuits.ht.SIM_MAX_CELLS", 16)
        code, out = run_cli("gen-state", "--key", str(key_file), "--via-circuit")
        assert code == main.EXIT_USAGE
        assert out == ""

    def test_save_key(self, run_cli, tmp_path):
        path = tmp_path / "saved.json"
        code, _ = run_cli("gen-state", "--n", "2", "--k", "2", "--seed", "1", "--save-key", str(path))
        assert code == main.EXIT_OK
        assert load_key(path).k == 2

    def test_odd_k_for_binary(self, run_cli):
        code, out = run_cli("gen-state", "--n", "3", "--k", "3")
        assert code == main.EXIT_USAGE
        assert out == ""

    def test_table_n_mismatch(self, run_cli, table_file):
        code, _ = run_cli("gen-state", "--source", "table", "--table", str(table_file([0, 1])), "--n", "3")
        assert code == main.EXIT_USAGE

    def test_env_seed_default(self, run_cli, monkeypatch):
        monkeypatch.setenv("PHASEDESIGN_SEED", "7")
        from_env = run_cli("gen-state", "--n", "3", "--k", "4")
        monkeypatch.delenv("PHASEDESIGN_SEED")
        explicit = run_cli("gen-state", "--n", "3", "--k", "4", "--seed", "7")
        assert from_env == explicit


class TestVerify:
    def test_passes(self, run_cli):
        code, out = run_cli("verify", "--t", "2", "--n", "2")
        assert code == main.EXIT_OK
        report = json.loads(out)[0]
        assert report["passed"] is True
        assert report["td_complex_haar"] == pytest.approx(0.15, abs=1e-9)

    def test_t_too_large_is_usage_error(self, run_cli):
        code, out = run_cli("verify", "--t", "4", "--n", "2")
        assert code == main.EXIT_USAGE
        assert out == ""

    def test_grid_csv(self, run_cli, tmp_path):
        path = tmp_path / "grid.csv"
        code, _ = run_cli("verify", "--grid", "1,2;2,2;2,3", "--format", "csv", "--out", str(path))
        assert code == main.EXIT_OK
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("t,n,observed_rank")
        assert len(lines) == 4

    def test_json_out_writes_csv_summary(self, run_cli, tmp_path):
        path = tmp_path / "grid.json"
        code, out = run_cli("verify", "--grid", "1,2;2,2", "--out", str(path))
        assert code == main.EXIT_OK
        assert out == ""
        assert len(json.loads(path.read_text(encoding="utf-8"))) == 2
        lines = (tmp_path / "grid.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("t,n,observed_rank")
        assert len(lines) == 3

    def test_bad_grid(self, run_cli):
        code, _ = run_cli("verify", "--grid", "2;2")
        assert code == main.EXIT_USAGE

    def test_failed_check_exit_code(self, run_cli, mocker):
        mocker.patch("sd_moments.bounds.rank_bound", return_value=0)
        code, out = run_cli("verify", "--t", "2", "--n", "2")
        assert code == main.EXIT_FAILED
        assert "rank_bound" in json.loads(out)[0]["failures"]

    def test_spectral_limit(self, run_cli):
        code, _ = run_cli("verify", "--t", "2", "--n", "7")
        assert code == main.EXIT_USAGE


class TestClasses:
    def test_permutation(self, run_cli):
        code, out = run_cli("classes", "--t", "2", "--n", "2")
        assert code == main.EXIT_OK
        assert len(json.loads(out)) == 10

    def test_stabilization(self, run_cli):
        code, out = run_cli("classes", "--t", "2", "--n", "2", "--kind", "stabilization")
        data = json.loads(out)
        assert code == main.EXIT_OK
        assert len(data) == 7
        assert sum(1 for d in data if not d["trivial"]) == 1

    def test_missing_parameters(self, run_cli):
        code, _ = run_cli("classes", "--t", "2")
        assert code == main.EXIT_USAGE


class TestCircuit:
    def test_compile(self, run_cli, tmp_path):
        path = tmp_path / "nand.txt"
        path.write_text("INPUTS 2; WIRES 4; ONES 3; OUT 2\nAND 0 1 2\nTOF 3 3 2\n", encoding="utf-8")
        code, out = run_cli("circuit", "compile", "--in", str(path))
        assert code == main.EXIT_OK
        assert out == "INPUTS 2; WIRES 4; ONES 3; OUT 2\nTOF 0 1 2\nTOF 3 3 2\n"

    def test_gbin_then_simulate(self, run_cli, table_file, tmp_path):
        ht_path = tmp_path / "gbin.txt"
        code, _ = run_cli("circuit", "gbin", "--table", str(table_file([0, 0, 0, 1])), "--out", str(ht_path))
        assert code == main.EXIT_OK
        code, simulated = run_cli("circuit", "simulate", "--in", str(ht_path))
        assert code == main.EXIT_OK
        _, direct = run_cli("gen-state", "--source", "table", "--table", str(table_file([0, 0, 0, 1])))
        assert simulated == direct

    def test_gbin_from_classical_file(self, run_cli, tmp_path):
        source = circuit_from_truth_table([1, 0, 0, 1])
        path = tmp_path / "xnor.txt"
        path.write_text(dump_classical(source), encoding="utf-8")
        code, out = run_cli("circuit", "gbin", "--in", str(path))
        assert code == main.EXIT_OK
        assert out == dump_ht(build_gbin_circuit(source))

    def test_metrics(self, run_cli, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text("INPUTS 2; WIRES 3; OUT 2\nAND 0 1 2\n", encoding="utf-8")
        code, out = run_cli("circuit", "metrics", "--in", str(path))
        assert code == main.EXIT_OK
        assert json.loads(out) == {"size": 1, "depth": 1}

    def test_kwise_circuit(self, run_cli, tmp_path):
        saved = tmp_path / "kwise.txt"
        code, out = run_cli("circuit", "kwise-circuit", "--n", "3", "--k", "4", "--save", str(saved))
        assert code == main.EXIT_OK
        metrics = json.loads(out)
        assert metrics["size"] > 0
        code, out = run_cli("circuit", "metrics", "--in", str(saved))
        assert json.loads(out)["size"] == metrics["size"]

    def test_parse_error(self, run_cli, tmp_path, caplog):
        path = tmp_path / "bad.txt"
        path.write_text("INPUTS 2; WIRES 3; OUT 2\nAND 0 1\n", encoding="utf-8")
        code, _ = run_cli("circuit", "compile", "--in", str(path))
        assert code == main.EXIT_USAGE
        assert "line 2" in caplog.text

    def test_missing_input(self, run_cli):
        code, _ = run_cli("circuit", "simulate")
        assert code == main.EXIT_USAGE


class TestKWise:
    def test_passes(self, run_cli):
        code, out = run_cli("kwise", "--n", "3", "--k", "3")
        assert code == main.EXIT_OK
        assert json.loads(out)["passed"] is True

    def test_bit(self, run_cli):
        code, out = run_cli("kwise", "--n", "2", "--k", "4", "--bit")
        assert json.loads(out)["output_bits"] == 1

    def test_too_large(self, run_cli):
        code, _ = run_cli("kwise", "--n", "8", "--k", "4")
        assert code == main.EXIT_USAGE


class TestParser:
    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc_info:
            main.main(["bogus"])
        assert exc_info.value.code == main.EXIT_USAGE

    def test_config_from_args(self):
        args = main.build_parser().parse_args(["circuit", "simulate", "--in", "x.txt", "--n", "2"])
        config = main.config_from_args(args)
        assert config.subcommand == "circuit"
        assert config.n == 2
        assert config.extra == {"action": "simulate", "input": "x.txt", "table": None, "save": None}
