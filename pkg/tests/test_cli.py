"""Command-line driver: exit statuses, output formats, parallel solving."""

import io
import json
import random
from pathlib import Path

import pytest

from cofsat import all_solutions, clause_pivot_tree, emit_dimacs, gather
from cofsat.cli import (
    EXIT_ERROR,
    EXIT_OK,
    EXIT_SAT,
    EXIT_UNSAT,
    RunConfig,
    main,
    parallel_leaf_solve,
    run,
)

from helpers import example2_formula, random_formula

GOLDEN = Path(__file__).parent / "golden"


def run_capture(config):
    out, err = io.StringIO(), io.StringIO()
    status = run(config, out=out, err=err)
    return status, out.getvalue(), err.getvalue()


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig(input_path="x.cnf")
        assert config.mode == "sat"
        assert config.n0 == 8 and config.jobs == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            RunConfig(input_path="x", mode="prove")
        with pytest.raises(ValueError):
            RunConfig(input_path="x", n0=0)
        with pytest.raises(ValueError):
            RunConfig(input_path="x", jobs=0)
        with pytest.raises(ValueError):
            RunConfig(input_path="x", pivot_strategy="magic")
        with pytest.raises(ValueError):
            RunConfig(input_path="x", output_format="xml")


class TestExitStatuses:
    def test_sat_file(self):
        status, out, _ = run_capture(RunConfig(str(GOLDEN / "sat.cnf")))
        assert status == EXIT_SAT
        assert out.startswith("SATISFIABLE\n")

    def test_unsat_file(self):
        status, out, _ = run_capture(RunConfig(str(GOLDEN / "unsat.cnf")))
        assert status == EXIT_UNSAT
        assert out == "UNSATISFIABLE\n"

    def test_parse_error_files(self):
        for name in ("bad_range.cnf", "bad_header.cnf"):
            status, out, err = run_capture(RunConfig(str(GOLDEN / name)))
            assert status == EXIT_ERROR
            assert out == ""
            assert "line" in err

    def test_missing_file(self):
        status, _, err = run_capture(RunConfig("/does/not/exist.cnf"))
        assert status == EXIT_ERROR
        assert "error" in err

    def test_decompose_mode_exits_zero(self):
        status, _, _ = run_capture(
            RunConfig(str(GOLDEN / "example2.cnf"), mode="decompose"))
        assert status == EXIT_OK

    def test_zero_variable_formula(self, tmp_path):
        path = tmp_path / "empty.cnf"
        path.write_text("p cnf 0 0\n")
        status, out, _ = run_capture(RunConfig(str(path), mode="sat"))
        assert status == EXIT_SAT
        assert out == "SATISFIABLE\n0\n"  # the empty assignment
        status, out, _ = run_capture(RunConfig(str(path), mode="count"))
        assert (status, out) == (EXIT_SAT, "1\n")


class TestModes:
    def test_sat_witness_satisfies_formula(self):
        status, out, _ = run_capture(
            RunConfig(str(GOLDEN / "example2.cnf"), mode="sat"))
        assert status == EXIT_SAT
        lines = out.splitlines()
        assert lines[0] == "SATISFIABLE"
        witness = [int(v) for v in lines[1].split()[:-1]]
        assignment = {abs(v): v > 0 for v in witness}
        for clause in example2_formula().clauses:
            assert clause.satisfied_by(assignment)

    def test_count_example2(self):
        status, out, _ = run_capture(
            RunConfig(str(GOLDEN / "example2.cnf"), mode="count"))
        assert status == EXIT_SAT
        assert out == "9\n"

    def test_allsat_streams_canonical_set(self):
        status, out, _ = run_capture(
            RunConfig(str(GOLDEN / "example2.cnf"), mode="allsat"))
        assert status == EXIT_SAT
        expected = all_solutions(example2_formula()).to_text()
        assert out == expected
        assert len(out.splitlines()) == 9

    def test_decompose_clause_pivot_golden(self):
        status, out, _ = run_capture(RunConfig(
            str(GOLDEN / "example2.cnf"), mode="decompose",
            pivot_strategy="clause", pivot_clause=0))
        assert status == EXIT_OK
        assert out == (GOLDEN / "example2_pivot_tree.txt").read_text()

    def test_clause_pivot_solving(self):
        status, out, _ = run_capture(RunConfig(
            str(GOLDEN / "example2.cnf"), mode="count",
            pivot_strategy="clause", pivot_clause=2))
        assert status == EXIT_SAT
        assert out == "9\n"

    def test_bad_pivot_index_is_an_error(self):
        status, _, err = run_capture(RunConfig(
            str(GOLDEN / "example2.cnf"), mode="count",
            pivot_strategy="clause", pivot_clause=9))
        assert status == EXIT_ERROR
        assert "pivot" in err


class TestJsonFormat:
    def test_sat_payload(self):
        status, out, _ = run_capture(RunConfig(
            str(GOLDEN / "example2.cnf"), mode="sat", output_format="json"))
        payload = json.loads(out)
        assert status == EXIT_SAT
        assert payload["status"] == "SATISFIABLE"
        assert payload["count"] == 9
        assert len(payload["solutions"]) == 1

    def test_allsat_payload(self):
        _, out, _ = run_capture(RunConfig(
            str(GOLDEN / "example2.cnf"), mode="allsat", output_format="json"))
        payload = json.loads(out)
        assert payload["count"] == 9
        assert len(payload["solutions"]) == 9
        assert [-1, -2, -3, -4] in payload["solutions"]

    def test_unsat_payload(self):
        status, out, _ = run_capture(RunConfig(
            str(GOLDEN / "unsat.cnf"), mode="count", output_format="json"))
        payload = json.loads(out)
        assert status == EXIT_UNSAT
        assert payload == {"status": "UNSATISFIABLE", "count": 0}

    def test_decompose_payload(self):
        _, out, _ = run_capture(RunConfig(
            str(GOLDEN / "example2.cnf"), mode="decompose",
            pivot_strategy="clause", output_format="json"))
        payload = json.loads(out)
        assert payload["status"] == "OK"
        nodes = payload["tree"]
        assert nodes[0]["status"] == "internal"
        assert len(nodes) == 8
        assert nodes[1]["prefix"] == [-1]
        assert nodes[1]["clauses"] == [[-2, 3, -4], [3, -4], [-3, -4]]


class TestParallelism:
    def test_jobs_invariance_byte_identical(self, tmp_path):
        rng = random.Random(83)
        for i in range(6):
            f = random_formula(rng, rng.randint(6, 11), rng.randint(12, 30))
            path = tmp_path / f"f{i}.cnf"
            path.write_text(emit_dimacs(f))
            for mode in ("sat", "allsat", "count"):
                for pivot in ("clause", "vars"):
                    outputs = set()
                    statuses = set()
                    for jobs in (1, 2, 8):
                        status, out, _ = run_capture(RunConfig(
                            str(path), mode=mode, pivot_strategy=pivot,
                            n0=4, jobs=jobs))
                        outputs.add(out.encode())
                        statuses.add(status)
                    assert len(outputs) == 1
                    assert len(statuses) == 1

    def test_parallel_leaf_solve_matches_serial(self):
        rng = random.Random(89)
        f = random_formula(rng, 10, 24)
        tree = clause_pivot_tree(f, 0)
        serial = parallel_leaf_solve(tree, 1)
        parallel = parallel_leaf_solve(tree, 4)
        assert gather(tree, serial) == gather(tree, parallel)

    def test_single_leaf_any_jobs(self):
        tree = clause_pivot_tree(example2_formula(), 0)
        for jobs in (1, 8):
            results = parallel_leaf_solve(tree, jobs)
            assert len(results) == 7

    def test_bad_jobs_rejected(self):
        tree = clause_pivot_tree(example2_formula(), 0)
        with pytest.raises(ValueError):
            parallel_leaf_solve(tree, 0)


class TestVerify:
    def test_verify_passes_on_oracle_match(self, tmp_path):
        rng = random.Random(97)
        for i in range(5):
            f = random_formula(rng, 8, 18)
            path = tmp_path / f"v{i}.cnf"
            path.write_text(emit_dimacs(f))
            status, _, err = run_capture(RunConfig(
                str(path), mode="count", n0=3, verify=True))
            assert status in (EXIT_SAT, EXIT_UNSAT)
            assert "mismatch" not in err

    def test_verify_flag_through_main(self, capsys):
        status = main(["--input", str(GOLDEN / "example2.cnf"),
                       "--mode", "count", "--verify"])
        assert status == EXIT_SAT
        assert capsys.readouterr().out == "9\n"


class TestMain:
    def test_main_count(self, capsys):
        status = main(["--input", str(GOLDEN / "example2.cnf"),
                       "--mode", "count", "--pivot", "vars", "--n0", "2",
                       "--jobs", "2"])
        assert status == EXIT_SAT
        assert capsys.readouterr().out == "9\n"

    def test_main_rejects_bad_n0(self, capsys):
        status = main(["--input", str(GOLDEN / "example2.cnf"), "--n0", "0"])
        assert status == EXIT_ERROR

    def test_main_json(self, capsys):
        status = main(["--input", str(GOLDEN / "unsat.cnf"),
                       "--mode", "sat", "--format", "json"])
        assert status == EXIT_UNSAT
        assert json.loads(capsys.readouterr().out)["status"] == "UNSATISFIABLE"
