import json

import pytest

from igraphjac.cli import EXIT_OK, EXIT_USAGE, main

import expected_tables
import helpers


def run_json_lines(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line]


class TestJacobianCommand:
    def test_single_instance_json(self, capsys):
        code, records = run_json_lines(
            capsys, ["jacobian", "--n", "4", "--k", "2", "--l", "3", "--json"]
        )
        assert code == EXIT_OK
        (rec,) = records
        assert rec["params"] == {"n": 4, "k": 2, "l": 3}
        assert rec["torsion"] == ["7", "28"]
        assert rec["free_rank"] == 1
        assert rec["tau"] == "196"
        assert rec["checks"] == {"rank_lower": True, "rank_upper": True}

    def test_range_with_skips(self, capsys):
        code, records = run_json_lines(
            capsys, ["jacobian", "--n", "3..6", "--k", "3", "--l", "4", "--json"]
        )
        assert code == EXIT_OK
        by_n = {rec["params"]["n"]: rec for rec in records}
        assert by_n[3]["error"] == "LoopError"
        assert by_n[4]["error"] == "LoopError"
        assert "torsion" in by_n[5] and "torsion" in by_n[6]

    def test_disconnected_skip_reports_components(self, capsys):
        code, records = run_json_lines(
            capsys, ["jacobian", "--n", "4..5", "--k", "2", "--l", "2", "--json"]
        )
        assert code == EXIT_OK
        by_n = {rec["params"]["n"]: rec for rec in records}
        assert by_n[4]["error"] == "DisconnectedError"
        assert by_n[4]["components"] == 2
        # gcd(k, l) cancels for n = 5: the graph is the (5,1,1) prism
        assert by_n[5]["torsion"]

    def test_methods_agree(self, capsys):
        code, records = run_json_lines(
            capsys,
            ["jacobian", "--n", "10..14", "--k", "2", "--l", "3", "--method", "both", "--json"],
        )
        assert code == EXIT_OK
        for rec in records:
            assert rec["methods_used"] == ["companion", "laplacian"]

    def test_text_mode(self, capsys):
        code = main(["jacobian", "--n", "5", "--k", "1", "--l", "2"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "I(5,1,2)" in out
        assert "[2, 10, 10, 10]" in out


class TestTreesCommand:
    def test_all_methods(self, capsys):
        code, records = run_json_lines(
            capsys, ["trees", "--n", "5", "--k", "1", "--l", "2", "--method", "all", "--json"]
        )
        assert code == EXIT_OK
        (rec,) = records
        assert rec["tau"] == "2000"
        assert rec["a"] == "20"
        assert rec["multiplier"] == 1
        assert sorted(rec["methods_used"]) == ["chebyshev", "kirchhoff", "resultant"]
        assert rec["checks"] == {"divisible_by_n": True, "cube_bound": True}

    def test_multiplier_six_case(self, capsys):
        code, records = run_json_lines(
            capsys, ["trees", "--n", "4", "--k", "1", "--l", "1", "--json"]
        )
        assert code == EXIT_OK
        assert records[0]["multiplier"] == 6
        assert records[0]["tau"] == "384"

    def test_auto_switches_to_resultant_above_gate(self, capsys):
        code, records = run_json_lines(
            capsys, ["trees", "--n", "100", "--k", "2", "--l", "3", "--json"]
        )
        assert code == EXIT_OK
        assert records[0]["methods_used"] == ["resultant"]
        assert int(records[0]["tau"]) % 100 == 0

    def test_published_row(self, capsys):
        code, records = run_json_lines(
            capsys, ["trees", "--n", "25", "--k", "3", "--l", "4", "--json"]
        )
        assert code == EXIT_OK
        assert records[0]["tau"] == "312061332000250000"


class TestAsymptoticCommand:
    def test_routes_agree(self, capsys):
        code, records = run_json_lines(
            capsys, ["asymptotic", "--k", "1", "--l", "1", "--precision", "128", "--json"]
        )
        assert code == EXIT_OK
        (rec,) = records
        assert rec["agree"] is True
        assert rec["constant"].startswith("3.7320508")
        assert rec["integral"].startswith("3.7320508")

    def test_ratio_probe(self, capsys):
        code, records = run_json_lines(
            capsys,
            [
                "asymptotic", "--k", "1", "--l", "2",
                "--precision", "128", "--ratio-at", "20", "--json",
            ],
        )
        assert code == EXIT_OK
        ratio = float(records[0]["ratio_at"]["ratio"])
        assert abs(ratio - 1) < 1e-2


class TestTableCommand:
    def test_jac23_json_matches_published(self, capsys):
        code, records = run_json_lines(capsys, ["table", "--which", "jac23", "--format", "json"])
        assert code == EXIT_OK
        assert len(records) == 32
        by_n = {rec["n"]: rec for rec in records}
        assert by_n[13]["torsion"] == ["25", "325", "325", "325"]
        for n, (torsion, tau) in expected_tables.JAC_23.items():
            if n in expected_tables.TAU_COLUMN_TYPOS_23:
                tau = expected_tables.TAU_COLUMN_TYPOS_23[n]
            assert int(by_n[n]["tau"]) == tau
            got = tuple(int(d) for d in by_n[n]["torsion"])
            assert got == helpers.canonical_invariant_factors(torsion)

    def test_a_grid_text(self, capsys):
        code = main(["table", "--which", "A"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "3.7320" in out
        assert "5.1691" in out
        # non-coprime cells print a dash
        assert "-" in out

    def test_a_csv_truncated_cells(self, capsys):
        code = main(["table", "--which", "A", "--format", "csv"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "k,l,A"
        cells = {}
        for line in lines[1:]:
            k, l, a = line.split(",")
            cells[(int(k), int(l))] = a
        # the command truncates uniformly; the published grid truncates
        # everywhere except (5,7), which was rounded up from 5.13459...
        expected = dict(expected_tables.GROWTH_4DP)
        expected[(5, 7)] = "5.1345"
        assert cells == expected

    def test_byte_stable_output(self, capsys):
        main(["table", "--which", "jac34", "--format", "json"])
        first = capsys.readouterr().out
        main(["table", "--which", "jac34", "--format", "json"])
        second = capsys.readouterr().out
        assert first == second

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "table.csv"
        code = main(["table", "--which", "jac23", "--format", "csv", "--out", str(target)])
        capsys.readouterr()
        assert code == EXIT_OK
        lines = target.read_text().strip().splitlines()
        assert lines[0] == "n,torsion,tau"
        assert len(lines) == 33


class TestErrorsAndUsage:
    def test_bad_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["jacobian", "--n", "4..x", "--k", "1", "--l", "2"])
        assert info.value.code == EXIT_USAGE

    def test_empty_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["trees", "--n", "9..4", "--k", "1", "--l", "2"])
        assert info.value.code == EXIT_USAGE

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == EXIT_USAGE

    def test_invalid_params_exit_code(self, capsys):
        # n below 3 is rejected during normalization, not argparse
        code = main(["asymptotic", "--k", "0", "--l", "2"])
        assert code == EXIT_USAGE

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert "igraphjac" in capsys.readouterr().out
