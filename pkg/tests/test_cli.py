import json

import pytest

from arithmat.cli import run_command
from arithmat.search import bundled_table_path


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDisc:
    def test_table_anchor(self, capsys):
        code, out, _ = run(capsys, "disc", "--form", "1,1,0,-2,-1")
        assert (code, out.strip()) == (0, "-275")

    def test_json_matches_plain(self, capsys):
        _, plain, _ = run(capsys, "disc", "--form", "4,-2,-3,1,1")
        code, out, _ = run(capsys, "--json", "disc", "--form", "4,-2,-3,1,1")
        assert code == 0
        assert json.loads(out)["disc"] == int(plain.strip()) == 2052


class TestMatrix:
    def test_identity_coordinates(self, capsys):
        code, out, _ = run(
            capsys, "matrix", "--pair", "1:1,1,0,-2,-1", "--coords", "1,0,0,0"
        )
        assert code == 0
        assert out.splitlines() == [
            "[1, 0, 0, 0]",
            "[0, 1, 0, 0]",
            "[0, 0, 1, 0]",
            "[0, 0, 0, 1]",
        ]

    def test_symbolic_scaled_example(self, capsys):
        code, out, _ = run(capsys, "matrix", "--pair", "2:4,-2,-3,1,1", "--symbolic")
        assert code == 0
        assert out.splitlines()[2] == "[y, x, u + 3*y - z, -y - z]"


class TestElementOps:
    def test_mul(self, capsys):
        code, out, _ = run(capsys, "mul", "--pair", "1:1,1,-1", "--a", "0,1", "--b", "1,1")
        assert (code, out.strip()) == (0, "1,0")

    def test_mul_via_fft_matches(self, capsys):
        _, direct, _ = run(
            capsys, "mul", "--pair", "2:4,-2,-3,1,1", "--a", "1,2,3,4", "--b", "2,0,-1,5"
        )
        code, fft, _ = run(
            capsys,
            "mul", "--via", "fft",
            "--pair", "2:4,-2,-3,1,1", "--a", "1,2,3,4", "--b", "2,0,-1,5",
        )
        assert code == 0
        assert fft == direct

    def test_add_inv_norm_trace(self, capsys):
        assert run(capsys, "add", "--pair", "1:1,1,-1", "--a", "1,2", "--b", "3,-1")[1].strip() == "4,1"
        assert run(capsys, "inv", "--pair", "1:1,1,-1", "--a", "0,1")[1].strip() == "1,1"
        assert run(capsys, "norm", "--pair", "1:1,1,-1", "--a", "0,1")[1].strip() == "-1"
        assert run(capsys, "trace", "--pair", "1:1,1,-1", "--a", "0,1")[1].strip() == "-1"

    def test_charpoly(self, capsys):
        code, out, _ = run(capsys, "charpoly", "--pair", "2:4,-2,-3,1,1", "--a", "0,1,0,0")
        assert (code, out.strip()) == (0, "4,2,-3,-1,1")

    def test_rational_coordinates(self, capsys):
        code, out, _ = run(capsys, "norm", "--pair", "1:1,1,-1", "--a", "1/2,1/3")
        assert code == 0
        assert out.strip() == "-1/36"


class TestSearchCommand:
    def test_table_box(self, capsys):
        code, out, _ = run(
            capsys, "search", "--disc", "-275", "--degree", "4", "--height", "2", "--max-a0", "1"
        )
        assert code == 0
        assert "1:1,1,0,-2,-1" in out.splitlines()

    def test_json_same_pairs(self, capsys):
        _, plain, _ = run(
            capsys, "search", "--disc", "-275", "--degree", "4", "--height", "2", "--max-a0", "1"
        )
        _, js, _ = run(
            capsys, "--json", "search", "--disc", "-275", "--degree", "4", "--height", "2", "--max-a0", "1"
        )
        assert json.loads(js)["pairs"] == plain.split()


class TestVerifyTablesCommand:
    def test_bundled_fixture_passes(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "--file", str(bundled_table_path("quartic")))
        assert code == 0
        assert "all passed" in out

    def test_corrupt_file_exits_three(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("-275;1;1,1,0,-2,-2\n")
        code, out, _ = run(capsys, "verify-tables", "--file", str(bad))
        assert code == 3
        assert "failure" in out

    def test_missing_file_is_parse_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify-tables", "--file", str(tmp_path / "nope.txt"))
        assert code == 1


class TestSyzygyCommand:
    def test_quartic_pass(self, capsys):
        code, out, _ = run(capsys, "syzygy", "--quartic", "4,-2,-3,1,1")
        assert (code, out.strip()) == (0, "PASS")

    def test_cubic_pass(self, capsys):
        code, out, _ = run(capsys, "syzygy", "--cubic", "1,1,-2,-1")
        assert (code, out.strip()) == (0, "PASS")


class TestDiagCheckCommand:
    def test_residual_small(self, capsys):
        code, out, _ = run(
            capsys, "diag-check", "--pair", "2:4,-2,-3,1,1", "--coords", "2,-1,3,4"
        )
        assert code == 0
        assert float(out.strip()) < 1e-8


class TestBenchCommand:
    def test_ww_counters(self, capsys):
        code, out, _ = run(capsys, "bench", "--size", "4", "--algo", "ww")
        assert code == 0
        m, algo, mults, adds, ns = out.strip().split(",")
        assert (m, algo, mults) == ("4", "ww", "46")
        assert int(ns) > 0

    def test_recursive_any_size(self, capsys):
        code, out, _ = run(capsys, "bench", "--size", "5", "--algo", "recursive")
        assert code == 0
        assert out.startswith("5,recursive,")


class TestExitCodesAndDeterminism:
    def test_parse_error_is_one(self, capsys):
        code, _, err = run(capsys, "disc", "--form", "oops")
        assert code == 1

    def test_unknown_command_is_one(self, capsys):
        assert run(capsys, "nonsense")[0] == 1

    def test_domain_error_is_two_with_name(self, capsys):
        code, _, err = run(capsys, "matrix", "--pair", "2:2,2,1,1,1", "--symbolic")
        assert code == 2
        assert "DivisibilityError" in err

    def test_byte_identical_reruns(self, capsys):
        for argv in (
            ["disc", "--form", "1,1,0,-2,-1"],
            ["matrix", "--pair", "2:4,-2,-3,1,1", "--symbolic"],
            ["search", "--disc", "513", "--degree", "4", "--height", "2", "--max-a0", "2"],
            ["diag-check", "--pair", "1:1,1,-1", "--coords", "3,5"],
            ["--json", "charpoly", "--pair", "1:1,1,0,-2,-1", "--a", "0,1,0,0"],
        ):
            first = run(capsys, *argv)
            second = run(capsys, *argv)
            assert first == second
