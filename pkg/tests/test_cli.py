import contextlib
import io
import json
from math import comb

import pytest

from symcube import format_character, character_irrep
from symcube.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class TestDim:
    def test_text(self):
        code, out, _ = run(["dim", "40", "4", "8", "8"])
        assert code == 0
        assert out.strip() == "6957"

    def test_negative_weight_component(self):
        code, out, _ = run(["dim", "40", "-4", "8", "8"])
        assert code == 0
        assert out.strip() == "6957"

    def test_parity_zero(self):
        code, out, _ = run(["dim", "3", "0", "1", "1"])
        assert code == 0
        assert out.strip() == "0"

    def test_top_weight(self):
        code, out, _ = run(["dim", "5", "5", "5", "5"])
        assert code == 0
        assert out.strip() == "1"

    def test_json(self):
        code, out, _ = run(["dim", "40", "4", "8", "8", "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"m": 40, "weight": [4, 8, 8], "dim": 6957}

    def test_csv(self):
        code, out, _ = run(["dim", "2", "0", "0", "0", "--format", "csv"])
        assert code == 0
        assert out.splitlines() == ["m,l1,l2,l3,dim", "2,0,0,0,4"]


class TestMult:
    def test_text(self):
        code, out, _ = run(["mult", "40", "4", "8", "8"])
        assert code == 0
        assert out.strip() == "3"

    def test_invariant(self):
        code, out, _ = run(["mult", "8", "0", "0", "0"])
        assert code == 0
        assert out.strip() == "1"

    def test_parity(self):
        code, out, _ = run(["mult", "2", "1", "1", "1"])
        assert code == 0
        assert out.strip() == "0"

    def test_json(self):
        code, out, _ = run(["mult", "4", "0", "0", "0", "--format", "json"])
        assert json.loads(out) == {"m": 4, "label": [0, 0, 0], "mult": 1}


class TestDecompose:
    def test_single_row(self):
        code, out, _ = run(["decompose", "1"])
        assert code == 0
        assert out.splitlines() == ["1 1 1 1", "total_dim = 8"]

    def test_four_rows(self):
        code, out, _ = run(["decompose", "2"])
        assert code == 0
        rows = out.splitlines()
        assert rows[-1] == "total_dim = 36"
        assert rows[:-1] == ["2 2 2 1", "2 0 0 1", "0 2 0 1", "0 0 2 1"]

    def test_json_round_trip(self):
        code, out, _ = run(["decompose", "6", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["m"] == 6
        total = sum(
            e["mult"] * (e["label"][0] + 1) * (e["label"][1] + 1)
            * (e["label"][2] + 1)
            for e in payload["entries"]
        )
        assert total == payload["total_dim"] == comb(13, 7)

    def test_json_includes_invariant(self):
        code, out, _ = run(["decompose", "4", "--format", "json"])
        assert {"label": [0, 0, 0], "mult": 1} in json.loads(out)["entries"]

    def test_csv_matches_text_rows(self):
        code_t, out_t, _ = run(["decompose", "5"])
        code_c, out_c, _ = run(["decompose", "5", "--format", "csv"])
        assert code_t == code_c == 0
        text_rows = [tuple(line.split()) for line in out_t.splitlines()
                     if not line.startswith("total_dim")]
        csv_lines = out_c.splitlines()
        assert csv_lines[0] == "n1,n2,n3,mult"
        csv_rows = [tuple(line.split(",")) for line in csv_lines[1:]]
        assert csv_rows == text_rows

    def test_nonzero_only_flag_accepted(self):
        code, out, _ = run(["decompose", "2", "--nonzero-only"])
        assert code == 0
        assert len(out.splitlines()) == 5


class TestCharacter:
    def test_degree_one_has_eight_lines(self):
        code, out, _ = run(["character", "1"])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 8
        assert all(line.split()[-1] == "1" for line in lines)

    def test_output_feeds_greedy(self, tmp_path):
        code, out, _ = run(["character", "3"])
        assert code == 0
        path = tmp_path / "s3.char"
        path.write_text(out)
        code, out, _ = run(["greedy", str(path)])
        assert code == 0
        assert out.splitlines()[-1] == f"total_dim = {comb(10, 7)}"

    def test_json_total(self):
        code, out, _ = run(["character", "2", "--format", "json"])
        payload = json.loads(out)
        assert payload["total"] == 36
        assert {"weight": [0, 0, 0], "dim": 4} in payload["entries"]


class TestGreedy:
    def test_single_irrep_file(self, tmp_path):
        path = tmp_path / "cube.char"
        path.write_text(format_character(character_irrep((1, 1, 1))))
        code, out, _ = run(["greedy", str(path)])
        assert code == 0
        assert out.splitlines() == ["1 1 1 1", "total_dim = 8"]

    def test_invalid_character_exits_2(self, tmp_path):
        path = tmp_path / "bad.char"
        path.write_text("2 0 0 1\n-2 0 0 1\n")
        code, _, err = run(["greedy", str(path)])
        assert code == 2
        assert "not a module character" in err

    def test_malformed_file_exits_2(self, tmp_path):
        path = tmp_path / "malformed.char"
        path.write_text("1 2 3\n")
        code, _, err = run(["greedy", str(path)])
        assert code == 2
        assert "error" in err

    def test_missing_file_exits_2(self, tmp_path):
        code, _, err = run(["greedy", str(tmp_path / "nope.char")])
        assert code == 2


class TestVerify:
    def test_passes(self):
        code, out, _ = run(["verify", "--max-m", "10"])
        assert code == 0
        assert "all checks passed" in out
        # one summary line per check plus the final line
        assert len(out.strip().splitlines()) == 5


class TestUsageErrors:
    def test_missing_arguments(self):
        code, _, err = run(["dim", "40"])
        assert code == 1
        assert err

    def test_non_integer(self):
        code, _, _ = run(["dim", "x", "0", "0", "0"])
        assert code == 1

    def test_negative_power(self):
        code, _, _ = run(["mult", "-2", "0", "0", "0"])
        assert code == 1

    def test_bad_format(self):
        code, _, _ = run(["decompose", "2", "--format", "xml"])
        assert code == 1

    def test_unknown_command(self):
        code, _, _ = run(["frobnicate"])
        assert code == 1
