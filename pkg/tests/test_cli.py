"""Exit codes, formats, and pipelines of the command-line interface."""

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from symdesign.cli import main

DATA = Path(__file__).resolve().parents[1] / "src" / "symdesign" / "data"
TABLES = Path(__file__).resolve().parents[1] / "tables"

FANO_JSON = ('{"v": 7, "blocks": [[1,2,3],[1,4,5],[1,6,7],[2,4,6],'
             '[2,5,7],[3,4,7],[3,5,6]]}')
C7_GENS = "degree 7\n(1,2,3,4,5,6,7)\n"
S7_GENS = "degree 7\n(1,2)\n(1,2,3,4,5,6,7)\n"
C2CUBE_GENS = ("degree 8\n(1,2)(3,4)(5,6)(7,8)\n(1,3)(2,4)(5,7)(6,8)\n"
               "(1,5)(2,6)(3,7)(4,8)\n")


@pytest.fixture()
def fano_file(tmp_path):
    path = tmp_path / "fano.json"
    path.write_text(FANO_JSON)
    return str(path)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestTopLevel:
    def test_version_prints_package_and_checksums(self, capsys):
        assert main(["--version"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("symdesign ")
        names = {line.split()[-1] for line in out.splitlines()[1:]}
        assert names == {"d64_generators.txt", "table2.csv", "table3.csv",
                         "table4.csv", "table5.csv"}

    def test_no_command_is_usage_error(self, capsys):
        assert main([]) == 2

    def test_unknown_command_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

    def test_threads_flag_is_accepted_but_validated(self, capsys, fano_file):
        assert main(["--threads", "4", "verify", fano_file]) == 0
        assert main(["--threads", "0", "verify", fano_file]) == 2


class TestVerify:
    def test_fano_verifies(self, capsys, fano_file):
        assert main(["verify", fano_file]) == 0
        assert "2-(7,3,1)" in capsys.readouterr().out

    def test_json_format(self, capsys, fano_file):
        assert main(["verify", fano_file, "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record == {"v": 7, "b": 7, "k": 3, "r": 3, "lambda": 1,
                          "symmetric": True}

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(FANO_JSON))
        assert main(["verify", "-"]) == 0
        assert "2-(7,3,1)" in capsys.readouterr().out

    def test_unbalanced_design_exits_one(self, capsys, tmp_path):
        path = write(tmp_path, "bad.json",
                     '{"v": 4, "blocks": [[1,2],[1,3]]}')
        assert main(["verify", path]) == 1
        assert "not a 2-design" in capsys.readouterr().out

    def test_malformed_file_is_usage_error(self, capsys, tmp_path):
        path = write(tmp_path, "junk.json", "{not json")
        assert main(["verify", path]) == 2
        assert main(["verify", str(tmp_path / "absent.json")]) == 2


class TestIsoAndAut:
    def test_fano_aut_order(self, capsys, fano_file):
        assert main(["aut", fano_file, "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["order"] == 168
        assert record["generators"]

    def test_iso_of_relabeled_copy(self, capsys, fano_file, tmp_path):
        relabeled = ('{"v": 7, "blocks": [[7,6,5],[7,4,3],[7,2,1],[6,4,2],'
                     '[6,3,1],[5,4,1],[5,3,2]]}')
        other = write(tmp_path, "relabeled.json", relabeled)
        assert main(["iso", fano_file, other]) == 0
        assert "isomorphic" in capsys.readouterr().out

    def test_non_isomorphic_designs_exit_one(self, capsys, tmp_path):
        d1 = write(tmp_path, "d1.json", FANO_JSON)
        assert main(["construct", "ag3_2_planes", "--out",
                     str(tmp_path / "ag.json")]) == 0
        assert main(["iso", d1, str(tmp_path / "ag.json"),
                     "--format", "json"]) == 1
        record = json.loads(capsys.readouterr().out)
        assert record == {"isomorphic": False, "mapping": None}


class TestDecompose:
    def test_d64_row(self, capsys, tmp_path):
        design = str(tmp_path / "d64.json")
        assert main(["construct", "d64-1", "--out", design]) == 0
        gens = str(DATA / "d64_generators.txt")
        assert main(["decompose", design, gens]) == 0
        assert capsys.readouterr().out.strip() == \
            "8 4 3 7 14 4 | 8 7 6 7 8 | 8"
        assert main(["decompose", design, gens, "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["k0"] == 4 and record["k1"] == 7 and record["mu"] == 8

    def test_primitive_group_exits_one(self, capsys, fano_file, tmp_path):
        gens = write(tmp_path, "s7.gens", S7_GENS)
        assert main(["decompose", fano_file, gens]) == 1
        assert "primitive" in capsys.readouterr().out

    def test_system_index_out_of_range(self, capsys, tmp_path):
        design = str(tmp_path / "d64.json")
        main(["construct", "d64-1", "--out", design])
        gens = str(DATA / "d64_generators.txt")
        assert main(["decompose", design, gens, "--system", "99"]) == 2


class TestEnumerate:
    def test_symmetric_csv_matches_golden_file(self, capsys):
        assert main(["enumerate", "--symmetric", "--format", "csv"]) == 0
        assert capsys.readouterr().out == (TABLES / "table5.csv").read_text()

    def test_each_table_matches_its_golden_file(self, capsys):
        for name in ("table2", "table3", "table4", "table5"):
            assert main(["enumerate", "--table", name, "--format", "csv"]) == 0
            got = capsys.readouterr().out
            assert got == (TABLES / ("%s.csv" % name)).read_text()

    def test_symmetric_json_has_sixteen_rows(self, capsys):
        assert main(["enumerate", "--symmetric", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 16
        assert {"v", "k", "lambda"} <= set(rows[0])

    def test_default_listing_merges_all_branches(self, capsys):
        assert main(["enumerate"]) == 0
        out = capsys.readouterr().out
        assert len(out.strip().splitlines()) == 1 + 33 + 32 + 12

    def test_flag_conflict_is_usage_error(self, capsys):
        assert main(["enumerate", "--symmetric", "--table", "table2"]) == 2


class TestConstructAndClaims:
    def test_construct_writes_verifiable_design(self, capsys, tmp_path):
        out = str(tmp_path / "pg.json")
        assert main(["construct", "pg2_3", "--out", out]) == 0
        assert main(["verify", out]) == 0
        assert "2-(13,4,1)" in capsys.readouterr().out

    def test_construct_unknown_name(self, capsys):
        assert main(["construct", "petersen"]) == 2
        assert "available" in capsys.readouterr().err

    def test_claims_report(self, capsys):
        assert main(["claims", "fano"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out
        assert main(["claims", "ag2_3", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert all(item["ok"] for item in report)


class TestDiffset:
    def test_check_accepts_planar_difference_set(self, capsys, tmp_path):
        gens = write(tmp_path, "c7.gens", C7_GENS)
        assert main(["diffset", "check", gens, "1,2,4", "--lambda", "1"]) == 0
        assert "difference set" in capsys.readouterr().out

    def test_check_rejects_with_witness(self, capsys, tmp_path):
        gens = write(tmp_path, "c7.gens", C7_GENS)
        assert main(["diffset", "check", gens, "1,2,3", "--lambda", "1"]) == 1
        assert "representations" in capsys.readouterr().out

    def test_develop_then_verify(self, capsys, tmp_path, monkeypatch):
        gens = write(tmp_path, "c7.gens", C7_GENS)
        assert main(["diffset", "develop", gens, "1,2,4"]) == 0
        design_text = capsys.readouterr().out
        monkeypatch.setattr("sys.stdin", io.StringIO(design_text))
        assert main(["verify", "-"]) == 0
        assert "2-(7,3,1)" in capsys.readouterr().out

    def test_subset_validation(self, capsys, tmp_path):
        gens = write(tmp_path, "c7.gens", C7_GENS)
        assert main(["diffset", "check", gens, "1,2,9", "--lambda", "1"]) == 2
        assert main(["diffset", "check", gens, "1,1,2", "--lambda", "1"]) == 2
        assert main(["diffset", "check", gens, "", "--lambda", "1"]) == 2

    def test_subset_from_file(self, capsys, tmp_path):
        gens = write(tmp_path, "c7.gens", C7_GENS)
        subset = write(tmp_path, "subset.txt", "1 2 4\n")
        assert main(["diffset", "check", gens, subset, "--lambda", "1"]) == 0

    def test_regular_search_finds_translations(self, capsys, tmp_path):
        gens = write(tmp_path, "cube.gens", C2CUBE_GENS)
        assert main(["diffset", "regular", gens, "--limit", "1"]) == 0
        assert "order 8" in capsys.readouterr().out

    def test_regular_on_intransitive_group(self, capsys, tmp_path):
        gens = write(tmp_path, "fix.gens", "degree 4\n(1,2)\n")
        assert main(["diffset", "regular", gens]) == 2

    def test_regular_budget_exhaustion(self, capsys, tmp_path):
        gens = write(tmp_path, "cube.gens", C2CUBE_GENS)
        assert main(["diffset", "regular", gens, "--budget", "0"]) == 3

    def test_non_regular_group_rejected_for_check(self, capsys, tmp_path):
        gens = write(tmp_path, "s7.gens", S7_GENS)
        assert main(["diffset", "check", gens, "1,2,4", "--lambda", "1"]) == 2


class TestPipelines:
    """The documented shell pipelines, run through real processes."""

    def test_construct_pipe_verify(self):
        construct = subprocess.run(
            [sys.executable, "-m", "symdesign.cli", "construct", "d64-1"],
            capture_output=True, text=True, check=True)
        verify = subprocess.run(
            [sys.executable, "-m", "symdesign.cli", "verify", "-"],
            input=construct.stdout, capture_output=True, text=True)
        assert verify.returncode == 0
        assert "2-(64,28,12)" in verify.stdout

    def test_iso_of_the_two_developments_exits_one(self, tmp_path):
        for h in ("1", "2"):
            subprocess.run(
                [sys.executable, "-m", "symdesign.cli", "construct",
                 "d64-%s" % h, "--out", str(tmp_path / ("d%s.json" % h))],
                check=True)
        result = subprocess.run(
            [sys.executable, "-m", "symdesign.cli", "iso",
             str(tmp_path / "d1.json"), str(tmp_path / "d2.json")],
            capture_output=True, text=True)
        assert result.returncode == 1
        assert "non-isomorphic" in result.stdout
