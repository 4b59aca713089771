import json
import os

from symci.cli import main

GENS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "gens")


def run(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse validation failures
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCharacterCommand:
    def test_square_quotient_text(self, capsys):
        code, out, _ = run(capsys, ["character", "--n", "4", "--case", "III", "--d", "2", "--c", "2"])
        assert code == 0
        assert (
            "χ[4] + (χ[4]+χ[3,1])·t + (χ[4]+χ[3,1]+χ[2,2])·t^2 "
            "+ (χ[4]+χ[3,1])·t^3 + χ[4]·t^4" in out
        )
        assert "hilbert:   1 4 6 4 1" in out
        assert "socle: trivial" in out

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys,
            ["character", "--n", "4", "--case", "IV", "--d", "2", "--c", "2,3", "--json"],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == "symci/1"
        assert payload["graded_character"]["exact"] is True
        assert payload["graded_character"]["coeffs"][0] == {"4": 1, "3,1": 1, "2,2": 1, "2,1,1": 1, "1,1,1,1": 1}
        assert payload["hilbert_series"] == [1, 4, 7, 7, 4, 1]
        assert payload["socle"] == "trivial"

    def test_invalid_type_exits_2(self, capsys):
        code, _, err = run(capsys, ["character", "--n", "5", "--case", "IV", "--d", "2"])
        assert code == 2
        assert "case IV" in err

    def test_bad_flags_exit_2(self, capsys):
        code, _, _ = run(capsys, ["character", "--n", "4", "--case", "V", "--d", "1"])
        assert code == 2


class TestClassifyCommand:
    def test_accepted(self, tmp_path, capsys):
        path = tmp_path / "ms.json"
        path.write_text(
            json.dumps(
                {
                    "n": 4,
                    "summands": [
                        {"partition": [3, 1], "degree": 2},
                        {"partition": [4], "degree": 2},
                    ],
                }
            )
        )
        code, out, _ = run(capsys, ["classify", "--input", str(path)])
        assert code == 0
        assert "accepted: case III, d = 2, c = (2)" in out

    def test_rejected_names_rule(self, tmp_path, capsys):
        path = tmp_path / "ms.json"
        path.write_text(
            json.dumps(
                {
                    "n": 5,
                    "summands": [
                        {"partition": [4, 1], "degree": 2},
                        {"partition": [4, 1], "degree": 3},
                    ],
                }
            )
        )
        code, out, _ = run(capsys, ["classify", "--input", str(path), "--json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["result"] == "rejected"
        assert payload["rule"] == "Corollary 3"
        assert payload["witness"][0]["partition"] == [4, 1]

    def test_degenerate_small_n_flag(self, tmp_path, capsys):
        path = tmp_path / "ms.json"
        path.write_text(
            json.dumps({"n": 2, "summands": [{"partition": [1, 1], "degree": 2}]})
        )
        code, out, _ = run(capsys, ["classify", "--input", str(path)])
        assert code == 0
        assert "[degenerate small n]" in out

    def test_malformed_input_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, ["classify", "--input", str(path)])
        assert code == 2
        assert "cannot read" in err


class TestVerifyCommand:
    def test_square_case_matches(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "verify",
                "--gens",
                os.path.join(GENS_DIR, "ex5.gens"),
                "--against",
                "case IV d=2 c=2,3",
            ],
        )
        assert code == 0
        assert out.count("MATCH") >= 7
        assert "MISMATCH" not in out
        assert out.strip().endswith("RESULT: MATCH")

    def test_wrong_type_mismatches(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "verify",
                "--gens",
                os.path.join(GENS_DIR, "ex4.gens"),
                "--against",
                "case I c=2,2,2,2",
                "--bound",
                "4",
            ],
        )
        assert code == 1
        assert "MISMATCH" in out

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "verify",
                "--gens",
                os.path.join(GENS_DIR, "ex4.gens"),
                "--against",
                "case III d=2 c=2",
                "--json",
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["match"] is True
        assert all(entry["match"] for entry in payload["degrees"])

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run(
            capsys,
            ["verify", "--gens", "/nonexistent.gens", "--against", "case I c=2"],
        )
        assert code == 2
        assert err


class TestTablesCommand:
    def test_text_layout(self, capsys):
        code, out, _ = run(capsys, ["tables", "--n", "4"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "Character table of S_4"
        assert lines[1].split() == ["class", "size", "|", "1", "6", "8", "6", "3"]
        assert lines[2].split() == [
            "representative", "|", "1", "(1", "2)", "(1", "2", "3)",
            "(1", "2", "3", "4)", "(1", "2)(3", "4)",
        ]
        assert any(
            line.split() == ["χ[3,1]", "|", "3", "1", "0", "-1", "-1"] for line in lines
        )
        assert any(
            line.startswith("K~[2,2]") and line.endswith("= t^2 + t^4") for line in lines
        )

    def test_json_tables(self, capsys):
        code, out, _ = run(capsys, ["tables", "--n", "4", "--json"])
        assert code == 0
        payload = json.loads(out)
        assert [c["size"] for c in payload["classes"]] == [1, 6, 8, 6, 3]
        assert payload["characters"]["3,1"] == [3, 1, 0, -1, -1]
        assert payload["kostka_foulkes_tilde"]["2,1,1"] == {"3": 1, "4": 1, "5": 1}


class TestExamplesCommand:
    def test_contains_all_sections(self, capsys):
        code, out, _ = run(capsys, ["examples"])
        assert code == 0
        for k in range(1, 6):
            assert f"Example {k}" in out
        assert "socle: degree 8, alternating" in out
        assert "socle: degree 9, trivial" in out
        assert "socle: degree 4, trivial" in out
        assert "socle: degree 5, trivial" in out

    def test_byte_stable(self, capsys):
        _, first, _ = run(capsys, ["examples"])
        _, second, _ = run(capsys, ["examples"])
        assert first == second

    def test_json_mode(self, capsys):
        code, out, _ = run(capsys, ["examples", "--json"])
        assert code == 0
        payload = json.loads(out)
        assert [q["name"] for q in payload["quotients"]] == ["ex2", "ex3", "ex4", "ex5"]
        assert payload["quotients"][2]["hilbert_series"] == [1, 4, 6, 4, 1]
