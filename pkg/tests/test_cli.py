import json
from pathlib import Path

import pytest

from triprod.cli import main

SAMPLES = Path(__file__).resolve().parents[1] / "samples"

PROJ = str(SAMPLES / "projection_trioid.json")
SINGLE = str(SAMPLES / "singleton_trioid.json")
DIM1 = str(SAMPLES / "projection_dimonoid.json")
DIM2 = str(SAMPLES / "singleton_dimonoid.json")
QUAD = str(SAMPLES / "quadratic_trialgebra.json")
BROKEN = str(SAMPLES / "broken_axioms.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAxioms:
    def test_ok_line(self, capsys):
        code, out, err = run(capsys, "axioms", PROJ)
        assert code == 0
        assert out == "OK: 11 identity families, 88 instances checked\n"

    def test_dimonoid_counts(self, capsys):
        code, out, _ = run(capsys, "axioms", DIM1)
        assert code == 0
        assert out == "OK: 5 identity families, 40 instances checked\n"

    def test_violations_exit_1(self, capsys):
        code, out, _ = run(capsys, "axioms", BROKEN)
        assert code == 1
        assert "violated: a -| (b |- c) = a -| (b -| c) at (a, b, a)" in out
        assert out.rstrip().splitlines()[-1].startswith("FAIL:")

    def test_missing_file_exit_2(self, capsys):
        code, out, err = run(capsys, "axioms", "no_such_file.json")
        assert code == 2
        assert "no_such_file.json" in err


class TestAssociated:
    def test_projection(self, capsys):
        code, out, _ = run(capsys, "associated", PROJ)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "family: T1 (trioid, 2 elements, t=3)"
        assert lines[1] == "reps: a"
        assert "rule: T1:b - T1:a" in lines
        assert "rule: T1:a T1:a - T1:a" in lines
        assert lines[-1] == "product: a a = a"

    def test_trialgebra(self, capsys):
        code, out, _ = run(capsys, "associated", QUAD)
        assert code == 0
        assert "reps: e x" in out
        assert "rule: Q:x Q:x - 1/2 Q:e" in out
        assert "product: x x = 1/2 e" in out


class TestComplete:
    def test_projection_reduces_to_two_rules(self, capsys):
        code, out, _ = run(capsys, "complete", PROJ)
        assert code == 0
        assert out.splitlines() == [
            "status: completed",
            "rule: T1:b - T1:a",
            "rule: T1:a T1:a - T1:a",
        ]

    def test_trace(self, capsys):
        code, out, _ = run(capsys, "complete", PROJ, "--trace")
        assert code == 0
        lines = out.splitlines()
        assert any(l.startswith("trace: T1:a T1:b => T1:b - T1:a") for l in lines)

    def test_deterministic(self, capsys):
        _, out1, _ = run(capsys, "complete", PROJ, "--trace")
        _, out2, _ = run(capsys, "complete", PROJ, "--trace")
        assert out1 == out2


class TestBasis:
    def test_words_listed_in_order(self, capsys):
        code, out, _ = run(
            capsys, "basis", SINGLE, PROJ, "--t", "3", "--max-len", "1"
        )
        assert code == 0
        assert out.splitlines() == ["T2:.u", "T1:.a", "T1:.b"]

    def test_count_only(self, capsys):
        f1 = str(SAMPLES / "singleton_trioid.json")
        code, out, _ = run(
            capsys, "basis", PROJ, f1, "--t", "3", "--max-len", "3", "--count-only"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[-1].startswith("total: ")

    def test_census_counts(self, capsys, tmp_path):
        other = tmp_path / "second.json"
        other.write_text(
            json.dumps(
                {
                    "name": "T9",
                    "kind": "trioid",
                    "elements": ["v"],
                    "vdash": [[0]],
                    "dashv": [[0]],
                    "perp": [[0]],
                }
            )
        )
        code, out, _ = run(
            capsys, "basis", SINGLE, str(other), "--t", "3", "--max-len", "4", "--count-only"
        )
        assert code == 0
        assert out.splitlines() == [
            "length 1: 2",
            "length 2: 6",
            "length 3: 14",
            "length 4: 30",
            "total: 52",
        ]

    def test_determinism(self, capsys):
        args = ("basis", PROJ, SINGLE, "--t", "3", "--max-len", "3")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestMul:
    def test_documented_example(self, capsys):
        code, out, _ = run(
            capsys,
            "mul",
            PROJ,
            SINGLE,
            "--t",
            "3",
            "--op",
            "dashv",
            "--lhs",
            "T1:a T2:.u",
            "--rhs",
            "T1:.a",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "lhs: T1:a T2:.u"
        assert lines[1] == "rhs: T1:.a"
        assert lines[-1] == "T1:a T2:.u T1:a"

    def test_perp_in_t2_rejected(self, capsys):
        code, out, err = run(
            capsys,
            "mul",
            DIM1,
            DIM2,
            "--t",
            "2",
            "--op",
            "perp",
            "--lhs",
            "D1:.a",
            "--rhs",
            "D2:.u",
        )
        assert code == 2
        assert "error:" in err

    def test_bad_word_exit_2(self, capsys):
        code, _, err = run(
            capsys,
            "mul",
            PROJ,
            SINGLE,
            "--t", "3", "--op", "perp",
            "--lhs", "T1:b",
            "--rhs", "T1:.a",
        )
        assert code == 2
        assert "error:" in err

    def test_trialgebra_combination(self, capsys):
        code, out, _ = run(
            capsys,
            "mul",
            QUAD,
            SINGLE,
            "--t", "3", "--op", "perp",
            "--lhs", "Q:.x",
            "--rhs", "Q:.x",
        )
        assert code == 0
        assert out.splitlines()[-1] == "1/2 Q:.e"


class TestOracleCheck:
    def test_passes_on_samples(self, capsys):
        code, out, _ = run(
            capsys,
            "oracle-check",
            PROJ,
            SINGLE,
            "--t", "3", "--samples", "50", "--seed", "7",
        )
        assert code == 0
        assert out == "oracle-check: t=3 samples=50 seed=7 mismatches=0\n"

    def test_dimonoid_mode(self, capsys):
        code, out, _ = run(
            capsys,
            "oracle-check",
            DIM1,
            DIM2,
            "--t", "2", "--samples", "50", "--seed", "0",
        )
        assert code == 0
        assert "mismatches=0" in out


class TestRenderTerm:
    def test_documented_example(self, capsys):
        code, out, _ = run(
            capsys, "render-term", "T1:.y T1:x T1:y T1:.x T1:x", "--t", "3"
        )
        assert code == 0
        assert out == "(y -| x -| y) _|_ (x -| x)\n"

    def test_single_generator(self, capsys):
        code, out, _ = run(capsys, "render-term", "T1:.x", "--t", "3")
        assert code == 0
        assert out == "x\n"

    def test_leading_undotted(self, capsys):
        code, out, _ = run(capsys, "render-term", "T1:x T1:.y", "--t", "3")
        assert code == 0
        assert out == "x |- y\n"

    def test_not_in_image_exit_2(self, capsys):
        code, _, err = run(capsys, "render-term", "T1:x T1:y", "--t", "3")
        assert code == 2
        assert "error:" in err


class TestSelftestWiring:
    def test_unknown_command_exit_2(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2
