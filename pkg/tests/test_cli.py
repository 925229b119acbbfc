import pytest

from braidfloor import cli
from braidfloor.certificates import read_certificates


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestWordCommands:
    def test_compare(self, capsys):
        code, out, _ = run(capsys, "compare", "", "1", "--strands", "3")
        assert code == 0 and out.strip() == "LT"

    def test_compare_equal(self, capsys):
        code, out, _ = run(capsys, "compare", "1 2 1", "2 1 2", "--strands", "3")
        assert code == 0 and out.strip() == "EQ"

    def test_compare_greater(self, capsys):
        code, out, _ = run(capsys, "compare", "1", "", "--strands", "3")
        assert code == 0 and out.strip() == "GT"

    def test_reduce(self, capsys):
        code, out, _ = run(capsys, "reduce", "1 2 -1", "--strands", "3")
        assert code == 0 and out.strip() == "-2 1 2"

    def test_reduce_identity_prints_empty(self, capsys):
        code, out, _ = run(capsys, "reduce", "1 -1", "--strands", "3")
        assert code == 0 and out == "\n"

    def test_floor(self, capsys):
        code, out, _ = run(capsys, "floor", "1 2 1 2 1 2 1 2", "--strands", "3")
        assert code == 0 and out.strip() == "1"

    def test_floor_witness(self, capsys):
        code, out, _ = run(capsys, "floor", "1 2 1 2 1 2 1 2", "--strands", "3", "--witness")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "1"
        assert lines[1] == "lower=LT upper=LT failed_below=upper"

    def test_periodic(self, capsys):
        code, out, _ = run(capsys, "periodic", "1 2 1 2 1 2 1 2", "--strands", "3")
        assert code == 0 and out.strip() == "periodic p=3 s=4"

    def test_aperiodic(self, capsys):
        code, out, _ = run(capsys, "periodic", "1 -2", "--strands", "3")
        assert code == 0 and out.strip() == "aperiodic"

    def test_classify(self, capsys):
        word = "1 2 1 1 2 1 1 2 1 1 2 1 1 2 1 1 2 1 1 -2"
        code, out, _ = run(capsys, "classify", word, "--strands", "3")
        assert code == 0 and out.strip() == "HyperbolicKnot floor=3"

    def test_classify_not_a_knot(self, capsys):
        code, out, _ = run(capsys, "classify", "1 2 1", "--strands", "3")
        assert code == 0 and out.startswith("NotAKnot")


class TestFoliationCommands:
    def test_foliation_bound_circular_only(self, capsys):
        code, out, _ = run(capsys, "foliation-bound", "--floor", "3", "--genus", "1")
        assert code == 0 and out.strip() == "Circular"

    def test_foliation_bound_everything(self, capsys):
        code, out, _ = run(capsys, "foliation-bound", "--floor", "0", "--genus", "5")
        assert code == 0 and out.strip() == "Tiled,Mixed,Circular"

    def test_euler_check_holds(self, capsys):
        code, out, _ = run(capsys, "euler-check", "--genus", "1", "--valences", "4:6")
        assert code == 0 and out.strip() == "holds"

    def test_euler_check_fails(self, capsys):
        code, out, _ = run(capsys, "euler-check", "--genus", "1", "--valences", "3:1,4:5")
        assert code == 0 and out.strip() == "fails"

    def test_euler_check_bad_syntax(self, capsys):
        code, _, err = run(capsys, "euler-check", "--genus", "1", "--valences", "4-6")
        assert code == 1 and "error" in err


class TestGenerateAndVerify:
    def test_family_to_file_then_verify(self, capsys, tmp_path):
        out_file = tmp_path / "family.certs"
        code, _, _ = run(
            capsys, "generate", "family", "--strands", "3", "--seed-word", "1 -2",
            "--k-min", "3", "--k-max", "5", "--out", str(out_file),
        )
        assert code == 0
        with open(out_file, encoding="utf-8") as fh:
            certs = read_certificates(fh)
        assert [c.floor for c in certs] == [3, 4, 5]
        code, out, _ = run(capsys, "verify", "--in", str(out_file))
        assert code == 0 and "verified 3" in out

    def test_family_to_stdout(self, capsys):
        code, out, _ = run(
            capsys, "generate", "family", "--strands", "3", "--seed-word", "1 -2",
            "--k-min", "3", "--k-max", "3",
        )
        assert code == 0
        assert out.count("\n") == 1 and "verdict=HyperbolicKnot" in out

    def test_random_is_byte_identical(self, capsys, tmp_path):
        files = [tmp_path / "a.certs", tmp_path / "b.certs"]
        for path in files:
            code, _, _ = run(
                capsys, "generate", "random", "--strands", "3", "--length", "30",
                "--count", "3", "--rng-seed", "42", "--min-floor", "1",
                "--out", str(path),
            )
            assert code == 0
        assert files[0].read_bytes() == files[1].read_bytes()

    def test_verify_detects_tampering(self, capsys, tmp_path):
        out_file = tmp_path / "family.certs"
        run(
            capsys, "generate", "family", "--strands", "3", "--seed-word", "1 -2",
            "--k-min", "3", "--k-max", "3", "--out", str(out_file),
        )
        tampered = out_file.read_text().replace("floor=3", "floor=4")
        out_file.write_text(tampered)
        code, _, err = run(capsys, "verify", "--in", str(out_file))
        assert code == 2 and "verification failed" in err

    def test_random_rejects_composite_strands(self, capsys):
        code, _, err = run(
            capsys, "generate", "random", "--strands", "4", "--length", "10",
            "--count", "1", "--rng-seed", "1",
        )
        assert code == 1 and "prime" in err


class TestExitCodes:
    def test_usage_error_is_one(self, capsys):
        assert run(capsys, "compare", "1")[0] == 1

    def test_unknown_command_is_one(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_bad_word_is_one(self, capsys):
        code, _, err = run(capsys, "reduce", "1 x", "--strands", "3")
        assert code == 1 and "error" in err

    def test_out_of_range_letter_is_one(self, capsys):
        assert run(capsys, "reduce", "3", "--strands", "3")[0] == 1

    def test_help_is_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_missing_file_is_one(self, capsys):
        assert run(capsys, "verify", "--in", "/nonexistent/path.certs")[0] == 1

    def test_resource_cap_is_three(self, capsys, monkeypatch):
        from braidfloor.ordering import ReductionLimitError

        def explode(*args, **kwargs):
            raise ReductionLimitError(1)

        monkeypatch.setattr(cli, "dehornoy_floor", explode)
        assert run(capsys, "floor", "1 2", "--strands", "3")[0] == 3
