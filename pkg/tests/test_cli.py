import pytest
from fntypes.result import Error, Ok

from sns2.certs import load_bundled
from sns2.cli import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    CensusMode,
    InputKind,
    main,
    pattern_from_id,
    read_input,
    run_census,
    sample_patterns,
)
from sns2.error import SNS2Error, UnsupportedSizeError, UsageError
from sns2.msgspec_json import loads

TWO_BY_TWO = '{"n": 2, "arity": 1, "entries": [[[[1, [0]]], [[2, [0]]]], [[[3, [0]]], [[4, [1]]]]]}'


@pytest.fixture()
def pattern_file(tmp_path, example_three):
    path = tmp_path / "three.txt"
    path.write_text(example_three.to_text() + "\n")
    return path


def test_read_input_kinds(tmp_path, pattern_file, example_three):
    source = read_input(pattern_file).unwrap()
    assert source.kind is InputKind.PATTERN_TEXT
    assert source.pattern == example_three

    json_pattern = tmp_path / "three.json"
    json_pattern.write_text(example_three.to_json())
    source = read_input(json_pattern).unwrap()
    assert source.kind is InputKind.PATTERN_JSON
    assert source.matrix.arity == 8

    matrix = tmp_path / "matrix.json"
    matrix.write_text(TWO_BY_TWO)
    source = read_input(matrix).unwrap()
    assert source.kind is InputKind.MATRIX_JSON
    assert source.pattern is None
    assert source.matrix.n == 2


def test_read_input_errors(tmp_path):
    match read_input(tmp_path / "missing.txt"):
        case Error(message):
            assert "Cannot read" in message
        case Ok(_):
            pytest.fail("a missing file must not parse")

    other = tmp_path / "other.json"
    other.write_text('{"rows": []}')
    assert read_input(other).unwrap_or_none() is None

    latin = tmp_path / "latin.txt"
    latin.write_bytes(b"+ 0\n\xff -\n")
    match read_input(latin):
        case Error(message):
            assert "not valid UTF-8" in message
        case Ok(_):
            pytest.fail("undecodable bytes must not parse")


def test_analyze_undecodable_file(tmp_path, capsys):
    path = tmp_path / "latin.txt"
    path.write_bytes(b"+ 0\n\xff -\n")
    assert main(["analyze", str(path)]) == EXIT_USAGE
    assert "not valid UTF-8" in capsys.readouterr().err


def test_usage_error_is_an_sns2_error():
    assert issubclass(UsageError, SNS2Error)



def test_analyze_text(pattern_file, capsys):
    assert main(["analyze", str(pattern_file), "--no-timing"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "verdict: Positive" in out
    assert "n=3, arity=8" in out


def test_analyze_json(pattern_file, capsys):
    assert main(["analyze", str(pattern_file), "--format", "json", "--no-timing"]) == EXIT_OK
    report = loads(capsys.readouterr().out)
    assert report["classification"]["verdict"] == "Positive"
    assert report["input"]["kind"] == "pattern-text"
    assert [j["index"] for j in report["minor_sums"]] == [1, 2, 3]
    assert report.get("timing") is None


def test_analyze_bad_input(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("+ x\n0 +\n")
    assert main(["analyze", str(path)]) == EXIT_USAGE
    assert "Unexpected token" in capsys.readouterr().err


def test_qn(capsys):
    assert main(["qn", "--n", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "J1*J2*J3" in out
    assert "J3^2" in out

    assert main(["qn", "--n", "3", "--format", "json"]) == EXIT_OK
    report = loads(capsys.readouterr().out)
    assert report["n"] == 3
    assert len(report["terms"]) == 2

    assert main(["qn", "--n", "1"]) == EXIT_USAGE


def test_compound(tmp_path, capsys):
    path = tmp_path / "matrix.json"
    path.write_text(TWO_BY_TWO)
    assert main(["compound", str(path), "--format", "json"]) == EXIT_OK
    compound = loads(capsys.readouterr().out)
    assert compound["n"] == 1
    assert sorted(compound["entries"][0][0]) == [[1, [0]], [4, [1]]]


def test_verify_cert(tmp_path, capsys):
    assert main(["verify-cert", "--bundled", "lemma2"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("pass: lemma2")

    broken = tmp_path / "broken.cert.json"
    broken.write_text(load_bundled("lemma3").perturbed(0).to_file().to_raw())
    assert main(["verify-cert", str(broken), "--format", "json"]) == EXIT_FAILED
    assert loads(capsys.readouterr().out)["passed"] is False

    assert main(["verify-cert"]) == EXIT_USAGE


def test_verify_bridge(capsys):
    assert main(["verify-cert", "--bridge", "lemma2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("pass: J1^2*J3^2 * q5 == lemma2")
    assert "alpha = " in out

    assert main(["verify-cert", "--bridge", "lemma3", "--format", "json"]) == EXIT_OK
    report = loads(capsys.readouterr().out)
    assert report["holds"] is True
    assert report["denominator"] == "J1^2*J3^2"
    assert sorted(report["substitutions"]) == ["alpha", "beta", "delta", "gamma"]
    assert report["substitutions"]["delta"] == "J3^2"

    assert main(["verify-cert", "--bridge", "lemma3", "--n", "4"]) == EXIT_USAGE


def test_verify_cert_rejects_negative_multiplier(tmp_path, capsys):
    path = tmp_path / "flipped.cert.json"
    path.write_text(
        '{"arity": 1, "claim": "nonpos", "target": [[1, [2]]], "multiplier": [[-1, [0]]],'
        ' "terms": [{"sqrt": [[1, [1]]], "monomial": [0]}]}'
    )
    assert main(["verify-cert", str(path), "--format", "json"]) == EXIT_FAILED
    report = loads(capsys.readouterr().out)
    assert report["identity_holds"] is True
    assert report["multiplier_accepted"] is False
    assert report["sign_violations"] > 0


def test_verify_cert_bad_exponent(tmp_path, capsys):
    path = tmp_path / "bad.cert.json"
    path.write_text(
        '{"arity": 1, "claim": "nonneg", "target": [[1, [-1]]], "multiplier": [[1, [0]]],'
        ' "terms": [{"sqrt": [[1, [0]]], "monomial": [0]}]}'
    )
    assert main(["verify-cert", str(path)]) == EXIT_USAGE
    assert "nonnegative integers" in capsys.readouterr().err



def test_pattern_from_id():
    assert pattern_from_id(2, 0).signs == ((0, 0), (0, 0))
    assert pattern_from_id(2, 1).signs == ((1, 0), (0, 0))
    assert pattern_from_id(2, 2 * 27).signs == ((0, 0), (0, -1))


def test_exhaustive_census():
    census = run_census(2, CensusMode.EXHAUSTIVE, witness_budget=100)
    assert census.patterns == 81
    assert sum(census.verdicts.values()) == 81
    assert census.verdicts["Zero"] == 9
    assert census.verdicts["Indefinite"] == 18
    assert census.disagreements == []
    assert census.seed is None


def test_census_filter():
    census = run_census(2, CensusMode.EXHAUSTIVE, witness_budget=100, rule_filter="zero_polynomial")
    assert census.verdicts == {"Zero": 9}
    assert census.skipped == 72


def test_census_bound():
    with pytest.raises(UnsupportedSizeError):
        run_census(4, CensusMode.EXHAUSTIVE, witness_budget=100)


def test_sampled_census_is_seeded():
    assert sample_patterns(4, 5, seed=3) == sample_patterns(4, 5, seed=3)
    first = run_census(3, CensusMode.SAMPLE, count=20, seed=3, witness_budget=100)
    again = run_census(3, CensusMode.SAMPLE, count=20, seed=3, witness_budget=100)
    assert first == again
    assert first.patterns == 20
    assert first.disagreements == []


@pytest.mark.slow
def test_selftest(capsys):
    assert main(["selftest"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines
    assert all(line.startswith("ok") for line in lines)
