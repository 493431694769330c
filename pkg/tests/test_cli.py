import json
from dataclasses import replace

import pytest

from schemarith import cli
from schemarith.corpus import CORPUS, by_id
from schemarith.lexicon import load_default_lexicon
from schemarith.schema_engine import Strategy

LEX = load_default_lexicon()


def write_problem(tmp_path, text, name="problem.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_solve_exit_zero_and_answer(tmp_path, capsys):
    path = write_problem(tmp_path, by_id("basket-apples").text)
    assert cli.main(["solve", path]) == 0
    assert "Answer: 6" in capsys.readouterr().out


def test_solve_trace_shows_instantiation(tmp_path, capsys):
    path = write_problem(tmp_path, by_id("basket-apples").text)
    assert cli.main(["solve", path, "--trace"]) == 0
    out = capsys.readouterr().out
    assert "Transfer-In-Place (initially 4, in 2, finally ?)" in out
    assert "Schema Instantiations" in out


def test_contradiction_exit_code_and_report(tmp_path, capsys):
    path = write_problem(tmp_path, by_id("candies-conflict").text)
    assert cli.main(["solve", path]) == 4
    out = capsys.readouterr().out
    assert "10 = 9 + 3" in out


def test_unparseable_exit_code_names_sentence(tmp_path, capsys):
    path = write_problem(
        tmp_path,
        "Ruth had 3 apples. Gibberish withoutmeaning here. "
        "How many apples does Ruth have now?")
    assert cli.main(["solve", path]) == 2
    assert "sentence 2" in capsys.readouterr().out


def test_no_question_exit_code(tmp_path, capsys):
    path = write_problem(tmp_path, "Ruth had 3 apples.")
    assert cli.main(["solve", path]) == 2


def test_insufficient_exit_code(tmp_path, capsys):
    path = write_problem(
        tmp_path, "Ruth had 3 apples. How many candies does David have now?")
    assert cli.main(["solve", path]) == 3


def test_empty_file_not_understood(tmp_path):
    path = write_problem(tmp_path, "")
    assert cli.main(["solve", path]) == 2


def test_missing_file_is_io_error(capsys):
    assert cli.main(["solve", "/nonexistent/problems.txt"]) == 1
    assert "error" in capsys.readouterr().err


def test_blank_line_separated_blocks(tmp_path, capsys):
    text = by_id("basket-apples").text + "\n\n" + by_id("candy-gifts").text
    path = write_problem(tmp_path, text)
    assert cli.main(["solve", path, "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["format_version"] == 1
    assert [p["answer"] for p in report["problems"]] == [6, 14]


def test_json_report_shape(tmp_path, capsys):
    path = write_problem(tmp_path, by_id("candy-gifts").text)
    cli.main(["solve", path, "--format", "json"])
    report = json.loads(capsys.readouterr().out)
    [problem] = report["problems"]
    assert problem["verdict"] == "solved"
    assert problem["answer"] == 14
    assert problem["propositions"]["pre_split"][0] == "David gave 3 candies to Ruth"
    assert problem["lsi"][0]["rendered"] == "More (?, than X, by 4)"
    assert problem["equations"] == ["? = X + 4", "X = 7 + 3"]
    assert "timing_ms" in problem


def _stripped_json(capsys):
    report = json.loads(capsys.readouterr().out)
    for problem in report["problems"]:
        problem.pop("timing_ms", None)
    return json.dumps(report, sort_keys=True)


def test_json_determinism(tmp_path, capsys):
    path = write_problem(tmp_path, by_id("eggs-places").text)
    cli.main(["solve", path, "--format", "json"])
    first = _stripped_json(capsys)
    cli.main(["solve", path, "--format", "json"])
    second = _stripped_json(capsys)
    assert first == second


def test_exit_code_is_function_of_verdict(tmp_path):
    codes = {}
    for problem in CORPUS:
        path = write_problem(tmp_path, problem.text, f"{problem.id}.txt")
        codes[problem.id] = cli.main(["solve", path])
    for problem in CORPUS:
        expected = 0 if problem.expected_verdict == "solved" else 4
        assert codes[problem.id] == expected


def test_corpus_command_all_match(capsys):
    assert cli.main(["corpus"]) == 0
    out = capsys.readouterr().out
    assert "all expectations met" in out
    assert out.count("ok") >= len(CORPUS)


def test_corpus_total_strategy_reports_deltas(capsys):
    assert cli.main(["corpus", "--strategy", "total"]) == 0
    out = capsys.readouterr().out
    assert "lsi 2 -> 5 (+3)" in out  # the two-gift problem


def test_corpus_json(capsys):
    assert cli.main(["corpus", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["total"] == len(CORPUS)
    assert report["summary"]["matches"] == len(CORPUS)


def test_perturbed_golden_answer_detected(capsys, monkeypatch):
    perturbed = list(CORPUS)
    perturbed[0] = replace(perturbed[0], expected_answer=99)
    monkeypatch.setattr(cli, "CORPUS", tuple(perturbed))
    assert cli.main(["corpus"]) != 0
    assert "MISMATCH" in capsys.readouterr().out


def test_run_corpus_library_interface():
    rows, all_match = cli.run_corpus(CORPUS, LEX, Strategy.CAUTIOUS)
    assert all_match
    assert len(rows) == len(CORPUS)


def test_lexicon_flag_and_env(tmp_path, monkeypatch, capsys):
    from schemarith.lexicon import DEFAULT_LEXICON

    custom = tmp_path / "lex.tsv"
    custom.write_text(DEFAULT_LEXICON + "noun\tkites\tkite\n", encoding="utf-8")
    problem = write_problem(
        tmp_path, "Tom had 3 kites. Tom got 2 kites. "
                  "How many kites does Tom have now?")
    monkeypatch.setenv("SCHEMARITH_LEXICON", str(custom))
    assert cli.main(["solve", problem]) == 0
    assert "Answer: 5" in capsys.readouterr().out
    monkeypatch.setenv("SCHEMARITH_LEXICON", "/nonexistent/lex.tsv")
    assert cli.main(["solve", problem, "--lexicon", str(custom)]) == 0
