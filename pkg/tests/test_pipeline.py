"""End-to-end runs outside the bundled corpus, plus report rendering."""
import pytest

from schemarith.lexicon import load_default_lexicon
from schemarith.pipeline import render_text_report, result_to_dict, run_problem
from schemarith.solver import Insufficient, Solved

LEX = load_default_lexicon()


@pytest.mark.parametrize("text,answer,kind", [
    ("In the beginning there were 3 houses in the village. Tom built 2 "
     "houses in the village. How many houses are there in the village now?",
     5, "Creation (place)"),
    ("Tom had 5 apples. Tom ate 2 apples. How many apples does Tom have now?",
     3, "Termination (ownership)"),
    ("There were 6 eggs in the box. Dan took out 2 eggs from the box. "
     "How many eggs are there in the box now?",
     4, "Transfer-Out-Place"),
    ("Ruth had 4 candies. Ruth received 3 candies. How many candies does "
     "Ruth have now?",
     7, "Transfer-In-Ownership"),
])
def test_other_change_kinds_solve(text, answer, kind):
    result = run_problem(text, LEX)
    assert result.verdict == Solved(answer)
    assert any(si.kind == kind for si in result.lsi)


def test_states_alone_are_insufficient():
    result = run_problem(
        "Ruth had 3 apples. How many candies does David have now?", LEX)
    assert isinstance(result.verdict, Insufficient)


def test_text_report_mentions_skipped_candidates():
    result = run_problem(
        "David gave 3 candies to Ruth, and John gave 2 candies to David. "
        "Now David has 4 candies more than Ruth has. How many candies does "
        "David have now, if Ruth had 7 candies in the beginning?", LEX)
    report = render_text_report(result, trace=True)
    assert "Not recorded (cautious strategy)" in report
    assert "Answer: 14" in report


def test_result_dict_round_trips_to_json():
    import json

    result = run_problem(
        "Ruth had 4 candies. Ruth received 3 candies. How many candies "
        "does Ruth have now?", LEX)
    data = json.loads(json.dumps(result_to_dict(result)))
    assert data["verdict"] == "solved"
    assert data["answer"] == 7


def test_timing_is_recorded():
    result = run_problem(
        "Ruth had 4 candies. Ruth received 3 candies. How many candies "
        "does Ruth have now?", LEX)
    assert 0 <= result.timing_ms < 1000
