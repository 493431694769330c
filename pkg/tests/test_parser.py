import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schemarith.corpus import CORPUS, by_id
from schemarith.lexicon import load_default_lexicon
from schemarith.parser import (
    CombineProp,
    CompareProp,
    DiscourseContext,
    EmptyInput,
    Entity,
    EntityKind,
    EventProp,
    MultipleQuestions,
    NoQuestion,
    Ownership,
    ParseError,
    Place,
    StateKey,
    StateProp,
    UnknownWord,
    parse_clause,
    parse_problem,
    render_proposition,
    tokenize,
)
from schemarith.quantity import QUESTION, Known, Question, TimePoint

LEX = load_default_lexicon()


def parse_text(text):
    """Parse clauses without the one-question validation (test helper)."""
    ctx = DiscourseContext()
    props = []
    for sentence in tokenize(text, LEX):
        for clause in sentence.clauses:
            props.extend(parse_clause(clause, LEX, ctx))
    return props


def owner(name):
    return Ownership(Entity(name, EntityKind.PROPER))


def place(noun):
    return Place(Entity(noun, EntityKind.CLASS))


# -- tokenizer -------------------------------------------------------------


def test_question_with_if_clause_is_one_sentence_two_clauses():
    text = ("How many apples are there in the basket now, if in the "
            "beginning there were 4 apples in the basket?")
    sentences = tokenize(text, LEX)
    assert len(sentences) == 1
    assert len(sentences[0].clauses) == 2
    assert sentences[0].clauses[0].interrogative
    assert not sentences[0].clauses[1].interrogative


def test_clause_conjunction_splits():
    sentences = tokenize(
        "Dan gave 2 candies to Susan and Fred gave 3 candies to Dan.", LEX)
    assert len(sentences) == 1
    assert len(sentences[0].clauses) == 2


def test_noun_conjunction_does_not_split():
    sentences = tokenize("Tom and Ruth had 8 apples altogether.", LEX)
    assert len(sentences[0].clauses) == 1
    sentences = tokenize("3 girls and 5 boys remained in the room.", LEX)
    assert len(sentences[0].clauses) == 1


def test_empty_input():
    with pytest.raises(EmptyInput):
        tokenize("", LEX)
    with pytest.raises(EmptyInput):
        tokenize("   \n ", LEX)


def test_spaced_terminator():
    sentences = tokenize("How many dolls do they have altogether ?", LEX)
    assert len(sentences) == 1


# -- clause forms ------------------------------------------------------------


def test_possession_state():
    [prop] = parse_text("Ruth had 3 apples.")
    assert prop == StateProp(
        StateKey(owner("Ruth"), "apple", TimePoint.INITIAL), Known(3))


def test_existential_state():
    [prop] = parse_text("There were 4 apples in the basket.")
    assert prop == StateProp(
        StateKey(place("basket"), "apple", TimePoint.INITIAL), Known(4))


def test_ownership_compare():
    [prop] = parse_text("David has 4 candies more than Ruth has.")
    assert prop == CompareProp(
        StateKey(owner("David"), "candy", TimePoint.FINAL),
        StateKey(owner("Ruth"), "candy", TimePoint.FINAL),
        Known(4), "more")


def test_compare_without_trailing_verb():
    [prop] = parse_text("Clara has 3 flowers more than Sara.")
    assert prop.right == StateKey(owner("Sara"), "flower", TimePoint.FINAL)


def test_owner_question():
    [prop] = parse_text("How many candies does David have now?")
    assert prop == StateProp(
        StateKey(owner("David"), "candy", TimePoint.FINAL), QUESTION)


def test_subject_numeral_event():
    [prop] = parse_text("Two boys left a room.")
    assert prop == EventProp("leave", "boy", Known(2),
                             source=Entity("room", EntityKind.CLASS))


def test_agent_cardinality_event():
    [prop] = parse_text("5 girls bought 6 tickets.")
    assert prop == EventProp("buy", "ticket", Known(6),
                             agent=Entity("girl", EntityKind.CLASS, cardinality=5))
    assert prop.agent.cardinality == 5


def test_double_object_dative():
    [prop] = parse_text("Ruth gave Tom 3 apples.")
    assert prop.recipient == Entity("Tom", EntityKind.PROPER)
    assert prop.amount == Known(3)


def test_pronoun_subject_resolution():
    props = parse_text("Ruth had 3 apples. She put 2 apples into a basket.")
    event = props[1]
    assert event.agent == Entity("Ruth", EntityKind.PROPER)
    assert event.destination == Entity("basket", EntityKind.CLASS)


def test_object_pronoun_resolution():
    props = parse_text("John had 5 apples. Mary gave him 3 apples.")
    assert props[1].recipient == Entity("John", EntityKind.PROPER)


def test_place_compare():
    [prop] = parse_text("Now there are 2 eggs more in the box than there "
                        "are in the basket.")
    assert prop.left == StateKey(place("box"), "egg", TimePoint.FINAL)
    assert prop.right == StateKey(place("basket"), "egg", TimePoint.FINAL)


def test_phrasal_verb_event():
    [prop] = parse_text("3 eggs fell out of the box.")
    assert prop.verb == "fall out of"
    assert prop.source == Entity("box", EntityKind.CLASS)


def test_transfer_event():
    [prop] = parse_text(
        "Sara transferred 5 eggs from a basket into the refrigerator.")
    assert prop.source == Entity("basket", EntityKind.CLASS)
    assert prop.destination == Entity("refrigerator", EntityKind.CLASS)


def test_statement_combine():
    [prop] = parse_text("Tom and Ruth had 8 apples altogether.")
    assert isinstance(prop, CombineProp)
    assert prop.total == Known(8)
    assert prop.time is TimePoint.INITIAL
    assert [k.locus.owner.name for k in prop.parts] == ["Tom", "Ruth"]


def test_group_question_combine():
    [prop] = parse_text("How many dolls do they have altogether?")
    assert isinstance(prop, CombineProp)
    assert prop.group.kind is EntityKind.GROUP
    assert prop.total == QUESTION


def test_event_combine_question():
    [prop] = parse_text("How many tickets did the children buy altogether?")
    assert prop.context == "event"
    assert prop.group == Entity("child", EntityKind.CLASS)
    assert prop.verb == "buy"


def test_distributed_numeral_subjects():
    props = parse_text("3 girls and 5 boys remained in the room.")
    assert props == [
        StateProp(StateKey(place("room"), "girl", TimePoint.FINAL), Known(3)),
        StateProp(StateKey(place("room"), "boy", TimePoint.FINAL), Known(5)),
    ]


def test_known_that_prefix_is_stripped():
    props = parse_text("it is known that Susan had 7 candies in the beginning")
    assert props == [StateProp(
        StateKey(owner("Susan"), "candy", TimePoint.INITIAL), Known(7))]


# -- errors ---------------------------------------------------------------------


def test_tense_marker_conflict():
    with pytest.raises(ParseError):
        parse_text("Ruth had 3 apples now.")


def test_conflicting_markers():
    with pytest.raises(ParseError):
        parse_text("Ruth had 3 apples now in the beginning.")


def test_unknown_word():
    with pytest.raises(UnknownWord):
        parse_text("Ruth danced 3 apples.")


def test_truncated_question():
    with pytest.raises(ParseError):
        parse_text("How many apples?")


def test_transitive_event_requires_counted_object():
    # the subject-numeral reading is reserved for locational verbs
    with pytest.raises(ParseError):
        parse_text("5 girls bought.")


def test_object_conjunction_rejected():
    with pytest.raises(ParseError):
        parse_text("Ruth had 3 apples and 4 plums.")


def test_no_question():
    with pytest.raises(NoQuestion):
        parse_problem("Ruth had 3 apples.", LEX)


def test_multiple_questions():
    with pytest.raises(MultipleQuestions):
        parse_problem("How many apples does Tom have now? "
                      "How many plums does Dan have now?", LEX)


def test_parse_error_carries_sentence_index():
    with pytest.raises(ParseError) as info:
        parse_problem("Ruth had 3 apples. Basket apple nonsense here. "
                      "How many apples does Tom have now?", LEX)
    assert info.value.sentence == 1


# -- whole problems -----------------------------------------------------------


def test_problem_one_parses_to_four_propositions():
    props = parse_problem(by_id("basket-apples").text, LEX)
    assert len(props) == 4
    kinds = [type(p).__name__ for p in props]
    assert kinds == ["StateProp", "EventProp", "StateProp", "StateProp"]
    assert props[2].quantity == QUESTION
    assert props[3].quantity == Known(4)


def test_first_multistep_problem_parses_to_four_propositions():
    props = parse_problem(by_id("apples-altogether").text, LEX)
    assert [type(p).__name__ for p in props] == [
        "CombineProp", "EventProp", "StateProp", "StateProp"]
    assert props[0].total == Known(8)
    assert props[3] == StateProp(
        StateKey(owner("Ruth"), "apple", TimePoint.INITIAL), QUESTION)


# -- round trip -----------------------------------------------------------------


def _reparse_one(sentence):
    ctx = DiscourseContext()
    [s] = tokenize(sentence, LEX)
    props = []
    for clause in s.clauses:
        props.extend(parse_clause(clause, LEX, ctx))
    assert len(props) == 1
    return props[0]


@pytest.mark.parametrize("problem", CORPUS, ids=lambda p: p.id)
def test_proposition_render_reparse_round_trip(problem):
    for prop in parse_problem(problem.text, LEX):
        rendered = render_proposition(prop, LEX)
        assert _reparse_one(rendered) == prop, rendered


_NAMES = sorted(LEX.names)
_OBJECTS = ["apple", "candy", "doll", "egg", "nut"]
_PLACES = ["basket", "room", "box", "garden"]


@given(st.sampled_from(_NAMES), st.sampled_from(_OBJECTS),
       st.integers(min_value=0, max_value=20),
       st.sampled_from(list(TimePoint)), st.booleans())
def test_state_round_trip(name, obj, n, time, is_question):
    quantity = QUESTION if is_question else Known(n)
    prop = StateProp(StateKey(owner(name), obj, time), quantity)
    assert _reparse_one(render_proposition(prop, LEX)) == prop


@given(st.sampled_from(_PLACES), st.sampled_from(_OBJECTS),
       st.integers(min_value=0, max_value=20),
       st.sampled_from(list(TimePoint)), st.booleans())
def test_place_state_round_trip(noun, obj, n, time, is_question):
    quantity = QUESTION if is_question else Known(n)
    prop = StateProp(StateKey(place(noun), obj, time), quantity)
    assert _reparse_one(render_proposition(prop, LEX)) == prop


# -- order independence -----------------------------------------------------------


def _sentences(text):
    import re

    return [s.strip() for s in re.findall(r"[^.?!]+[.?!]", text)]


@pytest.mark.parametrize(
    "problem", [p for p in CORPUS if p.pronoun_free], ids=lambda p: p.id)
def test_parse_order_independence(problem):
    base = Counter(parse_problem(problem.text, LEX))
    rng = random.Random(17)
    sentences = _sentences(problem.text)
    for _ in range(5):
        shuffled = sentences[:]
        rng.shuffle(shuffled)
        assert Counter(parse_problem(" ".join(shuffled), LEX)) == base
