"""Tokenizer and recursive-descent parser for the controlled problem English.

The grammar (documented in GRAMMAR.md) covers possession and existential
states, transfer/creation/termination events, comparatives, combine
statements, and the question forms.  Each clause parses to one or more raw
propositions; amounts are Known integers except in interrogative clauses,
which carry the Question slot.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .lexicon import (
    Compound,
    Direction,
    Elementary,
    Lexicon,
    LocusKind,
    NonChange,
    Role,
    StaticState,
    Tense,
    TimeHint,
)
from .quantity import QUESTION, Known, Question, TimePoint, Var, render_quantity


# ---------------------------------------------------------------------------
# errors


class ProblemTextError(Exception):
    """Base class for failures to understand the problem text."""


class EmptyInput(ProblemTextError):
    def __init__(self):
        super().__init__("empty problem text")


class ParseError(ProblemTextError):
    def __init__(self, sentence, reason):
        self.sentence = sentence
        self.reason = reason
        super().__init__(f"sentence {sentence + 1}: {reason}")


class UnknownWord(ParseError):
    def __init__(self, sentence, token):
        self.token = token
        super().__init__(sentence, f"unknown word {token!r}")


class NoQuestion(ProblemTextError):
    def __init__(self):
        super().__init__("problem text contains no question")


class MultipleQuestions(ProblemTextError):
    def __init__(self, count):
        super().__init__(f"problem text contains {count} questions, expected one")


# ---------------------------------------------------------------------------
# entities, loci, propositions


class EntityKind(Enum):
    PROPER = "proper"
    CLASS = "class"
    GROUP = "group"


@dataclass(frozen=True)
class Entity:
    name: str
    kind: EntityKind
    cardinality: int | None = None  # subject numerals like "5 girls"; metadata


THEY = Entity("they", EntityKind.GROUP)


@dataclass(frozen=True)
class Ownership:
    owner: Entity


@dataclass(frozen=True)
class Place:
    place: Entity


def render_locus(locus) -> str:
    if isinstance(locus, Ownership):
        return locus.owner.name
    return f"the {locus.place.name}"


@dataclass(frozen=True)
class StateKey:
    locus: object  # Ownership | Place
    obj: str       # canonical object class
    time: TimePoint


@dataclass(frozen=True)
class StateProp:
    key: StateKey
    quantity: object
    sentence: int = field(compare=False, default=-1)


@dataclass(frozen=True)
class EventProp:
    verb: str
    obj: str
    amount: object
    agent: Entity | None = None
    recipient: Entity | None = None
    source: Entity | None = None
    destination: Entity | None = None
    seq: int = field(compare=False, default=-1)
    sentence: int = field(compare=False, default=-1)


@dataclass(frozen=True)
class CompareProp:
    left: StateKey
    right: StateKey
    diff: object
    direction: str  # "more" | "less"
    sentence: int = field(compare=False, default=-1)


@dataclass(frozen=True)
class CombineProp:
    obj: str
    total: object
    time: TimePoint
    parts: tuple = ()              # StateKeys for statement combines
    group: Entity | None = None    # "they" or a class noun for question combines
    context: str = "state"         # "state" | "event"
    verb: str | None = None        # event verb of an event combine
    sentence: int = field(compare=False, default=-1)


# ---------------------------------------------------------------------------
# tokenization


@dataclass
class Clause:
    tokens: list
    sentence_index: int
    interrogative: bool


@dataclass
class Sentence:
    index: int
    clauses: list


_WORD_RE = re.compile(r"[A-Za-z0-9'-]+|[,]")

# Leading phrases with no amount semantics, stripped before parsing.
_SEQUENCERS = (
    ("then",),
    ("next",),
    ("after", "this"),
    ("after", "that"),
    ("it", "is", "known", "that"),
)


def _words(chunk):
    return _WORD_RE.findall(chunk)


def _has_verb(tokens, lexicon) -> bool:
    return any(lexicon.is_verb_form(t) for t in tokens if t != ",")


def _split_and(tokens, lexicon):
    """Split at clause-level "and": both halves must contain a verb."""
    for i, tok in enumerate(tokens):
        if tok.lower() != "and":
            continue
        left = [t for t in tokens[:i] if t != ","]
        right = [t for t in tokens[i + 1:] if t != ","]
        if left and right and _has_verb(left, lexicon) and _has_verb(right, lexicon):
            return [left] + _split_and(right, lexicon)
    return [[t for t in tokens if t != ","]]


def tokenize(text, lexicon=None) -> list:
    """Split problem text into sentences and clauses.

    Sentences end at '.', '?' or '!'.  A ", if" splits a sentence into a
    main clause plus subordinate clauses; "and" between two full clauses
    splits them into siblings.  Clauses beginning "how many" are flagged
    interrogative.
    """
    if lexicon is None:
        from .lexicon import load_default_lexicon

        lexicon = load_default_lexicon()
    if not text or not text.strip():
        raise EmptyInput()
    sentences = []
    for chunk in re.split(r"[.?!]", text):
        tokens = _words(chunk)
        if not tokens:
            continue
        index = len(sentences)
        # ", if" subordination
        parts = []
        for j, tok in enumerate(tokens):
            if tok.lower() == "if" and j > 0:
                parts = [tokens[:j], tokens[j + 1:]]
                break
        if not parts:
            parts = [tokens]
        clauses = []
        for part in parts:
            for clause_tokens in _split_and(part, lexicon):
                lowered = [t.lower() for t in clause_tokens[:2]]
                interrogative = lowered == ["how", "many"]
                clauses.append(Clause(clause_tokens, index, interrogative))
        sentences.append(Sentence(index, clauses))
    if not sentences:
        raise EmptyInput()
    return sentences


# ---------------------------------------------------------------------------
# clause parsing


@dataclass
class DiscourseContext:
    """Proper names seen so far, for pronoun resolution."""

    mentions: list = field(default_factory=list)  # (name, gender) in text order

    def mention(self, name, gender):
        self.mentions.append((name, gender))

    def resolve(self, gender):
        for name, g in reversed(self.mentions):
            if g == gender:
                return name
        return None


_DETERMINERS = {"a", "an", "the"}
_KEYWORDS = {
    "there", "how", "many", "more", "less", "than", "altogether", "and",
    "if", "now", "in", "the", "beginning", "to", "from", "into", "onto",
    "out", "of", "a", "an", "by",
}


class _ClauseParser:
    def __init__(self, clause, lexicon, ctx):
        self.lexicon = lexicon
        self.ctx = ctx
        self.sentence = clause.sentence_index
        self.interrogative = clause.interrogative
        tokens = self._strip_sequencers(clause.tokens)
        tokens, self.marker = self._extract_markers(tokens)
        self.tokens = tokens
        self.pos = 0

    # -- token plumbing -------------------------------------------------

    def error(self, reason):
        return ParseError(self.sentence, reason)

    def peek(self, offset=0):
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def peek_lower(self, offset=0):
        tok = self.peek(offset)
        return tok.lower() if tok is not None else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of clause")
        self.pos += 1
        return tok

    def expect(self, *words):
        tok = self.peek_lower()
        if tok not in words:
            raise self.error(f"expected {' or '.join(words)!r}, found {tok!r}")
        return self.take()

    def done(self):
        return self.pos >= len(self.tokens)

    # -- preprocessing ----------------------------------------------------

    def _strip_sequencers(self, tokens):
        lowered = [t.lower() for t in tokens]
        for seq in _SEQUENCERS:
            if tuple(lowered[: len(seq)]) == seq:
                return self._strip_sequencers(tokens[len(seq):])
        return tokens

    def _extract_markers(self, tokens):
        out, marker = [], None
        lowered = [t.lower() for t in tokens]
        i = 0
        while i < len(tokens):
            if tuple(lowered[i: i + 3]) == ("in", "the", "beginning"):
                found = TimePoint.INITIAL
                i += 3
            elif lowered[i] == "now":
                found = TimePoint.FINAL
                i += 1
            else:
                out.append(tokens[i])
                i += 1
                continue
            if marker is not None and marker != found:
                raise self.error("conflicting time markers in one clause")
            marker = found
        return out, marker

    def resolve_time(self, tense) -> TimePoint:
        """Combine verb tense with an explicit marker; disagreement is an error."""
        from_tense = TimePoint.INITIAL if tense is Tense.PAST else TimePoint.FINAL
        if self.marker is not None and self.marker != from_tense:
            raise self.error(
                f"time marker {self.marker.value!r} conflicts with verb tense"
            )
        return self.marker or from_tense

    # -- small recognizers --------------------------------------------------

    def _is_numeral(self, tok):
        return tok is not None and self.lexicon.parse_number(tok) is not None

    def _is_proper(self, tok):
        if tok is None or not tok[:1].isupper():
            return False
        if tok in self.lexicon.names:
            return True
        low = tok.lower()
        return not (
            low in _KEYWORDS
            or low in self.lexicon.noun_forms
            or self.lexicon.is_verb_form(low)
            or self._is_numeral(low)
            or low in self.lexicon.pronouns
        )

    def _noun_class(self, tok):
        cls = self.lexicon.normalize_noun(tok)
        if cls is None:
            raise self.error(f"expected an object noun, found {tok!r}")
        return cls

    def take_proper(self):
        name = self.take()
        self.ctx.mention(name, self.lexicon.name_gender(name))
        return Entity(name, EntityKind.PROPER)

    def take_pronoun_entity(self, word):
        gender = self.lexicon.pronoun_kind(word)
        self.take()
        if gender == "group":
            return THEY
        name = self.ctx.resolve(gender)
        if name is None:
            raise self.error(f"pronoun {word!r} has no antecedent")
        return Entity(name, EntityKind.PROPER)

    def parse_place_np(self) -> Entity:
        if self.peek_lower() in _DETERMINERS:
            self.take()
        tok = self.take()
        if self._is_proper(tok):
            raise self.error(f"expected a place noun, found the name {tok!r}")
        return Entity(self._noun_class(tok), EntityKind.CLASS)

    def parse_person_or_place(self) -> Entity:
        tok = self.peek()
        if tok is not None and self.lexicon.pronoun_kind(tok) is not None:
            return self.take_pronoun_entity(tok)
        if self._is_proper(tok):
            return self.take_proper()
        return self.parse_place_np()

    def parse_object_np(self):
        """A counted object: NUMERAL NOUN."""
        tok = self.take()
        n = self.lexicon.parse_number(tok)
        if n is None:
            raise self.error(f"expected an amount, found {tok!r}")
        return n, self._noun_class(self.take())

    # -- subjects -----------------------------------------------------------

    def parse_subject_item(self) -> Entity:
        tok = self.peek()
        if tok is None:
            raise self.error("missing subject")
        if self.lexicon.pronoun_kind(tok) is not None and not self._is_numeral(tok):
            return self.take_pronoun_entity(tok)
        if self._is_proper(tok):
            return self.take_proper()
        if self._is_numeral(tok):
            n = self.lexicon.parse_number(self.take())
            cls = self._noun_class(self.take())
            return Entity(cls, EntityKind.CLASS, cardinality=n)
        raise self.error(f"cannot read subject starting at {tok!r}")

    def parse_subject(self):
        items = [self.parse_subject_item()]
        while self.peek_lower() == "and":
            self.take()
            items.append(self.parse_subject_item())
        return items

    # -- verb group ------------------------------------------------------------

    def parse_verb_group(self):
        """Longest verb lemma at the cursor, with tense.

        Tries phrasal lemmas built from following particles first, so
        "took out", "went away" and "fell out of" resolve to their table
        entries. "was born"/"were born" resolves to its own lemma.
        """
        tok = self.take()
        got = self.lexicon.lemmatize_verb(tok)
        if got is None:
            raise UnknownWord(self.sentence, tok)
        lemma, tense = got
        if lemma == "be" and self.peek_lower() == "born":
            self.take()
            lemma = "be born"
        else:
            for span in (2, 1):
                extra = [self.peek_lower(k) for k in range(span)]
                if any(e is None for e in extra):
                    continue
                candidate = " ".join([lemma] + extra)
                if candidate in self.lexicon.verbs:
                    for _ in range(span):
                        self.take()
                    lemma = candidate
                    break
        return lemma, tense, self.lexicon.classify_verb(lemma)

    # -- clause forms -------------------------------------------------------------

    def parse(self):
        if self.interrogative:
            return self.parse_question()
        if self.peek_lower() == "there":
            return self.parse_existential()
        return self.parse_subject_clause()

    # "How many ..." forms
    def parse_question(self):
        self.expect("how")
        self.expect("many")
        obj = self._noun_class(self.take())
        tok = self.take()
        got = self.lexicon.lemmatize_verb(tok)
        if got is None:
            raise UnknownWord(self.sentence, tok)
        aux, tense = got
        time = self.resolve_time(tense)
        if aux == "be":
            self.expect("there")
            self.expect("in")
            place = self.parse_place_np()
            self._check_done()
            return [StateProp(StateKey(Place(place), obj, time), QUESTION, self.sentence)]
        if aux != "do":
            raise self.error(f"unsupported question auxiliary {tok!r}")
        subj_tok = self.peek()
        if subj_tok is not None and self.lexicon.pronoun_kind(subj_tok) == "group":
            self.take()
            lemma, _, _ = self.parse_verb_group()
            if lemma != "have":
                raise self.error("group questions are supported with 'have' only")
            self.expect("altogether")
            self._check_done()
            return [CombineProp(obj, QUESTION, time, group=THEY,
                                context="state", sentence=self.sentence)]
        if self.peek_lower() in _DETERMINERS:
            self.take()
            cls = self._noun_class(self.take())
            lemma, _, classification = self.parse_verb_group()
            if not isinstance(classification, (Elementary, Compound)):
                raise self.error(
                    f"class-noun questions need a change verb, found {lemma!r}"
                )
            self.expect("altogether")
            self._check_done()
            group = Entity(cls, EntityKind.CLASS)
            return [CombineProp(obj, QUESTION, time, group=group,
                                context="event", verb=lemma, sentence=self.sentence)]
        owner = self.parse_subject_item()
        lemma, _, _ = self.parse_verb_group()
        if lemma != "have":
            raise self.error(f"owner questions are supported with 'have' only")
        self._check_done()
        return [StateProp(StateKey(Ownership(owner), obj, time), QUESTION, self.sentence)]

    # "There were N OBJ [more] in the PLACE ..."
    def parse_existential(self):
        self.expect("there")
        tok = self.take()
        got = self.lexicon.lemmatize_verb(tok)
        if got is None or got[0] != "be":
            raise self.error(f"expected a form of 'be', found {tok!r}")
        time = self.resolve_time(got[1])
        n, obj = self.parse_object_np()
        if self.peek_lower() in ("more", "less"):
            direction = self.take().lower()
            self.expect("in")
            left = self.parse_place_np()
            self.expect("than")
            self.expect("there")
            self.take()  # right-side 'be' form; main clause time governs
            self.expect("in")
            right = self.parse_place_np()
            self._check_done()
            return [CompareProp(
                StateKey(Place(left), obj, time),
                StateKey(Place(right), obj, time),
                Known(n), direction, self.sentence,
            )]
        self.expect("in")
        place = self.parse_place_np()
        self._check_done()
        return [StateProp(StateKey(Place(place), obj, time), Known(n), self.sentence)]

    def parse_subject_clause(self):
        subjects = self.parse_subject()
        lemma, tense, classification = self.parse_verb_group()
        if classification is None:
            raise UnknownWord(self.sentence, lemma)
        if isinstance(classification, StaticState):
            if classification.hint is TimeHint.FROM_TENSE:
                return self.parse_have_clause(subjects, tense)
            return self.parse_static_clause(subjects, classification)
        if isinstance(classification, (Elementary, Compound)):
            if len(subjects) != 1:
                raise self.error("change events take a single subject")
            return self.parse_event(subjects[0], lemma, classification)
        raise self.error(f"verb {lemma!r} cannot head a clause")

    # "OWNER has/had N OBJ [more|less than ...] [altogether]"
    def parse_have_clause(self, subjects, tense):
        time = self.resolve_time(tense)
        n, obj = self.parse_object_np()
        nxt = self.peek_lower()
        if nxt in ("more", "less"):
            if len(subjects) != 1:
                raise self.error("comparisons take a single subject")
            direction = self.take().lower()
            self.expect("than")
            left = StateKey(Ownership(subjects[0]), obj, time)
            if self.peek_lower() == "there":
                self.take()
                self.take()  # 'be' form
                self.expect("in")
                right_locus = Place(self.parse_place_np())
            else:
                right_locus = Ownership(self.parse_person_or_place())
                if not self.done():
                    tok = self.take()
                    got = self.lexicon.lemmatize_verb(tok)
                    if got is None or got[0] != "have":
                        raise self.error(f"unexpected token {tok!r} after comparison")
            self._check_done()
            return [CompareProp(left, StateKey(right_locus, obj, time),
                                Known(n), direction, self.sentence)]
        if nxt == "altogether":
            self.take()
            self._check_done()
            if len(subjects) < 2:
                raise self.error("'altogether' needs a conjunction of owners")
            parts = tuple(StateKey(Ownership(s), obj, time) for s in subjects)
            return [CombineProp(obj, Known(n), time, parts=parts,
                                context="state", sentence=self.sentence)]
        self._check_done()
        if len(subjects) != 1:
            raise self.error("a possession state takes a single owner")
        return [StateProp(StateKey(Ownership(subjects[0]), obj, time),
                          Known(n), self.sentence)]

    # "N CLASS remained in the PLACE"
    def parse_static_clause(self, subjects, classification):
        time = (TimePoint.INITIAL if classification.hint is TimeHint.INITIAL
                else TimePoint.FINAL)
        if self.marker is not None and self.marker != time:
            raise self.error("time marker conflicts with the verb's meaning")
        self.expect("in")
        place = self.parse_place_np()
        self._check_done()
        props = []
        for subj in subjects:
            if subj.kind is not EntityKind.CLASS or subj.cardinality is None:
                raise self.error("a counted class noun must head this clause")
            props.append(StateProp(
                StateKey(Place(place), subj.name, time),
                Known(subj.cardinality), self.sentence,
            ))
        return props

    def parse_event(self, subject, lemma, classification):
        agent = recipient = source = destination = None
        object_np = None
        locational = (isinstance(classification, Elementary)
                      and classification.kind.locus_kind is LocusKind.PLACE)
        while not self.done():
            tok = self.peek_lower()
            if tok == "to":
                self.take()
                ent = self.parse_person_or_place()
                if ent.kind is EntityKind.PROPER:
                    recipient = ent
                else:
                    destination = ent
            elif tok == "from":
                self.take()
                source = self.parse_person_or_place()
            elif tok in ("into", "onto", "in"):
                self.take()
                destination = self.parse_place_np()
            elif tok == "out":
                self.take()
                self.expect("of")
                source = self.parse_place_np()
            elif object_np is None and self._is_numeral(self.peek(1)) \
                    and (self._is_proper(self.peek())
                         or self.lexicon.pronoun_kind(tok) in ("f", "m")):
                # double-object dative: "gave Tom 3 apples", "gave him 3 apples"
                if self._is_proper(self.peek()):
                    recipient = self.take_proper()
                else:
                    recipient = self.take_pronoun_entity(self.peek())
            elif self._is_numeral(tok):
                if object_np is not None:
                    raise self.error("two counted objects in one event")
                object_np = self.parse_object_np()
            elif (tok in _DETERMINERS or not self._is_proper(self.peek())) \
                    and locational:
                ent = self.parse_place_np()  # bare locus of leave/enter/exit
                if classification.kind.direction is Direction.IN:
                    destination = ent
                else:
                    source = ent
            else:
                raise self.error(f"unexpected token {tok!r} in event clause")
        if object_np is None:
            # Subject numeral counts the subject class, but only for
            # locational verbs: "Two boys left a room."
            if locational and subject.kind is EntityKind.CLASS \
                    and subject.cardinality is not None:
                amount, obj = subject.cardinality, subject.name
            else:
                raise self.error("event clause has no counted object")
        else:
            amount, obj = object_np
            agent = subject
        return [EventProp(lemma, obj, Known(amount), agent=agent,
                          recipient=recipient, source=source,
                          destination=destination, sentence=self.sentence)]

    def _check_done(self):
        if not self.done():
            raise self.error(f"unexpected trailing words from {self.peek()!r}")


def parse_clause(clause, lexicon, ctx=None):
    if ctx is None:
        ctx = DiscourseContext()
    return _ClauseParser(clause, lexicon, ctx).parse()


def _count_questions(props):
    count = 0
    for prop in props:
        if isinstance(prop, StateProp) and isinstance(prop.quantity, Question):
            count += 1
        if isinstance(prop, CombineProp) and isinstance(prop.total, Question):
            count += 1
    return count


def parse_problem(text, lexicon) -> list:
    """All propositions of a problem, in text order, numbered by event.

    Exactly one Question quantity must result.
    """
    ctx = DiscourseContext()
    props = []
    seq = 0
    for sentence in tokenize(text, lexicon):
        for clause in sentence.clauses:
            for prop in parse_clause(clause, lexicon, ctx):
                if isinstance(prop, EventProp):
                    prop = EventProp(prop.verb, prop.obj, prop.amount,
                                     prop.agent, prop.recipient, prop.source,
                                     prop.destination, seq, prop.sentence)
                    seq += 1
                props.append(prop)
    count = _count_questions(props)
    if count == 0:
        raise NoQuestion()
    if count > 1:
        raise MultipleQuestions(count)
    return props


# ---------------------------------------------------------------------------
# rendering back to surface sentences (round-trip form)


def _entity_surface(entity, lexicon, amount=None):
    if entity.kind is EntityKind.PROPER:
        return entity.name
    noun = lexicon.pluralize(entity.name, entity.cardinality)
    if entity.cardinality is not None:
        return f"{entity.cardinality} {noun}"
    return f"the {noun}"


def _obj_surface(obj, n, lexicon):
    return f"{render_quantity(n) if not isinstance(n, int) else n} " \
           f"{lexicon.pluralize(obj, n if isinstance(n, int) else None)}"


def render_proposition(prop, lexicon) -> str:
    """Canonical surface sentence for a parsed proposition.

    Re-parsing the rendered sentence yields an equal proposition; see the
    round-trip property tests.
    """
    if isinstance(prop, StateProp):
        return _render_state(prop, lexicon)
    if isinstance(prop, EventProp):
        return _render_event(prop, lexicon)
    if isinstance(prop, CompareProp):
        return _render_compare(prop, lexicon)
    if isinstance(prop, CombineProp):
        return _render_combine(prop, lexicon)
    raise TypeError(f"not a proposition: {prop!r}")


def _render_state(prop, lexicon):
    key = prop.key
    initial = key.time is TimePoint.INITIAL
    if isinstance(prop.quantity, Question):
        objs = lexicon.pluralize(key.obj)
        if isinstance(key.locus, Place):
            where = f"in the {key.locus.place.name}"
            if initial:
                return f"How many {objs} were there {where} in the beginning?"
            return f"How many {objs} are there {where} now?"
        owner = key.locus.owner.name
        if initial:
            return f"How many {objs} did {owner} have in the beginning?"
        return f"How many {objs} does {owner} have now?"
    n = prop.quantity.value
    objs = _obj_surface(key.obj, n, lexicon)
    if isinstance(key.locus, Place):
        verb = "were" if initial else "are"
        return f"There {verb} {objs} in the {key.locus.place.name}."
    verb = "had" if initial else "has"
    return f"{key.locus.owner.name} {verb} {objs}."


_BARE_LOCUS_VERBS = {"leave", "enter", "exit"}


def _render_event(prop, lexicon):
    past = lexicon.render_past(prop.verb)
    if prop.agent is None:
        # subject-numeral frame: "2 boys left the room", "3 eggs fell out
        # of the box"; the verb (or its particles) names the locus role
        n = prop.amount.value
        subj = f"{n} {lexicon.pluralize(prop.obj, n)}"
        locus = prop.destination if prop.destination is not None else prop.source
        if locus is None:
            return f"{subj} {past}."
        if " " in prop.verb or prop.verb in _BARE_LOCUS_VERBS:
            return f"{subj} {past} the {locus.name}."
        preposition = "into" if prop.destination is not None else "from"
        return f"{subj} {past} {preposition} the {locus.name}."
    objs = _obj_surface(prop.obj, prop.amount.value, lexicon)
    trailing = []
    if prop.source is not None:
        trailing.append(f"from {_entity_surface(prop.source, lexicon)}"
                        if prop.source.kind is EntityKind.PROPER
                        else f"from the {prop.source.name}")
    if prop.destination is not None:
        trailing.append(f"into the {prop.destination.name}")
    if prop.recipient is not None:
        trailing.append(f"to {prop.recipient.name}")
    tail = (" " + " ".join(trailing)) if trailing else ""
    return f"{_entity_surface(prop.agent, lexicon)} {past} {objs}{tail}."


def _render_compare(prop, lexicon):
    initial = prop.left.time is TimePoint.INITIAL
    d = prop.diff.value
    objs = _obj_surface(prop.left.obj, d, lexicon)
    if isinstance(prop.left.locus, Place):
        verb = "were" if initial else "are"
        return (f"There {verb} {objs} {prop.direction} in the "
                f"{prop.left.locus.place.name} than there {verb} in the "
                f"{prop.right.locus.place.name}.")
    verb = "had" if initial else "has"
    return (f"{prop.left.locus.owner.name} {verb} {objs} {prop.direction} "
            f"than {prop.right.locus.owner.name} {verb}.")


def _render_combine(prop, lexicon):
    initial = prop.time is TimePoint.INITIAL
    if isinstance(prop.total, Question):
        objs = lexicon.pluralize(prop.obj)
        aux = "did" if initial else "do"
        if prop.group is THEY:
            return f"How many {objs} {aux} they have altogether?"
        group = lexicon.pluralize(prop.group.name)
        verb = prop.verb if prop.context == "event" else "have"
        return f"How many {objs} did the {group} {verb} altogether?"
    names = " and ".join(k.locus.owner.name for k in prop.parts)
    verb = "had" if initial else "have"
    return f"{names} {verb} {_obj_surface(prop.obj, prop.total.value, lexicon)} altogether."
