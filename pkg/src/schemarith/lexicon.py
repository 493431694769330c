"""Word tables: change-verb categories, static verbs, nouns, numbers, names.

The tables load from a line-oriented text format (see ``DEFAULT_LEXICON``
and the grammar notes in GRAMMAR.md) so new words can be added without
code changes.  A loaded lexicon is immutable and safe to share across
concurrent solver runs.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Direction(Enum):
    IN = "in"
    OUT = "out"
    CREATE = "create"
    TERMINATE = "terminate"


class LocusKind(Enum):
    OWNERSHIP = "ownership"
    PLACE = "place"


@dataclass(frozen=True)
class ChangeKind:
    direction: Direction
    locus_kind: LocusKind

    def __str__(self):
        return f"{self.direction.value}/{self.locus_kind.value}"


#: The eight admissible change situations: four directions, each over an
#: ownership locus or a place locus.
VALID_CHANGE_KINDS = tuple(
    ChangeKind(d, lk) for d in Direction for lk in LocusKind
)


class Role(Enum):
    AGENT = "agent"
    RECIPIENT = "recipient"
    SOURCE = "source"
    DESTINATION = "destination"


class TimeHint(Enum):
    INITIAL = "initial"
    FINAL = "final"
    FROM_TENSE = "tense"


class Tense(Enum):
    PAST = "past"
    PRESENT = "present"


@dataclass(frozen=True)
class Elementary:
    """A verb denoting exactly one elementary change."""

    kind: ChangeKind


@dataclass(frozen=True)
class Compound:
    """A verb denoting two (or more) elementary changes at once.

    Each component names the change it performs and the sentence
    participant whose locus it affects.
    """

    components: tuple  # of (ChangeKind, Role)

    def __post_init__(self):
        if len(self.components) < 2:
            raise ValueError("compound verbs have at least two components")


@dataclass(frozen=True)
class StaticState:
    """A verb describing an amount at rest rather than a change."""

    hint: TimeHint


@dataclass(frozen=True)
class NonChange:
    """A verb with no amount semantics (auxiliaries)."""


class LexiconFormatError(ValueError):
    pass


def _parse_kind(direction: str, locus: str) -> ChangeKind:
    try:
        return ChangeKind(Direction(direction), LocusKind(locus))
    except ValueError as exc:
        raise LexiconFormatError(f"bad change kind {direction}:{locus}") from exc


def _parse_verb_payload(payload: str):
    head, _, rest = payload.partition(":")
    if head == "elementary":
        direction, _, locus = rest.partition(":")
        return Elementary(_parse_kind(direction, locus))
    if head == "compound":
        components = []
        for part in rest.split("+"):
            fields = part.split(":")
            if len(fields) != 3:
                raise LexiconFormatError(f"bad compound component {part!r}")
            direction, locus, role = fields
            components.append((_parse_kind(direction, locus), Role(role)))
        return Compound(tuple(components))
    if head == "static":
        return StaticState(TimeHint(rest))
    if head == "nonchange":
        return NonChange()
    raise LexiconFormatError(f"bad verb payload {payload!r}")


class Lexicon:
    """Read-only word tables. Build one with :func:`load_lexicon_text`."""

    def __init__(self):
        self.verbs = {}          # lemma -> classification
        self.verb_forms = {}     # inflected surface -> (lemma, Tense)
        self.number_words = {}   # word -> int
        self.noun_forms = {}     # surface -> canonical singular
        self.plural_forms = {}   # canonical singular -> plural surface
        self.supersets = {}      # canonical class -> frozenset of member classes
        self.pronouns = {}       # pronoun -> gender tag ("f"/"m"/"group")
        self.names = {}          # proper name -> gender tag

    # -- verbs ---------------------------------------------------------

    def classify_verb(self, lemma):
        """Classification of a lemma, or None when the word is unknown."""
        return self.verbs.get(lemma)

    def lemmatize_verb(self, surface):
        """Map an inflected verb form to (lemma, tense); None if not a verb.

        Irregular forms come from the table; regular -ed/-s/-ies endings
        are stripped and checked against the lemma list.
        """
        w = surface.lower()
        if w in self.verb_forms:
            return self.verb_forms[w]
        if w in self.verbs:
            return (w, Tense.PRESENT)
        if w.endswith("ed") and len(w) > 3:
            candidates = [w[:-1], w[:-2]]
            if len(w) > 4 and w[-3] == w[-4]:
                candidates.append(w[:-3])
            for cand in candidates:
                if cand in self.verbs:
                    return (cand, Tense.PAST)
        if w.endswith("ies") and w[:-3] + "y" in self.verbs:
            return (w[:-3] + "y", Tense.PRESENT)
        if w.endswith("es") and w[:-2] in self.verbs:
            return (w[:-2], Tense.PRESENT)
        if w.endswith("s") and w[:-1] in self.verbs:
            return (w[:-1], Tense.PRESENT)
        return None

    def is_verb_form(self, surface) -> bool:
        return self.lemmatize_verb(surface) is not None

    def render_past(self, lemma) -> str:
        """Past-tense surface for a lemma (phrasal particles pass through)."""
        if lemma in self._past_forms:
            return self._past_forms[lemma]
        head, _, particles = lemma.partition(" ")
        past = self._past_forms.get(head)
        if past is None:
            if head.endswith("e"):
                past = head + "d"
            elif head.endswith("y") and len(head) > 1 and head[-2] not in "aeiou":
                past = head[:-1] + "ied"
            else:
                past = head + "ed"
        return past + (" " + particles if particles else "")

    # -- nouns ---------------------------------------------------------

    def normalize_noun(self, surface):
        """Canonical singular class for a noun surface; None for proper names.

        Words outside the table are inflected by regular rules, so fresh
        lower-case nouns are usable without lexicon edits.
        """
        w = surface.lower()
        if w in self.noun_forms:
            return self.noun_forms[w]
        if surface[:1].isupper():
            return None
        if w.endswith("ies") and len(w) > 4:
            return w[:-3] + "y"
        if w.endswith(("xes", "ches", "shes", "sses")):
            return w[:-2]
        if w.endswith("s") and not w.endswith("ss") and len(w) > 3:
            return w[:-1]
        return w

    def pluralize(self, canonical, n=None) -> str:
        """Surface form for `n` objects of a class (singular iff n == 1)."""
        if n == 1:
            return canonical
        if canonical in self.plural_forms:
            return self.plural_forms[canonical]
        if canonical.endswith("y") and len(canonical) > 1 and canonical[-2] not in "aeiou":
            return canonical[:-1] + "ies"
        if canonical.endswith(("s", "x", "ch", "sh")):
            return canonical + "es"
        return canonical + "s"

    # -- numbers, supersets, people -------------------------------------

    def parse_number(self, word):
        """Integer value of a digit string or number word; None otherwise."""
        w = word.lower()
        if w.isdigit():
            return int(w)
        return self.number_words.get(w)

    def superset_members(self, cls) -> frozenset:
        """Configured member classes of a class noun; empty when not a superset."""
        canonical = self.normalize_noun(cls)
        if canonical is None:
            return frozenset()
        return self.supersets.get(canonical, frozenset())

    def name_gender(self, name):
        return self.names.get(name)

    def pronoun_kind(self, word):
        return self.pronouns.get(word.lower())

    # -- loading ---------------------------------------------------------

    def _freeze(self):
        self._past_forms = {
            lemma: form
            for form, (lemma, tense) in self.verb_forms.items()
            if tense is Tense.PAST
        }
        return self


def load_lexicon_text(text) -> Lexicon:
    lex = Lexicon()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise LexiconFormatError(f"line {lineno}: expected 3 tab-separated fields")
        kind, lemma, payload = fields
        if kind == "verb":
            lex.verbs[lemma] = _parse_verb_payload(payload)
        elif kind == "form":
            base, _, tense = payload.partition(":")
            lex.verb_forms[lemma] = (base, Tense(tense))
        elif kind == "number":
            lex.number_words[lemma] = int(payload)
        elif kind == "noun":
            lex.noun_forms[lemma] = payload
            if lemma != payload:
                lex.plural_forms.setdefault(payload, lemma)
        elif kind == "superset":
            lex.supersets[lemma] = frozenset(payload.split(","))
        elif kind == "pronoun":
            lex.pronouns[lemma] = payload
        elif kind == "name":
            lex.names[lemma] = payload
        else:
            raise LexiconFormatError(f"line {lineno}: unknown record kind {kind!r}")
    return lex._freeze()


def load_lexicon_file(path) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return load_lexicon_text(fh.read())


# Record format: kind<TAB>lemma<TAB>payload. See GRAMMAR.md for the payload
# grammar. "send" also occurs as a change of place in ordinary usage; it is
# tabled once, as a change of ownership.
DEFAULT_LEXICON = """\
# --- change verbs: transfer of ownership -----------------------------
verb\treceive\telementary:in:ownership
verb\tget\telementary:in:ownership
verb\tobtain\telementary:in:ownership
verb\tlose\telementary:out:ownership
verb\tforfeit\telementary:out:ownership
verb\tsend\telementary:out:ownership
# --- change verbs: transfer of place ---------------------------------
verb\tfetch\telementary:in:place
verb\tbring\telementary:in:place
verb\tput in\telementary:in:place
verb\tput\telementary:in:place
verb\tlay\telementary:in:place
verb\tenter\telementary:in:place
verb\tfall into\telementary:in:place
verb\tadd\telementary:in:place
verb\ttake out\telementary:out:place
verb\ttake away\telementary:out:place
verb\texit\telementary:out:place
verb\tgo away\telementary:out:place
verb\tdrag out\telementary:out:place
verb\tfall from\telementary:out:place
verb\tfall out of\telementary:out:place
verb\tleave\telementary:out:place
# --- creation / termination (locus resolved per sentence) ------------
verb\tbuild\telementary:create:place
verb\tbe born\telementary:create:place
verb\tcreate\telementary:create:place
verb\tmake\telementary:create:place
verb\teat\telementary:terminate:place
verb\tdestroy\telementary:terminate:place
verb\tdie\telementary:terminate:place
verb\tkill\telementary:terminate:place
# --- compound change verbs (two elementary changes each) -------------
verb\tgive\tcompound:out:ownership:agent+in:ownership:recipient
verb\tbuy\tcompound:in:ownership:agent+out:ownership:source
verb\tpay\tcompound:out:ownership:agent+in:ownership:recipient
verb\tsell\tcompound:out:ownership:agent+in:ownership:recipient
verb\tdonate\tcompound:out:ownership:agent+in:ownership:recipient
verb\tsteal\tcompound:in:ownership:agent+out:ownership:source
verb\ttransfer\tcompound:out:place:source+in:place:destination
verb\tmove\tcompound:out:place:source+in:place:destination
# --- static and auxiliary verbs ---------------------------------------
verb\thave\tstatic:tense
verb\tbe\tstatic:tense
verb\tremain\tstatic:final
verb\tstay\tstatic:final
verb\tdo\tnonchange
# --- irregular verb forms ---------------------------------------------
form\thad\thave:past
form\thas\thave:present
form\twas\tbe:past
form\twere\tbe:past
form\tis\tbe:present
form\tare\tbe:present
form\tdid\tdo:past
form\tdoes\tdo:present
form\tgave\tgive:past
form\tgot\tget:past
form\tput\tput:past
form\tlaid\tlay:past
form\tfell\tfall:past
form\ttook\ttake:past
form\twent\tgo:past
form\tbuilt\tbuild:past
form\tmade\tmake:past
form\tate\teat:past
form\tbought\tbuy:past
form\tpaid\tpay:past
form\tsold\tsell:past
form\tstole\tsteal:past
form\tsent\tsend:past
form\tlost\tlose:past
form\tleft\tleave:past
form\tbrought\tbring:past
form\tborn\tbe born:past
form\ttransferred\ttransfer:past
form\tdragged\tdrag out:past
# --- number words ------------------------------------------------------
number\tzero\t0
number\tone\t1
number\ttwo\t2
number\tthree\t3
number\tfour\t4
number\tfive\t5
number\tsix\t6
number\tseven\t7
number\teight\t8
number\tnine\t9
number\tten\t10
number\televen\t11
number\ttwelve\t12
number\tthirteen\t13
number\tfourteen\t14
number\tfifteen\t15
number\tsixteen\t16
number\tseventeen\t17
number\teighteen\t18
number\tnineteen\t19
number\ttwenty\t20
# --- nouns (surface -> canonical singular) -----------------------------
noun\tapple\tapple
noun\tapples\tapple
noun\tcandy\tcandy
noun\tcandies\tcandy
noun\tplum\tplum
noun\tplums\tplum
noun\tdoll\tdoll
noun\tdolls\tdoll
noun\tflower\tflower
noun\tflowers\tflower
noun\tnut\tnut
noun\tnuts\tnut
noun\tegg\tegg
noun\teggs\tegg
noun\tticket\tticket
noun\ttickets\tticket
noun\tboy\tboy
noun\tboys\tboy
noun\tgirl\tgirl
noun\tgirls\tgirl
noun\tchild\tchild
noun\tchildren\tchild
noun\tbasket\tbasket
noun\tbaskets\tbasket
noun\troom\troom
noun\trooms\troom
noun\trefrigerator\trefrigerator
noun\trefrigerators\trefrigerator
noun\tbox\tbox
noun\tboxes\tbox
noun\thouse\thouse
noun\thouses\thouse
noun\tvillage\tvillage
noun\tvillages\tvillage
noun\tmarble\tmarble
noun\tmarbles\tmarble
noun\tstone\tstone
noun\tstones\tstone
noun\tpencil\tpencil
noun\tpencils\tpencil
noun\tgarden\tgarden
noun\tgardens\tgarden
noun\ttoy\ttoy
noun\ttoys\ttoy
noun\tbook\tbook
noun\tbooks\tbook
# --- class supersets ----------------------------------------------------
superset\tchild\tgirl,boy
# --- pronouns ------------------------------------------------------------
pronoun\tshe\tf
pronoun\ther\tf
pronoun\the\tm
pronoun\thim\tm
pronoun\tthey\tgroup
# --- proper names and grammatical gender ---------------------------------
name\tRuth\tf
name\tMary\tf
name\tSara\tf
name\tSusan\tf
name\tAnn\tf
name\tClara\tf
name\tAlice\tf
name\tEve\tf
name\tDavid\tm
name\tJohn\tm
name\tTom\tm
name\tDan\tm
name\tFred\tm
name\tBob\tm
name\tAdam\tm
"""

_DEFAULT = None


def load_default_lexicon() -> Lexicon:
    """The embedded lexicon (cached; lexicons are immutable)."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_lexicon_text(DEFAULT_LEXICON)
    return _DEFAULT
