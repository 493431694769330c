"""Proposition store, compound-verb splitting, and per-locus timelines.

The store holds every state, event, comparison and combine statement of a
problem.  Events with compound verbs split into their elementary changes;
all elementary events touching one (locus, object) pair form a timeline
ordered between the stated initial and final amounts, with fresh unknowns
for the amounts between consecutive events.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .lexicon import Compound, Direction, Elementary, LocusKind, Role
from .parser import (
    CombineProp,
    CompareProp,
    Entity,
    EntityKind,
    EventProp,
    Ownership,
    Place,
    StateKey,
    StateProp,
    render_locus,
)
from .quantity import QUESTION, Known, Question, TimePoint, Var, render_quantity


class DataConflict(Exception):
    """Two stated amounts disagree for the same locus, object and time."""

    def __init__(self, key, existing, new):
        self.key = key
        super().__init__(
            f"conflicting amounts for {render_locus(key.locus)} / {key.obj} "
            f"({key.time.value}): {render_quantity(existing)} vs {render_quantity(new)}"
        )


class UnknownVerb(Exception):
    def __init__(self, lemma):
        super().__init__(f"verb {lemma!r} is not in the lexicon")


class MissingParticipant(Exception):
    """An event names no participant that could carry its locus."""

    def __init__(self, verb, what):
        super().__init__(f"event verb {verb!r} has no {what} to locate the change at")


@dataclass(frozen=True)
class ElementaryEvent:
    kind: object            # ChangeKind
    locus: object           # Ownership | Place
    obj: str
    delta: object           # Quantity; Known in all supported problems
    verb: str = field(compare=False, default="")
    seq: int = field(compare=False, default=-1)
    sentence: int = field(compare=False, default=-1)
    origin: int = field(compare=False, default=-1)  # index into raw_events


def _locus_for(entity) -> object:
    ent = Entity(entity.name, entity.kind)  # cardinality never enters a locus
    if ent.kind is EntityKind.PROPER or ent.kind is EntityKind.CLASS:
        return ent
    raise ValueError(f"cannot build a locus from {entity!r}")


def _ownership(entity):
    return Ownership(_locus_for(entity))


def _place(entity):
    return Place(_locus_for(entity))


def _elementary(kind, event, role):
    """One elementary event of `event`, located at the given participant."""
    participant = {
        Role.AGENT: event.agent,
        Role.RECIPIENT: event.recipient,
        Role.SOURCE: event.source,
        Role.DESTINATION: event.destination,
    }[role]
    if participant is None:
        return None
    locus = (_ownership(participant) if kind.locus_kind is LocusKind.OWNERSHIP
             else _place(participant))
    return ElementaryEvent(kind, locus, event.obj, event.amount,
                           verb=event.verb, sentence=event.sentence)


def split_compound(event, lexicon) -> list:
    """Elementary events of a surface event.

    Compound verbs emit one event per component whose participant is named
    in the sentence; components with unnamed participants are dropped.
    Elementary verbs emit exactly one event.  Every emitted event shares
    the surface event's object and amount.
    """
    classification = lexicon.classify_verb(event.verb)
    if classification is None:
        raise UnknownVerb(event.verb)
    if isinstance(classification, Compound):
        out = []
        for kind, role in classification.components:
            elem = _elementary(kind, event, role)
            if elem is not None:
                out.append(elem)
        return out
    if not isinstance(classification, Elementary):
        raise UnknownVerb(event.verb)
    kind = classification.kind
    if kind.locus_kind is LocusKind.PLACE:
        named = event.destination if kind.direction is Direction.IN else event.source
        if named is None and kind.direction in (Direction.CREATE, Direction.TERMINATE):
            named = event.destination or event.source
        if named is not None:
            if kind.direction in (Direction.CREATE, Direction.TERMINATE):
                return [ElementaryEvent(kind, _place(named), event.obj, event.amount,
                                        verb=event.verb, sentence=event.sentence)]
            elem = _elementary(kind, event,
                               Role.DESTINATION if kind.direction is Direction.IN
                               else Role.SOURCE)
            return [elem]
        # creation/termination without a named place affects the agent's holdings
        if kind.direction in (Direction.CREATE, Direction.TERMINATE) \
                and event.agent is not None:
            from .lexicon import ChangeKind
            own_kind = ChangeKind(kind.direction, LocusKind.OWNERSHIP)
            return [ElementaryEvent(own_kind, _ownership(event.agent), event.obj,
                                    event.amount, verb=event.verb,
                                    sentence=event.sentence)]
        raise MissingParticipant(event.verb, "place")
    # ownership verbs locate the change at the subject
    if event.agent is None:
        raise MissingParticipant(event.verb, "owner")
    return [ElementaryEvent(kind, _ownership(event.agent), event.obj, event.amount,
                            verb=event.verb, sentence=event.sentence)]


_CANONICAL_VERB = {
    Direction.IN: "transferred",
    Direction.OUT: "transferred",
    Direction.CREATE: "created",
    Direction.TERMINATE: "terminated",
}


def canonicalize(event, lexicon) -> str:
    """Passive sentence with the counted object as subject.

    This is the shape the middle line of every change formula takes, so a
    change event reads uniformly no matter which verb produced it.
    """
    n = event.delta.value if isinstance(event.delta, Known) else event.delta
    count = n if isinstance(n, int) else render_quantity(event.delta)
    objs = lexicon.pluralize(event.obj, n if isinstance(n, int) else None)
    verb = _CANONICAL_VERB[event.kind.direction]
    if event.kind.locus_kind is LocusKind.PLACE:
        place = f"the {event.locus.place.name}"
        tail = {
            Direction.IN: f"into {place}",
            Direction.OUT: f"out of {place}",
            Direction.CREATE: f"in {place}",
            Direction.TERMINATE: f"in {place}",
        }[event.kind.direction]
    else:
        owner = event.locus.owner.name
        tail = {
            Direction.IN: f"to {owner}",
            Direction.OUT: f"from {owner}",
            Direction.CREATE: f"by {owner}",
            Direction.TERMINATE: f"by {owner}",
        }[event.kind.direction]
    return f"{count} {objs} were {verb} {tail}"


def render_elementary(event, lexicon) -> str:
    """Short active form for ownership changes, canonical form otherwise."""
    if event.kind.locus_kind is LocusKind.OWNERSHIP:
        verb = {
            Direction.IN: "got",
            Direction.OUT: "forfeited",
            Direction.CREATE: "created",
            Direction.TERMINATE: "terminated",
        }[event.kind.direction]
        n = event.delta.value
        return (f"{event.locus.owner.name} {verb} {n} "
                f"{lexicon.pluralize(event.obj, n)}")
    return canonicalize(event, lexicon)


class PropositionStore:
    """All propositions of one problem, plus the fresh-variable supply.

    The store is built once per problem and is read-only afterwards; at
    most one state exists per (locus, object, time) key, and exactly one
    quantity in the whole store is the Question.
    """

    def __init__(self, lexicon):
        self.lexicon = lexicon
        self.states = {}          # StateKey -> Quantity
        self.state_meta = {}      # StateKey -> ("stated"|"introduced", sentence)
        self.entries = []         # ("state", key) | ("event", index) in text order
        self.raw_events = []      # surface EventProps
        self.events = []          # ElementaryEvents, text order
        self.relations = []       # CompareProp | CombineProp, text order
        self._var_count = 0

    # -- construction -----------------------------------------------------

    def add_state(self, prop):
        key = prop.key
        existing = self.states.get(key)
        if existing is not None:
            if existing == prop.quantity:
                return key
            raise DataConflict(key, existing, prop.quantity)
        self.states[key] = prop.quantity
        self.state_meta[key] = ("stated", prop.sentence)
        self.entries.append(("state", key))
        return key

    def add_event(self, prop):
        index = len(self.raw_events)
        self.raw_events.append(prop)
        self.entries.append(("event", index))
        for elem in split_compound(prop, self.lexicon):
            self.events.append(ElementaryEvent(
                elem.kind, elem.locus, elem.obj, elem.delta,
                verb=elem.verb, seq=len(self.events), sentence=elem.sentence,
                origin=index,
            ))

    def fresh_var(self) -> Var:
        name = "X" if self._var_count == 0 else f"X{self._var_count}"
        self._var_count += 1
        return Var(name)

    def lookup_or_introduce(self, locus, obj, time) -> StateKey:
        """Existing state for the key, or a new one holding a fresh unknown.

        Lookup never unifies across different times, loci or object
        classes; repeated calls with one key return the same state.
        """
        key = StateKey(locus, obj, time)
        if key not in self.states:
            self.states[key] = self.fresh_var()
            self.state_meta[key] = ("introduced", -1)
            self.entries.append(("state", key))
        return key

    def quantity(self, key):
        return self.states[key]

    # -- queries -----------------------------------------------------------

    def has_question(self) -> bool:
        return self.question_description() is not None

    def question_description(self):
        for key, q in self.states.items():
            if isinstance(q, Question):
                return f"amount of {key.obj} ({render_locus(key.locus)}, {key.time.value})"
        for rel in self.relations:
            if isinstance(rel, CombineProp) and isinstance(rel.total, Question):
                return f"total {rel.obj} altogether"
        return None

    def proper_owners_of(self, obj):
        """Proper-name owners holding any state of the object class, in order."""
        seen, owners = set(), []
        for kind, ref in self.entries:
            if kind != "state":
                continue
            key = ref
            if key.obj == obj and isinstance(key.locus, Ownership) \
                    and key.locus.owner.kind is EntityKind.PROPER \
                    and key.locus.owner.name not in seen:
                seen.add(key.locus.owner.name)
                owners.append(key.locus.owner)
        return owners

    # -- rendering -----------------------------------------------------------

    def render_propositions(self, split=False) -> list:
        """Text-order proposition list, mirroring the trace table layout."""
        lines = []
        for kind, ref in self.entries:
            if kind == "state":
                lines.append(self._state_sentence(ref))
            else:
                if split:
                    for elem in self.events:
                        if elem.origin == ref:
                            lines.append(render_elementary(elem, self.lexicon))
                else:
                    lines.append(self._event_sentence(self.raw_events[ref]))
        return lines

    def _state_sentence(self, key) -> str:
        q = self.states[key]
        count = render_quantity(q)
        n = q.value if isinstance(q, Known) else None
        objs = self.lexicon.pluralize(key.obj, n)
        if isinstance(key.locus, Place):
            verb = "were" if key.time is TimePoint.INITIAL else "are"
            return f"There {verb} {count} {objs} in the {key.locus.place.name}"
        verb = "had" if key.time is TimePoint.INITIAL else "has"
        return f"{key.locus.owner.name} {verb} {count} {objs}"

    def _event_sentence(self, event) -> str:
        from .parser import render_proposition

        return render_proposition(event, self.lexicon).rstrip(".")


def build_store(props, lexicon) -> PropositionStore:
    store = PropositionStore(lexicon)
    for prop in props:
        if isinstance(prop, StateProp):
            store.add_state(prop)
        elif isinstance(prop, EventProp):
            store.add_event(prop)
        elif isinstance(prop, (CompareProp, CombineProp)):
            store.relations.append(prop)
        else:
            raise TypeError(f"not a proposition: {prop!r}")
    return store


@dataclass
class Timeline:
    """Ordered chain of changes on one (locus, object), between endpoints.

    Events are kept in a canonical order (additions before removals, then
    by amount and verb) so that representations do not depend on sentence
    order; with +/- deltas the final amount is the same either way.
    """

    locus: object
    obj: str
    events: list
    initial: StateKey | None
    final: StateKey | None
    intermediates: list

    @property
    def endpoints_present(self) -> bool:
        return self.initial is not None and self.final is not None


def _canonical_order(event):
    additions_first = 0 if event.kind.direction in (Direction.IN, Direction.CREATE) else 1
    delta = event.delta.value if isinstance(event.delta, Known) else -1
    return (additions_first, delta, event.verb, event.seq)


def build_timelines(store) -> list:
    """One timeline per (locus, object) pair that has at least one event.

    Endpoints come from the store when present (Question and unknown
    states count as present); intermediate unknowns are allocated between
    consecutive events of a chain.
    """
    groups = {}
    order = []
    for event in store.events:
        key = (event.locus, event.obj)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(event)
    timelines = []
    for locus, obj in order:
        events = sorted(groups[(locus, obj)], key=_canonical_order)
        initial = StateKey(locus, obj, TimePoint.INITIAL)
        final = StateKey(locus, obj, TimePoint.FINAL)
        timelines.append(Timeline(
            locus, obj, events,
            initial if initial in store.states else None,
            final if final in store.states else None,
            [store.fresh_var() for _ in events[1:]],
        ))
    return timelines
