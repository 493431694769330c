"""Schema instantiation: comparisons, combines, and change-formula matching.

A schema relates three amounts by a + b = c.  Comparisons and combine
statements instantiate directly from their propositions.  Change schemas
instantiate through formulas: each of the eight change kinds owns one
three-line formula whose middle line is the canonicalized event and whose
outer lines are the initial and final amounts, searched for among the
problem's states.  Under the cautious strategy a change instantiation is
recorded only when all of its amounts were found; the total strategy
records every candidate, inventing unknowns for missing amounts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .discourse import PropositionStore, Timeline, canonicalize
from .lexicon import ChangeKind, Direction, LocusKind
from .parser import (
    CombineProp,
    CompareProp,
    EntityKind,
    Ownership,
    StateKey,
    THEY,
    render_locus,
)
from .quantity import QUESTION, Known, Question, TimePoint, render_quantity
from .solver import Equation


class UnresolvableCombine(Exception):
    def __init__(self, reason):
        super().__init__(f"cannot resolve combine statement: {reason}")


class Strategy(Enum):
    CAUTIOUS = "cautious"
    TOTAL = "total"


# ---------------------------------------------------------------------------
# the eight change formulas


@dataclass(frozen=True)
class ChangeFormula:
    kind: ChangeKind
    name: str
    line1: str  # initial-state pattern
    line2: str  # change pattern (canonical passive)
    line3: str  # final-state pattern


def _formula(kind) -> ChangeFormula:
    d, lk = kind.direction, kind.locus_kind
    if d is Direction.IN:
        name = "Transfer-In-Place" if lk is LocusKind.PLACE else "Transfer-In-Ownership"
    elif d is Direction.OUT:
        name = "Transfer-Out-Place" if lk is LocusKind.PLACE else "Transfer-Out-Ownership"
    elif d is Direction.CREATE:
        name = f"Creation ({lk.value})"
    else:
        name = f"Termination ({lk.value})"
    mid_verb = {
        Direction.IN: "transferred",
        Direction.OUT: "transferred",
        Direction.CREATE: "created",
        Direction.TERMINATE: "terminated",
    }[d]
    if lk is LocusKind.PLACE:
        tail = {
            Direction.IN: "into the place",
            Direction.OUT: "out of the place",
            Direction.CREATE: "in the place",
            Direction.TERMINATE: "in the place",
        }[d]
        return ChangeFormula(
            kind, name,
            "There were X objects in the place.",
            f"Y objects were {mid_verb} {tail}.",
            "There are Z objects in the place now.",
        )
    tail = {
        Direction.IN: "to the owner",
        Direction.OUT: "from the owner",
        Direction.CREATE: "by the owner",
        Direction.TERMINATE: "by the owner",
    }[d]
    return ChangeFormula(
        kind, name,
        "The owner had R objects.",
        f"S objects were {mid_verb} {tail}.",
        "The owner has T objects now.",
    )


#: One formula per admissible change kind, eight in all.
FORMULAS = {
    ChangeKind(d, lk): _formula(ChangeKind(d, lk))
    for d in Direction
    for lk in LocusKind
}


@dataclass
class FormulaInstantiation:
    """A change formula with the event's values substituted in.

    The middle slot (the change amount) is always bound, coming straight
    from the triggering event; the outer slots hold whatever states were
    found for the event's locus and object.
    """

    formula: ChangeFormula
    locus: object
    obj: str
    x: object | None   # initial amount, None when no state was found
    y: object          # change amount, always bound
    z: object | None   # final amount

    @property
    def line1_matched(self) -> bool:
        return self.x is not None

    @property
    def line3_matched(self) -> bool:
        return self.z is not None

    @property
    def complete(self) -> bool:
        return self.line1_matched and self.line3_matched

    def missing(self):
        out = []
        if not self.line1_matched:
            out.append("initial")
        if not self.line3_matched:
            out.append("final")
        return tuple(out)


def match_change_formula(event, store, initial_key=None, final_key=None):
    """Instantiate the single formula of an elementary event's change kind.

    Binds locus, object and change amount from the event; the outer lines
    are marked matched iff the given endpoint states exist (stated,
    unknown, and question amounts all count as found).
    """
    formula = FORMULAS[event.kind]
    x = store.quantity(initial_key) if initial_key is not None else None
    z = store.quantity(final_key) if final_key is not None else None
    return FormulaInstantiation(formula, event.locus, event.obj, x, event.delta, z)


# ---------------------------------------------------------------------------
# schema instantiations


_DELTA_WORD = {
    Direction.IN: "in",
    Direction.OUT: "out",
    Direction.CREATE: "created",
    Direction.TERMINATE: "terminated",
}


def _render_instantiation(kind, slots) -> str:
    if kind in ("More", "Less"):
        (_, left), (_, right), (_, diff) = slots
        return (f"{kind} ({render_quantity(left)}, "
                f"than {render_quantity(right)}, by {render_quantity(diff)})")
    if kind == "Combine":
        (_, p1), (_, p2), (_, total) = slots
        return (f"Combine ({render_quantity(p1)}, plus {render_quantity(p2)}, "
                f"altogether {render_quantity(total)})")
    parts = ", ".join(f"{role} {render_quantity(q)}" for role, q in slots)
    return f"{kind} ({parts})"


@dataclass(frozen=True)
class SchemaInstantiation:
    kind: str                       # formula name, "More", "Less" or "Combine"
    slots: tuple                    # ((role, Quantity), ...)
    equation: Equation
    locus: object = field(compare=False, default=None)
    obj: str = field(compare=False, default="")

    def render(self) -> str:
        return _render_instantiation(self.kind, self.slots)


def _make_instantiation(kind, slots, a, b, c, locus=None, obj=""):
    equation = Equation(a, b, c, origin=_render_instantiation(kind, slots))
    return SchemaInstantiation(kind, slots, equation, locus, obj)


def change_instantiation(event, before, after) -> SchemaInstantiation:
    """Schema instantiation of one elementary event between two amounts."""
    direction = event.kind.direction
    name = FORMULAS[event.kind].name
    slots = (
        ("initially", before),
        (_DELTA_WORD[direction], event.delta),
        ("finally", after),
    )
    if direction in (Direction.IN, Direction.CREATE):
        a, b, c = before, event.delta, after
    else:
        # final = initial - delta, stored as initial = final + delta
        a, b, c = after, event.delta, before
    return _make_instantiation(name, slots, a, b, c, event.locus, event.obj)


def instantiate_compare(comp, store) -> SchemaInstantiation:
    """A More/Less instantiation; unseen sides get fresh unknown states."""
    left_key = store.lookup_or_introduce(comp.left.locus, comp.left.obj, comp.left.time)
    right_key = store.lookup_or_introduce(comp.right.locus, comp.right.obj,
                                          comp.right.time)
    left = store.quantity(left_key)
    right = store.quantity(right_key)
    slots = (("left", left), ("right", right), ("by", comp.diff))
    if comp.direction == "more":
        return _make_instantiation("More", slots, right, comp.diff, left)
    return _make_instantiation("Less", slots, left, comp.diff, right)


def instantiate_combine(comb, store, lexicon) -> list:
    """Combine instantiations for a statement or question.

    State combines resolve their parts as states at the stated time.
    Event combines take the amounts of gaining-ownership events whose
    agent class belongs to the asked superset.  More than two parts chain
    through partial-sum unknowns, one instantiation per added part.
    """
    if comb.context == "event":
        members = lexicon.superset_members(comb.group.name)
        if not members:
            raise UnresolvableCombine(
                f"{comb.group.name!r} has no configured member classes")
        gaining = ChangeKind(Direction.IN, LocusKind.OWNERSHIP)
        parts = [
            ev.delta for ev in store.events
            if ev.kind == gaining and isinstance(ev.locus, Ownership)
            and ev.locus.owner.kind is EntityKind.CLASS
            and ev.locus.owner.name in members and ev.obj == comb.obj
        ]
    elif comb.group is THEY:
        owners = store.proper_owners_of(comb.obj)
        parts = [
            store.quantity(store.lookup_or_introduce(Ownership(o), comb.obj, comb.time))
            for o in owners
        ]
    else:
        parts = [
            store.quantity(store.lookup_or_introduce(key.locus, key.obj, key.time))
            for key in comb.parts
        ]
    if len(parts) < 2:
        raise UnresolvableCombine(f"found {len(parts)} part(s), need at least 2")
    out = []
    running = parts[0]
    for i, part in enumerate(parts[1:], start=2):
        total = comb.total if i == len(parts) else store.fresh_var()
        slots = (("part", running), ("part", part), ("altogether", total))
        out.append(_make_instantiation("Combine", slots, running, part, total))
        running = total
    return out


# ---------------------------------------------------------------------------
# the list of schema instantiations (LSI)


@dataclass(frozen=True)
class SkippedSchema:
    """A change candidate the cautious strategy declined to record."""

    kinds: tuple      # formula names along the timeline
    locus: object
    obj: str
    missing: tuple    # which endpoint amounts were absent

    def render(self) -> str:
        names = " + ".join(self.kinds)
        now = " and ".join(self.missing)
        return (f"{names} for {render_locus(self.locus)}'s {self.obj}: "
                f"{now} amount not found, not recorded")


def initial_lsi(store, lexicon) -> list:
    """Compare and combine instantiations, in text order.

    These are recorded unconditionally; only change schemas pass through
    the strategy gate.
    """
    out = []
    for rel in store.relations:
        if isinstance(rel, CompareProp):
            out.append(instantiate_compare(rel, store))
        else:
            out.extend(instantiate_combine(rel, store, lexicon))
    return out


def _timeline_amounts(timeline, store):
    # Missing endpoints are introduced as fresh unknown states; the
    # cautious gate never lets a timeline with missing endpoints reach here.
    if timeline.initial is not None:
        start = store.quantity(timeline.initial)
    else:
        key = store.lookup_or_introduce(timeline.locus, timeline.obj,
                                        TimePoint.INITIAL)
        start = store.quantity(key)
    if timeline.final is not None:
        end = store.quantity(timeline.final)
    else:
        key = store.lookup_or_introduce(timeline.locus, timeline.obj,
                                        TimePoint.FINAL)
        end = store.quantity(key)
    return [start] + list(timeline.intermediates) + [end]


def build_lsi(store, timelines, strategy, lexicon, first=None):
    """Extend the initial LSI with change instantiations per the strategy.

    `first` is the precomputed initial LSI; pass it when the compare and
    combine unknowns must be introduced before timelines are built (the
    normal pipeline order).  Cautious: a timeline contributes its chain
    only when both endpoint amounts are present among the propositions.
    Total: every timeline contributes, with fresh unknowns standing in
    for missing endpoints.  A chain of k events contributes k
    instantiations linked through its intermediate unknowns.
    """
    lsi = list(first) if first is not None else initial_lsi(store, lexicon)
    skipped = []
    for timeline in timelines:
        if strategy is Strategy.CAUTIOUS and not timeline.endpoints_present:
            missing = []
            if timeline.initial is None:
                missing.append("initial")
            if timeline.final is None:
                missing.append("final")
            skipped.append(SkippedSchema(
                tuple(FORMULAS[ev.kind].name for ev in timeline.events),
                timeline.locus, timeline.obj, tuple(missing),
            ))
            continue
        amounts = _timeline_amounts(timeline, store)
        for i, event in enumerate(timeline.events):
            lsi.append(change_instantiation(event, amounts[i], amounts[i + 1]))
    return lsi, skipped
