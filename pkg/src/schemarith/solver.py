"""Fixpoint propagation over the a + b = c constraint network.

Every recorded relation normalizes to one equation c = a + b over three
amount slots.  Propagation repeatedly resolves any equation with exactly
one unbound slot; it terminates with the question's value, a report of
which unknowns stayed free, a contradiction between stated amounts, or a
derived negative amount.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .quantity import Known, Question, Var, render_quantity


class MalformedLSI(ValueError):
    pass


@dataclass(frozen=True)
class Equation:
    """c = a + b. Removal relations are stored in added form."""

    a: object
    b: object
    c: object
    origin: str = field(compare=False, default="")

    def render(self) -> str:
        return (f"{render_quantity(self.c)} = "
                f"{render_quantity(self.a)} + {render_quantity(self.b)}")

    def quantities(self):
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class Solved:
    answer: int


@dataclass(frozen=True)
class Insufficient:
    unresolved: tuple


@dataclass(frozen=True)
class Contradiction:
    equation: str
    detail: str


@dataclass(frozen=True)
class Invalid:
    equation: str
    value: int


@dataclass
class SolveResult:
    verdict: object
    binding: dict
    question_value: int | None
    trace: list

    @property
    def verdict_name(self) -> str:
        return type(self.verdict).__name__.lower()


class _State:
    def __init__(self):
        self.binding = {}
        self.question_value = None

    def value_of(self, q):
        if isinstance(q, Known):
            return q.value
        if isinstance(q, Var):
            return self.binding.get(q.name)
        if isinstance(q, Question):
            return self.question_value
        raise MalformedLSI(f"not a quantity: {q!r}")

    def bind(self, q, value):
        if isinstance(q, Var):
            self.binding[q.name] = value
        else:
            self.question_value = value


def _free_vars(equations, state):
    names = []
    for eq in equations:
        for q in eq.quantities():
            if isinstance(q, Var) and q.name not in state.binding \
                    and q.name not in names:
                names.append(q.name)
    return names


def propagate(lsi, store) -> SolveResult:
    """Run the equations of a schema-instantiation list to fixpoint.

    Verdict precedence at fixpoint: a violated fully-known equation wins
    (contradiction), then a derived negative amount, then a bound question
    (solved), otherwise insufficiency.  Negative derivations are recorded
    but never bound, and no slot is ever rebound, so the verdict does not
    depend on equation order.
    """
    if not store.has_question():
        raise MalformedLSI("the problem has no question quantity")
    equations = [si.equation for si in lsi]
    state = _State()
    trace = []
    contradictions = []
    invalids = []
    flagged = set()
    changed = True
    while changed:
        changed = False
        for idx, eq in enumerate(equations):
            vals = [state.value_of(q) for q in eq.quantities()]
            unknowns = [i for i, v in enumerate(vals) if v is None]
            if not unknowns:
                if vals[0] + vals[1] != vals[2] and idx not in flagged:
                    flagged.add(idx)
                    contradictions.append(Contradiction(
                        eq.render(),
                        f"{vals[0]} + {vals[1]} = {vals[0] + vals[1]}, "
                        f"but {vals[2]} is required",
                    ))
                continue
            if len(unknowns) > 1:
                continue
            slot = unknowns[0]
            a, b, c = vals
            if slot == 0:
                value = c - b
            elif slot == 1:
                value = c - a
            else:
                value = a + b
            target = eq.quantities()[slot]
            if value < 0:
                if idx not in flagged:
                    flagged.add(idx)
                    invalids.append(Invalid(eq.render(), value))
                continue
            state.bind(target, value)
            known = ", ".join(
                f"{q.name} = {state.value_of(q)}"
                for q in eq.quantities()
                if isinstance(q, Var) and q is not target
            )
            suffix = f" with {known}" if known else ""
            trace.append(
                f"{eq.render()}{suffix} ⇒ {render_quantity(target)} = {value}"
            )
            changed = True
    if contradictions:
        verdict = contradictions[0]
    elif invalids:
        verdict = invalids[0]
    elif state.question_value is not None:
        verdict = Solved(state.question_value)
    else:
        verdict = Insufficient(tuple(_free_vars(equations, state)))
    return SolveResult(verdict, dict(state.binding), state.question_value, trace)


def verify(lsi, binding, question_value=None) -> bool:
    """True iff every equation holds exactly under a total binding.

    `binding` maps unknown names to values; the question's value may ride
    along in the map under "?" or be passed separately.  Any unbound slot
    makes the check fail.
    """
    if question_value is None:
        question_value = binding.get("?")

    def value_of(q):
        if isinstance(q, Known):
            return q.value
        if isinstance(q, Var):
            return binding.get(q.name)
        if isinstance(q, Question):
            return question_value
        return None

    for si in lsi:
        eq = si.equation
        vals = [value_of(q) for q in eq.quantities()]
        if any(v is None for v in vals):
            return False
        if vals[0] + vals[1] != vals[2]:
            return False
    return True
