"""End-to-end run of one problem: parse, represent, instantiate, solve."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .discourse import build_store, build_timelines
from .lexicon import load_default_lexicon
from .parser import parse_problem
from .schema_engine import Strategy, build_lsi, initial_lsi
from .solver import Contradiction, Insufficient, Invalid, Solved, propagate


@dataclass
class ProblemResult:
    """Everything one run produced, for reports and for tests."""

    text: str
    strategy: Strategy
    propositions: list        # rendered, after compare/combine instantiation
    propositions_split: list  # same list with events split into elementary ones
    raw_propositions: list
    store: object
    timelines: list
    lsi: list
    skipped: list
    solve: object             # SolveResult
    timing_ms: float = field(default=0.0)

    @property
    def verdict(self):
        return self.solve.verdict

    @property
    def verdict_name(self) -> str:
        return self.solve.verdict_name

    @property
    def answer(self):
        return self.solve.question_value if isinstance(self.verdict, Solved) else None

    @property
    def equations(self) -> list:
        return [si.equation for si in self.lsi]

    def rendered_equations(self) -> list:
        return [eq.render() for eq in self.equations]

    def rendered_lsi(self) -> list:
        return [si.render() for si in self.lsi]


def run_problem(text, lexicon=None, strategy=Strategy.CAUTIOUS) -> ProblemResult:
    """Understand and solve one problem text.

    Raises the parser/discourse errors on texts outside the controlled
    grammar; once a representation exists, every outcome (including
    contradictions and insufficiency) is a verdict, not an exception.
    """
    lex = lexicon or load_default_lexicon()
    start = time.perf_counter()
    props = parse_problem(text, lex)
    store = build_store(props, lex)
    # Comparisons and combines instantiate first (introducing their unknown
    # states); timelines then see those states as endpoints.
    first = initial_lsi(store, lex)
    timelines = build_timelines(store)
    lsi, skipped = build_lsi(store, timelines, strategy, lex, first=first)
    # Snapshot the proposition lists after relation instantiation but with
    # any strategy-introduced endpoint states included, in text order.
    rendered = store.render_propositions(split=False)
    rendered_split = store.render_propositions(split=True)
    solve = propagate(lsi, store)
    elapsed = (time.perf_counter() - start) * 1000.0
    return ProblemResult(
        text=text,
        strategy=strategy,
        propositions=rendered,
        propositions_split=rendered_split,
        raw_propositions=props,
        store=store,
        timelines=timelines,
        lsi=lsi,
        skipped=skipped,
        solve=solve,
        timing_ms=elapsed,
    )


def verdict_dict(result) -> dict:
    v = result.verdict
    out = {"verdict": result.verdict_name}
    if isinstance(v, Solved):
        out["answer"] = v.answer
    elif isinstance(v, Insufficient):
        out["unresolved"] = list(v.unresolved)
    elif isinstance(v, Contradiction):
        out["equation"] = v.equation
        out["detail"] = v.detail
    elif isinstance(v, Invalid):
        out["equation"] = v.equation
        out["value"] = v.value
    return out


def result_to_dict(result) -> dict:
    """Stable JSON-ready form of a result (schema: docs/report-schema.md)."""
    out = {
        "strategy": result.strategy.value,
        "propositions": {
            "pre_split": result.propositions,
            "post_split": result.propositions_split,
        },
        "lsi": [
            {
                "kind": si.kind,
                "rendered": si.render(),
                "slots": [[role, _slot_value(q)] for role, q in si.slots],
                "equation": si.equation.render(),
            }
            for si in result.lsi
        ],
        "equations": result.rendered_equations(),
        "skipped": [
            {
                "kinds": list(sk.kinds),
                "locus": _locus_label(sk.locus),
                "object": sk.obj,
                "missing": list(sk.missing),
            }
            for sk in result.skipped
        ],
        "binding": dict(sorted(result.solve.binding.items())),
        "trace": list(result.solve.trace),
        "timing_ms": round(result.timing_ms, 3),
    }
    out.update(verdict_dict(result))
    return out


def _slot_value(q):
    from .quantity import Known, render_quantity

    return q.value if isinstance(q, Known) else render_quantity(q)


def _locus_label(locus):
    from .parser import render_locus

    return render_locus(locus)


def render_text_report(result, trace=False) -> str:
    """Human-readable report; with trace, a two-column table of the
    propositions against the recorded schema instantiations, then the
    solver's steps."""
    lines = []
    if trace:
        props = result.propositions
        insts = result.rendered_lsi()
        width = max([len(p) for p in props] + [24]) + 2
        lines.append(f"{'Propositions':<{width}}| Schema Instantiations")
        lines.append("-" * width + "+" + "-" * 40)
        for i in range(max(len(props), len(insts))):
            left = props[i] if i < len(props) else ""
            right = insts[i] if i < len(insts) else ""
            lines.append(f"{left:<{width}}| {right}".rstrip())
        lines.append("")
        lines.append("After splitting compound events:")
        for p in result.propositions_split:
            lines.append(f"  {p}")
        if result.skipped:
            lines.append("")
            lines.append("Not recorded (cautious strategy):")
            for sk in result.skipped:
                lines.append(f"  {sk.render()}")
        lines.append("")
        lines.append("Equations:")
        for eq in result.rendered_equations():
            lines.append(f"  {eq}")
        if result.solve.trace:
            lines.append("")
            lines.append("Propagation:")
            for step in result.solve.trace:
                lines.append(f"  {step}")
        lines.append("")
    v = verdict_dict(result)
    if result.verdict_name == "solved":
        lines.append(f"Answer: {v['answer']}")
    elif result.verdict_name == "insufficient":
        unresolved = ", ".join(v["unresolved"]) or "the question"
        lines.append(f"Insufficient data: could not determine {unresolved}")
    elif result.verdict_name == "contradiction":
        lines.append(f"Contradiction in the problem data: {v['equation']} "
                     f"({v['detail']})")
    else:
        lines.append(f"Invalid amount derived: {v['equation']} "
                     f"gives {v['value']}")
    return "\n".join(lines)
