"""Command-line front end.

    schemarith solve FILE... [--trace] [--strategy cautious|total] [--format text|json]
    schemarith corpus [--strategy ...] [--format ...]

Exit codes: 0 solved, 1 I/O or internal error, 2 text not understood
(parse failure, no question), 3 insufficient data, 4 contradictory or
invalid data.  SCHEMARITH_LEXICON overrides the embedded lexicon; the
--lexicon flag overrides both.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .corpus import CORPUS
from .discourse import DataConflict, MissingParticipant, UnknownVerb
from .lexicon import load_default_lexicon, load_lexicon_file
from .parser import ProblemTextError
from .pipeline import render_text_report, result_to_dict, run_problem
from .schema_engine import Strategy, UnresolvableCombine
from .solver import MalformedLSI

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_UNDERSTOOD = 2
EXIT_INSUFFICIENT = 3
EXIT_INCONSISTENT = 4

_VERDICT_EXIT = {
    "solved": EXIT_OK,
    "insufficient": EXIT_INSUFFICIENT,
    "contradiction": EXIT_INCONSISTENT,
    "invalid": EXIT_INCONSISTENT,
}


@dataclass
class RunConfig:
    inputs: list
    strategy: Strategy = Strategy.CAUTIOUS
    format: str = "text"
    trace: bool = False
    lexicon_path: str | None = None


def _load_lexicon(config):
    path = config.lexicon_path or os.environ.get("SCHEMARITH_LEXICON")
    if path:
        return load_lexicon_file(path)
    return load_default_lexicon()


def _blocks(text):
    """Problems in a file: one per blank-line-separated block."""
    blocks = [b.strip() for b in text.split("\n\n")]
    return [b for b in blocks if b]


def _run_text(text, lexicon, config):
    """(exit_code, dict, rendered_text) for one problem text."""
    try:
        result = run_problem(text, lexicon, config.strategy)
    except (ProblemTextError, UnknownVerb, MissingParticipant,
            UnresolvableCombine) as exc:
        return (EXIT_NOT_UNDERSTOOD,
                {"error": {"type": type(exc).__name__, "message": str(exc)}},
                f"Not understood: {exc}")
    except DataConflict as exc:
        return (EXIT_INCONSISTENT,
                {"error": {"type": "DataConflict", "message": str(exc)}},
                f"Contradiction in the problem data: {exc}")
    except MalformedLSI as exc:
        return (EXIT_ERROR,
                {"error": {"type": "MalformedLSI", "message": str(exc)}},
                f"Internal error: {exc}")
    code = _VERDICT_EXIT[result.verdict_name]
    return code, result_to_dict(result), render_text_report(result, config.trace)


def cmd_solve(config) -> int:
    try:
        lexicon = _load_lexicon(config)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report = {"format_version": FORMAT_VERSION, "problems": []}
    codes = []
    text_chunks = []
    for path in config.inputs:
        try:
            with open(path, encoding="utf-8") as fh:
                content = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        blocks = _blocks(content)
        if not blocks:
            blocks = [""]
        for i, block in enumerate(blocks, start=1):
            code, data, rendered = _run_text(block, lexicon, config)
            codes.append(code)
            data = {"source": f"{path}#{i}", **data}
            report["problems"].append(data)
            text_chunks.append(f"== {path}#{i}\n{rendered}"
                               if len(blocks) > 1 or len(config.inputs) > 1
                               else rendered)
    if config.format == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print("\n\n".join(text_chunks))
    bad = [c for c in codes if c != EXIT_OK]
    return bad[0] if bad else EXIT_OK


def run_corpus(problems, lexicon, strategy):
    """Run bundled problems and compare against their expectations.

    Returns (rows, all_match); with the total strategy each row also
    carries the cautious LSI size for the size-delta report.
    """
    rows = []
    all_match = True
    for problem in problems:
        row = {"id": problem.id,
               "expected_verdict": problem.expected_verdict,
               "expected_answer": problem.expected_answer}
        try:
            result = run_problem(problem.text, lexicon, strategy)
        except Exception as exc:  # a corpus problem must never fail to parse
            row.update({"verdict": "error", "answer": None,
                        "match": False, "error": str(exc)})
            all_match = False
            rows.append(row)
            continue
        row.update({
            "verdict": result.verdict_name,
            "answer": result.answer,
            "lsi_size": len(result.lsi),
            "timing_ms": round(result.timing_ms, 3),
        })
        if strategy is not Strategy.CAUTIOUS:
            cautious = run_problem(problem.text, lexicon, Strategy.CAUTIOUS)
            row["cautious_lsi_size"] = len(cautious.lsi)
            row["lsi_delta"] = len(result.lsi) - len(cautious.lsi)
        row["match"] = (row["verdict"] == problem.expected_verdict
                        and row["answer"] == problem.expected_answer)
        all_match = all_match and row["match"]
        rows.append(row)
    return rows, all_match


def cmd_corpus(config) -> int:
    try:
        lexicon = _load_lexicon(config)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    rows, all_match = run_corpus(CORPUS, lexicon, config.strategy)
    if config.format == "json":
        report = {
            "format_version": FORMAT_VERSION,
            "strategy": config.strategy.value,
            "problems": rows,
            "summary": _summary(rows),
        }
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        for row in rows:
            status = "ok" if row["match"] else "MISMATCH"
            expected = (row["expected_answer"]
                        if row["expected_answer"] is not None
                        else row["expected_verdict"])
            got = row["answer"] if row["answer"] is not None else row["verdict"]
            line = f"{row['id']:<20} expected {expected!s:<14} got {got!s:<14} {status}"
            if "lsi_delta" in row:
                line += (f"  lsi {row['cautious_lsi_size']} -> {row['lsi_size']}"
                         f" (+{row['lsi_delta']})")
            print(line)
        counts = _summary(rows)["verdicts"]
        print(f"\n{len(rows)} problems; verdicts: "
              + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
        print("all expectations met" if all_match else "EXPECTATION MISMATCH")
    return EXIT_OK if all_match else EXIT_ERROR


def _summary(rows):
    counts = {}
    for row in rows:
        counts[row["verdict"]] = counts.get(row["verdict"], 0) + 1
    return {"total": len(rows), "verdicts": counts,
            "matches": sum(1 for r in rows if r["match"])}


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="schemarith",
        description="Understand and solve controlled-English arithmetic "
                    "word problems with extraneous information.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve problems from text files")
    solve.add_argument("inputs", nargs="+", metavar="FILE",
                       help="UTF-8 text; blank lines separate problems")
    corpus = sub.add_parser("corpus", help="run the bundled evaluation corpus")
    for p in (solve, corpus):
        p.add_argument("--strategy", choices=["cautious", "total"],
                       default="cautious",
                       help="change-schema recording strategy (default: cautious)")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--lexicon", metavar="PATH", default=None,
                       help="lexicon file overriding the embedded tables")
    solve.add_argument("--trace", action="store_true",
                       help="show the representation and the solver's steps")
    return parser


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    config = RunConfig(
        inputs=getattr(args, "inputs", []),
        strategy=Strategy(args.strategy),
        format=args.format,
        trace=getattr(args, "trace", False),
        lexicon_path=args.lexicon,
    )
    if args.command == "solve":
        return cmd_solve(config)
    return cmd_corpus(config)


if __name__ == "__main__":
    sys.exit(main())
