#!/usr/bin/env python3
"""Compare the cautious and total recording strategies over the corpus.

For every bundled problem, prints the number of schema instantiations
each strategy records, how many are change schemas, and both answers.
The cautious strategy's representation stays small exactly on the
problems that carry extraneous events.
"""
import argparse

from schemarith.corpus import CORPUS
from schemarith.lexicon import load_default_lexicon
from schemarith.pipeline import run_problem
from schemarith.schema_engine import Strategy


def change_count(result):
    return sum(1 for si in result.lsi if si.kind not in ("More", "Less", "Combine"))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--verbose", action="store_true",
                        help="print each strategy's instantiation list")
    args = parser.parse_args()
    lexicon = load_default_lexicon()
    print(f"{'problem':<20} {'cautious':>9} {'total':>6} {'delta':>6}  answers")
    for problem in CORPUS:
        cautious = run_problem(problem.text, lexicon, Strategy.CAUTIOUS)
        total = run_problem(problem.text, lexicon, Strategy.TOTAL)
        delta = len(total.lsi) - len(cautious.lsi)
        answers = f"{cautious.answer} / {total.answer}" \
            if cautious.answer is not None else \
            f"{cautious.verdict_name} / {total.verdict_name}"
        print(f"{problem.id:<20} {len(cautious.lsi):>9} {len(total.lsi):>6} "
              f"{delta:>+6}  {answers}")
        if args.verbose:
            for label, result in (("cautious", cautious), ("total", total)):
                print(f"  {label}:")
                for line in result.rendered_lsi():
                    print(f"    {line}")
    print("\nchange instantiations only:")
    for problem in CORPUS:
        cautious = run_problem(problem.text, lexicon, Strategy.CAUTIOUS)
        total = run_problem(problem.text, lexicon, Strategy.TOTAL)
        print(f"{problem.id:<20} cautious={change_count(cautious)} "
              f"total={change_count(total)}")


if __name__ == "__main__":
    main()
