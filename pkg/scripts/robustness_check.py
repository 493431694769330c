#!/usr/bin/env python3
"""Stress the stability of answers under text perturbation.

Every pronoun-free corpus problem is re-solved under N random sentence
transpositions and under insertion of irrelevant state sentences about
fresh entities; any change of verdict or answer is reported.  Problems
with pronouns are skipped because transposition can strip a pronoun of
its antecedent, which is a property of the text, not of the solver.
"""
import argparse
import random
import re

from schemarith.corpus import CORPUS
from schemarith.lexicon import load_default_lexicon
from schemarith.pipeline import run_problem

EXTRANEOUS = [
    "Alice had 9 pencils.",
    "There were 8 stones in the garden.",
    "Bob has 6 marbles.",
]


def sentences_of(text):
    return [s.strip() for s in re.findall(r"[^.?!]+[.?!]", text)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rounds", type=int, default=20)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()
    lexicon = load_default_lexicon()
    rng = random.Random(args.seed)
    failures = 0
    for problem in CORPUS:
        if not problem.pronoun_free:
            print(f"{problem.id:<20} skipped (pronouns)")
            continue
        base = run_problem(problem.text, lexicon)
        expected = (base.verdict_name, base.answer)
        stable = 0
        for _ in range(args.rounds):
            parts = sentences_of(problem.text)
            rng.shuffle(parts)
            for extra in EXTRANEOUS:
                parts.insert(rng.randrange(len(parts) + 1), extra)
            result = run_problem(" ".join(parts), lexicon)
            if (result.verdict_name, result.answer) == expected:
                stable += 1
            else:
                failures += 1
        print(f"{problem.id:<20} {stable}/{args.rounds} perturbations stable "
              f"(answer {base.answer if base.answer is not None else base.verdict_name})")
    print("\nall stable" if failures == 0 else f"\n{failures} UNSTABLE runs")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
