"""Cross-check the event engines against brute-force oracles, then emit a
deterministic density table.

The event engines only ever look at radii where a window endpoint crosses
a block boundary.  The oracles look at every radius (and every window).
On a seeded corpus of random signals the two must agree exactly — same
maximal value, same minimal radius, same minimal diameter — at every
point within one support width.  The density series for the Dirac mass
then lands in a CSV whose bytes are reproducible run to run.

Run:  python3 demos/oracle_equivalence.py
"""

import random
from fractions import Fraction as F

from hlmax import (
    binary_signals,
    density_series,
    diff_signal,
    dirac,
    random_dense,
    rows_to_csv,
    support_bounds,
)


def main() -> None:
    print("== Engine vs oracle on a seeded corpus ==")
    rng = random.Random(404)
    corpus = [random_dense(rng, max_width=24) for _ in range(60)]
    corpus += [s for s, _ in zip(binary_signals(8), range(100))]
    mismatches = []
    points = 0
    for sig in corpus:
        lo, hi = support_bounds(sig)
        points += 3 * (hi - lo + 1)
        mismatches.extend(diff_signal(sig))
    print(f"  {len(corpus)} signals, ~{points} evaluation points per engine pair")
    print(f"  mismatches: {len(mismatches)}")
    for m in mismatches:
        print(f"    {m}")

    print()
    print("== Density table for the Dirac mass (C = 2) ==")
    rows = density_series(dirac(), [10, 100, 1000], C=F(2))
    csv_text = rows_to_csv(rows)
    print("  " + csv_text.replace("\n", "\n  ").rstrip())
    print(
        "  count_S stays 0 (the ratio r_n/|n| = 1 never lands in [1/4, 1/2])\n"
        "  while every point classifies near one."
    )


if __name__ == "__main__":
    main()
