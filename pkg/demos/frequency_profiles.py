"""Walk through the frequency function r_n on two small signals.

For the Dirac mass at 0 the minimal maximizing radius is |n| exactly: the
best centered window must reach back to the origin and stops growing the
moment it does.  A two-block signal then shows the competition between a
tall near block and a heavy far block, the situation the counterexample
constructions scale up to astronomical sizes.

Run:  python3 demos/frequency_profiles.py
"""

from fractions import Fraction as F

from hlmax import (
    Block,
    BlockSignal,
    dirac,
    event_centered,
    event_uncentered,
    profile,
    value_str,
)


def main() -> None:
    print("== Dirac mass at 0 ==")
    sig = dirac()
    for res in profile(sig, range(0, 8)):
        print(
            f"  n = {res.n}:  Mf = {value_str(res.max_value)}  "
            f"(minimal radius {res.radius}, so r_n = |n|)"
        )
    for res in profile(sig, [5], uncentered=True):
        print(
            f"  uncentered at n = {res.n}:  max {value_str(res.max_value)} "
            f"over minimal diameter {res.min_diameter} "
            f"(the window [0, {res.n}] just reaches the mass)"
        )

    print()
    print("== Tall near block vs heavy far block ==")
    # Unit mass at each of two blocks: the singleton {0} and the stretch
    # [40, 49] with amplitude 2 spread over ten points.
    sig = BlockSignal([Block(0, 0, F(1)), Block(40, 49, F(2))])
    for n in (0, 10, 20, 30, 44):
        c = event_centered(sig, n)
        u = event_uncentered(sig, n)
        print(
            f"  n = {n:>2}:  centered ({value_str(c.max_value)}, r = {c.radius})   "
            f"uncentered ({value_str(u.max_value)}, diameter = {u.min_diameter})"
        )
    print(
        "  Near the origin the singleton wins at radius 0; midway the far\n"
        "  block pulls the minimal radius out to reach it; inside the far\n"
        "  block the radius drops back to 0."
    )


if __name__ == "__main__":
    main()
