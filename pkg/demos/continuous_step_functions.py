"""Maximal averages of step functions on the line, exactly.

For a nonnegative step function the averages over balls are ratios of
exact integrals, so both the centered and uncentered maximal values and
their minimal radii come out as rationals.  At points where the best
average is only approached as the ball shrinks, the engine reports
radius 0 with the vanishing-radius value (the mean of the one-sided
limits in the centered case, their maximum in the uncentered case).

Run:  python3 demos/continuous_step_functions.py
"""

from fractions import Fraction as F

from hlmax import (
    StepFunction,
    grid_scan_centered,
    maximal_centered_cont,
    maximal_uncentered_cont,
    value_str,
)


def show(label: str, f: StepFunction, x: F) -> None:
    c = maximal_centered_cont(f, x)
    u = maximal_uncentered_cont(f, x)
    print(
        f"  {label} at x = {value_str(x)}:\n"
        f"    centered   ({value_str(c.max_value)}, r = {value_str(c.radius)}, "
        f"attained = {c.attained})\n"
        f"    uncentered ({value_str(u.max_value)}, r~ = {value_str(u.radius)}, "
        f"attained = {u.attained})"
    )


def main() -> None:
    print("== Indicator of (-1, 1) ==")
    box = StepFunction([F(-1), F(1)], [F(1)])
    show("box", box, F(2))
    print(
        "    (centered: the ball of radius 3 around 2 captures the whole\n"
        "    mass 2 over length 6; uncentered: the hull [-1, 2] does it\n"
        "    over length 3)"
    )
    show("box", box, F(0))
    print("    (inside the plateau the tiny balls already average 1)")

    print()
    print("== Vanishing-radius conventions ==")
    gap = StepFunction([F(0), F(1), F(2), F(3)], [F(1), F(0), F(1)])
    show("gap [1,0,1]", gap, F(1))
    print(
        "    (at the left edge of the gap the centered average tends to the\n"
        "    mean of the one-sided values 1 and 0; the uncentered sup takes\n"
        "    the better side, both only as r -> 0, reported as radius 0)"
    )

    print()
    print("== Grid cross-check ==")
    f = StepFunction([F(-1), F(-1, 2), F(1, 4), F(1)], [F(2), F(1, 2), F(3, 2)])
    x = F(3, 4)
    best_val, best_rad = grid_scan_centered(f, x, F(4), 8192)
    engine = maximal_centered_cont(f, x)
    print(f"  engine:   ({value_str(engine.max_value)}, r = {value_str(engine.radius)})")
    print(f"  8192-point grid: ({value_str(best_val)}, r = {value_str(best_rad)})")
    print(f"  grid never exceeds the engine: {best_val <= engine.max_value}")


if __name__ == "__main__":
    main()
