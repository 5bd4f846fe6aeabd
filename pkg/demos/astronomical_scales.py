"""Exact frequency-function values at scales up to 2^10000.

The bounded-amplitude block family puts an indicator block of length
L_k = floor(N_k / 3) just past each scale N_k = 2^(10^(k-1)).  The event
sweep works over block boundaries, not points, so evaluating the engines
at N_4 = 2^1000 — a 302-digit integer — costs a handful of big-rational
comparisons.  The minimal maximizing radius there is exactly L_4 and the
ratio r/N_4 misses 1/3 by exactly 1/(3*2^1000).

Certificates serialize integers as decimal strings (the interpreter's
int<->str digit guard would reject direct conversion at 2^10000) and can
be re-checked from the JSON alone.

Run:  python3 demos/astronomical_scales.py
"""

import json
from fractions import Fraction as F

from hlmax import (
    build_theorem29_linf,
    event_centered,
    int_str,
    recheck_certificate,
)


def main() -> None:
    sig, cert = build_theorem29_linf(k_max=5)

    print("== Scales (digit counts) ==")
    for k, (n_k, l_k) in enumerate(zip(cert.N, cert.L), start=1):
        print(
            f"  k = {k}:  N_k has {len(int_str(n_k))} digits, "
            f"L_k has {len(int_str(l_k))} digits"
        )

    print()
    print("== Exact engine evaluations at the anchors ==")
    for k in (2, 3, 4):
        n_k, l_k = cert.N[k - 1], cert.L[k - 1]
        res = event_centered(sig, n_k)
        ratio = F(res.radius, n_k)
        exact_dev = abs(ratio - F(1, 3)) == F(1, 3 * n_k)
        print(
            f"  k = {k}:  r at N_k equals L_k: {res.radius == l_k}   "
            f"|r/N_k - 1/3| = 1/(3*N_k) exactly: {exact_dev}"
        )

    print()
    print("== Certificate round trip at full scale ==")
    doc = cert.to_json()
    blob = json.dumps(doc)
    print(f"  JSON size with N_5 = 2^10000 embedded: {len(blob)} bytes")
    ok, _ = recheck_certificate(json.loads(blob))
    print(f"  re-check after round trip: ok = {ok}")


if __name__ == "__main__":
    main()
