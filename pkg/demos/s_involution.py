"""Cancel the raw histories of S_1 applied to s_(3,1,1) in pairs.

The sign-reversing involution matches histories into cancelling pairs.
The one history it leaves unmatched carries the whole answer.

    python demos/s_involution.py
"""

from abacus_histories import (FIXED, SchurExpansion, bernstein_S,
                              enumerate_S_raw, render_history, s_involution)


def main():
    hs = list(enumerate_S_raw(1, (3, 1, 1)))
    keys = [h.key() for h in hs]
    seen = set()
    for i, h in enumerate(hs):
        g = s_involution(h)
        if g is FIXED:
            print(f"history {i} is fixed:")
            print(render_history(h))
            continue
        j = keys.index(g.key())
        if (j, i) not in seen:
            seen.add((i, j))
            print(f"history {i} ({h.sign:+d}) cancels history {j} ({g.sign:+d})")
    print(f"{len(hs)} histories, {len(seen)} cancelling pairs")
    print("S_1 s_311 =", bernstein_S(1, SchurExpansion.schur((3, 1, 1))))


if __name__ == "__main__":
    main()
