"""Print the Hall-Littlewood coefficients for three-row shapes of a given size.

Each coefficient is a polynomial in q with nonnegative coefficients.  The
table is built from the closed formula and compared with the history sums.

    python demos/three_row_table.py [n]
"""

import sys

from abacus_histories import sum_histories, three_row_table, word_for
from abacus_histories.partitions import render_partition


def main(n=7):
    table = three_row_table(n)
    cache = {}
    for (nu, lam), coeff in table.items():
        if nu not in cache:
            cache[nu] = sum_histories(word_for("H", nu))
            print(f"H{render_partition(nu)[1:]}")
        mark = "" if cache[nu][lam] == coeff else "  MISMATCH"
        print(f"  {render_partition(lam)}: {coeff}{mark}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)
