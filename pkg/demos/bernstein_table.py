"""Apply S_m to s_(8,8,8,4,4,2,2,1) for m from 12 down to -12.

Most values of m give zero; the rest give a single signed Schur function.
Each result is also checked against the Jacobi-Trudi determinant.

    python demos/bernstein_table.py
"""

from abacus_histories import SchurExpansion, bernstein_S
from abacus_histories.oracle import jacobi_trudi

MU = (8, 8, 8, 4, 4, 2, 2, 1)


def main():
    E = SchurExpansion.schur(MU)
    for m in range(12, -13, -1):
        got = bernstein_S(m, E)
        agrees = got == jacobi_trudi((m,) + MU)
        print(f"m={m:>3}  {str(got) or '0':<32} determinant agrees: {agrees}")


if __name__ == "__main__":
    main()
