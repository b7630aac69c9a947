"""List every abacus-history of H_1 H_2 H_3 applied to 1.

Afterwards, add up the signed, weighted histories and compare the sum with
the operator engine's expansion.

    python demos/histories_h123.py
"""

from abacus_histories import (SchurExpansion, apply_word, enumerate_histories,
                              render_history, sum_histories, word_for)


def main():
    word = word_for("H", (1, 2, 3))
    hs = list(enumerate_histories(word))
    for h in hs:
        print(render_history(h))
        print()
    total = sum_histories(word, histories=hs)
    print(f"{len(hs)} histories; signed sum:")
    print(" ", total)
    print("engine agrees:", total == apply_word(word, SchurExpansion.one()))


if __name__ == "__main__":
    main()
