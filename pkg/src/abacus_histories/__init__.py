"""Abacus models for Schur-function creation operators.

The public surface: partitions and abaci, Laurent polynomials in q and
Schur expansions, the operator engine, abacus-histories, and the
three-row Hall-Littlewood results.
"""

from .partitions import (Abacus, AbacusError, PartitionError, bead_labels,
                         bead_with_label, conjugate, flip, from_abacus,
                         gap_label_at, gap_labels, gap_with_label, partition,
                         partitions_of, partitions_up_to, to_abacus)
from .qlaurent import ONE, Q, ZERO, PoleError, QLaurent, SchurExpansion
from .operators import (OperatorSpec, WordParseError, apply_word,
                        bernstein_S, bernstein_S_via_sum, co_S_destroy, create,
                        e_perp, format_word, h_perp, hmz_B, hmz_B_via_sum,
                        hmz_C, jing_H, mul_e, mul_h, omega, parse_word,
                        straighten, word_for)
from .histories import (FIXED, AbacusHistory, HistoryError, HistoryStep,
                        count_histories, default_start_positions,
                        enumerate_S_raw, enumerate_histories, render_history,
                        s_involution, sum_histories)
from .threerow import (DomainError, three_row_coeff, three_row_involution,
                       three_row_table)

__version__ = "0.1.0"
