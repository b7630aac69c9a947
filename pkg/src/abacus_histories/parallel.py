"""Process-pool versions of expansion and history enumeration.

Work is split into ordered chunks and results are merged in submission
order, so output does not depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .histories import (count_histories, enumerate_from_prefix,
                        format_history, history_prefixes)
from .operators import OperatorSpec, parse_word
from .qlaurent import SchurExpansion, merge

_MIN_PREFIXES_PER_JOB = 4


def _chunks(items: list, k: int) -> List[list]:
    k = max(1, min(k, len(items)))
    size, extra = divmod(len(items), k)
    out, i = [], 0
    for j in range(k):
        n = size + (1 if j < extra else 0)
        out.append(items[i:i + n])
        i += n
    return out


def _apply_op_chunk(args) -> SchurExpansion:
    op_text, terms = args
    (op,) = parse_word(op_text)
    return op.apply(SchurExpansion.from_json(terms))


def apply_word_parallel(word: Sequence[OperatorSpec], E: SchurExpansion,
                        jobs: int = 1) -> SchurExpansion:
    """Same result as ``apply_word``; each operator's input terms are split
    across ``jobs`` worker processes."""
    word = list(word)
    if jobs <= 1:
        for op in reversed(word):
            E = op.apply(E)
        return E
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for op in reversed(word):
            if len(E) < 2:
                E = op.apply(E)
                continue
            items = E.to_json()
            tasks = [(str(op), chunk) for chunk in _chunks(items, jobs)]
            E = merge(pool.map(_apply_op_chunk, tasks))
    return E


@lru_cache(maxsize=8)
def _prefixes(word_text: str, start: Tuple[int, ...], b_mode: str, depth: int):
    return history_prefixes(parse_word(word_text), start, b_mode, depth)


def _pick_depth(word_text: str, start, b_mode: str, jobs: int) -> int:
    n = len(parse_word(word_text))
    depth = 1
    while depth < n and len(_prefixes(word_text, start, b_mode, depth)) < jobs * _MIN_PREFIXES_PER_JOB:
        depth += 1
    return depth


def _count_task(args) -> int:
    word_text, start, b_mode, depth, idx = args
    prefix = _prefixes(word_text, start, b_mode, depth)[idx]
    return sum(1 for _ in enumerate_from_prefix(parse_word(word_text), start, b_mode, prefix))


def _render_task(args) -> List[str]:
    word_text, start, b_mode, depth, idx, fmt = args
    prefix = _prefixes(word_text, start, b_mode, depth)[idx]
    word = parse_word(word_text)
    return [format_history(h, fmt) for h in enumerate_from_prefix(word, start, b_mode, prefix)]


def count_histories_parallel(word_text: str, start: Tuple[int, ...],
                             b_mode: str = "omega", jobs: int = 1) -> int:
    if jobs <= 1:
        return count_histories(parse_word(word_text), start, b_mode)
    depth = _pick_depth(word_text, start, b_mode, jobs)
    n = len(_prefixes(word_text, start, b_mode, depth))
    tasks = [(word_text, start, b_mode, depth, i) for i in range(n)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_task, tasks))


def render_histories_parallel(word_text: str, start: Tuple[int, ...],
                              b_mode: str, fmt: str, jobs: int) -> Iterator[str]:
    """Formatted histories in enumeration order, produced by ``jobs`` workers."""
    depth = _pick_depth(word_text, start, b_mode, jobs)
    n = len(_prefixes(word_text, start, b_mode, depth))
    tasks = [(word_text, start, b_mode, depth, i, fmt) for i in range(n)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for block in pool.map(_render_task, tasks):
            yield from block
