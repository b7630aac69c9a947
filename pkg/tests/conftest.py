import hypothesis.strategies as st
from hypothesis import settings

from abacus_histories.qlaurent import QLaurent, SchurExpansion

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=8, max_length=None):
    n = draw(st.integers(0, max_size))
    parts = []
    left = n
    while left:
        if max_length is not None and len(parts) == max_length:
            break
        cap = min(left, parts[-1] if parts else left)
        p = draw(st.integers(1, cap))
        parts.append(p)
        left -= p
    return tuple(parts)


@st.composite
def laurents(draw, span=4, size=6):
    lo = draw(st.integers(-span, span))
    coeffs = draw(st.lists(st.integers(-5, 5), max_size=size))
    return QLaurent(lo, coeffs)


@st.composite
def expansions(draw, max_size=5, max_terms=4):
    E = SchurExpansion.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        E = E + SchurExpansion.schur(draw(partitions(max_size)), draw(laurents()))
    return E
