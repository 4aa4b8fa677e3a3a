from fractions import Fraction

from hypothesis import strategies as st

small = st.integers(-9, 9)
nonzero = small.filter(bool)


@st.composite
def rows(draw, m_max=3, min_len=3, max_len=8):
    """Integer coefficient rows with nonzero constant terms."""
    m = draw(st.integers(1, m_max))
    length = draw(st.integers(min_len, max_len))
    out = []
    for _ in range(m + 1):
        tail = draw(st.lists(small, min_size=length - 1, max_size=length - 1))
        out.append([draw(nonzero)] + tail)
    return out


def fractions(rows_):
    return [[Fraction(c) for c in r] for r in rows_]
