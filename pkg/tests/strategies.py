"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from golodlab.complex_core import NonFaceSequence, from_minimal_nonfaces, full_mask, minimal_elements


@st.composite
def antichains(draw, min_m=1, max_m=5, max_r=5):
    m = draw(st.integers(min_m, max_m))
    picks = draw(st.lists(st.integers(1, (1 << m) - 1), max_size=max_r))
    return m, tuple(minimal_elements(picks))


@st.composite
def complexes(draw, min_m=1, max_m=5, max_r=5):
    m, mnfs = draw(antichains(min_m, max_m, max_r))
    return from_minimal_nonfaces(m, mnfs)


@st.composite
def sequences(draw, max_w=5, max_r=4):
    w = draw(st.integers(0, max_w))
    entries = draw(st.lists(st.integers(0, (1 << w) - 1), max_size=max_r))
    return NonFaceSequence(full_mask(w), tuple(entries))
