from __future__ import annotations

from hypothesis import strategies as st

from skeincalc.ring import LaurentPoly
from skeincalc.skein import SkeinElement

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def laurent(draw, max_terms=4, exp=8, coeff=5):
    pairs = draw(
        st.lists(
            st.tuples(st.integers(-exp, exp), st.integers(-coeff, coeff)),
            max_size=max_terms,
        )
    )
    return LaurentPoly(pairs)


@st.composite
def elements(draw, max_terms=4, deg=4):
    mono = st.tuples(*(st.integers(0, deg),) * 3)
    pairs = draw(st.lists(st.tuples(mono, laurent(max_terms=2)), max_size=max_terms))
    return SkeinElement(pairs)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(test_acceptance.RESULTS.items()):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
