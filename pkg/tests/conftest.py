from fractions import Fraction

from hypothesis import settings, strategies as st

from qwol.polynomial import Polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=9),
)


@st.composite
def polynomials(draw, max_degree=12):
    coeffs = draw(st.lists(small_rationals, max_size=max_degree + 1))
    return Polynomial(coeffs)


@st.composite
def nonzero_polynomials(draw, max_degree=12):
    p = draw(polynomials(max_degree))
    if p.is_zero():
        p = Polynomial([draw(small_rationals.filter(bool))])
    return p


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok = results[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")
