from fractions import Fraction

from hypothesis import settings, strategies as st

from egfkit.seq_core import EgfSeq

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


@st.composite
def seqs(draw, min_order=1, max_order=16, order=None):
    k = order if order is not None else draw(st.integers(min_order, max_order))
    return EgfSeq(tuple(draw(st.lists(small_rationals, min_size=k, max_size=k))))


@st.composite
def seq_triples(draw, max_order=16):
    k = draw(st.integers(1, max_order))
    return tuple(draw(seqs(order=k)) for _ in range(3))


def F(*args):
    return Fraction(*args)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
