from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-4, max_value=4)


def square_matrices(n, elements=rationals):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)


def traceless(n, elements=rationals):
    def fix(rows):
        tr = sum((rows[i][i] for i in range(n)), Fraction(0))
        rows = [list(r) for r in rows]
        rows[-1][-1] -= tr
        return rows
    return square_matrices(n, elements).map(fix)
