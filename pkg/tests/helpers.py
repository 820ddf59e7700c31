from fractions import Fraction

from hypothesis import strategies as st

ELL_GRID = [Fraction(-6), Fraction(-5, 2), Fraction(-1), Fraction(0), Fraction(1, 3),
            Fraction(1), Fraction(2), Fraction(7, 2), Fraction(10)]

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)

# (criterion number, description, passed, seconds), filled by test_acceptance
ACCEPTANCE_RESULTS: list = []
