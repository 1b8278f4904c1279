"""Shared hypothesis strategies for the test suite."""

import hypothesis.strategies as st

from pentafuzz import BipolarFuzzySet, BipolarValue

unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, allow_infinity=False)
bipolar_values = st.builds(BipolarValue, unit_floats, unit_floats)

# A fuzzy value has nu = 1 - mu by construction.
fuzzy_values = unit_floats.map(lambda m: BipolarValue(m, 1.0 - m))


@st.composite
def value_set_pairs(draw, min_size=1, max_size=6):
    """Two sets over one shared universe, for binary-operator properties."""
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    ids = [f"e{k}" for k in range(size)]
    left = [draw(bipolar_values) for _ in ids]
    right = [draw(bipolar_values) for _ in ids]
    return (
        BipolarFuzzySet(zip(ids, left)),
        BipolarFuzzySet(zip(ids, right)),
    )
