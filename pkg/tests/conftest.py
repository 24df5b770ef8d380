"""Shared test configuration: derandomized hypothesis profile and strategies."""

from hypothesis import HealthCheck, settings, strategies as st

from powermonoid import FinSet, as_zero_set

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def finsets(min_value=-50, max_value=50, max_size=12):
    """Strategy for arbitrary nonempty finite integer sets."""
    return st.sets(
        st.integers(min_value=min_value, max_value=max_value),
        min_size=1,
        max_size=max_size,
    ).map(FinSet)


def zero_sets(min_value=-20, max_value=20, max_size=10):
    """Strategy for finite integer sets anchored at 0."""
    return st.sets(
        st.integers(min_value=min_value, max_value=max_value),
        max_size=max_size,
    ).map(lambda s: as_zero_set(s | {0}))
