"""Shared hypothesis strategies and helpers for the exact-arithmetic suite."""

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from osdrazin.matrix import SquareMatrix
from osdrazin.rings import QQ, QQI, GaussianRational, IntegersMod, mpq

# Exact arithmetic has no flaky timing, but entries can be big; a deadline
# would only add noise.
settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


small_ints = st.integers(min_value=-4, max_value=4)

rationals = st.builds(
    lambda n, d: mpq(n, d),
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=1, max_value=5),
)

gaussians = st.builds(
    GaussianRational,
    st.integers(min_value=-3, max_value=3),
    st.integers(min_value=-3, max_value=3),
)


def matrices(ring, dim, entries):
    return st.lists(
        st.lists(entries, min_size=dim, max_size=dim),
        min_size=dim,
        max_size=dim,
    ).map(lambda rows: SquareMatrix(ring, rows))


def qq_matrices(dim, entries=small_ints):
    return matrices(QQ, dim, entries)


def qqi_matrices(dim):
    return matrices(QQI, dim, gaussians)


def mod_matrices(modulus, dim):
    return matrices(
        IntegersMod(modulus), dim, st.integers(min_value=0, max_value=modulus - 1)
    )


# Dimensions stay small: every identity checked is dimension-independent, and
# exact entries grow quickly under elimination.
dims = st.integers(min_value=1, max_value=3)


@pytest.fixture
def rng():
    return random.Random(20240816)
