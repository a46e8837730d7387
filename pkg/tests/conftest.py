import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from approxlcs import validate_string_set

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def strings_over(letters, min_size=1, max_size=12):
    return st.text(alphabet=letters, min_size=min_size, max_size=max_size).map(str.encode)


@st.composite
def string_sets(draw, letters="ab", min_m=2, max_m=4, min_len=1, max_len=10):
    m = draw(st.integers(min_m, max_m))
    raw = [draw(strings_over(letters, min_len, max_len)) for _ in range(m)]
    return validate_string_set(raw)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def example_set():
    return validate_string_set([b"aabcf", b"fabcd", b"dgiabc", b"ahabch"])
