import math
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SQRT2 = 1.4142135623730951


def exact(x):
    return Fraction(x)


def ulp(x):
    return math.ulp(x)


@pytest.fixture(scope="session")
def suite():
    from ivroots.bench import load_suite
    return load_suite()
