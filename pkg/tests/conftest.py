import numpy as np
import pytest

from boostbell.inequalities import MeasurementSettings


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_settings(rng):
    d = [random_unit(rng) for _ in range(6)]
    return MeasurementSettings(a=d[0], a_prime=d[1], b=d[2], b_prime=d[3], c=d[4], c_prime=d[5])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
