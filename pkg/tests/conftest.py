import random

import pytest

from qseries.series import EXACT, TruncatedSeries, mod_ring


@pytest.fixture
def rng():
    return random.Random(20260808)


def random_series(rng, ring=EXACT, order=40, unit_constant=False):
    """A random series for property tests; constant term forced to a unit
    when the series is meant to be inverted."""
    if ring.modulus:
        coeffs = [rng.randrange(ring.modulus) for _ in range(order)]
        if unit_constant:
            coeffs[0] = rng.choice(
                [v for v in range(1, ring.modulus)
                 if ring.is_unit(v)])
    else:
        coeffs = [rng.randint(-9, 9) for _ in range(order)]
        if unit_constant:
            coeffs[0] = rng.choice([1, -1])
    return TruncatedSeries(ring, coeffs)


@pytest.fixture
def rings():
    return [EXACT, mod_ring(5), mod_ring(11), mod_ring(12)]
