import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import numpy as np

from prophecke.utils.rng import RNG

from helper_functions import setup_test_for_mode


def _run_RNG_tests():
    """
    Test the seeded random number generator
    * With the same seed, the same numbers should be generated
    * With different seeds, different numbers should be generated
    * Draws stay inside their ranges
    """
    draws = [RNG(seed).integers(0, 1000, size=20) for seed in (547, None, 547, 42)]
    assert all(arr.shape == (20,) for arr in draws)
    assert all(0 <= x < 1000 for arr in draws for x in arr)
    assert np.array_equal(draws[0], draws[2])
    # With a very low probability this may fail
    assert not np.array_equal(draws[0], draws[3])
    assert not np.array_equal(draws[0], draws[1])

    rng = RNG(7)
    assert isinstance(rng.integers(0, 5), int)
    items = list(range(10))
    assert rng.choice(items) in items
    picked = rng.sample(items, 4)
    assert len(set(picked)) == 4 and picked == sorted(picked)
    assert rng.sample(items, 20) == items
    lam = rng.coweight(3, 2)
    assert len(lam) == 3 and all(-2 <= x <= 2 for x in lam)
    assert RNG(7).coweight(3, 2) == RNG(7).coweight(3, 2)


test_rng = setup_test_for_mode(_run_RNG_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_rng()
