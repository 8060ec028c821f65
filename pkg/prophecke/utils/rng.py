import numpy as np


class RNG:
    """
    A seeded random number generator for the sampled verification checks.

    Notes:
        - All draws go through a numpy Generator, so a fixed seed reproduces
          every sampled instance of a check run.
        - Integer ranges are half-open as in numpy: integers(low, high) is in [low, high).
    """

    def __init__(self, seed=None):
        """Initialize a RNG which can be seeded.

        Args:
            seed (int or None, optional): Random number generation seed. If set to None, the RNG is seeded randomly. Defaults to None.
        """
        self.seed = seed
        self._rng = np.random.default_rng(seed)

    def integers(self, low, high, size=None):
        """Draw integers in [low, high).

        Args:
            low (int): Lower bound (inclusive).
            high (int): Upper bound (exclusive).
            size (int or tuple, optional): Output shape. If None, a single int is returned.

        Returns:
            int or numpy.ndarray: The drawn integers
        """
        if size is None:
            return int(self._rng.integers(low, high))
        return self._rng.integers(low, high, size=size)

    def choice(self, items):
        """Pick one element of a non-empty sequence."""
        return items[self.integers(0, len(items))]

    def sample(self, items, k):
        """Pick min(k, len(items)) distinct elements of a sequence, keeping their order."""
        items = list(items)
        if k >= len(items):
            return items
        picked = sorted(self._rng.choice(len(items), size=k, replace=False))
        return [items[i] for i in picked]

    def coweight(self, rank, bound):
        """Draw an integer vector with entries in [-bound, bound].

        Args:
            rank (int): Length of the vector.
            bound (int): Sup-norm bound.

        Returns:
            tuple of int: The coweight coordinates
        """
        return tuple(int(x) for x in self._rng.integers(-bound, bound + 1, size=rank))
