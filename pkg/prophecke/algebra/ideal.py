"""
The ideal J of the central subalgebra generated by the z_lam with l(e^lam) > 0,
the filtration by Bernstein basis lengths, and the dominant semigroup it is built on.
"""
from itertools import product

import numpy as np
from loguru import logger

from ..combinatorics.utils import add, lattice_normal_form, scale, sup_norm


class DominantSemigroup:
    """Generators of the semigroup of dominant coweights.

    The semigroup is a lineality lattice L (coweights orthogonal to all roots)
    plus the lift of a Hilbert basis of P(X_*) cap N^n, where P maps a coweight
    to its pairings with the simple roots.

    Args:
        datum (RootDatum): The root datum.
    """

    def __init__(self, datum):
        self.datum = datum
        n = datum.n_simple
        pairing = [list(alpha) for alpha in datum.simple_roots] if n else np.zeros((0, datum.rank_x), dtype=object)
        S, D, T, Sinv, Tinv = lattice_normal_form(pairing)
        self._Sinv, self._Tinv = Sinv, Tinv
        self._diag = [int(D[i, i]) for i in range(n)]
        self.lineality = [tuple(int(x) for x in Tinv[:, i]) for i in range(n, datum.rank_x)]
        self.index = int(np.prod(self._diag)) if n else 1
        self.hilbert_basis = self._hilbert_basis()
        self.generators = [self._canonical_lift(y) for y in self.hilbert_basis]
        logger.debug(f"Dominant semigroup of {datum.label}: generators {self.generators}, lineality {self.lineality}")

    def _in_image(self, y):
        z = self._Sinv @ list(y)
        return all(int(z[i]) % d == 0 for i, d in enumerate(self._diag))

    def _hilbert_basis(self):
        """Irreducible nonzero elements of P(X_*) cap N^n; all of them lie in the box [0, index]^n."""
        n = self.datum.n_simple
        points = [
            y for y in product(range(self.index + 1), repeat=n) if any(y) and self._in_image(y)
        ]
        point_set = set(points)
        basis = []
        for y in points:
            reducible = any(
                z != y and tuple(a - b for a, b in zip(y, z)) in point_set
                for z in points
                if all(b <= a for a, b in zip(y, z))
            )
            if not reducible:
                basis.append(y)
        return basis

    def lift(self, y):
        """A coweight lam with <lam, alpha_i> = y_i."""
        z = self._Sinv @ list(y)
        coords = [int(z[i]) // d for i, d in enumerate(self._diag)] + [0] * len(self.lineality)
        return tuple(int(x) for x in self._Tinv @ coords)

    def _canonical_lift(self, y, bound=2):
        """The lift of smallest sup-norm, then largest coordinate sum, then lexicographically smallest."""
        base = self.lift(y)
        candidates = [base]
        for coeffs in product(range(-bound, bound + 1), repeat=len(self.lineality)):
            shifted = base
            for c, ell in zip(coeffs, self.lineality):
                shifted = add(shifted, scale(c, ell))
            candidates.append(shifted)
        return min(candidates, key=lambda lam: (sup_norm(lam), -sum(lam), lam))


class IdealJ:
    """The ideal J of Z^o(H_k), with its generating set and checks of its filtration properties.

    Args:
        bernstein (BernsteinMaps): Bernstein maps of the generic algebra.
    """

    def __init__(self, bernstein):
        self.bernstein = bernstein
        self.datum = bernstein.datum
        self.semigroup = DominantSemigroup(self.datum)
        self.generator_coweights = [
            lam for lam in self.semigroup.generators if bernstein._length(lam) > 0
        ]
        # length-zero central elements tau_(e^lam), lam in the lineality lattice
        self.units = list(self.semigroup.lineality)
        logger.info(f"Ideal J of {self.datum.label} generated by z at {self.generator_coweights}")

    def generators(self):
        """The generators z_lam in characteristic p."""
        return [self.bernstein.central(lam, mode="charp") for lam in self.generator_coweights]

    def filtration_check(self, elements):
        """Check z B(x) and B(x) z lie in F_(l(x)+1) for every generator z and every x.

        Returns:
            tuple: (bool, first failing (generator coweight, x) or None)
        """
        bernstein = self.bernstein
        group = bernstein.group
        for lam, z in zip(self.generator_coweights, self.generators()):
            for x in elements:
                b = bernstein.bernstein_basis(x, "charp")
                n = group.length(x)
                for product_ in (z * b, b * z):
                    coefficients = bernstein.to_bernstein_basis(product_)
                    if any(group.length(y) < n + 1 for y in coefficients):
                        return False, (lam, x)
        return True, None

    def powers_identity(self, lam, m):
        """z_lam^m B_(x0)^+(lam) == B_(x0)^+((m+1) lam) in characteristic p."""
        bernstein = self.bernstein
        left = bernstein.central(lam, mode="charp") ** m * bernstein.bernstein_charp(bernstein.x0, 1, lam)
        right = bernstein.bernstein_charp(bernstein.x0, 1, scale(m + 1, lam))
        return left == right

    def to_json(self):
        return {
            "generators": [list(lam) for lam in self.generator_coweights],
            "units": [list(lam) for lam in self.units],
        }
