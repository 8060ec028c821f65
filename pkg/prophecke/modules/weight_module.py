"""
Characters chi of the finite Hecke subalgebra and the cyclic modules
M(chi) = chi (x) H_k, realized on the basis 1 (x) tau_d over distinguished d.

For x = f d with f in the finite part of W~ and d distinguished,
(1 (x) 1) tau_x = chi(tau_f) (1 (x) tau_d). Vectors are dicts d -> coefficient;
reductions stay inside a window l(d) <= bound.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Tuple

from loguru import logger

from ..combinatorics.root_datum import StandardFacet
from ..combinatorics.utils import add
from ..utils.errors import ModeMismatchError, TruncationOverflow


@dataclass(frozen=True, order=True)
class WeightCharacter:
    """chi given by its torus character and the set Pi_chi of simple roots where chi(tau_(n_alpha)) = 0."""

    xi_bar: Tuple[int, ...]
    pi_chi: FrozenSet[int]

    @property
    def facet(self):
        """The standard facet F_chi."""
        return StandardFacet(self.pi_chi)

    def to_json(self):
        return {"xi": list(self.xi_bar), "pi_chi": sorted(self.pi_chi)}


@dataclass
class SatakeResult:
    equal: bool
    left: dict
    right: dict
    bound: int


class WeightModules:
    """Weight characters and their modules M(chi) for one root datum.

    Args:
        bernstein (BernsteinMaps): Bernstein maps of the generic algebra.
    """

    def __init__(self, bernstein):
        self.bernstein = bernstein
        self.charp = bernstein.charp
        self.group = bernstein.group
        self.affine = bernstein.affine
        self.datum = bernstein.datum
        self.field = self.charp.coefficients.field
        self._w0_length = self.datum.weyl.length(self.datum.weyl.longest_element())

    # -- characters ------------------------------------------------------

    def trivial_roots(self, xi_bar):
        """Pi_(xi_bar): simple roots alpha with xi_bar trivial on T_alpha."""
        return frozenset(i for i in range(self.datum.n_simple) if self.group.restrict_trivial(xi_bar, i))

    def characters(self):
        """All weight characters, ordered by torus character and then by Pi_chi."""
        result = []
        for xi in self.group.characters():
            allowed = sorted(self.trivial_roots(xi))
            for size in range(len(allowed) + 1):
                for subset in combinations(allowed, size):
                    result.append(WeightCharacter(xi, frozenset(subset)))
        return sorted(result, key=lambda chi: (chi.xi_bar, len(chi.pi_chi), sorted(chi.pi_chi)))

    def simple_value(self, chi, i):
        """chi(tau_(n_alpha_i)): -1 on Pi_(xi_bar) - Pi_chi and 0 elsewhere."""
        return -1 if i in self.trivial_roots(chi.xi_bar) and i not in chi.pi_chi else 0

    def finite_value(self, chi, f):
        """chi(tau_f) for f = t n_u in the finite part of W~."""
        assert not any(f.lam), "Element is not in the finite part of W~."
        result = self.field.root_of_unity(self.group.evaluate(chi.xi_bar, f.t))
        for i in self.datum.weyl.words[f.u]:
            result = result * self.simple_value(chi, i)
        return result

    # -- vectors ---------------------------------------------------------

    def generator(self):
        """The vector 1 (x) 1."""
        return {self.affine.identity: self.field.from_int(1)}

    def _reduce(self, chi, x, bound):
        """(d, chi(tau_f)) with (1 (x) 1) tau_x = chi(tau_f) (1 (x) tau_d)."""
        group = self.group
        _, d = self.affine.coset_decompose(x.w)
        if self.affine.length(d) > bound:
            raise TruncationOverflow(f"Distinguished element of length {self.affine.length(d)} exceeds bound {bound}.")
        f = group.multiply(x, group.inverse(group.lift(d)))
        return d, self.finite_value(chi, f)

    def act(self, chi, vector, element, bound):
        """vector . element for a characteristic p algebra element.

        Raises:
            TruncationOverflow: if a reduction leaves the window l(d) <= bound.
        """
        if element.algebra.mode != "charp":
            raise ModeMismatchError("M(chi) is a module over the characteristic p algebra.")
        group, charp = self.group, self.charp
        out = {}
        for d, a in vector.items():
            d_tilde = group.lift(d)
            for y, c in element.terms.items():
                for x, e in charp.basis_product(d_tilde, y).items():
                    target, value = self._reduce(chi, x, bound)
                    coefficient = a * c * e * value
                    out[target] = out[target] + coefficient if target in out else coefficient
        return {d: c for d, c in out.items() if c}

    def to_json(self, vector):
        return [
            {"d": self.affine.to_json(d), "c": str(c)}
            for d, c in sorted(vector.items(), key=lambda item: (self.affine.length(item[0]), item[0]))
        ]

    @staticmethod
    def is_single_term(vector):
        return len(vector) == 1

    # -- Satake compatibility --------------------------------------------

    def default_bound(self, *coweights):
        return sum(self.bernstein._length(lam) for lam in coweights) + self._w0_length + 2

    def _with_raised_bound(self, compute, bound):
        try:
            return compute(bound), bound
        except TruncationOverflow:
            logger.warning(f"Truncation bound {bound} exceeded, retrying with {2 * bound}")
            return compute(2 * bound), 2 * bound

    def satake_check(self, chi, lam, bound=None):
        """Compare (1 (x) 1) z_lam with (1 (x) 1) B_(F_chi)^+(lam).

        Raises:
            TruncationOverflow: if the raised bound is still exceeded.
        """
        bound = self.default_bound(lam) if bound is None else bound
        bernstein = self.bernstein

        def compute(b):
            left = self.act(chi, self.generator(), bernstein.central(lam, mode="charp"), b)
            right = self.act(chi, self.generator(), bernstein.bernstein_charp(chi.facet, 1, lam), b)
            return left, right

        (left, right), used = self._with_raised_bound(compute, bound)
        return SatakeResult(left == right, left, right, used)

    def multiplicativity_check(self, chi, lam, mu, bound=None):
        """((1 (x) 1) z_lam) z_mu == (1 (x) 1) z_(lam + mu)."""
        bound = self.default_bound(lam, mu) if bound is None else bound
        bernstein = self.bernstein

        def compute(b):
            first = self.act(chi, self.generator(), bernstein.central(lam, mode="charp"), b)
            left = self.act(chi, first, bernstein.central(mu, mode="charp"), b)
            right = self.act(chi, self.generator(), bernstein.central(add(lam, mu), mode="charp"), b)
            return left, right

        (left, right), used = self._with_raised_bound(compute, bound)
        return SatakeResult(left == right, left, right, used)

    def sign_type(self):
        """The weight character with trivial torus part and Pi_chi empty."""
        return WeightCharacter(self.group.zero_torus, frozenset())
