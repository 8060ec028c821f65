"""
Integral Bernstein maps, the Bernstein basis and central elements.

B_F^s(lam) = q^((l(e^lam) + l(e^nu) - l(e^mu)) / 2) tau_(e^nu)^-1 tau_(e^mu) for any
decomposition lam = mu - nu with mu, nu in the Weyl chamber C^s(F). It is computed
in generic mode and specialized to characteristic p on demand.
"""
from itertools import product

from loguru import logger

from ..combinatorics.root_datum import StandardFacet
from ..combinatorics.utils import add, scale, sup_norm
from ..utils.errors import ModeMismatchError, PreconditionError


class BernsteinMaps:
    """Bernstein maps B_F^s for all standard facets F and signs s of a generic Hecke algebra.

    Args:
        algebra (HeckeAlgebra): A generic-mode Hecke algebra.
    """

    def __init__(self, algebra):
        self._check_inputs(algebra)
        self.algebra = algebra
        self.group = algebra.group
        self.affine = algebra.affine
        self.datum = algebra.group.datum
        self.charp = algebra.in_mode("charp")
        self.x0 = StandardFacet(frozenset(range(self.datum.n_simple)))
        self.chamber_C = StandardFacet()
        self._decompositions = {}
        self._maps = {}
        self._basis = {}
        self._basis_charp = {}
        rho2 = (0,) * self.datum.rank_x
        for k in range(self.datum.n_positive):
            rho2 = add(rho2, self.datum.coroots[k])
        self._two_rho = rho2

    @staticmethod
    def _check_inputs(algebra):
        logger.debug("Checking inputs to BernsteinMaps.")
        if algebra.mode != "generic":
            raise ModeMismatchError("Bernstein maps are built in generic mode and specialized afterwards.")

    def _length(self, lam):
        return self.affine.length(self.affine.translation(lam))

    def in_chamber(self, lam, facet, sign):
        return self.datum.weyl_chamber_test(lam, facet, sign)

    # -- decompositions --------------------------------------------------

    def _interior_point(self, facet, sign):
        """sign * w_F(2 rho), a point pairing nonzero with every root."""
        w_F = self.datum.weyl.longest_element(facet.simple)
        return scale(sign, self.datum.weyl.act(w_F, self._two_rho))

    def decomposition(self, lam, facet, sign):
        """A canonical pair (mu, nu) in C^s(F) with lam = mu - nu.

        nu is chosen of minimal sup-norm, then of minimal length, then lexicographically.
        """
        key = (tuple(lam), facet, sign)
        cached = self._decompositions.get(key)
        if cached is not None:
            return cached
        lam = tuple(lam)
        interior = self._interior_point(facet, sign)
        n = 0
        while not self.in_chamber(add(lam, scale(n, interior)), facet, sign):
            n += 1
        fallback = scale(n, interior)
        found = None
        for radius in range(sup_norm(fallback) + 1):
            ring = [
                nu
                for nu in product(range(-radius, radius + 1), repeat=self.datum.rank_x)
                if sup_norm(nu) == radius
                and self.in_chamber(nu, facet, sign)
                and self.in_chamber(add(lam, nu), facet, sign)
            ]
            if ring:
                found = min(ring, key=lambda nu: (self._length(nu), nu))
                break
        nu = found if found is not None else fallback
        result = (add(lam, nu), nu)
        self._decompositions[key] = result
        return result

    def _minimal_chamber_step(self, facet, sign):
        """An element of C^s(F) of minimal positive length."""
        interior = self._interior_point(facet, sign)
        for radius in range(1, sup_norm(interior) + 1):
            ring = [
                nu
                for nu in product(range(-radius, radius + 1), repeat=self.datum.rank_x)
                if sup_norm(nu) == radius and self.in_chamber(nu, facet, sign) and self._length(nu) > 0
            ]
            if ring:
                return min(ring, key=lambda nu: (self._length(nu), nu))
        return interior

    # -- Bernstein maps --------------------------------------------------

    def bernstein_from(self, lam, nu, facet, sign, t=None):
        """B_F^s(lam + t) computed from the decomposition lam = (lam + nu) - nu.

        Raises:
            PreconditionError: if nu or lam + nu is outside C^s(F).
        """
        mu = add(lam, nu)
        if not (self.in_chamber(nu, facet, sign) and self.in_chamber(mu, facet, sign)):
            raise PreconditionError(f"{nu} and {mu} have to lie in the chamber C^{sign}({facet}).")
        exponent = self._length(lam) + self._length(nu) - self._length(mu)
        assert exponent % 2 == 0, "Odd power of v in a Bernstein map."
        algebra, group = self.algebra, self.group
        result = algebra.invert_basis(group.splitting(nu)) * algebra.basis(group.splitting(mu))
        result = result.scale(algebra.coefficients.q_power(exponent // 2))
        if t is not None and any(t):
            result = result * algebra.basis(group.torus(t))
        return result

    def bernstein(self, facet, sign, lam, t=None):
        """B_F^s(lam + t) in generic mode.

        Args:
            facet (StandardFacet): The standard facet F.
            sign (int): +1 or -1.
            lam (tuple of int): The coweight.
            t (tuple of int, optional): Torus part of the coweight in X~_*(T). Defaults to None.
        """
        key = (facet, sign, tuple(lam), tuple(t) if t is not None else None)
        cached = self._maps.get(key)
        if cached is not None:
            return cached
        lam = tuple(lam)
        if self.in_chamber(lam, facet, sign):
            x = self.group.splitting(lam) if t is None else self.group.multiply(
                self.group.splitting(lam), self.group.torus(t)
            )
            result = self.algebra.basis(x)
        else:
            _, nu = self.decomposition(lam, facet, sign)
            result = self.bernstein_from(lam, nu, facet, sign, t)
        self._maps[key] = result
        return result

    def bernstein_alternative(self, facet, sign, lam, t=None):
        """B_F^s(lam + t) from a second decomposition, shifted by a chamber element of positive length."""
        _, nu = self.decomposition(lam, facet, sign)
        return self.bernstein_from(lam, add(nu, self._minimal_chamber_step(facet, sign)), facet, sign, t)

    def bernstein_charp(self, facet, sign, lam, t=None):
        return self.algebra.specialize(self.bernstein(facet, sign, lam, t))

    def product_rule_exponent(self, mu1, mu2):
        """(l(e^mu1) + l(e^mu2) - l(e^(mu1 + mu2))) / 2, the power of q in B(mu1) B(mu2) = q^k B(mu1 + mu2)."""
        exponent = self._length(mu1) + self._length(mu2) - self._length(add(mu1, mu2))
        assert exponent % 2 == 0
        return exponent // 2

    # -- Bernstein basis -------------------------------------------------

    def bernstein_basis(self, x, mode="generic"):
        """B_(x0)^+(x) = q^((l(x) - l(w0) - l(e^lam)) / 2) B_(x0)^+(lam) tau_(w0~) for x = e^lam w0~."""
        cached = self._basis.get(x)
        if cached is None:
            W, group = self.datum.weyl, self.group
            lam = W.act(x.u, x.lam)
            finite_part = self.group.multiply(group.inverse(group.splitting(lam)), x)
            exponent = group.length(x) - W.length(x.u) - self._length(lam)
            assert exponent % 2 == 0, "Odd power of v in a Bernstein basis element."
            cached = (
                self.bernstein(self.x0, 1, lam) * self.algebra.basis(finite_part)
            ).scale(self.algebra.coefficients.v_power(exponent))
            self._basis[x] = cached
        if mode == "generic":
            return cached
        if x not in self._basis_charp:
            self._basis_charp[x] = self.algebra.specialize(cached)
        return self._basis_charp[x]

    def to_bernstein_basis(self, a):
        """Coefficients of an element in the Bernstein basis, by peeling off the longest term.

        Returns:
            dict: TildeElement -> coefficient in the element's coefficient ring
        """
        mode = a.algebra.mode
        remainder = a
        coefficients = {}
        while remainder:
            x = max(remainder.terms, key=a.algebra.sort_key)
            c = remainder.terms[x]
            coefficients[x] = c
            remainder = remainder - self.bernstein_basis(x, mode).scale(c)
        return coefficients

    def from_bernstein_basis(self, coefficients, mode="generic"):
        algebra = self.algebra if mode == "generic" else self.charp
        result = algebra.zero()
        for x, c in coefficients.items():
            result = result + self.bernstein_basis(x, mode).scale(c)
        return result

    # -- central elements ------------------------------------------------

    def orbit(self, lam, t=None):
        """The W-orbit of the pair (lam, t) in X~_*(T), as sorted (lam', t') pairs."""
        group, W = self.group, self.datum.weyl
        t = group.zero_torus if t is None else tuple(t)
        return sorted({(W.act(u, lam), group.torus_act(u, t)) for u in range(W.order)})

    def orbit_sum(self, facet, sign, lam, t=None):
        result = self.algebra.zero()
        for mu, s in self.orbit(lam, t):
            result = result + self.bernstein(facet, sign, mu, s)
        return result

    def central(self, lam, t=None, mode="generic"):
        """z = sum of B_C^+ over the W-orbit of (lam, t)."""
        z = self.orbit_sum(self.chamber_C, 1, lam, t)
        return z if mode == "generic" else self.algebra.specialize(z)

    def orbit_sums_agree(self, lam, t=None):
        """Compare the orbit sums of B_F^s over all standard facets F and both signs.

        Returns:
            tuple: (bool, list of (facet, sign) whose sum differs from the B_C^+ sum)
        """
        reference = self.orbit_sum(self.chamber_C, 1, lam, t)
        differing = []
        for facet in self.datum.all_facets():
            for sign in (1, -1):
                if self.orbit_sum(facet, sign, lam, t) != reference:
                    differing.append((facet, sign))
        if differing:
            logger.warning(f"Orbit sums of {lam} differ for {[(str(f), s) for f, s in differing]}")
        return not differing, differing

    def dominant_coweights(self, max_length, bound=None):
        """Dominant coweights with l(e^lam) <= max_length and entries bounded by bound."""
        bound = max_length if bound is None else bound
        return [
            lam
            for lam in self.datum.coweights_in_box(bound)
            if self.datum.is_dominant(lam) and self._length(lam) <= max_length
        ]

    def coweights_up_to_length(self, max_length, bound=None):
        bound = max_length if bound is None else bound
        return [lam for lam in self.datum.coweights_in_box(bound) if self._length(lam) <= max_length]


def difference(a, b):
    """Terms of a - b, for diff reports."""
    return sorted(
        ((x, str(c)) for x, c in (a - b).terms.items()), key=lambda item: (item[0].lam, item[0].u, item[0].t)
    )

