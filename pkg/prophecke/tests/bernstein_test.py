import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import pytest

from prophecke.algebra.bernstein import BernsteinMaps
from prophecke.combinatorics.root_datum import StandardFacet
from prophecke.utils.errors import ModeMismatchError, PreconditionError

from helper_functions import get_setup, setup_test_for_mode, small_elements


def _run_sl2_bernstein_tests():
    """
    Test the Bernstein maps of SL2 with q = 3 by hand
    * B_C^+(lam) = tau_(e^lam) for dominant lam
    * B_C^+(-coroot) = q^2 tau_(e^coroot)^-1 and the product rule
    * z at the coroot is the orbit sum, with leading terms at both orbit translations
    """
    setup = get_setup("SL2")
    bernstein, generic, group = setup.bernstein, setup.generic, setup.group
    chamber = StandardFacet()
    q2 = generic.coefficients.q_power(2)
    assert bernstein.bernstein(chamber, 1, (2,)) == generic.basis(group.splitting((2,)))
    assert bernstein.bernstein(chamber, -1, (-2,)) == generic.basis(group.splitting((-2,)))
    assert bernstein.decomposition((-1,), chamber, 1) == ((0,), (1,))
    negative = bernstein.bernstein(chamber, 1, (-1,))
    assert negative == generic.invert_basis(group.splitting((1,))).scale(q2)
    assert bernstein.product_rule_exponent((1,), (-1,)) == 2
    assert bernstein.product_rule_exponent((1,), (2,)) == 0
    positive = bernstein.bernstein(chamber, 1, (1,))
    assert positive * negative == generic.one().scale(q2)
    assert negative * positive == generic.one().scale(q2)

    assert bernstein.orbit((1,)) == [((-1,), (0,)), ((1,), (0,))]
    z = bernstein.central((1,))
    assert z == positive + negative
    assert set(z.leading_terms()) == {group.splitting((1,)), group.splitting((-1,))}
    assert all(c == generic.coefficients.one for c in z.leading_terms().values())
    assert bernstein.dominant_coweights(4, bound=2) == [(0,), (1,), (2,)]
    assert bernstein.orbit_sums_agree((1,)) == (True, [])

    assert bernstein.bernstein_basis(group.identity) == generic.one()
    x = group.splitting((-1,))
    assert bernstein.bernstein_basis(x) == generic.basis(x)
    assert bernstein.bernstein_basis(x, "charp") == setup.charp.basis(x)


def _run_bernstein_property_tests():
    """
    Test properties of all Bernstein maps for small coweights
    * decompositions lie in the chamber, the value does not depend on them
    * the values specialize to characteristic p
    * orbit sums do not depend on the facet and the sign
    """
    for label in ("SL2", "GL2", "SL3"):
        setup = get_setup(label)
        bernstein, datum = setup.bernstein, setup.datum
        for lam in bernstein.coweights_up_to_length(2, bound=1):
            for facet in datum.all_facets():
                for sign in (1, -1):
                    mu, nu = bernstein.decomposition(lam, facet, sign)
                    assert tuple(m - n for m, n in zip(mu, nu)) == lam
                    assert datum.weyl_chamber_test(mu, facet, sign)
                    assert datum.weyl_chamber_test(nu, facet, sign)
                    value = bernstein.bernstein(facet, sign, lam)
                    assert value == bernstein.bernstein_alternative(facet, sign, lam)
                    assert bernstein.bernstein_charp(facet, sign, lam) == setup.generic.specialize(value)
        for lam in bernstein.dominant_coweights(2, bound=1):
            assert bernstein.orbit_sums_agree(lam)[0]


def _run_center_tests():
    """
    Test the central elements z
    * z commutes with the generators in both modes
    * in characteristic p, z is multiplicative on dominant coweights
    """
    for label in ("SL2", "GL2"):
        setup = get_setup(label)
        bernstein = setup.bernstein
        coweights = bernstein.dominant_coweights(2, bound=1)
        for mode, algebra in (("generic", setup.generic), ("charp", setup.charp)):
            for lam in coweights:
                z = bernstein.central(lam, mode=mode)
                for g in algebra.generators():
                    assert z * g == g * z
        for lam in coweights:
            for mu in coweights:
                product_ = bernstein.central(lam, mode="charp") * bernstein.central(mu, mode="charp")
                total = tuple(a + b for a, b in zip(lam, mu))
                assert product_ == bernstein.central(total, mode="charp")


def _run_bernstein_basis_tests():
    """
    Test the change to the Bernstein basis
    * tau_x has leading term B(x) and the basis change round-trips
    * B(d) = (-1)^l(d) iota(tau_d) for distinguished d
    """
    setup = get_setup("SL2")
    bernstein, generic, affine = setup.bernstein, setup.generic, setup.affine
    for x in small_elements(setup, 3):
        tau = generic.basis(x)
        coefficients = bernstein.to_bernstein_basis(tau)
        assert coefficients[x] == generic.coefficients.one
        assert bernstein.from_bernstein_basis(coefficients) == tau
        if affine.is_distinguished(x.w):
            expected = generic.iota(tau).scale((-1) ** setup.group.length(x))
            assert bernstein.bernstein_basis(x) == expected


def _run_input_tests():
    """Bernstein maps need generic coefficients and chamber decompositions."""
    setup = get_setup("SL2")
    with pytest.raises(ModeMismatchError):
        BernsteinMaps(setup.charp)
    with pytest.raises(PreconditionError):
        setup.bernstein.bernstein_from((1,), (-1,), StandardFacet(), 1)


test_sl2_bernstein = setup_test_for_mode(_run_sl2_bernstein_tests)
test_bernstein_properties = setup_test_for_mode(_run_bernstein_property_tests)
test_center = setup_test_for_mode(_run_center_tests)
test_bernstein_basis = setup_test_for_mode(_run_bernstein_basis_tests)
test_inputs = setup_test_for_mode(_run_input_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_sl2_bernstein()
    test_bernstein_properties()
    test_center()
    test_bernstein_basis()
    test_inputs()
