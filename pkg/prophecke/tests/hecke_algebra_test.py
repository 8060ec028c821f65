import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import pytest

from prophecke.algebra.hecke_algebra import HeckeAlgebra
from prophecke.utils.errors import IntegralityError, ModeMismatchError
from prophecke.utils.rng import RNG

from helper_functions import algebra_for, get_setup, setup_test_for_mode, small_elements


def _run_relation_tests(mode):
    """
    Test the defining relations in the given coefficient mode
    * SL2: tau_n^2 = q tau_(n^2) + c_A tau_n with n^2 = coroot(-1)
    * products with length-zero elements and length-additive products
    * associativity on sampled triples
    """
    setup = get_setup("SL2")
    algebra, group = algebra_for(setup, mode), setup.group
    n1 = group.simple_lifts[0]
    minus_one = group.torus((1,))
    expected = (
        algebra.basis(minus_one).scale(algebra.coefficients.q)
        + algebra.basis(n1)
        + algebra.basis(group.multiply(minus_one, n1))
    )
    assert algebra.basis(n1) * algebra.basis(n1) == expected
    assert algebra.c_A(0) == algebra.basis(group.identity) + algebra.basis(minus_one)
    assert len(algebra.generators()) == 3

    rng = RNG(42)
    for label in ("SL2", "SL3", "GL2"):
        setup = get_setup(label)
        algebra, group = algebra_for(setup, mode), setup.group
        pool = small_elements(setup, 2)
        one = algebra.one()
        for x in pool:
            tau = algebra.basis(x)
            assert tau * one == tau and one * tau == tau
            for y in pool:
                if group.length(group.multiply(x, y)) == group.length(x) + group.length(y):
                    assert tau * algebra.basis(y) == algebra.basis(group.multiply(x, y))
            t = group.torus(tuple(rng.integers(0, group.modulus) for _ in range(group.rank)))
            assert algebra.basis(t) * tau == algebra.basis(group.multiply(t, x))
            assert tau * algebra.basis(t) == algebra.basis(group.multiply(x, t))
        for _ in range(15):
            a, b, c = (algebra.basis(rng.choice(pool)) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert (a + b) * c == a * c + b * c


def _run_involution_tests(mode):
    """
    Test the involutions iota and iota_C
    * iota(tau_n) = c_A - tau_n and iota is an involution
    * iota agrees with (-q)^l(x) (tau_(x^-1))^-1 in generic mode
    * v_C changes signs on odd length-zero elements only
    """
    setup = get_setup("SL2")
    algebra, group = algebra_for(setup, mode), setup.group
    for k, n in enumerate(group.simple_lifts):
        assert algebra.iota(algebra.basis(n)) == algebra.c_A(k) - algebra.basis(n)
        assert algebra.v_C(algebra.basis(n)) == algebra.basis(n)
    for label in ("SL2", "GL2"):
        setup = get_setup(label)
        algebra, group = algebra_for(setup, mode), setup.group
        for x in small_elements(setup, 2):
            tau = algebra.basis(x)
            assert algebra.iota(algebra.iota(tau)) == tau
            assert algebra.iota_C(algebra.iota_C(tau)) == tau
            if mode == "generic":
                assert algebra.iota(tau) == algebra.iota_from_inverse(x)
                assert algebra.invert_basis(x) * tau == algebra.one()

    pgl2 = get_setup("PGL2")
    algebra = algebra_for(pgl2, mode)
    generator, _ = pgl2.affine.omega_cyclic_data()
    tau = algebra.basis(pgl2.group.lift(generator))
    assert algebra.v_C(tau) == -tau


def _run_characteristic_p_tests():
    """
    Test characteristic p features
    * torus idempotents: orthogonal, summing to one, projected quadratic relation
    * specialization from generic mode and its failures
    * mixing coefficient modes is rejected
    """
    setup = get_setup("SL2")
    generic, charp, group = setup.generic, setup.charp, setup.group
    idempotents = [charp.idempotent(xi) for xi in group.characters()]
    total = charp.zero()
    for i, e in enumerate(idempotents):
        total = total + e
        assert e * e == e
        for j, f in enumerate(idempotents):
            if i != j:
                assert not e * f
    assert total == charp.one()
    n1 = charp.basis(group.simple_lifts[0])
    trivial, nontrivial = idempotents
    assert trivial * n1 * n1 == -(trivial * n1)
    assert not nontrivial * n1 * n1

    x = group.simple_lifts[0]
    assert generic.specialize(generic.basis(x)) == charp.basis(x)
    assert not generic.specialize(generic.basis(x).scale(generic.coefficients.q))
    with pytest.raises(IntegralityError):
        generic.specialize(generic.basis(x).scale(generic.coefficients.v_power(1)))
    with pytest.raises(ModeMismatchError):
        generic.idempotent(group.zero_torus)
    with pytest.raises(ModeMismatchError):
        charp.invert_basis(x)
    with pytest.raises(ModeMismatchError):
        charp.specialize(charp.basis(x))
    with pytest.raises(ModeMismatchError):
        generic.basis(x) + charp.basis(x)
    with pytest.raises(ModeMismatchError):
        generic.basis(x) == charp.basis(x)
    assert generic.in_mode("charp") is charp
    assert charp.in_mode("generic") is generic


def _run_default_mode_tests(mode):
    """The mode of a new algebra follows set_up_mode; a corrupted quadratic relation is detectable."""
    group = get_setup("SL2").group
    algebra = HeckeAlgebra(group)
    assert algebra.mode == mode
    corrupted = HeckeAlgebra(group, mode, corrupt_quadratic=True)
    n1 = group.simple_lifts[0]
    assert corrupted.basis(n1) * corrupted.basis(n1) != (
        corrupted.basis(group.torus((1,))).scale(corrupted.coefficients.q)
        + corrupted.basis(n1)
        + corrupted.basis(group.multiply(group.torus((1,)), n1))
    )
    assert algebra.basis(n1).to_json()["mode"] == mode


test_relations_generic = setup_test_for_mode(_run_relation_tests, "generic")
test_relations_charp = setup_test_for_mode(_run_relation_tests, "charp")
test_involutions_generic = setup_test_for_mode(_run_involution_tests, "generic")
test_involutions_charp = setup_test_for_mode(_run_involution_tests, "charp")
test_characteristic_p = setup_test_for_mode(_run_characteristic_p_tests)
test_default_mode_generic = setup_test_for_mode(_run_default_mode_tests, "generic")
test_default_mode_charp = setup_test_for_mode(_run_default_mode_tests, "charp")


if __name__ == "__main__":
    # used to run this test individually
    test_relations_generic()
    test_relations_charp()
    test_involutions_generic()
    test_involutions_charp()
    test_characteristic_p()
    test_default_mode_generic()
    test_default_mode_charp()
