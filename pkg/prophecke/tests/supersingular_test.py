import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import pytest

from prophecke.modules.supersingular import SupersingularModules
from prophecke.utils.errors import PreconditionError

from helper_functions import get_setup, setup_test_for_mode


def _run_sl2_classification_tests():
    """
    Test the supersingular modules of SL2 with q = 3
    * 3 simple supersingular modules, all one-dimensional
    * z acts by zero on them and invertibly on the trivial and sign modules
    * modules with different central characters have no homomorphisms
    """
    supersingular = SupersingularModules(get_setup("SL2").bernstein)
    classified = supersingular.classify()
    assert supersingular.classify() is classified
    assert len(classified) == 3
    for entry in classified:
        assert entry.dimension == 1
        assert entry.supersingular
        assert supersingular.z_acts_by_zero(entry.module)
        assert supersingular.is_supersingular_module(entry.module)
        assert supersingular.invertible_z(entry.module) is None
        assert entry.zcharacter["is_zeta"]
        assert entry.to_json()["dim"] == 1
        assert entry.sigma is None

    others = supersingular.non_supersingular_modules()
    assert len(others) == 2
    for _, _, module in others:
        assert not supersingular.is_supersingular_module(module)
        assert supersingular.invertible_z(module) == (1,)
        assert not supersingular.zeta_character(module)["is_zeta"]

    modules = [entry.module for entry in classified] + [module for _, _, module in others]
    assert supersingular.blocks_separate(modules)


def _run_cross_check_tests():
    """Brute force finds the same one-dimensional supersingular modules of SL2"""
    supersingular = SupersingularModules(get_setup("SL2").bernstein)
    brute = supersingular.brute_force_simples(1)
    assert len(brute) == 5
    assert supersingular.cross_check(1) == (True, 3, 3)


def _run_gl2_classification_tests():
    """
    Test the supersingular modules of GL2 with q = 3
    * 3 simple supersingular modules of dimension 2 for each central scalar
    * pairwise non-isomorphic
    """
    supersingular = SupersingularModules(get_setup("GL2").bernstein)
    classified = supersingular.classify()
    assert len(classified) == 3
    assert all(entry.dimension == 2 for entry in classified)
    assert all(supersingular.is_supersingular_module(entry.module) for entry in classified)
    assert len({entry.character for entry in classified}) == 3

    two_scalars = SupersingularModules(get_setup("GL2").bernstein, pi_scalars=(1, 2))
    assert len(two_scalars.classify()) == 6


def _run_annihilated_lines_tests():
    """
    Test that B_(F_chi)^+(lam) and z_lam kill the supersingular lines of SL2 with X(tau_(n_0)) = 0
    * two of the three supersingular characters vanish on tau_(n_0) and have F_chi != x_0
    * F_chi of the trivial character is x_0
    """
    supersingular = SupersingularModules(get_setup("SL2").bernstein)
    characters = supersingular.characters
    assert supersingular.facet_of(characters.trivial()).simple == frozenset({0})
    assert supersingular.facet_of(characters.sign()).simple == frozenset()
    tested = 0
    for entry in supersingular.classify():
        count, failures = supersingular.annihilated_lines(entry.module, [(1,), (2,)])
        assert failures == []
        tested += count
    assert tested == 4


def _run_missing_sigma_tests():
    """
    Test characters without sigma over F_p
    * with central scalar 2 the twists of trivial of GL2 need a square root of 2 mod 3
    * the supersingular orbits all have length 2 and keep their sigma
    """
    supersingular = SupersingularModules(get_setup("GL2").bernstein, pi_scalars=(2,))
    supersingular.non_supersingular_modules()
    missing = supersingular.missing_sigma["non_supersingular"]
    assert missing
    assert all(entry["pi"] == 2 for entry in missing)
    assert len(supersingular.classify()) == 3
    assert supersingular.missing_sigma["classify"] == []


def _run_brute_force_limit_tests():
    """The brute-force search is limited to 81 candidate matrices per generator"""
    assert SupersingularModules(get_setup("SL2").bernstein).brute_force_feasible(2)
    assert not SupersingularModules(get_setup("SL2").bernstein).brute_force_feasible(3)
    at_five = SupersingularModules(get_setup("GL2", q=5).bernstein)
    assert at_five.brute_force_feasible(1)
    assert not at_five.brute_force_feasible(2)
    assert max(entry.dimension for entry in at_five.classify()) == 2


def _run_precondition_tests():
    """Modules need a cyclic length-zero subgroup"""
    with pytest.raises(PreconditionError):
        SupersingularModules(get_setup("GL2xGL2").bernstein)


test_sl2_classification = setup_test_for_mode(_run_sl2_classification_tests)
test_cross_check = setup_test_for_mode(_run_cross_check_tests)
test_gl2_classification = setup_test_for_mode(_run_gl2_classification_tests)
test_annihilated_lines = setup_test_for_mode(_run_annihilated_lines_tests)
test_missing_sigma = setup_test_for_mode(_run_missing_sigma_tests)
test_brute_force_limit = setup_test_for_mode(_run_brute_force_limit_tests)
test_preconditions = setup_test_for_mode(_run_precondition_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_sl2_classification()
    test_cross_check()
    test_gl2_classification()
    test_annihilated_lines()
    test_missing_sigma()
    test_brute_force_limit()
    test_preconditions()
