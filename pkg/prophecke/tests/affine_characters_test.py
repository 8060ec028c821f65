import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import pytest

from prophecke.modules.affine_characters import AffineCharacter, AffineCharacters
from prophecke.modules.induced_module import OmegaTildeGroup
from prophecke.utils.errors import ModeMismatchError, PreconditionError

from helper_functions import get_setup, setup_test_for_mode


def _run_enumeration_tests():
    """
    Test the affine characters of SL2 and GL2 with q = 3
    * SL2 has 5 characters, 2 of them trivial or sign twists
    * GL2 has 10 characters, 6 of them supersingular
    """
    setup = get_setup("SL2")
    characters = AffineCharacters(setup.charp)
    all_characters = characters.enumerate()
    assert len(all_characters) == 5
    assert all_characters == sorted(all_characters)
    assert characters.trivial() == AffineCharacter((0,), (0, 0))
    assert characters.sign() == AffineCharacter((0,), (-1, -1))
    assert AffineCharacter((1,), (0, 0)) in all_characters
    twists = [chi for chi in all_characters if characters.is_trivial_or_sign_twist(chi)]
    assert twists == [characters.sign(), characters.trivial()]
    assert characters.twisting_characters() == [(0,)]
    with pytest.raises(PreconditionError):
        characters.twist(characters.trivial(), (1,))
    assert characters.twist(characters.sign(), (0,)) == characters.sign()

    characters = AffineCharacters(get_setup("GL2").charp)
    all_characters = characters.enumerate()
    assert len(all_characters) == 10
    supersingular = [chi for chi in all_characters if not characters.is_trivial_or_sign_twist(chi)]
    assert len(supersingular) == 6

    with pytest.raises(ModeMismatchError):
        AffineCharacters(setup.generic)


def _run_value_tests():
    """
    Test values of characters on the affine subalgebra
    * values on torus elements and on the lifts n_A
    * composing with iota_C exchanges trivial and sign
    """
    setup = get_setup("SL2")
    charp, group = setup.charp, setup.group
    characters = AffineCharacters(charp)
    trivial, sign = characters.trivial(), characters.sign()
    for t in ((0,), (1,)):
        assert characters.value(trivial, group.torus(t)) == 1
    for n in group.simple_lifts:
        assert characters.value(trivial, n) == 0
        assert characters.value(sign, n) == -1
    n1, n0 = group.simple_lifts
    assert characters.value(sign, group.multiply(n1, n0)) == 1

    assert characters.compose_with_iota_C(trivial) == sign
    assert characters.compose_with_iota_C(sign) == trivial
    other = AffineCharacter((1,), (0, 0))
    assert characters.compose_with_iota_C(other) == other
    for chi in characters.enumerate():
        composed = characters.compose_with_iota_C(chi)
        for n in group.simple_lifts:
            assert characters.value_on(chi, charp.iota_C(charp.basis(n))) == characters.value(composed, n)


def _run_omega_action_tests():
    """
    Test the action of the length-zero subgroup of GL2
    * the supersingular characters form 3 orbits of size 2
    * the generator lies outside the affine part
    * conjugating by a positive length element raises PreconditionError
    """
    setup = get_setup("GL2")
    characters = AffineCharacters(setup.charp)
    generator = OmegaTildeGroup(setup.group).generator
    assert setup.group.length(generator) == 0
    supersingular = [chi for chi in characters.enumerate() if not characters.is_trivial_or_sign_twist(chi)]
    orbits = {tuple(sorted(characters.orbit(generator, chi))) for chi in supersingular}
    assert len(orbits) == 3
    assert all(len(orbit) == 2 for orbit in orbits)
    for chi in characters.enumerate():
        assert characters.conjugate(setup.group.identity, chi) == chi
    with pytest.raises(PreconditionError):
        characters.value(characters.trivial(), generator)
    with pytest.raises(PreconditionError):
        characters.conjugate(setup.group.simple_lifts[0], characters.trivial())


test_enumeration = setup_test_for_mode(_run_enumeration_tests)
test_values = setup_test_for_mode(_run_value_tests)
test_omega_action = setup_test_for_mode(_run_omega_action_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_enumeration()
    test_values()
    test_omega_action()
