import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import pytest

from prophecke.modules.weight_module import WeightCharacter, WeightModules
from prophecke.utils.errors import ModeMismatchError, TruncationOverflow

from helper_functions import get_setup, setup_test_for_mode


def _run_character_tests():
    """
    Test the weight characters of SL2 with q = 3
    * 3 characters: two with trivial torus part, one with Pi_(xi_bar) empty
    * values at tau_(n_alpha) and on the torus
    """
    setup = get_setup("SL2")
    weights = WeightModules(setup.bernstein)
    characters = weights.characters()
    assert characters == [
        WeightCharacter((0,), frozenset()),
        WeightCharacter((0,), frozenset({0})),
        WeightCharacter((1,), frozenset()),
    ]
    assert weights.sign_type() == characters[0]
    assert weights.trivial_roots((1,)) == frozenset()
    assert weights.simple_value(characters[0], 0) == -1
    assert weights.simple_value(characters[1], 0) == 0
    assert weights.simple_value(characters[2], 0) == 0
    assert characters[1].facet.simple == frozenset({0})
    assert characters[1].to_json() == {"xi": [0], "pi_chi": [0]}

    group = setup.group
    assert weights.finite_value(characters[2], group.identity) == 1
    assert weights.finite_value(characters[2], group.torus((1,))) == -1
    assert weights.finite_value(characters[0], group.simple_lifts[0]) == -1


def _run_action_tests():
    """
    Test the action on M(chi)
    * 1 (x) 1 is fixed by the torus up to the character value
    * the truncation window is enforced
    * generic elements are rejected
    """
    setup = get_setup("SL2")
    weights = WeightModules(setup.bernstein)
    group, charp = setup.group, setup.charp
    chi = weights.sign_type()
    generator = weights.generator()
    assert weights.act(chi, generator, charp.basis(group.torus((1,))), 4) == generator
    image = weights.act(chi, generator, charp.basis(group.simple_lifts[0]), 4)
    assert image == {setup.affine.identity: setup.charp.coefficients.from_int(-1)}
    translated = weights.act(chi, generator, charp.basis(group.splitting((1,))), 4)
    assert weights.is_single_term(translated)
    assert weights.to_json(translated)[0]["c"]

    with pytest.raises(TruncationOverflow):
        weights.act(chi, generator, charp.basis(group.splitting((3,))), 0)
    with pytest.raises(ModeMismatchError):
        weights.act(chi, generator, setup.generic.basis(group.identity), 4)


def _run_satake_tests():
    """
    Test Satake compatibility on M(chi)
    * (1 (x) 1) z_lam = (1 (x) 1) B_(F_chi)^+(lam) for small dominant lam
    * z is multiplicative on the generator
    """
    for label in ("SL2", "GL2"):
        setup = get_setup(label)
        weights = WeightModules(setup.bernstein)
        coweights = [lam for lam in setup.bernstein.dominant_coweights(2, bound=1) if any(lam)]
        for chi in weights.characters():
            for lam in coweights:
                result = weights.satake_check(chi, lam)
                assert result.equal, (chi, lam)
                assert result.bound >= weights.default_bound(lam)
        chi = weights.sign_type()
        lam = coweights[0]
        assert weights.multiplicativity_check(chi, lam, lam).equal


test_characters = setup_test_for_mode(_run_character_tests)
test_action = setup_test_for_mode(_run_action_tests)
test_satake = setup_test_for_mode(_run_satake_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_characters()
    test_action()
    test_satake()
