import os
import sys
import tempfile

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

from prophecke.combinatorics.affine_weyl import AffineWeylGroup
from prophecke.combinatorics.extended_group import ExtendedGroup, TildeElement
from prophecke.combinatorics.root_datum import build_root_datum
from prophecke.utils.rng import RNG

from helper_functions import get_setup, setup_test_for_mode
from matrix_models import MonomialModel


def _random_element(group, rng, bound=2):
    t = tuple(rng.integers(0, group.modulus) for _ in range(group.rank))
    u = rng.integers(0, group.weyl.order)
    return TildeElement(t, u, rng.coweight(group.rank, bound))


def _run_group_law_tests():
    """
    Compare the group law of W~ with products of monomial matrices
    * GL2, GL3, SL2 and SL3 with q = 3, GL2 with q = 4 and q = 5
    * products, inverses and the cocycle of the Tits lifts
    """
    rng = RNG(547)
    for label, family, q in (
        ("GL2", "GL", 3),
        ("GL3", "GL", 3),
        ("SL2", "SL", 3),
        ("SL3", "SL", 3),
        ("GL2", "GL", 4),
        ("GL2", "GL", 5),
    ):
        group = get_setup(label, q).group
        model = MonomialModel(group, family)
        for _ in range(60):
            a, b = _random_element(group, rng), _random_element(group, rng)
            assert model.matrix(group.multiply(a, b)) == model.multiply(model.matrix(a), model.matrix(b))
            assert model.multiply(model.matrix(group.inverse(a)), model.matrix(a)) == model.identity()
        weyl = group.weyl
        for u in range(weyl.order):
            for v in range(weyl.order):
                expected = model.multiply(model.tits_lift(u), model.tits_lift(v))
                product_ = group.multiply(group.tits_lift(u), group.tits_lift(v))
                assert product_ == TildeElement(group.cocycle(u, v), weyl.multiply(u, v), group.zero_torus)
                assert model.matrix(product_) == expected
        for k, n in enumerate(group.simple_lifts):
            assert n.w == group.affine.simple_reflections[k]
            assert model.matrix(group.multiply(n, n)) == model.multiply(model.matrix(n), model.matrix(n))


def _run_lift_tests():
    """
    Test the lifts and the torus of SL2 with q = 3
    * n_1 = (0, s, 0), n_0 = (0, s, -1), n_i^2 = coroot_i(-1)
    * T_A, characters and their conjugates
    """
    group = get_setup("SL2").group
    s = group.weyl.simple_reflection(0)
    assert group.minus_one == 1
    assert group.simple_lifts == [TildeElement((0,), s, (0,)), TildeElement((0,), s, (-1,))]
    for k, n in enumerate(group.simple_lifts):
        root = group.affine.simple_affine_roots[k].root
        assert group.multiply(n, n) == group.torus(group.coroot_value(root, group.minus_one))
    assert group.subtorus(0) == [(0,), (1,)]
    assert group.splitting((3,)) == TildeElement((0,), 0, (3,))
    assert group.splitting((3,)).w == group.affine.translation((3,))
    assert group.length(group.simple_lifts[1]) == 1
    assert group.lift_affine(1) == group.simple_lifts[1]
    assert group.lift_affine(1).w == group.affine.simple_reflections[1]
    assert len(group.finite_elements()) == 4
    assert group.characters() == [(0,), (1,)]
    assert group.evaluate((1,), (1,)) == 1
    assert group.restrict_trivial((0,), 0)
    assert not group.restrict_trivial((1,), 0)
    assert group.conjugate_character(s, (1,)) == (1,)
    assert group.to_json(group.simple_lifts[1]) == {"t": [0], "lambda": [-1], "u": "s1"}

    gl2 = get_setup("GL2").group
    assert gl2.minus_one == 1
    assert len(gl2.omega_tilde_generators()) == 3
    assert gl2.conjugate_character(gl2.weyl.simple_reflection(0), (1, 0)) == (0, 1)
    assert gl2.torus_act(gl2.weyl.simple_reflection(0), (1, 0)) == (0, 1)
    assert get_setup("GL2", 4).group.minus_one == 0
    assert get_setup("SL2", 5).group.minus_one == 2


def _run_cocycle_cache_tests():
    """
    Test persisting the cocycle table in PROP_HECKE_CACHE_DIR
    * the first group writes the table, the second one reads it
    * both give the same cocycle
    """
    previous = os.environ.get("PROP_HECKE_CACHE_DIR")
    with tempfile.TemporaryDirectory() as directory:
        os.environ["PROP_HECKE_CACHE_DIR"] = directory
        try:
            datum = build_root_datum("SL3", q=5)
            first = ExtendedGroup(AffineWeylGroup(datum))
            path = os.path.join(directory, "SL3_q5_cocycle.json")
            assert os.path.exists(path)
            second = ExtendedGroup(AffineWeylGroup(datum))
            order = datum.weyl.order
            assert all(
                second._cocycle[(u, v)] == first.cocycle(u, v) for u in range(order) for v in range(order)
            )
        finally:
            if previous is None:
                del os.environ["PROP_HECKE_CACHE_DIR"]
            else:
                os.environ["PROP_HECKE_CACHE_DIR"] = previous


test_group_law = setup_test_for_mode(_run_group_law_tests)
test_lifts = setup_test_for_mode(_run_lift_tests)
test_cocycle_cache = setup_test_for_mode(_run_cocycle_cache_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_group_law()
    test_lifts()
    test_cocycle_cache()
