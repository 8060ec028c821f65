import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

from prophecke.algebra.ideal import DominantSemigroup, IdealJ

from helper_functions import get_setup, setup_test_for_mode, small_elements


def _run_semigroup_tests():
    """
    Test the generators of the dominant semigroup
    * SL2 has Hilbert basis {2} and generator 1
    * SL3 has three generators in the index three lattice
    * GL2 has a one-dimensional lineality lattice
    """
    semigroup = DominantSemigroup(get_setup("SL2").datum)
    assert semigroup.hilbert_basis == [(2,)]
    assert semigroup.generators == [(1,)]
    assert semigroup.lineality == []

    datum = get_setup("SL3").datum
    semigroup = DominantSemigroup(datum)
    assert set(semigroup.hilbert_basis) == {(0, 3), (1, 1), (3, 0)}
    assert set(semigroup.generators) == {(1, 2), (1, 1), (2, 1)}
    for lam in semigroup.generators:
        assert datum.is_dominant(lam)

    semigroup = DominantSemigroup(get_setup("GL2").datum)
    assert len(semigroup.lineality) == 1
    assert get_setup("GL2").datum.is_dominant(semigroup.lift((1,)))


def _run_ideal_tests():
    """
    Test the generating set of J and its filtration property
    * generator coweights and units of SL2, GL2 and SL3
    * z B(x) and B(x) z lie in the next filtration step
    * z^m B(lam) = B((m+1) lam)
    """
    ideal = IdealJ(get_setup("SL2").bernstein)
    assert ideal.generator_coweights == [(1,)]
    assert ideal.units == []
    assert ideal.to_json() == {"generators": [[1]], "units": []}
    assert len(ideal.generators()) == 1
    assert ideal.generators()[0].algebra.mode == "charp"

    ideal = IdealJ(get_setup("GL2").bernstein)
    assert ideal.generator_coweights == [(1, 0)]
    assert len(ideal.units) == 1

    ideal = IdealJ(get_setup("SL3").bernstein)
    assert set(ideal.generator_coweights) == {(1, 2), (1, 1), (2, 1)}

    setup = get_setup("SL2")
    ideal = IdealJ(setup.bernstein)
    ok, failure = ideal.filtration_check(small_elements(setup, 3))
    assert ok and failure is None
    assert ideal.powers_identity((1,), 1)
    assert ideal.powers_identity((1,), 2)


test_semigroup = setup_test_for_mode(_run_semigroup_tests)
test_ideal = setup_test_for_mode(_run_ideal_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_semigroup()
    test_ideal()
