"""Smoke tests for the destab Python module.

Every expected value here is exact and mirrors a value pinned in the C++
test suite; the point of this file is that the bindings round-trip inputs
and reports faithfully, not to re-prove the library.
"""

from pathlib import Path

import pytest

import destab

DATA = Path(__file__).resolve().parents[2] / "data"

CONIC = destab.Ideal(["x", "y", "z"], ["x*z - y^2"])


# --- weight vectors -------------------------------------------------------


def test_canonicalize():
    assert destab.canonicalize([3, 1, 1]) == [1, 0, 0]
    assert destab.canonicalize([4, 0, 2]) == [2, 0, 1]
    assert destab.canonicalize([2, -1, -1]) == [1, 0, 0]


def test_canonicalize_rejects_central():
    with pytest.raises(ValueError):
        destab.canonicalize([5, 5, 5])


def test_t_equivalence_and_norm():
    assert destab.are_t_equivalent([2, -1, -1], [3, 0, 0])
    assert not destab.are_t_equivalent([1, 0, 0], [0, 1, 0])
    assert destab.sl_norm_squared([2, -1, -1]) == "6"
    assert destab.is_central([7, 7])


def test_lift_exponent():
    assert destab.lift_exponent([1, 0], nvars=2, r=1, l=2) == [2, 1, 0]


# --- ideals and Hilbert data ----------------------------------------------


def test_ideal_round_trip():
    assert CONIC.variables == ["x", "y", "z"]
    assert CONIC.contains("x*z - y^2")
    assert not CONIC.contains("x^2")


def test_load_ideal_from_file():
    conic = destab.load_ideal(str(DATA / "conic.json"))
    assert destab.ideal_equal(conic, CONIC)


def test_hilbert_data():
    assert destab.hilbert_function(CONIC, 3) == 7  # 2k + 1 on a conic
    hp = destab.hilbert_polynomial(CONIC)
    assert hp["coeffs"] == ["1", "2"]
    assert hp["dim"] == 1
    assert destab.projective_dimension(CONIC) == 1


def test_veronese_embedding():
    labels, ideal = destab.veronese_embedding(CONIC, 2)
    assert len(labels) == 5  # degree-2 standard monomials: y^2 is absent
    assert all("y^2" not in lbl for lbl in labels)
    assert len(ideal.variables) == 5


# --- flat limits and invariants --------------------------------------------


def test_flat_limit_is_the_initial_ideal():
    limit = destab.flat_limit(CONIC, [1, 0, 0])
    line_pair = destab.Ideal(["x", "y", "z"], ["y^2"])
    assert destab.ideal_equal(limit, line_pair)
    assert destab.hilbert_function(limit, 3) == 7
    assert destab.ideal_equal(limit, destab.initial_ideal(CONIC, [1, 0, 0]))


def test_df_invariant():
    assert destab.df_invariant(CONIC, [0, 1, 1])["df"] == "1/2"
    assert destab.df_invariant(CONIC, [1, 0, 0])["df"] == "1"
    # Covariance: scaling the weights scales the invariant.
    assert destab.df_invariant(CONIC, [0, 3, 3])["df"] == "3/2"


def test_almost_trivial_screen():
    report = destab.almost_trivial_necessary(CONIC, [1, 0, 0])
    assert report["verdict"] == "Fails"


def test_s_prime_membership():
    assert destab.s_prime_membership(CONIC, [0, 1, 1]) is False


# --- states and the destabilizer -------------------------------------------


def test_mu_report():
    state = destab.State([[2, 0, 0]])
    report = destab.mu_report(state, [1, 0, 0])
    assert report["mu"] == "-2"
    assert report["nu"]["numerator"] == "-4/3"
    assert report["nu"]["normsq"] == "2/3"
    assert report["argmax"] == [0]


def test_mu_value_rational_point():
    state = destab.State([[3, 0, 0], [0, 3, 0]])
    assert destab.mu_value(state, ["1/2", 0, 0]) == "0"


def test_min_norm_point_matches_oracle():
    state = destab.State([[3, 0, 0], [0, 3, 0]])
    got = destab.min_norm_point(state, 3)
    assert got["q"] == ["1/2", "1/2", "-1"]
    assert got["normsq"] == "3/2"
    assert got["support"] == [0, 1]
    assert got["combination"] == ["1/2", "1/2"]
    assert destab.min_norm_point_oracle(state, 3) == got


def test_optimal_destabilizer_doubled_line():
    state = destab.State([[2, 0, 0]])
    report = destab.optimal_destabilizer(state, 2)
    assert report["status"] == "Unstable"
    assert report["direction"] == [1, 0, 0]
    assert report["nu_min"]["numerator"] == "-4"
    assert report["nu_min"]["normsq"] == "6"


def test_hilbert_point_state_of_conic_is_stable():
    state = destab.state_of_hilbert_point(CONIC, 2)
    assert sorted(state.characters) == [[0, 2, 0], [1, 0, 1]]
    report = destab.optimal_destabilizer(state, 2)
    assert report["status"] == "Stable"
    assert report["direction"] is None


# --- building points --------------------------------------------------------


def test_building_point_gaps():
    point = destab.building_point([2, 1, 0])
    assert point["gaps"] == ["1/2", "1/2"]
    assert len(point["flag"]) == 2


def test_building_point_invariance():
    assert destab.same_building_point([2, 1, 0], None, [5, 3, 1], None)
    assert not destab.same_building_point([2, 1, 0], None, [0, 1, 2], None)


def test_parabolic_and_frame_twist():
    upper = [[1, 5], [0, 1]]
    lower = [[1, 0], [5, 1]]
    assert destab.parabolic_contains([1, 0], None, upper)
    assert not destab.parabolic_contains([1, 0], None, lower)
    assert destab.verify_frame_twist([1, 0], None, upper)
    with pytest.raises(ValueError):
        destab.verify_frame_twist([1, 0], None, lower)
