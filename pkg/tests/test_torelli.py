import random
from fractions import Fraction

import pytest

from logbundles.arrangement import Arrangement, ArrangementError, quadric_poly
from logbundles.exactpoly import HomogeneousPoly
from logbundles.linalg import RationalMatrix
from logbundles.sampling import (
    dual_pencil_partner,
    random_conic_arrangement,
    random_diagonal_pair,
    random_invertible_matrix,
    rnc_sample_points,
)
from logbundles.torelli import (
    NeedsAlgebraicRoots,
    QuadricPair,
    diagonal_normal_form,
    dual_pencil_equal,
    iso_witness_oracle,
    on_common_rnc,
    pencil_singular_points,
    quadric_pair_iso_conditions,
    recover_components,
    rnc_fit,
    simultaneous_diagonal_frame,
    unstable_dim,
)

PAIR = QuadricPair.from_diagonals([1, 2, -1], [3, 5, -1])
PARTNER = QuadricPair.from_diagonals([Fraction(3, 2), Fraction(20, 7), -1], [3, 5, -1])
STRANGER = QuadricPair.from_diagonals([1, 3, -1], [3, 5, -1])


def test_pencil_singular_points_diagonal():
    analysis = pencil_singular_points(PAIR)
    assert [lam for lam, _ in analysis.eigenvalues] == [
        Fraction(1, 3),
        Fraction(2, 5),
        Fraction(1),
    ]
    assert analysis.singular_points == (
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
    )
    assert analysis.normal_crossings and analysis.complete


def test_pencil_irrational_roots_reported():
    pair = QuadricPair(
        1, RationalMatrix([[1, 1], [1, 3]]), RationalMatrix.identity(2)
    )
    analysis = pencil_singular_points(pair)
    assert not analysis.complete
    assert analysis.unresolved_factors


def test_simultaneous_frame_identity_for_diagonal():
    p = simultaneous_diagonal_frame(PAIR)
    assert p.is_diagonal() or all(
        sum(1 for i in range(3) if p[i, j] != 0) == 1 for j in range(3)
    )


def test_simultaneous_frame_after_congruence():
    rng = random.Random(23)
    for _ in range(5):
        q = random_invertible_matrix(rng, 3)
        moved = PAIR.congruence(q)
        p = simultaneous_diagonal_frame(moved)
        diag = moved.congruence(p)
        assert diag.a.is_diagonal() and diag.b.is_diagonal()


def test_frame_requires_rational_roots():
    pair = QuadricPair(
        1, RationalMatrix([[1, 1], [1, 3]]), RationalMatrix.identity(2)
    )
    with pytest.raises(NeedsAlgebraicRoots):
        simultaneous_diagonal_frame(pair)


def test_diagonal_normal_form_last_entry():
    a, b, _ = diagonal_normal_form(PAIR)
    assert a == [1, 2] and b == [3, 5]


def test_dual_pencil_equal_examples():
    assert dual_pencil_equal(PAIR, PARTNER)
    assert not dual_pencil_equal(PAIR, STRANGER)
    assert dual_pencil_equal(PAIR, PAIR)


def test_dual_pencil_equal_congruence_invariant():
    rng = random.Random(31)
    for _ in range(5):
        q = random_invertible_matrix(rng, 3)
        assert dual_pencil_equal(PAIR.congruence(q), PARTNER.congruence(q))
        assert not dual_pencil_equal(PAIR.congruence(q), STRANGER.congruence(q))


def test_iso_conditions_positive():
    rep = quadric_pair_iso_conditions(PAIR, PARTNER)
    assert rep.verdict == "isomorphic"
    assert all(v == 0 for v in rep.residuals.values())
    assert all(v != 0 for v in rep.open_conditions.values())


def test_iso_conditions_negative():
    rep = quadric_pair_iso_conditions(PAIR, STRANGER)
    assert rep.verdict == "not-isomorphic"
    assert any(v != 0 for v in rep.residuals.values())


def test_iso_conditions_predicted_member():
    # c_0 = 2 gives t_1 = 3 and the predicted member diag(2, 40/11, -1)
    partner = QuadricPair.from_diagonals([2, Fraction(40, 11), -1], [3, 5, -1])
    rep = quadric_pair_iso_conditions(PAIR, partner)
    assert rep.t_parameters[0] == 3
    assert rep.predicted_duals[0] == RationalMatrix.diagonal(
        [2, Fraction(40, 11), -1]
    )
    assert rep.verdict == "isomorphic"


def test_witness_identity_pair():
    arr = PAIR.arrangement()
    w = iso_witness_oracle(arr, arr)
    assert w is not None
    n1 = n2 = __import__("logbundles.logres", fromlist=["presentation"]).presentation(arr)
    assert w.verify(n1, n2)


def test_witness_positive_and_negative():
    w = iso_witness_oracle(PAIR.arrangement(), PARTNER.arrangement())
    assert w is not None
    assert iso_witness_oracle(PAIR.arrangement(), STRANGER.arrangement()) is None


def test_witness_matches_dual_pencil_on_samples():
    rng = random.Random(47)
    for _ in range(10):
        pair1 = random_diagonal_pair(rng, 2)
        if rng.random() < 0.5:
            pair2 = dual_pencil_partner(rng, pair1)
        else:
            pair2 = random_diagonal_pair(rng, 2)
        equal = dual_pencil_equal(pair1, pair2)
        witness = iso_witness_oracle(pair1.arrangement(), pair2.arrangement())
        if equal:
            if witness is None:
                rep = quadric_pair_iso_conditions(pair1, pair2)
                assert any(v == 0 for v in rep.open_conditions.values())
        else:
            assert witness is None


def test_unstable_dim_members_and_decoys():
    rng = random.Random(13)
    arr = random_conic_arrangement(rng, 3)
    for f in arr.hypersurfaces:
        assert unstable_dim(arr, f) >= 1
    decoy = quadric_poly(RationalMatrix.diagonal([1, 1, 1]))
    assert unstable_dim(arr, decoy) == 0


def test_unstable_dim_projective_invariance():
    rng = random.Random(17)
    arr = random_conic_arrangement(rng, 3)
    cand = arr.hypersurfaces[0]
    p = random_invertible_matrix(rng, 3)
    cols = [[p[i, j] for j in range(3)] for i in range(3)]
    moved = arr.transform(p)
    assert unstable_dim(arr, cand) == unstable_dim(moved, cand.compose_linear(cols))


def test_recover_components_reports_hypotheses():
    rng = random.Random(29)
    arr = random_conic_arrangement(rng, 3)
    decoy = quadric_poly(RationalMatrix.diagonal([1, 1, 1]))
    rep = recover_components(arr, list(arr.hypersurfaces) + [decoy])
    assert rep.member_indices == [0, 1, 2]
    assert rep.hypotheses["enough_components"] is False  # 3 < N + 4 = 9
    assert rep.warnings


def test_rnc_fit_standard_example():
    pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [6, 3, 2]]
    curve = rnc_fit(pts)
    assert curve.parameters == (-1, -2, -3)
    assert curve.contains([6, 4, 3])
    assert not curve.contains([1, 2, 3])


def test_on_common_rnc():
    pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [6, 3, 2]]
    assert on_common_rnc(pts + [[6, 4, 3]])
    assert not on_common_rnc(pts + [[1, 2, 3]])


def test_rnc_projective_invariance():
    rng = random.Random(37)
    pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [6, 3, 2], [6, 4, 3]]
    for _ in range(5):
        p = random_invertible_matrix(rng, 3)
        moved = [p @ [Fraction(x) for x in pt] for pt in pts]
        assert on_common_rnc(moved)


def test_rnc_sample_points_lie_on_curve():
    params = (Fraction(-1), Fraction(-2), Fraction(-3))
    pts = rnc_sample_points(params, [1, 2, Fraction(1, 2), 5, -4, 7])
    assert on_common_rnc(pts)
