import random
from fractions import Fraction

import pytest

from logbundles.arrangement import Arrangement, ArrangementError, quadric_poly
from logbundles.exactpoly import HomogeneousPoly
from logbundles.linalg import RationalMatrix
from logbundles.logres import (
    chern,
    chern_residue_route,
    cohomology,
    cohomology_table,
    euler_characteristic,
    line_matrix,
    monad,
    presentation,
    splitting_on_line,
    stability_certificate,
)
from logbundles.sampling import random_arrangement, random_line


def conic_pair():
    return Arrangement(
        2,
        (
            quadric_poly(RationalMatrix.diagonal([1, 2, -1])),
            quadric_poly(RationalMatrix.diagonal([3, 5, -1])),
        ),
    )


def test_presentation_shape_and_entries():
    arr = conic_pair()
    pres = presentation(arr)
    assert pres.row_twists == (2, 2)
    assert pres.col_twists == (1, 1, 1, 0)
    # last row carries only the partials of the last member
    f1, f2 = arr.hypersurfaces
    assert pres.entries[1][0] == f2.partial(0)
    assert pres.entries[1][3].is_zero()
    # the f-block sits above
    assert pres.entries[0][3] == f1


def test_presentation_section_matrix_shape():
    pres = presentation(conic_pair())
    m = pres.section_matrix(0)
    # S_1^3 (+) S_0 -> S_2^2 in coordinates
    assert (m.rows, m.cols) == (12, 10)


def test_monad_composition_vanishes():
    arr = conic_pair()
    m, n = monad(arr)
    comp = n.compose(m)
    assert all(p.is_zero() for row in comp.entries for p in row)


def test_chern_conic_pair():
    assert chern(conic_pair()) == [1, 3]


def test_chern_two_routes_agree():
    rng = random.Random(11)
    for _ in range(10):
        n = rng.choice([2, 3])
        ell = rng.randint(1, 3)
        degrees = [rng.randint(1, 3) for _ in range(ell)]
        arr = random_arrangement(rng, n, degrees)
        assert chern(arr) == chern_residue_route(arr)


def test_h0_conic_pair_is_one():
    assert cohomology(conic_pair(), 0, 0) == 1


def test_cohomology_table_euler_consistency():
    arr = conic_pair()
    table = cohomology_table(arr, -3, 3)
    for t in range(-3, 4):
        alt = sum((-1) ** i * table[(i, t)] for i in range(3))
        assert alt == euler_characteristic(arr, t)


def test_cohomology_rejects_curves():
    line = Arrangement(1, (HomogeneousPoly.parse("x0", 2),))
    with pytest.raises(ArrangementError):
        cohomology(line, 0, 0)


def test_splitting_generic_and_jumping():
    arr = conic_pair()
    e0 = [1, 0, 0]
    e1 = [0, 1, 0]
    e2 = [0, 0, 1]
    assert splitting_on_line(arr, line_matrix(e0, e1), -1).degrees == (1, -2)
    assert splitting_on_line(arr, line_matrix(e0, e2), -1).degrees == (1, -2)
    assert splitting_on_line(arr, line_matrix(e1, e2), -1).degrees == (1, -2)
    generic = line_matrix([1, 1, 0], [0, 1, 2])
    assert splitting_on_line(arr, generic, -1).degrees == (0, -1)


def test_splitting_sums_to_restricted_c1():
    arr = conic_pair()
    c1 = chern(arr)[0]
    rng = random.Random(3)
    for _ in range(5):
        line = random_line(rng, 2)
        split = splitting_on_line(arr, line, -1)
        assert sum(split.degrees) == c1 + 2 * (-1)


def test_stability_certificate():
    rep = stability_certificate(conic_pair())
    assert rep.c1_dual == -1
    assert rep.criterion_satisfied
    one_line = Arrangement(2, (HomogeneousPoly.parse("x0", 3),))
    assert not stability_certificate(one_line).criterion_satisfied
