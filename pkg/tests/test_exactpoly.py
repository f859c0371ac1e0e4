from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logbundles.exactpoly import (
    BinaryForm,
    HomogeneousPoly,
    binary_form_distinct_roots,
    binary_resultant,
    dim_forms,
    euler_contract,
    grad,
    graded_piece_matrix,
    monomial_basis,
)


def poly_strategy(num_vars=3, degree=2):
    basis = monomial_basis(num_vars, degree)
    coeff = st.fractions(
        min_value=-5, max_value=5, max_denominator=3
    )
    return st.lists(coeff, min_size=len(basis), max_size=len(basis)).map(
        lambda cs: HomogeneousPoly(
            num_vars, degree, {m: c for m, c in zip(basis, cs) if c}
        )
    )


def test_monomial_basis_counts():
    assert len(monomial_basis(3, 2)) == 6
    assert len(monomial_basis(4, 3)) == 20
    assert monomial_basis(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_dim_forms_negative_degree_is_zero():
    assert dim_forms(3, -1) == 0
    assert dim_forms(4, 0) == 1


def test_parse_str_round_trip():
    f = HomogeneousPoly.parse("x0^2 + 2*x0*x1 - 1/3*x2^2", 3)
    assert f.degree == 2
    assert HomogeneousPoly.parse(str(f), 3) == f


def test_partial_derivative():
    f = HomogeneousPoly.parse("x0^2*x1 + x2^3", 3)
    assert str(f.partial(0)) == "2*x0*x1"
    assert str(f.partial(2)) == "3*x2^2"


def test_evaluate():
    f = HomogeneousPoly.parse("x0^2 + x1*x2", 3)
    assert f.evaluate([1, 2, 3]) == 7


def test_compose_linear_swap():
    f = HomogeneousPoly.parse("x0^2 - x1^2", 3)
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    g = f.compose_linear(swap)
    assert g == HomogeneousPoly.parse("x1^2 - x0^2", 3)


@settings(max_examples=40, deadline=None)
@given(poly_strategy())
def test_euler_identity(f):
    # sum x_i * df/dx_i = deg * f
    assert euler_contract(f) == f * f.degree


@settings(max_examples=40, deadline=None)
@given(poly_strategy(), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_gradient_evaluates_consistently(f, p):
    # directional check of the chain rule at t=0 along a coordinate
    for j in range(3):
        g = f.partial(j)
        assert g.degree == max(f.degree - 1, 0)


def test_json_round_trip():
    f = HomogeneousPoly.parse("x0*x1 - 5/7*x2^2", 3)
    assert HomogeneousPoly.from_json(f.to_json(), 3) == f


def test_binary_form_distinct_roots():
    # s^2 - t^2: roots 1, -1
    assert binary_form_distinct_roots(BinaryForm(2, [-1, 0, 1])) == 2
    # s^2: double root
    assert binary_form_distinct_roots(BinaryForm(2, [0, 0, 1])) == 1
    # s*t: roots 0 and infinity
    assert binary_form_distinct_roots(BinaryForm(2, [0, 1, 0])) == 2
    # degree drop: t^2 counts the root at infinity
    assert binary_form_distinct_roots(BinaryForm(2, [1, 0, 0])) == 1


def test_binary_resultant():
    # res(s - t, s + t) != 0; res(s - t, 2s - 2t) = 0
    f = BinaryForm(1, [-1, 1])
    g = BinaryForm(1, [1, 1])
    assert binary_resultant(f, g) != 0
    assert binary_resultant(f, BinaryForm(1, [-2, 2])) == 0


def test_graded_piece_matrix_multiplication():
    # multiplication by x0 from S_1 to S_2 on P^2 has rank 3
    x0 = HomogeneousPoly.variable(3, 0)
    m = graded_piece_matrix([[x0]], [0], [-1], 2, 3)
    assert (m.rows, m.cols) == (6, 3)
    assert m.rank() == 3


def test_graded_piece_matrix_zero_twist_blocks():
    f = HomogeneousPoly.parse("x0^2 + x1^2 + x2^2", 3)
    m = graded_piece_matrix([[f]], [2], [0], 0, 3)
    # S_0 -> S_2, one column: the coefficient vector of f
    assert m.cols == 1
    assert m.column(0) == f.coefficient_vector()
