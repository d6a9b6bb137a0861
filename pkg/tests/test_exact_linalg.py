import pytest
from hypothesis import given, settings, strategies as st

from conftest import NAMED, S1, primitive_vectors, unimodulars
from ternary_orbits.exact_linalg import (
    Form,
    Unimodular,
    adj3,
    adjugate,
    complete_to_unimodular,
    congruence_transform,
    det3,
    determinant,
    evaluate,
    mat_content,
    mat_pow,
    matmul,
    scale,
)


def test_matrix_convention():
    # (a,b,c,d,e,f) <-> a x^2 + b y^2 + c z^2 + 2d xy + 2e yz + 2f xz
    S = Form(1, 2, 3, 4, 5, 6)
    assert S.matrix == ((1, 4, 6), (4, 2, 5), (6, 5, 3))
    x, y, z = 2, -1, 3
    assert S((x, y, z)) == x*x + 2*y*y + 3*z*z + 8*x*y + 10*y*z + 12*x*z
    assert Form.from_matrix(S.matrix) == S
    assert Form.parse(str(S)) == S


@pytest.mark.parametrize("name,D", [("diag27", 27), ("triple_s1", 27), ("legendre_17", 4913)])
def test_determinants(name, D):
    assert determinant(NAMED[name]) == D


def test_rejects_bad_forms():
    with pytest.raises(ValueError):
        Form(2, 2, 2, 0, 0, 0)  # not primitive
    with pytest.raises(ValueError):
        Form(1, 1, 0, 1, 0, 0)  # singular


@given(st.integers(1, 50), st.integers(1, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_adjugate_of_triple_shape(a, b, c, d):
    m = ((0, 0, a), (0, -b, c), (a, c, d))
    assert adj3(m) == ((-b*d - c*c, a*c, a*b), (a*c, -a*a, 0), (a*b, 0, 0))
    assert det3(m) == a * a * b


@given(st.sampled_from(sorted(NAMED)), unimodulars())
def test_adjugate_twice_and_content(name, U):
    S = congruence_transform(NAMED[name], U)
    D = determinant(S)
    assert adj3(adjugate(S)) == scale(S.matrix, D)
    assert determinant(S) == determinant(NAMED[name])
    assert mat_content(S.matrix) == 1
    assert mat_content(adjugate(S)) == mat_content(adjugate(NAMED[name]))


@given(primitive_vectors())
@settings(max_examples=300)
def test_completion_has_first_column(x):
    M = complete_to_unimodular(x)
    assert M.det == 1
    assert M.column(0) == x


def test_completion_rejects_imprimitive():
    with pytest.raises(ValueError):
        complete_to_unimodular((2, 4, 6))


@given(st.sampled_from(sorted(NAMED)), unimodulars(proper=False), st.tuples(*[st.integers(-30, 30)] * 3))
def test_change_of_variables(name, A, x):
    S = NAMED[name]
    Ax = tuple(sum(A.rows[i][j] * x[j] for j in range(3)) for i in range(3))
    assert evaluate(congruence_transform(S, A), x) == evaluate(S, Ax)


@given(unimodulars(), st.integers(-4, 4))
def test_unimodular_powers(U, k):
    P = mat_pow(U.rows, k)
    Q = mat_pow(U.rows, -k)
    assert matmul(P, Q) == Unimodular(((1, 0, 0), (0, 1, 0), (0, 0, 1))).rows
    assert (U @ U.inverse()).rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_s1_completion_at_first_axis():
    M = complete_to_unimodular((1, 0, 0))
    assert congruence_transform(S1, M).matrix[0][0] == 0
