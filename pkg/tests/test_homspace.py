from fractions import Fraction

import pytest

from gonil.bilinear import BilinearForm
from gonil.exceptions import (
    InputError,
    JacobiError,
    MetricNotInvariant,
    NotDirectSum,
    NotReductive,
    NotSubalgebra,
)
from gonil.homspace import build, is_naturally_reductive, project, skew_defect
from gonil.lie import LieAlgebra
from gonil.linalg import Matrix, vector
from gonil.linalg.matrix import unit_vector
from tests.support import space


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: Fraction(1)}}, ("v1", "v2", "z"))


def e(n: int, i: int) -> tuple[Fraction, ...]:
    return unit_vector(n, i)


def test_build_heisenberg_with_rotation():
    R = space("heisenberg_so2.json")

    assert R.dim_h == 1
    assert R.dim_m == 3
    assert R.m_coordinates(vector([1, 2, 3, 4])) == vector([1, 2, 3])
    assert R.h_coordinates(vector([1, 2, 3, 4])) == vector([4])
    assert R.from_m(vector([0, 1, 0])) == e(4, 1)


def test_ad_m_of_the_rotation():
    R = space("heisenberg_so2.json")

    assert R.ad_m(e(4, 3)) == Matrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 0]])


def test_project_splits_into_m_and_h():
    R = space("heisenberg_so2.json")

    xi_m, xi_h = project(R, vector([1, 0, 2, 5]))

    assert xi_m == vector([1, 0, 2, 0])
    assert xi_h == vector([0, 0, 0, 5])


def test_inner_ignores_the_h_component():
    R = space("heisenberg_so2.json")

    assert R.inner(vector([1, 0, 0, 7]), vector([1, 0, 0, -3])) == 1


def test_metric_must_be_invariant():
    with pytest.raises(MetricNotInvariant) as e_info:
        space("heisenberg_so2_bad_metric.json")

    assert e_info.value.errors["witness"] == {"eta": 0, "xi": 0, "zeta": 1}
    assert e_info.value.errors["defect"] == "1"
    assert e_info.value.status == 2


def test_h_and_m_must_be_a_direct_sum():
    with pytest.raises(NotDirectSum):
        build(
            heisenberg(),
            [e(3, 0)],
            [e(3, 0), e(3, 2)],
            BilinearForm(Matrix.identity(2)),
        )


def test_h_must_be_a_subalgebra():
    with pytest.raises(NotSubalgebra) as e_info:
        build(heisenberg(), [e(3, 0), e(3, 1)], [e(3, 2)], BilinearForm(Matrix.identity(1)))

    assert e_info.value.errors["witness"] == {"eta": 0, "eta2": 1}


def test_decomposition_must_be_reductive():
    L = LieAlgebra(2, {(0, 1): {1: Fraction(1)}})

    with pytest.raises(NotReductive) as e_info:
        build(L, [e(2, 1)], [e(2, 0)], BilinearForm(Matrix.identity(1)))

    assert e_info.value.errors["witness"] == {"eta": 0, "xi": 0}


def test_jacobi_is_checked_first():
    L = LieAlgebra(3, {(0, 1): {2: Fraction(1)}, (0, 2): {0: Fraction(1)}})

    with pytest.raises(JacobiError) as e_info:
        build(L, [], [e(3, 0)], BilinearForm(Matrix.identity(1)))

    assert e_info.value.errors["triple"] == [0, 1, 2]


def test_metric_size_must_match_m():
    with pytest.raises(InputError):
        build(heisenberg(), [], [e(3, 0), e(3, 1), e(3, 2)], BilinearForm(Matrix.identity(2)))


def test_vectors_must_have_algebra_length():
    with pytest.raises(InputError) as e_info:
        build(heisenberg(), [], [vector([1, 0])], BilinearForm(Matrix.identity(1)))

    assert e_info.value.errors["field"] == "m_span[0]"


def test_natural_reductivity_witness():
    result = is_naturally_reductive(space("heisenberg_trivialH.json"))

    assert not result
    assert result.witness == (0, 1, 2)
    assert result.defect == 1
    assert result.to_dict() == {
        "naturally_reductive": False,
        "witness": [0, 1, 2],
        "defect": "1",
    }


def test_abelian_space_is_naturally_reductive():
    assert is_naturally_reductive(space("abelian_minkowski.json"))


def test_rotation_extension_is_not_naturally_reductive():
    assert not is_naturally_reductive(space("heisenberg_so2.json"))


def test_skew_defect_vanishes_for_rotations():
    rotation = Matrix.from_rows([[0, -1], [1, 0]])

    assert skew_defect(rotation, Matrix.identity(2)).is_zero
    assert not skew_defect(rotation, Matrix.diagonal([1, 2])).is_zero
