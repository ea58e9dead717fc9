from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gonil.exceptions import InputError, InvarianceError
from gonil.lie import (
    LieAlgebra,
    ad_restricted,
    derived_subalgebra,
    lower_central_series,
    semidirect,
    skew_derivations,
    subalgebra,
    validate,
)
from gonil.linalg import Matrix, vector
from gonil.linalg.matrix import unit_vector
from gonil.search.families import filiform, free_nilpotent


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: Fraction(1)}}, ("v1", "v2", "z"))


def test_bracket_is_antisymmetric_from_stored_constants():
    h3 = heisenberg()
    e = h3.basis()

    assert h3.bracket(e[0], e[1]) == unit_vector(3, 2)
    assert h3.bracket(e[1], e[0]) == vector([0, 0, -1])
    assert h3.structure_constant(1, 0) == {2: -1}


def test_reversed_bracket_keys_are_normalized():
    L = LieAlgebra(3, {(1, 0): {2: Fraction(1)}})

    assert L.brackets == {(0, 1): {2: Fraction(-1)}}


def test_out_of_range_index_is_rejected():
    with pytest.raises(InputError) as e:
        LieAlgebra(3, {(0, 3): {1: Fraction(1)}})

    assert e.value.errors["j"] == 3


def test_names_default_to_e_indices():
    assert LieAlgebra(2).name(1) == "e2"
    assert heisenberg().name(2) == "z"


def test_heisenberg_satisfies_jacobi():
    assert validate(heisenberg()) is None


def test_jacobi_failure_reports_first_triple_and_residual():
    L = LieAlgebra(3, {(0, 1): {2: Fraction(1)}, (0, 2): {0: Fraction(1)}})
    failure = validate(L)

    assert failure is not None
    assert failure.triple == (0, 1, 2)
    assert failure.residual == vector([0, 0, 1])


def test_abelian_algebra():
    L = LieAlgebra(4)

    assert L.is_abelian
    assert validate(L) is None
    assert derived_subalgebra(L) == ()
    assert lower_central_series(L).dims == (4, 0)
    assert lower_central_series(L).nilpotency_class == 1


def test_heisenberg_series():
    series = lower_central_series(heisenberg())

    assert series.dims == (3, 1, 0)
    assert series.nilpotent
    assert series.nilpotency_class == 2


def test_filiform_series():
    assert lower_central_series(filiform(4)).dims == (4, 2, 1, 0)
    assert lower_central_series(filiform(5)).nilpotency_class == 4


def test_non_nilpotent_series_stalls():
    L = LieAlgebra(2, {(0, 1): {1: Fraction(1)}})
    series = lower_central_series(L)

    assert not series.nilpotent
    assert series.nilpotency_class is None
    assert series.to_dict()["dims"] == [2, 1]


def test_ad_restricted_to_derived_algebra():
    L = filiform(4)
    D = derived_subalgebra(L)
    M = ad_restricted(L, unit_vector(4, 0), D)

    assert D == (unit_vector(4, 2), unit_vector(4, 3))
    assert M == Matrix.from_rows([[0, 0], [1, 0]])


def test_ad_restricted_rejects_non_invariant_subspace():
    with pytest.raises(InvarianceError):
        ad_restricted(heisenberg(), unit_vector(3, 0), [unit_vector(3, 1)])


def test_subalgebra_in_its_own_coordinates():
    L = filiform(4)
    S = subalgebra(L, [unit_vector(4, 0), unit_vector(4, 2), unit_vector(4, 3)])

    assert S.brackets == {(0, 1): {2: Fraction(1)}}


def test_subalgebra_rejects_non_closed_span():
    with pytest.raises(InvarianceError):
        subalgebra(heisenberg(), [unit_vector(3, 0), unit_vector(3, 1)])


def test_skew_derivations_of_heisenberg_are_rotations():
    derivations = skew_derivations(heisenberg(), Matrix.identity(3))

    assert len(derivations) == 1
    D = derivations[0]
    assert D[2, 2] == 0
    assert D[0, 1] == -D[1, 0] != 0


def test_semidirect_product_with_rotation():
    h3 = heisenberg()
    g, h, m = semidirect(h3, skew_derivations(h3, Matrix.identity(3)))

    assert g.dim == 4
    assert validate(g) is None
    assert h == [unit_vector(4, 3)]
    assert m == [unit_vector(4, i) for i in range(3)]
    assert g.basis_names == ("v1", "v2", "z", "d1")


@pytest.mark.parametrize(
    "generators, step, dim", [(2, 2, 3), (2, 3, 5), (3, 2, 6), (2, 4, 8)]
)
def test_free_nilpotent_dimensions(generators, step, dim):
    L = free_nilpotent(generators, step)

    assert L.dim == dim
    assert validate(L) is None
    assert lower_central_series(L).nilpotency_class == step


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(-3, 3), min_size=4, max_size=4),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4),
)
def test_bracket_is_bilinear_and_alternating(u, v, w):
    L = filiform(4)
    u, v, w = vector(u), vector(v), vector(w)
    uv = L.bracket(u, v)

    assert L.bracket(u, u) == vector([0] * 4)
    assert L.bracket(v, u) == tuple(-a for a in uv)
    assert L.bracket(tuple(a + b for a, b in zip(u, w)), v) == tuple(
        a + b for a, b in zip(uv, L.bracket(w, v))
    )
