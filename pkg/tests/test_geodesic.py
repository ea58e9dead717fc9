from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gonil.exceptions import InputError
from gonil.geodesic import (
    GoStatus,
    affine_parameter,
    candidate_directions,
    geodesic_vector_k,
    go_certify,
    recheck_counterexample,
    residuals,
    sample_direction,
    solve_alpha,
)
from gonil.linalg import vector
from tests.support import space


def test_rotation_makes_v1_plus_z_geodesic():
    R = space("heisenberg_so2.json")
    solution = solve_alpha(R, vector([1, 0, 1, 0]))

    assert solution
    assert solution.alpha == vector([0, 0, 0, 1])
    assert solution.k == 0
    assert not any(solution.residuals)
    assert solution.kernel == ()


def test_alpha_sign_for_v1_plus_2z():
    R = space("heisenberg_so2.json")
    solution = solve_alpha(R, vector([1, 0, 2, 0]))

    assert solution.alpha == vector([0, 0, 0, 2])
    assert solution.k == 0
    assert geodesic_vector_k(R, vector([1, 0, 2, 2])) == 0
    assert geodesic_vector_k(R, vector([1, 0, 2, -2])) is None


def test_solve_alpha_requires_a_vector_of_m():
    R = space("heisenberg_so2.json")

    with pytest.raises(InputError):
        solve_alpha(R, vector([1, 0, 0, 1]))


def test_geodesic_vector_rejects_zero_and_bad_length():
    R = space("heisenberg_so2.json")

    with pytest.raises(InputError):
        geodesic_vector_k(R, vector([0, 0, 0, 0]))
    with pytest.raises(InputError):
        geodesic_vector_k(R, vector([1, 0]))


def test_null_geodesic_has_nonzero_k():
    R = space("null_geodesic.json")
    solution = solve_alpha(R, vector([1, 0]))

    assert geodesic_vector_k(R, vector([1, 0])) == 1
    assert solution.k == 1
    assert solution.null_curve
    assert solution.to_dict()["affine_parameter"] == "exp(-t)"


def test_trivial_isotropy_leaves_v1_plus_z_infeasible():
    R = space("heisenberg_trivialH.json")
    result = solve_alpha(R, vector([1, 0, 1]))

    assert not result
    assert result.to_dict() == {"feasible": False, "xi": ["1", "0", "1"]}


def test_residuals_vanish_only_at_the_solution():
    R = space("heisenberg_so2.json")
    xi = vector([1, 0, 1, 0])

    assert residuals(R, xi, vector([0, 0, 0, 1]), Fraction(0)) == vector([0, 0, 0])
    assert residuals(R, xi, vector([0, 0, 0, 0]), Fraction(0)) == vector([0, 1, 0])


def test_affine_parameter():
    t = sympy.Symbol("t")

    assert affine_parameter(0, t) is t
    assert affine_parameter(2, t) == sympy.exp(-2 * t)
    assert affine_parameter(Fraction(1, 2), 0) == 1


def test_candidate_directions_order():
    directions = list(candidate_directions(2, 1, seed=7))

    assert directions[:3] == [vector([1, 0]), vector([0, 1]), vector([1, 1])]
    assert directions[3] == sample_direction(2, 7, 0, 0)
    assert len(directions) == 4


def test_candidate_directions_with_grid():
    directions = list(candidate_directions(1, 0, seed=0, grid_depth=1))

    assert directions == [vector([1]), vector([-1]), vector([0]), vector([1])]


def test_go_certify_natred_is_a_proof():
    verdict = go_certify(space("abelian_minkowski.json"))

    assert verdict.status is GoStatus.PROVEN_NATRED
    assert verdict.evidence == "proof"


def test_go_certify_finds_counterexample_at_pairwise_sum():
    R = space("heisenberg_trivialH.json")
    verdict = go_certify(R, n_samples=10, seed=0)

    assert verdict.status is GoStatus.COUNTEREXAMPLE
    assert verdict.xi == vector([1, 0, 1])
    assert verdict.n_samples == 5
    assert recheck_counterexample(R, verdict)
    assert verdict.to_dict()["evidence"] == "counterexample"


def test_go_certify_rotation_extension_passes_sampling():
    R = space("heisenberg_so2.json")
    verdict = go_certify(R, n_samples=20, seed=3)

    assert verdict.status is GoStatus.SAMPLED_PASS
    assert verdict.xi is None
    assert not recheck_counterexample(R, verdict)


def test_go_certify_is_deterministic():
    R = space("heisenberg_so2.json")

    assert go_certify(R, 15, 11) == go_certify(R, 15, 11)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1000), st.integers(0, 3), st.integers(0, 50))
def test_sample_direction_depends_only_on_its_counter(seed, stream, index):
    first = sample_direction(4, seed, stream, index)

    assert first == sample_direction(4, seed, stream, index)
    assert all(abs(a) <= 3 for a in first)


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3).filter(any))
def test_rotation_extension_solutions_are_geodesic(coords):
    R = space("heisenberg_so2.json")
    xi = R.from_m(vector(coords))
    solution = solve_alpha(R, xi)

    assert solution
    assert not any(solution.residuals)
    x = tuple(a + b for a, b in zip(xi, solution.alpha))
    assert solution.k == 0
    assert geodesic_vector_k(R, x) == 0


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=2).filter(any))
def test_nonzero_k_only_along_null_directions(coords):
    R = space("null_geodesic.json")
    xi = vector(coords)
    solution = solve_alpha(R, xi)

    if solution and solution.k != 0:
        assert R.inner(xi, xi) == 0
    assert bool(solution) == (coords[0] == 0 or coords[1] == 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3).filter(any))
def test_naturally_reductive_space_needs_no_correction(coords):
    solution = solve_alpha(space("abelian_minkowski.json"), vector(coords))

    assert solution
    assert solution.k == 0
    assert not any(solution.alpha)
