import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gonil.bilinear import BilinearForm, is_lorentz
from gonil.exceptions import InputError, StructuralError
from gonil.linalg import Matrix, inverse
from gonil.lorentz import (
    NONUNIT_SCALE,
    CanonicalKind,
    check_skew,
    classify,
    nilpotent_block,
    nilpotent_witness_basis,
    witt_gram,
)
from tests.support import unimodular

MINKOWSKI = BilinearForm(Matrix.diagonal([-1, 1, 1]))
BOOST = Matrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
ROTATION = Matrix.from_rows([[0, 0, 0], [0, 0, -1], [0, 1, 0]])


def test_witt_gram_is_lorentz():
    assert is_lorentz(BilinearForm(witt_gram(0)))
    assert is_lorentz(BilinearForm(witt_gram(2)))
    assert witt_gram(1).rows == 4


def test_canonical_block_is_skew():
    assert check_skew(nilpotent_block(2), BilinearForm(witt_gram(2)))
    assert check_skew(BOOST, MINKOWSKI)
    assert not check_skew(BOOST, BilinearForm(Matrix.identity(3)))


def test_check_skew_needs_matching_shapes():
    with pytest.raises(InputError):
        check_skew(Matrix.zeros(2, 2), MINKOWSKI)


def test_check_skew_needs_nondegenerate_form():
    with pytest.raises(InputError):
        check_skew(Matrix.zeros(2, 2), BilinearForm(Matrix.diagonal([1, 0])))


def test_classify_boost_is_semisimple():
    result = classify(BOOST, MINKOWSKI)

    assert result.kind is CanonicalKind.SEMISIMPLE
    assert result.mu == -1
    assert result.c_block_dim == 1
    assert result.to_dict()["minimal_polynomial"] == "t**3 - t"


def test_classify_scaled_boost():
    assert classify(BOOST.scaled(2), MINKOWSKI).mu == -2


def test_classify_rotation_has_zero_mu():
    result = classify(ROTATION, MINKOWSKI)

    assert result.kind is CanonicalKind.SEMISIMPLE
    assert result.mu == 0


def test_classify_irrational_boost_is_undecided():
    B = Matrix.from_rows([[0, 2], [1, 0]])
    result = classify(B, BilinearForm(Matrix.diagonal([-1, 2])))

    assert result.kind is CanonicalKind.UNDECIDED_EXACT
    assert result.mu is None
    assert result.mu_estimate == pytest.approx(-(2**0.5))


def test_classify_zero_and_nilpotent():
    G = BilinearForm(witt_gram(0))

    assert classify(Matrix.zeros(3, 3), G).kind is CanonicalKind.ZERO
    nilpotent = classify(nilpotent_block(0), G)
    assert nilpotent.kind is CanonicalKind.NON_SEMISIMPLE
    assert nilpotent.c_block_dim == 0
    assert nilpotent.minimal_polynomial == (1, 0, 0, 0)


def test_classify_rejects_non_lorentz_forms():
    rotation = Matrix.from_rows([[0, -1], [1, 0]])

    with pytest.raises(InputError):
        classify(rotation, BilinearForm(Matrix.identity(2)))


def test_classify_rejects_non_skew_operators():
    with pytest.raises(InputError):
        classify(Matrix.identity(3), MINKOWSKI)


def test_witness_of_canonical_block_is_identity():
    form = nilpotent_witness_basis(nilpotent_block(2), BilinearForm(witt_gram(2)))

    assert form.witness == Matrix.identity(5)
    assert form.canonical_gram == witt_gram(2)
    assert form.c_block_dim == 2
    assert form.flags == {}


def test_witness_keeps_nonsquare_scale():
    form = nilpotent_witness_basis(nilpotent_block(0), BilinearForm(witt_gram(0, 2)))

    assert form.flags == {NONUNIT_SCALE: "2"}
    assert form.canonical_gram == witt_gram(0, 2)
    assert form.to_dict()["flags"] == {"NONUNIT_SCALE": "2"}


def test_witness_needs_a_nonzero_nilpotent():
    with pytest.raises(StructuralError):
        nilpotent_witness_basis(Matrix.zeros(3, 3), BilinearForm(witt_gram(0)))
    with pytest.raises(StructuralError):
        nilpotent_witness_basis(BOOST, MINKOWSKI)


@settings(max_examples=50, deadline=None)
@given(
    st.integers(0, 2),
    st.lists(st.integers(-2, 2), min_size=1, max_size=10),
    st.lists(st.integers(-2, 2), min_size=1, max_size=10),
)
def test_witness_recovers_conjugated_block(p, lower, upper):
    P = unimodular(3 + p, lower, upper)
    B = inverse(P) @ nilpotent_block(p) @ P
    G = BilinearForm(P.T @ witt_gram(p) @ P)

    assert classify(B, G).kind is CanonicalKind.NON_SEMISIMPLE
    form = nilpotent_witness_basis(B, G)
    assert form.canonical_matrix == nilpotent_block(p)
    assert NONUNIT_SCALE not in form.flags
    assert inverse(form.witness) @ B @ form.witness == form.canonical_matrix
    assert form.witness.T @ G.gram @ form.witness == form.canonical_gram
