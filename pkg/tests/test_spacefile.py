import json
from fractions import Fraction

import pytest

from gonil.bilinear import SignatureConvention
from gonil.cli.spacefile import (
    dump_space,
    load_space,
    parse_algebra,
    parse_form,
    parse_meta,
    parse_operator,
    parse_space,
    read_json,
)
from gonil.exceptions import InputError, MetricNotInvariant
from gonil.linalg import Matrix
from gonil.lorentz import nilpotent_block, witt_gram
from gonil.utils import parse_rational, parse_vector
from tests.support import fixture


def test_parse_rational_accepts_ints_and_fractions():
    assert parse_rational(3) == 3
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 4 ") == 4


@pytest.mark.parametrize("value", [0.5, "0.5", "1e3", "2E1"])
def test_parse_rational_refuses_floats(value):
    with pytest.raises(InputError) as e:
        parse_rational(value, "/gram_m/0/0")

    assert e.value.message == "floats forbidden; write 1/2"
    assert e.value.errors["field"] == "/gram_m/0/0"


@pytest.mark.parametrize("value", [True, "1/0", "half", None])
def test_parse_rational_refuses_junk(value):
    with pytest.raises(InputError):
        parse_rational(value)


def test_parse_vector_from_text_and_list():
    assert parse_vector("1, 0, -1/2") == (1, 0, Fraction(-1, 2))
    assert parse_vector(["1", 2]) == (1, 2)

    with pytest.raises(InputError) as e:
        parse_vector(["1", "x"], "/m_span/0")
    assert e.value.errors["field"] == "/m_span/0/1"


def test_read_json_reports_line_and_column():
    with pytest.raises(InputError) as e:
        read_json(b'{\n  "algebra": ,\n}', "broken.json")

    assert e.value.message == "Malformed JSON"
    assert e.value.errors["file"] == "broken.json"
    assert e.value.errors["line"] == 2
    assert e.value.errors["column"] == 14


def test_read_json_refuses_float_literals():
    with pytest.raises(InputError) as e:
        read_json(b'{"gram_m": [[0.5]]}')

    assert e.value.message == "floats forbidden; write 1/2"


def test_read_json_refuses_invalid_utf8():
    with pytest.raises(InputError):
        read_json(b"\xff\xfe{}")


def test_parse_algebra_swaps_reversed_brackets():
    L = parse_algebra(
        {"dim": 3, "brackets": [{"i": 2, "j": "0", "coeffs": {"1": "2"}}]}
    )

    assert L.brackets == {(0, 2): {1: Fraction(-2)}}


def test_parse_algebra_reports_index_out_of_range():
    with pytest.raises(InputError) as e:
        parse_algebra({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"5": "1"}}]})

    assert e.value.message == "Index out of range"
    assert e.value.errors["field"] == "/algebra/brackets/0/coeffs/5"


def test_parse_algebra_refuses_duplicate_brackets():
    entry = {"i": 0, "j": 1, "coeffs": {"1": "1"}}
    with pytest.raises(InputError) as e:
        parse_algebra({"dim": 2, "brackets": [entry, {**entry, "i": 1, "j": 0}]})

    assert e.value.errors["field"] == "/algebra/brackets/1"


def test_parse_algebra_checks_basis_names():
    with pytest.raises(InputError):
        parse_algebra({"dim": 2, "basis_names": ["a"]})


def test_parse_form_must_be_symmetric():
    with pytest.raises(InputError) as e:
        parse_form({"gram_m": [["1", "1"], ["0", "1"]]})

    assert e.value.errors["field"] == "/gram_m"


def test_parse_meta_decodes_the_convention():
    meta = parse_meta({"meta": {"signature_convention": "mostly-minus"}})

    assert meta["signature_convention"] is SignatureConvention.MOSTLY_MINUS
    assert parse_meta({}) == {}
    with pytest.raises(InputError):
        parse_meta({"meta": {"signature_convention": "lightlike"}})
    with pytest.raises(InputError):
        parse_meta({"meta": ["x"]})


def test_parse_space_requires_an_object():
    with pytest.raises(InputError):
        parse_space([])


def test_load_space_keeps_raw_bytes_and_meta():
    loaded = load_space(fixture("abelian_minkowski.json"))

    assert loaded.raw == fixture("abelian_minkowski.json").read_bytes()
    assert loaded.convention is SignatureConvention.MOSTLY_PLUS
    assert loaded.description.startswith("Abelian")


def test_load_space_missing_file(tmp_path):
    with pytest.raises(InputError) as e:
        load_space(tmp_path / "missing.json")

    assert e.value.message == "Cannot read input file"


def test_load_space_surfaces_validation_errors():
    with pytest.raises(MetricNotInvariant):
        load_space(fixture("heisenberg_so2_bad_metric.json"))


def test_dump_space_is_parsed_back():
    loaded = load_space(fixture("heisenberg_so2.json"))
    text = json.dumps(dump_space(loaded.space, loaded.description, "mostly-plus"))
    space, description, convention = parse_space(read_json(text.encode()))

    assert space.g.brackets == loaded.space.g.brackets
    assert space.h_span == loaded.space.h_span
    assert space.metric == loaded.space.metric
    assert description == loaded.description
    assert convention is SignatureConvention.MOSTLY_PLUS


def test_parse_operator_reads_the_canonical_fixture():
    data = read_json(fixture("canonical_block_p2.json").read_bytes())
    B, G = parse_operator(data)

    assert B == nilpotent_block(2)
    assert G.gram == witt_gram(2)


def test_parse_operator_checks_the_shape():
    with pytest.raises(InputError):
        parse_operator({"matrix": [["0"]], "gram": [["1", "0"], ["0", "1"]]})
    assert Matrix.identity(1) == parse_operator({"matrix": [[1]], "gram": [[1]]})[0]
