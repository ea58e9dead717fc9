import hashlib
import io
import json
from types import SimpleNamespace

from gonil.__version__ import __version__
from gonil.cli.__main__ import create_app, main
from tests.support import fixture


def run(*argv, app=None):
    app = app or create_app()
    stdout, stderr = io.StringIO(), io.StringIO()
    code = app.run([str(a) for a in argv], stdout=stdout, stderr=stderr)
    text = stdout.getvalue()
    return code, json.loads(text) if text else None, stderr.getvalue()


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


def test_check_algebra_reports_series():
    code, envelope, _ = run("check-algebra", fixture("filiform_l4.json"))

    assert code == 0
    assert envelope["body"]["jacobi"] == {"ok": True}
    assert envelope["body"]["series"]["dims"] == [4, 2, 1, 0]


def test_check_algebra_reports_jacobi_failure(tmp_path):
    path = write(
        tmp_path,
        "bad.json",
        {
            "algebra": {
                "dim": 3,
                "brackets": [
                    {"i": 0, "j": 1, "coeffs": {"2": "1"}},
                    {"i": 0, "j": 2, "coeffs": {"0": "1"}},
                ],
            }
        },
    )
    code, envelope, _ = run("check-algebra", path)

    assert code == 1
    assert envelope["body"]["jacobi"] == {
        "ok": False,
        "triple": [0, 1, 2],
        "residual": ["0", "0", "1"],
    }


def test_signature_and_convention_flag():
    code, envelope, _ = run("signature", fixture("abelian_minkowski.json"))

    assert code == 0
    assert envelope["body"]["signature"] == {"positive": 2, "negative": 1, "null": 0}
    assert envelope["body"]["lorentz"] is True

    _, envelope, _ = run(
        "--convention", "mostly-minus", "signature", fixture("abelian_minkowski.json")
    )
    assert envelope["body"]["lorentz"] is False
    assert envelope["body"]["convention"] == "mostly-minus"


def test_envelope_carries_provenance():
    path = fixture("heisenberg_trivialH.json")
    _, envelope, _ = run("natred", path)

    assert envelope["tool_version"] == __version__
    assert envelope["command"] == "natred"
    assert envelope["seed"] is None
    assert envelope["input_digest"] == "sha256:" + hashlib.sha256(path.read_bytes()).hexdigest()


def test_natred_failure_exits_one():
    code, envelope, _ = run("natred", fixture("heisenberg_trivialH.json"))

    assert code == 1
    assert envelope["body"]["witness"] == [0, 1, 2]


def test_geodesic_vector_on_a_null_direction():
    code, envelope, _ = run("geodesic-vector", fixture("null_geodesic.json"), "--xi", "1,0")

    assert code == 0
    assert envelope["body"]["k"] == "1"
    assert envelope["body"]["null_curve"] is True


def test_geodesic_vector_with_wrong_rotation_sign():
    code, envelope, _ = run(
        "geodesic-vector", fixture("heisenberg_so2.json"), "--xi=1,0,2,-2"
    )

    assert code == 1
    assert envelope["body"]["geodesic"] is False


def test_solve_alpha_in_m_coordinates():
    code, envelope, _ = run(
        "solve-alpha", fixture("heisenberg_so2.json"), "--xi", "1,0,2", "--in-m"
    )

    assert code == 0
    assert envelope["body"]["alpha"] == ["0", "0", "0", "2"]
    assert envelope["body"]["k"] == "0"


def test_solve_alpha_refuses_floats():
    code, envelope, _ = run("solve-alpha", fixture("heisenberg_so2.json"), "--xi", "0.5,0,0,0")

    assert code == 2
    assert envelope["body"]["details"] == "floats forbidden; write 1/2"
    assert envelope["body"]["errors"]["field"] == "--xi/0"


def test_solve_alpha_checks_coordinate_count():
    code, envelope, _ = run("solve-alpha", fixture("heisenberg_so2.json"), "--xi", "1,0")

    assert code == 2
    assert envelope["body"]["errors"]["dim_g"] == 4


def test_go_check_counterexample():
    code, envelope, _ = run("go-check", fixture("heisenberg_trivialH.json"), "--samples", "10")

    assert code == 1
    assert envelope["seed"] == 0
    assert envelope["body"]["status"] == "COUNTEREXAMPLE"
    assert envelope["body"]["xi"] == ["1", "0", "1"]
    assert envelope["body"]["rechecked"] is True


def test_go_check_natred_proof():
    code, envelope, _ = run("go-check", fixture("abelian_minkowski.json"))

    assert code == 0
    assert envelope["body"]["status"] == "PROVEN_NATRED"


def test_go_check_reruns_are_byte_identical():
    argv = ("go-check", fixture("heisenberg_so2.json"), "--samples", "8", "--seed", "5")
    first, second = io.StringIO(), io.StringIO()

    create_app().run([str(a) for a in argv], stdout=first, stderr=io.StringIO())
    create_app().run([str(a) for a in argv], stdout=second, stderr=io.StringIO())

    assert first.getvalue() == second.getvalue()
    assert json.loads(first.getvalue())["seed"] == 5


def test_config_supplies_defaults():
    app = create_app(SimpleNamespace(GO_SEED=7, GO_SAMPLES=4))
    _, envelope, _ = run("go-check", fixture("heisenberg_so2.json"), app=app)

    assert envelope["seed"] == 7
    assert envelope["body"]["seed"] == 7


def test_canonical_from_an_operator_file():
    code, envelope, _ = run("canonical", fixture("canonical_block_p2.json"))

    assert code == 0
    body = envelope["body"]
    assert body["classification"]["kind"] == "NON_SEMISIMPLE"
    assert body["canonical_form"]["c_block_dim"] == 2
    assert body["canonical_form"]["flags"] == {}


def test_canonical_from_a_space_file():
    code, envelope, _ = run(
        "canonical", fixture("structured_class4.json"), "--x", "0,0,0,1,0"
    )

    assert code == 0
    assert envelope["body"]["classification"]["kind"] == "NON_SEMISIMPLE"
    assert envelope["body"]["canonical_form"]["canonical_matrix"][0] == ["0", "1", "0"]


def test_canonical_space_file_needs_x():
    code, envelope, _ = run("canonical", fixture("structured_class4.json"))

    assert code == 2
    assert envelope["body"]["errors"] == {"field": "--x"}


def test_verify_nondegenerate_with_go_evidence():
    code, envelope, _ = run(
        "verify-nondegenerate", fixture("structured_class4.json"), "--samples", "5"
    )

    assert code == 0
    assert envelope["body"]["verdict"] == "PASS"
    assert envelope["body"]["class"] == 4
    assert envelope["body"]["go_evidence"]["seed"] == 0


def test_verify_nondegenerate_failure_exits_one():
    code, envelope, _ = run(
        "verify-nondegenerate", fixture("filiform_l4.json"), "--samples", "5"
    )

    assert code == 1
    assert envelope["body"]["verdict"] == "FAIL"


def test_verify_nondegenerate_on_degenerate_input_is_an_input_error():
    code, envelope, _ = run(
        "verify-nondegenerate", fixture("degenerate_dim4.json"), "--samples", "5"
    )

    assert code == 2
    assert "verify-degenerate" in envelope["body"]["details"]


def test_verify_degenerate():
    code, envelope, _ = run("verify-degenerate", fixture("degenerate_dim4.json"), "--samples", "5")

    assert code == 0
    assert envelope["body"]["signature_w"] == {"positive": 1, "negative": 1, "null": 0}
    assert "go_evidence" in envelope["body"]


def test_verify_degenerate_not_applicable_exits_two():
    code, envelope, _ = run(
        "--convention",
        "mostly-minus",
        "verify-degenerate",
        fixture("degenerate_dim4.json"),
        "--samples",
        "5",
    )

    assert code == 2
    assert envelope["body"]["verdict"] == "NOT_APPLICABLE"


def test_search_inline_results():
    code, envelope, _ = run(
        "search",
        "--family",
        "filiform",
        "--dims",
        "4",
        "--grid=-1,1",
        "--samples",
        "5",
        "--all-classes",
    )

    assert code == 0
    summary = envelope["body"]["summary"]
    assert summary["counts"] == {"class=3:COUNTEREXAMPLE": 4, "rejected": 12}
    assert len(envelope["body"]["results"]) == 16


def test_search_streams_to_a_file(tmp_path):
    out = tmp_path / "scan.jsonl"
    code, envelope, _ = run(
        "search", "--family", "filiform", "--dims", "4", "--grid=-1,1", "--out", out
    )

    assert code == 0
    assert "results" not in envelope["body"]
    assert envelope["body"]["summary"]["total"] == 16
    assert len(out.read_text().splitlines()) == 16


def test_search_rejects_bad_dims():
    code, envelope, _ = run("search", "--family", "filiform", "--dims", "four")

    assert code == 2
    assert envelope["body"]["errors"] == {"field": "--dims"}


def test_missing_input_file(tmp_path):
    code, envelope, _ = run("natred", tmp_path / "missing.json")

    assert code == 2
    assert envelope["body"]["details"] == "Cannot read input file"
    assert envelope["input_digest"] is None


def test_unknown_flag_is_a_usage_error():
    code, envelope, stderr = run("natred", fixture("abelian_minkowski.json"), "--bogus")

    assert code == 2
    assert envelope is None
    assert "unrecognized arguments" in stderr


def test_main_prints_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == __version__


def test_go_check_rotation_extension_passes():
    code, envelope, _ = run(
        "go-check", fixture("heisenberg_so2.json"), "--samples", "100", "--seed", "7"
    )

    assert code == 0
    assert envelope["body"]["status"] == "SAMPLED_PASS"
    assert envelope["body"]["evidence"] == "sampled"


def test_verifier_aliases_run_the_same_checks():
    code, envelope, _ = run("verify-thm41", fixture("filiform_l4.json"), "--samples", "5")
    _, primary, _ = run("verify-nondegenerate", fixture("filiform_l4.json"), "--samples", "5")

    assert code == 1
    assert envelope["command"] == "verify-thm41"
    assert envelope["body"] == primary["body"]
    assert all(v["equation"] for v in envelope["body"]["violations"])

    code, envelope, _ = run("verify-thm42", fixture("degenerate_dim4.json"), "--samples", "5")

    assert code == 0
    assert envelope["body"]["verdict"] == "PASS"
    assert "go_evidence" in envelope["body"]
