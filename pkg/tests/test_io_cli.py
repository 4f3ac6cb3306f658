import json

import pytest

from lyalg import io as lyio
from lyalg.cli import run
from lyalg.errors import FormatError

from conftest import fx


def test_load_algebra_antisym_completion(tmp_path):
    doc = {"dim": 2, "binary": [[0, 1, 0, "1"]], "ternary": []}
    A = lyio.load_algebra(doc)
    assert A.binary[1][0][0] == -1


def test_load_algebra_rejects_inconsistent_orientations():
    doc = {"dim": 2, "binary": [[0, 1, 0, "1"], [1, 0, 0, "1"]], "ternary": []}
    with pytest.raises(FormatError):
        lyio.load_algebra(doc)


def test_load_algebra_rejects_nonzero_diagonal():
    doc = {"dim": 2, "binary": [[0, 0, 1, "1"]], "ternary": []}
    with pytest.raises(FormatError):
        lyio.load_algebra(doc)


def test_load_rejects_bad_index_and_rational():
    with pytest.raises(FormatError):
        lyio.load_algebra({"dim": 2, "binary": [[0, 5, 0, "1"]], "ternary": []})
    with pytest.raises(FormatError):
        lyio.load_algebra({"dim": 2, "binary": [[0, 1, 0, "x"]], "ternary": []})
    with pytest.raises(FormatError):
        lyio.load_algebra({"dim": 2, "binary": [[0, 1, "1"]], "ternary": []})


def test_dump_load_roundtrip(nilpotent4):
    doc = lyio.dump_algebra(nilpotent4)
    B = lyio.load_algebra(doc)
    assert B.binary == nilpotent4.binary and B.ternary == nilpotent4.ternary


def test_relative_path_resolution():
    op = lyio.load_operator(fx("p3_on_nilpotent4.json"))
    assert op.action.acting.dim == 4


def test_cli_check_exit_codes(capsys):
    assert run(["check", "algebra", fx("nilpotent4.json")]) == 0
    assert run(["check", "rrb", fx("p3_on_nilpotent4.json")]) == 0
    assert run(["check", "rrb", "--op", fx("id_on_nilpotent4.json")]) == 1
    assert run(["check", "algebra", fx("no_such_file.json")]) == 2
    assert run(["check", "algebra", fx("bad_algebra.json")]) == 1
    capsys.readouterr()


def test_cli_check_rep_action(capsys):
    assert run(["check", "rep", fx("nilpotent4_adjoint.json")]) == 0
    assert run(["check", "action", fx("nilpotent4_adjoint.json")]) == 0
    capsys.readouterr()


def test_cli_json_byte_stable(capsys):
    assert run(["check", "rrb", fx("p3_on_nilpotent4.json"), "--json", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert run(["check", "rrb", fx("p3_on_nilpotent4.json"), "--json", "--seed", "7"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["verdict"] == "pass"


def test_cli_construct_roundtrips(capsys, tmp_path):
    cases = [
        (["construct", "semidirect", fx("nilpotent4_adjoint.json")], "algebra"),
        (["construct", "descent", fx("p3_on_nilpotent4.json")], "algebra"),
        (["construct", "post", fx("p3_on_nilpotent4.json")], "post"),
        (["construct", "lift", fx("p3_on_nilpotent4.json")], "nijenhuis"),
    ]
    for argv, check in cases:
        assert run(argv + ["--json"]) == 0
        out = capsys.readouterr().out
        path = tmp_path / ("rt_%s.json" % check)
        path.write_text(out)
        assert run(["check", check, str(path)]) == 0
        capsys.readouterr()
    # subadjacent consumes the post output
    assert run(["construct", "post", fx("p3_on_nilpotent4.json"), "--json"]) == 0
    post_doc = capsys.readouterr().out
    p = tmp_path / "post.json"
    p.write_text(post_doc)
    assert run(["construct", "subadjacent", str(p), "--json"]) == 0
    sub_doc = capsys.readouterr().out
    q = tmp_path / "sub.json"
    q.write_text(sub_doc)
    assert run(["check", "algebra", str(q)]) == 0
    capsys.readouterr()


def test_cli_cohomology(capsys):
    assert run(["cohomology", "--op", fx("p3_on_nilpotent4.json"),
                "--degree", "1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["data"]["cocycles"] == 12
    assert payload["data"]["coboundaries"] == 0
    assert payload["data"]["cohomology"] == 12


def test_cli_deform(capsys):
    assert run(["deform", "linear", "--op", fx("p3_on_nilpotent4.json"),
                "--t1", fx("t1_family.json")]) == 0
    assert run(["deform", "equiv", "--op", fx("p3_on_nilpotent4.json"),
                "--t1", fx("t1_family.json"), "--t2", fx("t1_family.json"),
                "--x", fx("x_e1e2.json")]) == 0
    assert run(["deform", "obstruct", "--op", fx("p3_on_nilpotent4.json"),
                "--terms", fx("t1_family.json"), "--extend", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert payload["data"]["closed"] and payload["data"]["extendable"]


def test_cli_usage_errors(capsys):
    assert run(["deform", "linear", "--op", fx("p3_on_nilpotent4.json")]) == 2
    assert run(["check"]) == 2
    assert run([]) == 2
    capsys.readouterr()


def test_cli_all_violations(capsys):
    assert run(["check", "rrb", fx("id_on_nilpotent4.json"), "--json",
                "--all-violations"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "fail"
    assert len(payload["violations"]) >= 1
