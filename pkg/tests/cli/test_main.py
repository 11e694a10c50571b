import importlib
import json

import pytest

from preopt.cli import dump, main
from preopt.fincat import fincat_to_dict, walking_arrow
from preopt.optic import comb_to_dict

cli_main = importlib.import_module("preopt.cli.main")


@pytest.fixture
def run(capsys):
    """Run the command and return (exit code, parsed stdout)."""

    def invoke(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        assert out.endswith("\n")
        assert len(out.strip().splitlines()) == 1
        return code, json.loads(out)

    return invoke


def test_dump_is_compact_and_sorted():
    assert dump({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_check(run):
    code, payload = run("check", "A*B | s@0, g@1")
    assert code == 0
    assert payload == {
        "ok": True,
        "dom": "A*B",
        "cod": "A*B",
        "slices": 2,
        "holes": [],
        "central": False,
        "literal": "A*B | s@0, g@1",
    }


def test_check_reports_holes(run):
    code, payload = run("check", "A*B | s@0, hole(B,B,0)@1")
    assert code == 0
    assert payload["holes"] == [0]


def test_eq_true_on_interchange(capsys):
    code = main(["eq", "A*B | s@0, g@1", "A*B | g@1, s@0"])
    assert code == 0
    assert capsys.readouterr().out == '{"class_sizes":[2,2],"equal":true}\n'


def test_eq_false_without_a_central_side(run):
    code, payload = run("eq", "A*B | f@0, g@1", "A*B | g@1, f@0")
    assert code == 1
    assert payload["equal"] is False
    assert payload["class_sizes"] == [1, 1]


def test_eq_on_optics(run):
    code, payload = run("eq", "A*B | s@0, hole(B,B,0)@1", "A*B | hole(B,B,0)@1, s@0")
    assert code == 0
    assert payload["equal"] is True


def test_type_error_exit_code(run):
    code, payload = run("check", "A | g@0")
    assert code == 2
    assert payload["error"] == "TypeMismatch"
    assert (payload["line"], payload["column"]) == (1, 5)


def test_syntax_error_exit_code(run):
    code, payload = run("check", "A | s@")
    assert code == 2
    assert payload["error"] == "SyntaxError"
    assert "line" in payload and "column" in payload


def test_normalize_agrees_on_a_class(run):
    _, first = run("normalize", "A*B | g@1, s@0")
    _, second = run("normalize", "A*B | s@0, g@1")
    assert first == second
    assert set(first) == {"literal", "json"}


def test_compose(run):
    code, payload = run("compose", "A | s@0", "A | f@0")
    assert code == 0
    assert payload["literal"] == "A | s@0, f@0"


def test_compose_mismatch(run):
    code, payload = run("compose", "A | s@0", "B | g@0")
    assert code == 2
    assert payload["error"] == "TypeMismatch"


def test_plug_single_hole(run):
    code, payload = run("plug", "A*B | s@0, hole(B,B,0)@1", "B | g@0")
    assert code == 0
    assert payload["literal"] == "A*B | s@0, g@1"


def test_plug_needs_slot_for_many_holes(run):
    code, payload = run("plug", "A*B | hole(A,A,0)@0, barrier, hole(B,B,1)@1", "A | s@0")
    assert code == 2
    assert payload["error"] == "Cli"


def test_plug_chosen_slot(run):
    code, payload = run("plug", "A*B | hole(A,A,0)@0, barrier, hole(B,B,1)@1", "A | s@0", "--slot", "0")
    assert code == 0
    assert payload["literal"] == "A*B | s@0, barrier, hole(B,B,1)@1"


def test_plug_rejects_plain_diagram(run):
    code, payload = run("plug", "A | s@0", "A | f@0")
    assert code == 2
    assert payload["error"] == "Cli"


def test_inputs_and_signature_from_files(run, tmp_path):
    sig_file = tmp_path / "sig.txt"
    sig_file.write_text("atoms X ;\ngen k : X -> X central ;\n")
    literal = tmp_path / "d.txt"
    literal.write_text("X | k@0, k@0\n")
    code, payload = run("check", f"@{literal}", "--sig", str(sig_file))
    assert code == 0
    assert payload["central"] is True
    assert payload["slices"] == 2


def test_json_input(run, tmp_path, diagram):
    path = tmp_path / "d.json"
    path.write_text(json.dumps(comb_to_dict(diagram(["A", "B"], ("s", 0), ("g", 1)))))
    code, payload = run("check", f"@{path}")
    assert code == 0
    assert payload["literal"] == "A*B | s@0, g@1"


def test_missing_file(run, tmp_path):
    code, payload = run("check", f"@{tmp_path / 'absent.txt'}")
    assert code == 2
    assert payload["error"] == "Cli"


def test_invalid_json_input(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, payload = run("check", f"@{path}")
    assert code == 2
    assert payload["error"] == "SyntaxError"


@pytest.mark.parametrize(
    "argv",
    [
        ["eq", "A | s@0"],
        ["bogus"],
        ["laws", "--suite", "nope"],
        ["plug", "A | hole(A,A,0)@0", "A | s@0", "--slot", "-1"],
        ["fincat"],
    ],
)
def test_usage_errors(run, argv):
    code, payload = run(*argv)
    assert code == 2
    assert payload["error"] == "Cli"


def test_budget_from_environment(run, monkeypatch):
    monkeypatch.setenv("PREOPT_BUDGET", "1")
    code, payload = run("eq", "A*B | s@0, g@1", "A*B | g@1, s@0")
    assert code == 2
    assert payload["error"] == "ClassBudgetExceeded"


def test_laws(run):
    code, payload = run("laws", "--suite", "interchange", "--seed", "3", "--iters", "5")
    assert code == 0
    assert payload == {"suite": "interchange", "passed": True, "seed": 3, "iterations": 5}


def test_fincat_example_counts(run):
    code, payload = run("fincat", "--example", "writer:M3")
    assert code == 0
    assert payload == {"example": "writer:M3", "objects": 2, "pure_arrows": 3, "effectful_arrows": 5}


def test_fincat_verify(run):
    code, payload = run("fincat", "--example", "trivial", "--verify", "all")
    assert code == 0
    assert payload["ok"] is True
    assert payload["results"]["coend"]["ok"] is True


def test_fincat_unknown_example(run):
    code, payload = run("fincat", "--example", "writer:Q8")
    assert code == 2
    assert payload["error"] == "FinCat"


def test_fincat_category_document(run, tmp_path):
    path = tmp_path / "walking.json"
    path.write_text(json.dumps(fincat_to_dict(walking_arrow())))
    code, payload = run("fincat", "--category", str(path))
    assert code == 0
    assert payload == {"category": "walking-arrow", "objects": 2, "arrows": 3, "ok": True}


def test_fincat_malformed_category_document(run, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"objects": [0]}))
    code, payload = run("fincat", "--category", str(path))
    assert code == 2
    assert payload["error"] == "FinCat"


def test_render_writes_dot(capsys):
    assert main(["render", "A | s@0"]) == 0
    assert capsys.readouterr().out.startswith("digraph diagram {")


def test_unexpected_errors_are_reported_as_internal(run, monkeypatch):
    def boom(command):
        raise RuntimeError("kaput")

    monkeypatch.setattr(cli_main, "_check", boom)
    code, payload = run("check", "A | s@0")
    assert code == 2
    assert payload == {"error": "Internal", "message": "kaput"}
