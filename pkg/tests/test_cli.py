import io
import json

import pytest

from cyclefact.cli import main
from cyclefact.perm_core import Factorization, equivalent
from cyclefact.plane_tree import PlaneTree

CACTUS8_JSON = '{"n": 8, "polygons": [[4,5],[2,3,5],[1,5,6,8],[6,7]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("alpha,count", [("a2=2", 3), ("a2=1,a3=1", 8), ("a2=0", 1)])
def test_count(capsys, alpha, count):
    code, out, _ = run(capsys, "count", alpha)
    assert code == 0
    assert out.strip().endswith(f": {count}")


def test_count_all_methods_json(capsys):
    code, out, _ = run(capsys, "count", "a2=1,a3=1", "--method", "all", "--profiles", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["agree"]
    assert obj["methods"] == {"genfunc": 8, "trees": 8, "oracle": 8}
    assert sum(p["count"] for p in obj["profiles"]) == 8


def test_count_oracle_cap(capsys, monkeypatch):
    monkeypatch.setenv("CYCLEFACT_ORACLE_CAP", "3")
    code, _, err = run(capsys, "count", "a2=3", "--method", "oracle")
    assert code == 1 and "cap" in err


def test_check_factorization(capsys):
    code, out, _ = run(capsys, "check", "(3 4)(1 2)(2 4)", "--n", "4")
    assert code == 0
    assert out.splitlines()[0] == "evaluates to (1 2 3 4); minimal; heads=2 tails=1"


def test_check_multisets(capsys):
    code, out, _ = run(capsys, "check", "{(1 4 5),(1 3),(2 4)}", "--n", "5")
    assert code == 1 and out.startswith("not arrangeable: condition 3")
    code, out, _ = run(capsys, "check", "{(1 4 5),(1 2),(2 3)}", "--n", "5", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["arrangeable"]
    assert equivalent(Factorization.parse(obj["factorization"], 5),
                      Factorization.parse("(1 4 5)(1 2)(2 3)"))


def test_check_empty_is_identity(capsys):
    code, out, _ = run(capsys, "check", "", "--n", "3")
    assert code == 1
    assert out.startswith("evaluates to ()") and "not a minimal factorization" in out


@pytest.mark.parametrize("argv", [["check", "(1 2"], ["count", "b2=1"], ["count", "a2=x"],
                                  ["convert", "[", "--from", "tree", "--to", "fact"],
                                  ["selftest", "--max-weight", "0"]])
def test_parse_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count"])
    assert info.value.code == 2


def test_convert_fact_to_tree(capsys):
    code, out, _ = run(capsys, "convert", "(1 2)", "--from", "fact", "--to", "tree")
    assert code == 0
    t = PlaneTree.from_json(out)
    assert sum(1 for _ in t.internal_vertices()) == 1 and t.n_leaves == 4


def test_convert_eight_point_cactus(capsys):
    code, out, _ = run(capsys, "convert", CACTUS8_JSON, "--from", "cactus", "--to", "fact")
    assert code == 0
    assert equivalent(Factorization.parse(out.strip()),
                      Factorization.parse("(4 5)(2 3 5)(1 5 6 8)(6 7)"))


def test_convert_chain_roundtrip(capsys, monkeypatch):
    _, tree, _ = run(capsys, "convert", "(4 5)(2 3 5)(1 5 6 8)(6 7)", "--from", "fact", "--to", "tree")
    _, cactus, _ = run(capsys, "convert", tree.strip(), "--from", "tree", "--to", "cactus")
    monkeypatch.setattr("sys.stdin", io.StringIO(cactus))
    _, back, _ = run(capsys, "convert", "-", "--from", "cactus", "--to", "tree")
    assert back == tree


def test_convert_drawings(capsys):
    _, dot, _ = run(capsys, "convert", "(1 2)", "--from", "fact", "--to", "dot")
    assert dot.startswith("graph tree {")
    _, svg, _ = run(capsys, "convert", "(1 2)", "--from", "fact", "--to", "svg")
    assert svg.startswith("<svg")


def test_convert_domain_errors(capsys):
    assert run(capsys, "convert", "(2 3)(1 2)", "--from", "fact", "--to", "tree", "--n", "3")[0] == 1
    bad = '{"n": 4, "polygons": [[1,3],[2,4],[1,2]]}'
    assert run(capsys, "convert", bad, "--from", "cactus", "--to", "fact")[0] == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "a2=2")
    assert code == 0 and len(out.splitlines()) == 3
    _, js, _ = run(capsys, "enumerate", "a2=2", "--json")
    assert [r["factorization"] for r in json.loads(js)] == out.splitlines()


def test_output_is_deterministic(capsys):
    first = run(capsys, "count", "a2=3", "--profiles", "--json")
    assert first == run(capsys, "count", "a2=3", "--profiles", "--json")


@pytest.mark.parametrize("w", [1, 2])
def test_selftest(capsys, w):
    code, out, _ = run(capsys, "selftest", "--max-weight", str(w), "--json")
    assert code == 0 and json.loads(out)["passed"]
