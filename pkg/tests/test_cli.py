import json

import pytest

from irredlab import finspace as fs
from irredlab.cli import main
from irredlab.gallery import catalog, gallery, trace


@pytest.mark.parametrize("name", catalog())
def test_gallery_self_validates(name):
    entry = gallery(name)
    assert entry.mismatches() == {}
    data = json.loads(json.dumps(entry.space.to_json()))
    assert fs.FiniteSpace.from_json(data) == entry.space
    prof = entry.profile()
    assert fs.PropertyProfile.from_json(json.dumps(prof.to_json())) == prof


def test_gallery_minimum_catalog():
    assert {"empty", "point", "sierpinski", "discrete2", "indiscrete2",
            "threePoint140C", "xySkeleton"} <= set(catalog())


def test_gallery_examples():
    p = gallery("threePoint140C").profile()
    assert not p.p1 and p.witnesses["p6"]["meet"] == [2]
    p = gallery("empty").profile()
    assert p.connected and not p.irreducible and p.p1
    p = gallery("xySkeleton").profile()
    assert p.connected and not p.irreducible
    assert [x for x, ok in enumerate(p.pointwise_irreducible) if not ok] == [0]


def test_gallery_detects_tampering():
    entry = gallery("sierpinski")
    bad = type(entry)(entry.name, entry.space, {**entry.expected, "dimension": 0}, entry.provenance)
    assert bad.mismatches() == {"dimension": {"expected": 0, "got": 1}}


def test_unknown_gallery_name_lists_catalog():
    with pytest.raises(KeyError, match="sierpinski"):
        gallery("moebius")


def test_trace_listing():
    lines = trace()
    assert any(l.startswith("Prop 1.20 ->") and "verify_theorems" in l for l in lines)
    assert any("Prop 3.20" in l and "out of scope" in l for l in lines)
    assert any("Cantor" in l and "out of scope" in l for l in lines)


def _run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_cli_enumerate(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    rc, out = _run(capsys, "enumerate", "--max-points", "3", "--iso", "--json", str(out_file))
    assert rc == 0
    assert "n=3: 29 labeled spaces, 9 up to isomorphism" in out
    data = json.loads(out_file.read_text())
    assert data["ok"] and data["total"] == 35 and data["violations"] == []
    assert data["passes"]["prop1.20"] == 35


def test_cli_enumerate_single_check(capsys):
    rc, out = _run(capsys, "enumerate", "--max-points", "2", "--check", "cor2.45")
    assert rc == 0 and "PASS cor2.45" in out and "prop1.20" not in out


def test_cli_enumerate_bound(capsys):
    assert main(["enumerate", "--max-points", "6"]) == 2


def test_cli_search(capsys):
    rc, out = _run(capsys, "search", "--predicate", "not p1", "--max-points", "4")
    assert rc == 0 and "found n=3" in out
    rc, out = _run(capsys, "search", "--predicate", "not p1", "--max-points", "4", "--json")
    assert rc == 0 and json.loads(out)["space"]["n"] == 3
    rc, out = _run(capsys, "search", "--predicate", "p4 and not p3", "--max-points", "3")
    assert rc == 0 and out.startswith("none")
    assert main(["search", "--predicate", "bogus", "--max-points", "2"]) == 2


def test_cli_gallery(capsys):
    rc, out = _run(capsys, "gallery")
    assert rc == 0 and out.count("PASS") == len(catalog())
    rc, out = _run(capsys, "gallery", "threePoint140C", "--dot")
    assert rc == 0 and out.startswith('digraph "threePoint140C"')
    assert main(["gallery", "nope"]) == 2


def test_cli_prodfields(capsys):
    rc, out = _run(capsys, "prodfields", "--field", "f3", "--size", "4", "--samples", "50")
    assert rc == 0 and "PASS" in out
    rc, out = _run(capsys, "prodfields", "--field", "q", "--size", "6", "--demo", "spectrum", "--json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["profile"]["discrete"] and payload["profile"]["dimension"] == 0


@pytest.mark.parametrize("argv", [
    ["--index", "chain:5", "--field", "f2", "--demo", "reduced"],
    ["--index", "rationals", "--demo", "zerodivisor"],
    ["--index", "rationals", "--demo", "monoid-props"],
    ["--index", "rationals", "--demo", "cut:sqrt2", "--samples", "50"],
    ["--index", "rationals", "--demo", "cut:at:1/2:lower", "--samples", "50"],
    ["--index", "chain:3", "--demo", "cut:between:0:1", "--samples", "50"],
])
def test_cli_hochster(argv, capsys):
    rc, out = _run(capsys, "hochster", "--seed", "3", *argv)
    assert rc == 0, out


def test_cli_hochster_errors(capsys):
    assert main(["hochster", "--index", "chain:3", "--demo", "cut:sqrt2"]) == 2
    assert main(["hochster", "--demo", "dance"]) == 2


def test_cli_trace(capsys):
    rc, out = _run(capsys, "trace")
    assert rc == 0 and "Prop 1.20" in out


def test_json_on_stdout_is_pure(capsys):
    rc = main(["enumerate", "--max-points", "2", "--json"])
    captured = capsys.readouterr()
    assert rc == 0
    assert json.loads(captured.out)["total"] == 6
    assert "PASS" in captured.err
