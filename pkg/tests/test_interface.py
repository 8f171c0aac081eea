from __future__ import annotations

import json
from pathlib import Path

import pytest

from brauerlab import catalog
from brauerlab.cli import main
from brauerlab.jsonio import dumps, graph_from_json, graph_to_json

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_fixture_files_match_catalog():
    for name, make in catalog.GRAPHS.items():
        on_disk = json.loads((FIXTURES / f"{name}.json").read_text())
        assert on_disk == graph_to_json(make()), name


def test_fixtures_roundtrip_through_the_codec():
    from brauerlab.jsonio import algebra_from_json, algebra_to_json
    for path in sorted(FIXTURES.glob("*.json")):
        doc = json.loads(path.read_text())
        if "cyclic_order" in doc:
            g = graph_from_json(doc)
            again = graph_from_json(graph_to_json(g))
            assert graph_to_json(again) == graph_to_json(g), path.name
        else:
            quiver, rels, hint = algebra_from_json(doc)
            again = algebra_to_json(quiver, rels, hint)
            quiver2, rels2, _ = algebra_from_json(again)
            assert algebra_to_json(quiver2, rels2, hint) == again, path.name


def test_validate_command(capsys):
    code, doc = run_json(capsys, "validate", str(FIXTURES / "bga4.json"))
    assert code == 0 and doc["valid"]


def test_validate_rejects_bad_graph(tmp_path, capsys):
    bad = {"vertices": [{"id": "v"}], "cyclic_order": {"v": ["h", "hb"]},
           "edges": [["h", "h"]]}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    code, doc = run_json(capsys, "validate", str(p))
    assert code == 1 and not doc["valid"]
    assert doc["errors"][0]["code"] == "FixedPointInPairing"


def test_missing_file_is_io_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["validate", "no-such-file.json"])
    assert err.value.code == 2


def test_build_dims(capsys):
    code, doc = run_json(capsys, "build", str(FIXTURES / "sf_example.json"),
                         "--emit", "dims")
    assert code == 0
    assert doc == {"P": {"1": 7, "2": 7, "3": 7, "4": 7}, "total": 28}


def test_build_full_report(capsys):
    code, doc = run_json(capsys, "build", str(FIXTURES / "rfs.json"))
    assert code == 0
    assert doc["dims"]["P"] == {"1": 6, "2": 5, "3": 5, "4": 6, "5": 6}
    assert doc["classifications"]["symmetric"] == "yes"
    assert doc["classifications"]["special_quasi_biserial"]
    assert doc["cartan"]["det_abs"] >= 0


def test_striplabels_then_brauertree(tmp_path, capsys):
    code, doc = run_json(capsys, "striplabels", str(FIXTURES / "rfs.json"))
    assert code == 0
    stripped = tmp_path / "rfs_stripped.json"
    stripped.write_text(dumps(doc))
    code, verdict = run_json(capsys, "brauertree", str(stripped))
    assert code == 0 and verdict == {"brauer_tree": True}


def test_brauertree_refuses_labeled_input(capsys):
    code, doc = run_json(capsys, "brauertree", str(FIXTURES / "rfs.json"))
    assert code == 1 and doc["error"] == "FormatError"


def test_check_property_on_algebra_document(capsys):
    code, doc = run_json(capsys, "check", str(FIXTURES / "b_isn_sb.json"),
                         "--property", "sqb")
    assert code == 0
    assert doc["result"] is False
    assert doc["witness"]["path"] == ["x2"]


def test_check_symmetric_on_graph(capsys):
    code, doc = run_json(capsys, "check", str(FIXTURES / "sf_example.json"),
                         "--property", "symmetric")
    assert code == 0 and doc["result"] == "yes"


def test_tracks_command(capsys):
    code, doc = run_json(capsys, "tracks", str(FIXTURES / "tracks_example.json"))
    assert code == 0
    assert doc["omega"] == ["alpha", "beta", "delta", "epsilon"]


def test_symmetrize_command(capsys):
    code, doc = run_json(capsys, "symmetrize", str(FIXTURES / "tracks_example.json"))
    assert code == 0
    assert doc["added_arrows"] == ["k1", "k2"]
    assert doc["dimension"] == 30


def test_extract_and_roundtrip_commands(capsys):
    code, doc = run_json(capsys, "extract", str(FIXTURES / "sf_example.json"))
    assert code == 0 and len(doc["labeled"]) == 2
    code, doc = run_json(capsys, "roundtrip", str(FIXTURES / "sf_example.json"))
    assert code == 0 and doc == {"roundtrip": True}


def test_kauer_list_and_apply(tmp_path, capsys):
    code, doc = run_json(capsys, "kauer", str(FIXTURES / "kauer_g1.json"),
                         "--edge", "4", "--list")
    assert code == 0 and len(doc["moves"]) >= 1
    code, moved = run_json(capsys, "kauer", str(FIXTURES / "kauer_g1.json"),
                           "--edge", "4", "--dir", "succ")
    assert code == 0
    from brauerlab.ribbon import are_isomorphic
    assert are_isomorphic(graph_from_json(moved), catalog.kauer_g2())[0]


def test_kauer_script_replay(tmp_path, capsys):
    script = tmp_path / "moves.json"
    script.write_text(json.dumps([{"edge": "4", "dir": "succ"},
                                  {"edge": "4", "dir": "pred"}]))
    code, doc = run_json(capsys, "kauer", str(FIXTURES / "kauer_g1.json"),
                         "--script", str(script))
    assert code == 0
    from brauerlab.ribbon import are_isomorphic
    assert are_isomorphic(graph_from_json(doc), catalog.kauer_g1())[0]


def test_compare_command(capsys):
    code, doc = run_json(capsys, "compare", str(FIXTURES / "kauer_g3.json"),
                         str(FIXTURES / "kauer_g4.json"))
    assert code == 0 and doc["equal"]


def test_domain_error_exit_code(capsys):
    code, doc = run_json(capsys, "symmetrize", str(FIXTURES / "two_path.json"))
    assert code == 1 and doc["error"] == "NotSQB"


def test_dot_export(capsys):
    code, out = run(capsys, "striplabels", str(FIXTURES / "sf_example.json"),
                    "--format", "dot")
    assert code == 0
    assert out.startswith("graph ribbon {")
    assert "--" in out


def test_loewy_text_format(capsys):
    code, out = run(capsys, "build", str(FIXTURES / "bga4.json"),
                    "--emit", "projectives", "--format", "text")
    assert code == 0
    assert "P_1:" in out and "2 2" in out


def test_check_text_table(capsys):
    code, out = run(capsys, "check", str(FIXTURES / "sf_example.json"),
                    "--property", "sb", "--format", "text")
    assert code == 0
    assert "result" in out and "false" in out
