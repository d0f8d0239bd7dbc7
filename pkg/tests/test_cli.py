import json

from pushgraph.cli import main
from pushgraph.graph import emit_graph, parse_graph
from pushgraph.families import directed_cycle, uc4


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_round_trips(capsys):
    code, out, _ = run_cli(capsys, "gen", "cycle", "9")
    assert code == 0
    assert parse_graph(out) == directed_cycle(9)


def test_gen_to_file(tmp_path, capsys):
    target = tmp_path / "uc4.graph"
    code, _, _ = run_cli(capsys, "gen", "uc4", "-o", str(target))
    assert code == 0
    assert parse_graph(target.read_text()) == uc4()


def test_gen_report_json(capsys):
    code, out, _ = run_cli(capsys, "gen", "b0", "--report")
    assert code == 0
    payload = json.loads(out)
    assert payload["schemaVersion"] == 1
    assert payload["n"] == 8
    winners = [r["pair"] for r in payload["dominatingPairs"] if r["meets_bound"]]
    assert winners == [[3, 7]]
    assert payload["constructionValidated"]


def test_gen_unknown_family(capsys):
    code, _, err = run_cli(capsys, "gen", "mystery")
    assert code == 2
    assert "unknown family" in err


def test_equiv_tournaments(tmp_path, capsys):
    from pushgraph.hom import enumerate_tournaments

    a, b = enumerate_tournaments(3)
    pa, pb = tmp_path / "a.graph", tmp_path / "b.graph"
    pa.write_text(emit_graph(a))
    pb.write_text(emit_graph(b))
    code, out, _ = run_cli(capsys, "equiv", str(pa), str(pb))
    assert code == 0
    payload = json.loads(out)
    assert payload["equivalent"] is True
    assert payload["certificate"]["verified"] is True


def test_equiv_square_vs_uc4(tmp_path, capsys):
    pa, pb = tmp_path / "c4.graph", tmp_path / "uc4.graph"
    pa.write_text(emit_graph(directed_cycle(4)))
    pb.write_text(emit_graph(uc4()))
    code, out, _ = run_cli(capsys, "equiv", str(pa), str(pb))
    assert code == 0
    assert json.loads(out)["equivalent"] is False


def test_split_zielonka(tmp_path, capsys):
    from pushgraph.families import zielonka

    path = tmp_path / "z3.graph"
    path.write_text(emit_graph(zielonka(3)))
    code, out, _ = run_cli(capsys, "split", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["splitable"] is True
    assert parse_graph(payload["splitGraph"]).n == 6


def test_hom_push_refusal_exit_codes(tmp_path, capsys):
    pa, pb = tmp_path / "w.graph", tmp_path / "c3.graph"
    from pushgraph.families import girth8_witness, c3

    pa.write_text(emit_graph(girth8_witness()))
    pb.write_text(emit_graph(c3()))
    code, out, _ = run_cli(capsys, "hom", "--push", str(pa), str(pb))
    assert code == 0
    assert json.loads(out)["status"] == "none"
    code, out, _ = run_cli(
        capsys, "hom", "--push", str(pa), str(pb), "--budget-nodes", "2"
    )
    assert code == 3
    assert json.loads(out)["status"] == "budget-exhausted"


def test_hom_witness_json(tmp_path, capsys):
    pa, pb = tmp_path / "c9.graph", tmp_path / "c3.graph"
    from pushgraph.families import c3

    pa.write_text(emit_graph(directed_cycle(9)))
    pb.write_text(emit_graph(c3()))
    code, out, _ = run_cli(capsys, "hom", "--push", str(pa), str(pb))
    assert code == 0
    payload = json.loads(out)
    assert payload["witness"]["verified"] is True
    assert parse_graph(payload["witness"]["target"]).n == 3


def test_push_command(tmp_path, capsys):
    graph_file = tmp_path / "c3.graph"
    vector_file = tmp_path / "vec.push"
    graph_file.write_text(emit_graph(directed_cycle(3)))
    vector_file.write_text("push 1\nv 1\n")
    code, out, _ = run_cli(capsys, "push", str(graph_file), str(vector_file))
    assert code == 0
    assert set(parse_graph(out).arcs) == {(1, 0), (2, 1), (2, 0)}


def test_chroma_values(tmp_path, capsys):
    path = tmp_path / "c9.graph"
    path.write_text(emit_graph(directed_cycle(9)))
    code, out, _ = run_cli(capsys, "chroma", "push", str(path), "--max-k", "4")
    assert code == 0
    assert json.loads(out)["value"] == 3
    code, out, _ = run_cli(capsys, "chroma", "oriented", str(path), "--max-k", "3")
    assert code == 0
    assert json.loads(out)["value"] == 3


def test_color_sparse_and_audit(tmp_path, capsys):
    path = tmp_path / "c9.graph"
    path.write_text(emit_graph(directed_cycle(9)))
    code, out, _ = run_cli(capsys, "color", "sparse", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "found"
    assert payload["witness"]["verified"] is True
    code, out, _ = run_cli(capsys, "color", "sparse", str(path), "--audit")
    assert code == 0
    audit = json.loads(out)
    assert audit["minDegStar"] == "2"
    assert audit["meetsEightThirds"] is False


def test_color_outerplanar(tmp_path, capsys):
    from pushgraph.families import random_outerplanar

    path = tmp_path / "outer.graph"
    path.write_text(emit_graph(random_outerplanar(30, 5, seed=4)))
    code, out, _ = run_cli(capsys, "color", "outerplanar5", str(path))
    assert code == 0
    assert json.loads(out)["status"] == "found"


def test_verify_suite_exit_and_json(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code, out, err = run_cli(
        capsys, "verify", "tournament3", "--json", str(report_path)
    )
    assert code == 0
    payload = json.loads(report_path.read_text())
    assert payload["summary"]["allPass"] is True
    assert "tournament3/single-class" in err


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "nonsense")
    assert code == 2
    assert "unknown suite" in err


def test_format_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("oriented 2\na 0 0\n")
    other = tmp_path / "c3.graph"
    other.write_text(emit_graph(directed_cycle(3)))
    code, _, err = run_cli(capsys, "hom", str(bad), str(other))
    assert code == 2
    assert "format error" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run_cli(capsys, "equiv", "nope.graph", "also-nope.graph")
    assert code == 2
