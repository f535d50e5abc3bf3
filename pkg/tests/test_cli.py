import io
import json

import pytest

from folkman import constructions as cons
from folkman.cli import main
from folkman.graph import emit_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "BOOK", "3")
    assert code == 0 and "n=5 m=7" in out
    code, out, _ = run(capsys, "construct", "THEOREM4", "--g6")
    assert out.strip() == emit_graph6(cons.b3_free_arrowing_graph())


def test_construct_bad_params(capsys):
    code, _, err = run(capsys, "construct", "KHAT", "4")
    assert code == 1 and err.startswith("error:")


def test_invariant(capsys):
    code, out, _ = run(capsys, "invariant", emit_graph6(cons.cycle(5)), "--clique", "--alpha", "--chi", "--free", "K3")
    lines = dict(line.split("=", 1) for line in out.splitlines())
    assert code == 0
    assert lines["clique_number"] == "2" and lines["independence_number"] == "2"
    assert lines["chromatic_number"] == "3" and lines["free[K3]"] == "true"


def test_invariant_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    code, out, _ = run(capsys, "invariant", "--clique")
    assert code == 0 and "clique_number=3" in out


def test_arrow_verdicts(capsys):
    code, out, _ = run(capsys, "arrow", emit_graph6(cons.complete(6)), "--mode", "e", "--targets", "K3,K3")
    assert code == 0 and "verdict=ARROWS" in out
    code, out, _ = run(capsys, "arrow", emit_graph6(cons.complete(5)), "--mode", "e", "--targets", "K3,K3")
    assert "verdict=FAILS" in out and "witness=" in out


def test_arrow_indeterminate_exit_code(capsys):
    g6 = emit_graph6(cons.b3_free_arrowing_graph())
    code, out, _ = run(capsys, "arrow", g6, "--mode", "v", "--targets", "K3,K3", "--node-limit", "2")
    assert code == 2 and "INDETERMINATE" in out


def test_arrow_cnf_and_decode(capsys, tmp_path):
    cnf = tmp_path / "k5.cnf"
    g6 = emit_graph6(cons.complete(5))
    code, out, _ = run(capsys, "arrow", g6, "--mode", "e", "--targets", "K3,K3", "--cnf", str(cnf))
    assert code == 0 and "p cnf 10 20" in out
    assert cnf.read_text().splitlines()[-1].endswith(" 0")
    # a pentagon and pentagram split of K_5: the C_5 edges true (color 0)
    c5 = {(i, (i + 1) % 5) for i in range(5)}
    lits = [
        (i + 1) if (a, b) in c5 or (b, a) in c5 else -(i + 1)
        for i, (a, b) in enumerate(cons.complete(5).edges)
    ]
    model = tmp_path / "model.txt"
    model.write_text("s SATISFIABLE\nv " + " ".join(map(str, lits)) + " 0\n")
    code, out, _ = run(capsys, "arrow", g6, "--mode", "e", "--targets", "K3,K3", "--decode", str(model))
    assert code == 0 and "verdict=FAILS" in out
    model.write_text("v " + " ".join(str(i) for i in range(1, 11)) + " 0\n")
    code, _, err = run(capsys, "arrow", g6, "--mode", "e", "--targets", "K3,K3", "--decode", str(model))
    assert code == 1 and "monochromatic" in err


def test_goodcolor(capsys):
    g6 = emit_graph6(cons.join(cons.complete(1), cons.cycle(5)))
    code, out, _ = run(capsys, "goodcolor", g6, "--class", "b3free")
    assert code == 0 and len(out.strip()) == 10
    code, _, err = run(capsys, "goodcolor", emit_graph6(cons.book(3)), "--class", "b3free")
    assert code == 1


def test_k4_lift_and_alias(capsys):
    g6 = emit_graph6(cons.complete(4))
    assert run(capsys, "k4-lift", g6)[1].strip() == run(capsys, "lemma7", g6)[1].strip()
    code, _, err = run(capsys, "lemma7", emit_graph6(cons.complete(5)))
    assert code == 1 and "KHAT" in err


def test_partition_color(capsys):
    g6 = emit_graph6(cons.join(cons.complete(1), cons.cycle(5)))
    code, out, _ = run(capsys, "lemma11", g6, "--u", "0", "--parts", "1,3;2,4,5", "--k", "3")
    assert code == 0 and len(out.strip()) == 10
    code, _, _ = run(capsys, "partition-color", emit_graph6(cons.complete(6)), "--u", "0",
                     "--parts", "1,2,3;4,5", "--k", "3")
    assert code == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    assert code == 0 and len(out.split()) == 11
    code, out, _ = run(capsys, "enumerate", "5", "--avoid", "K3", "--connected")
    assert len(out.split()) == 6


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--source", "exhaustive", "--n-max", "5", "--avoid", "K3",
                       "--targets", "K2,K2", "--mode", "v", "--jobs", "2")
    fields = {k: json.loads(v) for k, v in (line.split("=", 1) for line in out.splitlines())}
    assert code == 0 and fields["best_order"] == 5


def test_search_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(emit_graph6(cons.complete(6)) + "\n"))
    code, out, _ = run(capsys, "search", "--source", "file", "--targets", "K3,K3", "--mode", "e")
    assert code == 0 and "best_order=6" in out


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper", "T4", "R33")
    assert code == 0
    assert "claim=T4 status=PASS" in out and "claim=R33 status=PASS" in out
    assert "--- json ---" in out
    payload = json.loads(out.split("--- json ---", 1)[1])
    assert [c["id"] for c in payload["claims"]] == ["T4", "R33"]


def test_verify_paper_unknown_claim(capsys):
    code, _, err = run(capsys, "verify-paper", "NOPE")
    assert code == 1 and "NOPE" in err


def test_bad_graph6(capsys):
    code, _, err = run(capsys, "invariant", "B", "--clique")
    assert code == 1 and err.startswith("error:")


def test_missing_required_argument():
    with pytest.raises(SystemExit) as info:
        main(["arrow", "Bw", "--targets", "K3,K3"])
    assert info.value.code == 1  # 2 is reserved for INDETERMINATE
