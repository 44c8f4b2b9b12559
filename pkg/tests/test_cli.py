import json
import subprocess
import sys

import pytest

from romdom.cli import main
from romdom.graph import cycle, path
from romdom.io import emit_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "P:5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    vals = {r["invariant"]: r["value"] for r in doc["results"]}
    assert vals["gamma"] == 2 and vals["gamma_t"] == 3 and vals["kernel_k"] == 1
    assert doc["schema_version"] == 1 and doc["kind"] == "invariants"


def test_invariants_text_default(capsys):
    code, out, _ = run(capsys, "invariants", "C:5")
    assert code == 0 and "gamma_R" in out and "," not in out.splitlines()[0][:3]


def test_direct_bounds(capsys):
    code, out, _ = run(capsys, "direct-bounds", "K:2", "C:5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["exact"] == 7 and doc["consistency"]["all_consistent"]
    code, out, _ = run(capsys, "direct-bounds", "K:2", "C:5", "--format", "csv", "--no-exact")
    assert code == 0 and out.startswith("bound_id,")


def test_rooted_classify(capsys):
    code, out, _ = run(capsys, "rooted-classify", "P:5", "Broom:4,2", "--root", "0", "--sandwich", "--format", "json")
    r = json.loads(out)["results"][0]
    assert code == 0 and r["case"] == "GAMMA_PLUS" and r["value"] == 17 and r["sandwich"]["exact"] == 17


def test_verify_labeling(capsys, tmp_path):
    assert run(capsys, "verify-labeling", "P:4", "0 2 2 0", "--total")[0] == 0
    f = tmp_path / "lab.txt"
    f.write_text("0 1 0 1\n")
    code, out, _ = run(capsys, "verify-labeling", "P:4", str(f))
    assert code == 2 and "not a RDF" in out


def test_error_exit_code(capsys):
    code, _, err = run(capsys, "invariants", "C:2")
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "verify-labeling", "P:4", "0 1")
    assert code == 1


def _corpus(tmp_path):
    f = tmp_path / "corpus.g6"
    f.write_text("\n".join(emit_graph6(g) for g in (path(3), cycle(4), path(4), cycle(5), path(2))) + "\n")
    return f


def test_batch_order_independent_of_jobs(capsys, tmp_path):
    f = _corpus(tmp_path)
    _, serial, _ = run(capsys, "batch", str(f), "--format", "csv")
    _, parallel, _ = run(capsys, "batch", str(f), "--format", "csv", "--jobs", "3")
    assert serial == parallel
    assert len(serial.strip().splitlines()) == 6


def test_batch_rooted(capsys, tmp_path):
    f = _corpus(tmp_path)
    code, out, _ = run(
        capsys, "batch", str(f), "--command", "rooted-classify", "--partner", "P:4", "--root", "0", "--sandwich", "--format", "json"
    )
    recs = json.loads(out)["results"]
    assert code == 0 and [r["index"] for r in recs] == list(range(5))
    assert all(r["status"] == "ok" for r in recs)


def test_batch_requires_partner(tmp_path):
    with pytest.raises(SystemExit):
        main(["batch", str(_corpus(tmp_path)), "--command", "direct-bounds"])


def test_tables_command_small(capsys, tmp_path):
    out = tmp_path / "t.csv"
    code, _, _ = run(capsys, "paper-tables", "--max-order", "4", "--output", str(out))
    text = out.read_text()
    assert code == 0 and text.startswith("table,G,H,bound_id,bound,exact")
    assert "complete,K4,K4,CF,6,6" in text


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "romdom", "invariants", "K:3", "--format", "csv"], capture_output=True, text=True)
    assert r.returncode == 0 and "gamma_R" in r.stdout
