import json
import subprocess
import sys

import pytest

from tukeyspectra.cli import main, run


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_spectrum(capsys):
    assert invoke(capsys, "spectrum", "--kind", "intalg", "(sum (ord w1) (rev (ord w1)))") == \
        (0, "{1, w, w1}", "")


def test_compare(capsys):
    code, out, _ = invoke(capsys, "compare", "(ord w1)", "(finsets w1)")
    assert code == 0
    assert out.startswith("LE (strict) proper | trace: [")
    assert "C2" in out
    _, out, _ = invoke(capsys, "compare", "(ord w1)", "(ord w2)")
    assert out == "UNKNOWN (strict)"
    _, out, _ = invoke(capsys, "compare", "(ord w1)", "(ord w2)", "--mode", "extended")
    assert out.startswith("INCOMPARABLE (extended)")


def test_normalize_json(capsys):
    code, out, _ = invoke(capsys, "normalize", "--json", "(wprod (2 w1))")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"input", "result", "rule_traces"}
    assert doc["result"]["text"] == "[w1]^<w"
    assert doc["rule_traces"] == ["R-2inf"]


def test_file_input(capsys, tmp_path):
    f = tmp_path / "t.sexp"
    f.write_text("; a star\n(tree (fin 1) (branch w1 (tree (fin 1))))\n")
    assert invoke(capsys, "spectrum", "--kind", "treealg", "--file", str(f))[:2] == (0, "{1, [w1]^<w}")


@pytest.mark.parametrize("argv,code", [
    (["normalize", "(ord"], 1),
    (["normalize", "(ord 3)"], 2),
    (["spectrum", "--kind", "catalog", "(adfamily w (mus w1))"], 2),
    (["chains", "--kind", "catalog", "(free w)"], 2),
    (["normalize"], 1),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = invoke(capsys, *argv)
    assert got == code and err


def test_chains_and_realize(capsys):
    code, out, _ = invoke(capsys, "chains", "--kind", "ptree",
                       "(ptree (fin 1) (branch 1 (ptree (rev (ord w)))) (branch 1 (ptree (rev (ord w1)))))")
    assert code == 0 and "type=w x w1" in out
    code, out, _ = invoke(capsys, "realize", "--json", "weakprod", "(w w1)")
    assert json.loads(out)["result"]["root_type"] == "w x w1"
    code, out, _ = invoke(capsys, "realize", "interval", "((w1 w1))")
    assert out.splitlines()[-1] == "spectrum: {1, w, w1}"


def test_oracle(capsys):
    code, out, _ = invoke(capsys, "oracle", "--suite", "fans", "--max-n", "5")
    assert code == 0 and out.endswith("0 violations")


def test_rules(capsys):
    code, out, _ = invoke(capsys, "rules")
    assert "R-wsplit" in out and "C4" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "tukeyspectra", "normalize", "(prod (ord w) (ord w))"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.startswith("w\n")


def test_run_is_deterministic():
    argv = ["spectrum", "--json", "--kind", "ptree", "(ptree (fin 1) (branch w1 (ptree (rev (ord w)))))"]
    first = run(argv)
    assert first[0] == 0 and first == run(argv)
    assert [t["text"] for t in json.loads(first[1])["result"]] == ["1", "[w1]^<w"]
