import json

import pytest

from negq import cli, gfq


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qbinom_primed(capsys):
    code, out, _ = run(capsys, "qbinom", "--n", "5", "--k", "2", "--primed")
    assert code == 0
    assert out.strip() == "1 - q + 2*q^2 - 2*q^3 + 2*q^4 - q^5 + q^6"


def test_gf_csp_table(capsys):
    code, out, _ = run(capsys, "gf", "csp", "--p", "2", "--e", "1", "--n", "3", "--k", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4 and all(line.endswith("True") for line in lines[1:])


def test_gf_csp_json(capsys):
    code, out, _ = run(capsys, "gf", "csp", "--p", "2", "--n", "3", "--k", "1", "--order", "9", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["result"]["rows"] == [{"order": 9, "fixed_count": 0, "x_eval": 0, "match": True}]
    assert doc["seed"] == 0


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "qbinom", "--n", "3")[0] == 2
    assert run(capsys, "qbinom", "--n", "2", "--k", "3")[0] == 2
    code, _, err = run(capsys, "qt", "--n", "3", "--k", "1", "--q", "2", "--eval-order", "5")
    assert code == 2 and "does not divide" in err
    assert run(capsys, "gf", "count-nondeg", "--p", "2", "--n", "5", "--k", "2", "--budget", "10")[0] == 2


def test_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(gfq, "count_special_entry_subspaces", lambda q, n, k: 54)
    code, out, _ = run(capsys, "gf", "special-entries", "--q", "2", "--n", "5", "--k", "2")
    assert code == 1
    assert "54" in out and "55" in out


@pytest.mark.parametrize("argv", [
    ["words", "enumerate", "--n", "5", "--k", "2", "--json"],
    ["partitions", "list", "--n", "6", "--k", "3", "--json", "--seed", "7"],
    ["qt", "--n", "3", "--k", "1", "--q", "2", "--x-poly", "--json"],
    ["gf", "count-nondeg", "--p", "3", "--n", "3", "--k", "1", "--json"],
    ["ennola", "degrees", "--n", "4", "--at", "2", "--json"],
    ["ennola", "verify", "--n", "4", "--k", "2", "--q", "3", "--json"],
])
def test_json_is_deterministic_and_round_trips(capsys, argv):
    c1, out1, _ = run(capsys, *argv)
    c2, out2, _ = run(capsys, *argv)
    assert c1 == c2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert set(doc) == {"command", "params", "seed", "ok", "result"}
    assert json.dumps(doc, sort_keys=True) == out1.strip()


def test_words_rows(capsys):
    _, out, _ = run(capsys, "words", "enumerate", "--n", "5", "--k", "2", "--json")
    rows = json.loads(out)["result"]["words"]
    assert len(rows) == 10
    admissible = [r for r in rows if r["admissible"]]
    assert [r["mask"] for r in admissible] == ["0|0|0|1|1", "0|0|1|10", "0|1|00|1", "0|1|10|0", "1|00|10", "1|10|0|0"]


def test_partition_weights(capsys):
    _, out, _ = run(capsys, "partitions", "list", "--n", "5", "--k", "3", "--admissible-only")
    assert "q^2(q-1)q^3" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-n", "6", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["ok"]
    assert {r["criterion"] for r in doc["result"]["results"]} == set(range(14))
