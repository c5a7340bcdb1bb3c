import json
import subprocess
import sys

import pytest

from hecke_starnet.cli import main
from hecke_starnet.hecke import HeckeElt, kl_smooth
from hecke_starnet.laurent import LaurentPoly
from hecke_starnet.perm import Perm


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "--n", "4", "--intervals", "2-4,1-3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 18
    assert "T_e: 1 + q" in lines and "T_3421: 1 + q" in lines


def test_expand_json_round_trip(capsys):
    code, out, _ = run(capsys, "expand", "--n", "4", "--intervals", "2-4,1-3", "--json")
    assert code == 0
    q = LaurentPoly.q()
    assert HeckeElt.from_json(json.loads(out)) == kl_smooth(Perm("3421")).scale(1 + q)


def test_eval_methods(capsys):
    for method in ("tableaux", "induced", "sigma"):
        code, out, _ = run(capsys, "eval", "--n", "4", "--lambda", "2,1,1",
                           "--intervals", "1-2,2-4,1-2", "--method", method)
        assert code == 0 and out.strip() == "q + 3*q^2 + 3*q^3 + q^4"


def test_eval_json(capsys):
    _, out, _ = run(capsys, "eval", "--n", "2", "--lambda", "1,1", "--intervals", "1-2", "--json")
    payload = json.loads(out)
    assert LaurentPoly.from_json(payload["value"]) == 1 + LaurentPoly.q()
    assert payload["lambda"] == [1, 1] and payload["method"] == "tableaux"


def test_families(capsys):
    _, out, _ = run(capsys, "families", "--n", "2", "--intervals", "1-2,1-2")
    assert len(out.splitlines()) == 4
    _, out, _ = run(capsys, "families", "--n", "4", "--intervals", "1-2,2-4,1-2", "--lambda", "2,1,1")
    assert len(out.splitlines()) == 8


def test_klcheck(capsys):
    code, out, _ = run(capsys, "klcheck", "--w", "3421", "--g", "1+q", "--intervals", "2-4,1-3",
                       "--lambda", "1,1,1,1")
    assert code == 0
    assert out.splitlines()[-1] == "1 + 3*q + 8*q^2 + 8*q^3 + 3*q^4 + q^5"
    code, out, _ = run(capsys, "klcheck", "--w", "3421", "--g", "q", "--intervals", "2-4,1-3")
    assert code == 1 and out.rstrip().endswith("no")


@pytest.mark.parametrize("argv", [
    ["expand", "--n", "4", "--intervals", "4-2"],
    ["expand", "--n", "3", "--intervals", "1-4"],
    ["eval", "--n", "3", "--lambda", "2,2", "--intervals", "1-2"],
    ["eval", "--n", "3", "--lambda", "1,2", "--intervals", "1-2"],
    ["klcheck", "--w", "3321", "--g", "1", "--intervals", ""],
    ["klcheck", "--w", "321", "--g", "q^(1/3)", "--intervals", ""],
    ["klcheck", "--w", "321", "--g", "0", "--intervals", "1-3"],
    ["verify", "--max-n", "0"],
])
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--n", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "coset", "--suite", "straighten",
                       "--max-n", "3", "--max-stars", "2", "--samples", "2", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["ok"]
    assert [s["suite"] for s in payload["suites"]] == ["coset", "straighten"]


def test_verify_output_is_reproducible():
    argv = [sys.executable, "-m", "hecke_starnet", "verify", "--suite", "defect",
            "--max-n", "3", "--max-stars", "2", "--samples", "3", "--seed", "7"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.decode().rstrip().endswith("ALL PASS")
