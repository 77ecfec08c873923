from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from reesbip.cli import RunConfig, build_parser, config_from_args, main, run

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(config_from_args(build_parser().parse_args(list(argv))), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_info_example():
    code, data, _ = call_json("info", str(GRAPHS / "example.txt"))
    assert code == 0 and data["schema"] == "1"
    assert (data["match"], data["b"], data["tau"], data["rees_dimension"]) == (3, 2, 3, 7)


def test_info_k11_by_name():
    code, data, _ = call_json("info", "K11")
    assert code == 0
    assert (data["match"], data["b"], data["rees_dimension"]) == (1, 1, 3)


def test_odd_cycle_exit_code():
    code, out, err = call("info", str(GRAPHS / "triangle_invalid.txt"))
    assert code == 2
    assert "OddCycleError" in err and "line" in err


def test_missing_graph():
    code, _, err = call("info", "no-such-graph")
    assert code == 2


def test_ugb_listing():
    code, data, _ = call_json("ugb", "example")
    assert code == 0 and data["counts"] == {"cycle": 0, "path": 2, "pair": 5}
    code, data, _ = call_json("ugb", "C4")
    assert data["counts"] == {"cycle": 1, "path": 4, "pair": 2}
    code, text, _ = call("ugb", "K11")
    assert code == 0 and "0 binomials" in text and "note:" in text


def test_circuits_and_gb():
    code, data, _ = call_json("circuits", "C4")
    assert code == 0 and data["count"] == 7 and data["equal_to_ugb"]
    code, data, _ = call_json("gb", "example", "--order", "match:T1,T3", "--order", "grevlex")
    assert code == 0 and len(data["bases"]) == 2
    assert all(b["subset_of_ugb"] for b in data["bases"])
    assert all(e["lead"] in ("plus", "minus") for b in data["bases"] for e in b["basis"])
    code, _, err = call("gb", "example", "--order", "lex:z1")
    assert code == 2


@pytest.mark.parametrize("name", ["example", "C6"])
def test_verify_passes(name):
    code, data, _ = call_json("verify", name, "--samples", "25", "--seed", "0")
    assert code == 0 and data["passed"]
    assert data["circuits"]["equal"] and data["orders"]["orders"] >= 25


def test_verify_mutation_fails():
    code, data, _ = call_json("verify", "example", "--drop", "0")
    assert code == 1 and not data["passed"]


def test_betti_commands():
    code, data, _ = call_json("betti", "P3", "--rees")
    assert code == 0 and data["stats"]["reg"] == 1
    assert data["table"]["entries"] == [{"i": 0, "a": 0, "b": 0, "beta": 1}, {"i": 1, "a": 1, "b": 1, "beta": 1}]
    code, data, _ = call_json("betti", "K22", "--power", "2")
    assert code == 0 and data["stats"]["reg_power"] == 4
    code, data, _ = call_json("betti", "C4", "--rees")
    assert (data["stats"]["reg"], data["stats"]["pd"]) == (2, 3)


def test_betti_window_override():
    code, data, _ = call_json("betti", "C4", "--rees", "--window", "1,1")
    assert code == 0 and not data["table"]["complete"]


def test_size_cap_exit_code():
    code, _, err = call("betti", "C6", "--rees", "--cap-vars", "8")
    assert code == 3 and "cap" in err


def test_k11_known_discrepancy_flagged():
    code, text, _ = call("betti", "K11", "--rees")
    assert code == 0
    assert "KNOWN-DISCREPANCY" in text and "0 vs 1" in text


def test_report_p3():
    code, data, _ = call_json("report", "P3", "--max-s", "6")
    assert code == 0 and data["passed"]
    for key in ("info", "verify", "rees", "bounds", "linearity"):
        assert data[key].get("status", "pass") == "pass"
    asserted = [c["s"] for c in data["linearity"]["claims"] if c["holds"] is not None]
    assert asserted == [4, 5]


def test_report_example_threshold_out_of_range():
    code, data, _ = call_json("report", "example", "--max-s", "3")
    assert code == 0
    assert data["bounds"]["status"] == "pass"
    assert data["linearity"]["status"] == "skipped" and data["linearity"]["threshold"] == 8


def test_report_k11():
    code, data, _ = call_json("report", "K11", "--max-s", "4")
    assert code == 0 and data["passed"]
    (flag,) = data["known_discrepancies"]
    assert (flag["lhs"], flag["rhs"], flag["status"]) == (0, 1, "KNOWN-DISCREPANCY")
    others = [c for c in data["rees"]["claims"] if c.get("status") != "KNOWN-DISCREPANCY"]
    assert all(c["holds"] for c in others)


def test_json_is_deterministic():
    a = call("report", "C4", "--max-s", "2", "--format", "json")[1]
    b = call("report", "C4", "--max-s", "2", "--format", "json")[1]
    assert a == b


def test_bounds_command():
    code, data, _ = call_json("bounds", "C4", "--max-s", "2")
    assert code == 0 and data["reg_powers"]["1"] == 2


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="info", graph="K11", cap_vars=0)


def test_main_and_module_entry(capsys):
    assert main(["info", "K11"]) == 0
    assert "match: 1" in capsys.readouterr().out
    proc = subprocess.run([sys.executable, "-m", "reesbip", "info", "P3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "match: 1" in proc.stdout
    with pytest.raises(SystemExit) as exc:
        main(["betti", "P3"])
    assert exc.value.code == 2
