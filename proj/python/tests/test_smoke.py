import json
import math
import os

import pytest

import symdyn

GOLDEN = {"type": "sft", "alphabet": ["0", "1"], "forbidden": ["11"]}
SGAP01 = {"type": "sgap", "finite": [0, 1]}
CONFIGS = os.environ.get("SYMDYN_CONFIG_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "configs"))


def test_entropy_golden_mean():
    e = symdyn.entropy(GOLDEN)
    phi = (1 + math.sqrt(5)) / 2
    assert abs(e["h"] - math.log(phi)) < 1e-12
    assert e["irreducible"]


def test_counts_are_fibonacci():
    fib = [1, 2]
    for _ in range(60):
        fib.append(fib[-1] + fib[-2])
    for n in (1, 10, 60):
        assert symdyn.count(GOLDEN, n) == fib[n]
    assert symdyn.enumerate(json.dumps(GOLDEN), 2) == ["00", "01", "10"]


def test_membership_and_extenders():
    assert symdyn.member(GOLDEN, "0100")
    assert not symdyn.member(GOLDEN, "0110")
    assert symdyn.extender_compare(GOLDEN, "1", "01") == "proper-subset"
    assert symdyn.extender_compare(GOLDEN, "000", "0") == "equal"


def test_mme_sgap():
    m = symdyn.mme(SGAP01, "11")
    assert abs(m["mu"] - 1 / math.sqrt(5)) < 1e-12
    assert m["f"] == [0, 1]
    assert symdyn.mme(SGAP01, "00")["mu"] == 0.0


def test_replacement():
    assert symdyn.replace_seq("0101", "01", "001", [0, 2]) == "001001"
    with pytest.raises(symdyn.SymdynError, match="replacement-broken"):
        symdyn.replace_seq("111", "11", "10", [0, 1])
    assert symdyn.respects("1", "11")
    assert not symdyn.respects("11", "1")


def test_errors_are_typed():
    with pytest.raises(symdyn.SymdynError, match="semantic-error"):
        symdyn.entropy({"type": "sgap", "finite": []})
    with pytest.raises(ValueError):
        symdyn.entropy("{not json")


def test_cli_in_process():
    code, out, _ = symdyn.cli("count", "--spec", os.path.join(CONFIGS, "golden.json"), "--n", "10")
    assert code == 0 and out["count"] == "144"
    code, _, err = symdyn.cli("frobnicate")
    assert code == 2 and err["error"] == "usage"


def test_small_verify_run():
    config = {
        "specs": [{"name": "golden", "spec": GOLDEN}],
        "budgets": {"pair_maxlen": 3, "replacement_max_vw": 1, "replacement_max_u": 4,
                    "agreement_max_vw": 1, "random_sfts": 1, "extender_maxlen": 3},
    }
    report = symdyn.verify_run(config)
    assert report["summary"]["ok"] is True
    assert {r["status"] for r in report["records"]} <= {"pass", "skipped"}
