import json
import subprocess
import sys
from pathlib import Path


DATA = Path(__file__).resolve().parent.parent / "data"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "relalg.cli", *args], capture_output=True, text=True
    )


def payload_of(proc):
    return json.loads(proc.stdout)


def test_check_semigroup_trivial(tmp_path):
    doc = {"elements": ["e"], "product": [[0]], "unit": "e", "commutative": True}
    path = tmp_path / "trivial.json"
    path.write_text(json.dumps(doc))
    proc = run_cli("check-semigroup", "--semigroup", str(path))
    assert proc.returncode == 0
    assert payload_of(proc)["passed"] is True


def test_check_semigroup_failure_exits_1(tmp_path):
    doc = {"elements": ["0", "1"], "product": [[0, 1], [0, 0]], "unit": None, "commutative": False}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    proc = run_cli("check-semigroup", "--semigroup", str(path))
    assert proc.returncode == 1
    ce = payload_of(proc)["reports"][0]["counterexample"]
    assert ce["indices"] == ["1", "0", "1"]


def test_malformed_input_exits_2(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"elements": ["0"], "product": [[7]]}')
    proc = run_cli("check-semigroup", "--semigroup", str(path))
    assert proc.returncode == 2
    assert "malformed" in proc.stderr


def test_contract_violation_exits_3():
    proc = run_cli("check-algebra", "--algebra", str(DATA / "cocycle_algebra.json"), "--suite", "RelLie")
    assert proc.returncode == 3
    assert "contract" in proc.stderr


def test_check_algebra_instances():
    proc = run_cli("check-algebra", "--algebra", str(DATA / "cocycle_algebra.json"), "--suite", "RelAssoc")
    assert proc.returncode == 0
    report = payload_of(proc)["reports"][0]
    assert report["instances"] == 8
    assert report["passed"] is True


def test_check_cocycle_and_dimonoid_files():
    assert run_cli("check-cocycle", "--cocycle", str(DATA / "cocycle_sign.json")).returncode == 0
    assert run_cli("check-dimonoid", "--dimonoid", str(DATA / "matching2.json")).returncode == 0


def test_check_rb_builtin(tmp_path):
    path = tmp_path / "rb.json"
    path.write_text(json.dumps({"builtin": "reciprocal"}))
    proc = run_cli("check-rb", "--rb", str(path), "--window", "10")
    assert proc.returncode == 0
    assert payload_of(proc)["reports"][0]["instances"] == 100


def test_check_morphism(tmp_path):
    with open(DATA / "cocycle_algebra.json") as fh:
        alg = json.load(fh)
    doc = {"source": alg, "target": alg, "maps": {"0": [["1/1"]], "1": [["-1/1"]]}}
    path = tmp_path / "morphism.json"
    path.write_text(json.dumps(doc))
    proc = run_cli("check-morphism", "--morphism", str(path), "--suite", "RelAssoc")
    assert proc.returncode == 0
    doc["maps"]["1"] = [["2/1"]]
    path.write_text(json.dumps(doc))
    proc = run_cli("check-morphism", "--morphism", str(path), "--suite", "RelAssoc")
    assert proc.returncode == 1
    ce = payload_of(proc)["reports"][0]["counterexample"]
    assert ce["indices"] == ["1", "1"]


def test_derive_cocycle_twist(tmp_path):
    base = {
        "dim": 1,
        "basis": ["u"],
        "semigroup": {"elements": ["e"], "product": [[0]], "unit": "e", "commutative": True},
        "ops": {"mul": {"(e,e)": [[["1/1"]]]}},
        "unit": ["1/1"],
    }
    path = tmp_path / "base.json"
    path.write_text(json.dumps(base))
    proc = run_cli(
        "derive",
        "--construction",
        "cocycle-twist",
        "--algebra",
        str(path),
        "--cocycle",
        str(DATA / "cocycle_sign.json"),
    )
    assert proc.returncode == 0
    algebra = payload_of(proc)["algebra"]
    assert algebra["ops"]["mul"]["(1,1)"] == [[["-1/1"]]]
    # the emitted algebra is valid input for check-algebra
    out = tmp_path / "twisted.json"
    out.write_text(json.dumps(algebra))
    assert run_cli("check-algebra", "--algebra", str(out), "--suite", "RelAssoc").returncode == 0
    assert run_cli("check-algebra", "--algebra", str(out), "--suite", "RelUnital").returncode == 0


def test_derive_zinbiel_chain(tmp_path):
    from relalg.jsonio import dump_algebra
    from relalg.samples import truncated_integration_zinbiel

    zpath = tmp_path / "zinbiel.json"
    zpath.write_text(json.dumps(dump_algebra(truncated_integration_zinbiel(4))))
    proc = run_cli("derive", "--construction", "dend-from-zinbiel", "--algebra", str(zpath))
    assert proc.returncode == 0
    dend = payload_of(proc)["algebra"]
    dpath = tmp_path / "dend.json"
    dpath.write_text(json.dumps(dend))
    assert run_cli("check-algebra", "--algebra", str(dpath), "--suite", "RelDendriform").returncode == 0
    # round back to zinbiel through the symmetric-dendriform construction
    proc = run_cli("derive", "--construction", "zinbiel-from-symmetric-dend", "--algebra", str(dpath))
    assert proc.returncode == 0
    assert payload_of(proc)["algebra"]["ops"]["ast"] == dump_algebra(
        truncated_integration_zinbiel(4)
    )["ops"]["ast"]
    proc = run_cli("derive", "--construction", "comm-from-zinbiel", "--algebra", str(zpath))
    assert proc.returncode == 0
    cpath = tmp_path / "comm.json"
    cpath.write_text(json.dumps(payload_of(proc)["algebra"]))
    assert run_cli("check-algebra", "--algebra", str(cpath), "--suite", "RelComm").returncode == 0


def test_derive_refusal_exits_1(tmp_path):
    # the mutated cocycle is rejected by the twist with a counterexample
    with open(DATA / "cocycle_sign.json") as fh:
        doc = json.load(fh)
    doc["values"][0][1] = "2/1"
    cpath = tmp_path / "badc.json"
    cpath.write_text(json.dumps(doc))
    base = {
        "dim": 1,
        "basis": ["u"],
        "semigroup": {"elements": ["e"], "product": [[0]], "unit": "e", "commutative": True},
        "ops": {"mul": {"(e,e)": [[["1/1"]]]}},
        "unit": None,
    }
    bpath = tmp_path / "base.json"
    bpath.write_text(json.dumps(base))
    proc = run_cli(
        "derive", "--construction", "cocycle-twist", "--algebra", str(bpath), "--cocycle", str(cpath)
    )
    assert proc.returncode == 1
    assert payload_of(proc)["reports"][0]["counterexample"] is not None


def test_collapse_command():
    proc = run_cli("collapse", "--algebra", str(DATA / "cocycle_algebra.json"), "--suite", "RelAssoc")
    assert proc.returncode == 0
    payload = payload_of(proc)
    assert payload["algebra"]["dim"] == 2
    assert payload["reports"][0]["passed"] is True


def test_free_eval_matches_spec_example():
    proc = run_cli(
        "free-eval", "--expr", "succ(a, x[], y[])", "--dimonoid", str(DATA / "matching2.json")
    )
    assert proc.returncode == 0
    assert payload_of(proc)["result"] == "1/1 * y[a: x[], ]"


def test_free_eval_base_case_and_scaling():
    proc = run_cli("free-eval", "--expr", "prec(a, x[], e)", "--dimonoid", str(DATA / "matching2.json"))
    assert payload_of(proc)["result"] == "1/1 * x[]"
    proc = run_cli("free-eval", "--expr", "0/1 * x[]", "--dimonoid", str(DATA / "matching2.json"))
    assert payload_of(proc)["result"] == "0"
    proc = run_cli(
        "free-eval",
        "--expr",
        "mul(0,0, x[], y[]) + -1/1 * succ(0, x[], y[])",
        "--semigroup",
        str(DATA / "zmod2.json"),
    )
    assert payload_of(proc)["terms"] == [["1/1", "x[, 0: y[]]"]]


def test_free_eval_errors():
    proc = run_cli("free-eval", "--expr", "prec(q, x[], y[])", "--dimonoid", str(DATA / "matching2.json"))
    assert proc.returncode == 2
    proc = run_cli("free-eval", "--expr", "mul(a, x[], y[])", "--dimonoid", str(DATA / "matching2.json"))
    assert proc.returncode == 2  # arity error: mul needs an index pair
    proc = run_cli(
        "free-eval", "--expr", "circ(a,b, x[], y[])", "--dimonoid", str(DATA / "matching2.json")
    )
    assert proc.returncode == 3  # projections are not of semigroup form


def test_free_check_deterministic_bytes():
    args = (
        "free-check",
        "--suite",
        "DimonoidDendriform",
        "--dimonoid",
        str(DATA / "matching2.json"),
        "--samples",
        "25",
        "--max-vertices",
        "4",
        "--seed",
        "11",
    )
    first, second = run_cli(*args), run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_free_check_seed_changes_sample(tmp_path):
    base = (
        "free-check",
        "--suite",
        "FamDendriform",
        "--semigroup",
        str(DATA / "zmod2.json"),
        "--samples",
        "5",
        "--max-vertices",
        "4",
    )
    a = run_cli(*base, "--seed", "0")
    b = run_cli(*base, "--seed", "1")
    assert a.returncode == b.returncode == 0
    assert a.stdout != b.stdout  # the seed is part of the report
    out = tmp_path / "report.json"
    proc = run_cli(*base, "--seed", "0", "--out", str(out))
    assert proc.returncode == 0
    assert out.read_text() == proc.stdout


def test_report_roundtrip_byte_identical():
    proc = run_cli("check-algebra", "--algebra", str(DATA / "cocycle_algebra.json"), "--suite", "RelAssoc")
    from relalg.reports import to_json

    assert to_json(json.loads(proc.stdout)) == proc.stdout


def test_free_eval_derived_product_two_trees():
    # the derived product of two single vertices is the sum of the two
    # two-vertex trees
    proc = run_cli(
        "free-eval", "--expr", "mul(a,a, x[], y[])", "--semigroup", str(DATA / "trivial_a.json")
    )
    assert proc.returncode == 0
    # canonical order: left-leaning shapes sort first
    assert payload_of(proc)["terms"] == [["1/1", "y[a: x[], ]"], ["1/1", "x[, a: y[]]"]]


def test_free_eval_bracket_antisymmetry():
    proc = run_cli(
        "free-eval",
        "--expr",
        "bracket(0,1, x[], y[]) + bracket(1,0, y[], x[])",
        "--semigroup",
        str(DATA / "zmod2.json"),
    )
    assert proc.returncode == 0
    assert payload_of(proc)["result"] == "0"
