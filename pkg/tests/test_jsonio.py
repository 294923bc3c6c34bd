import json
from fractions import Fraction

import pytest

from relalg import LinComb, check_axioms, finite_domain
from relalg.errors import MalformedInputError
from relalg.jsonio import (
    dump_algebra,
    dump_cocycle,
    dump_dimonoid,
    dump_semigroup,
    load_algebra,
    load_cocycle,
    load_dimonoid,
    load_file,
    load_morphism,
    load_rota_baxter,
    load_semigroup,
)
from relalg.reports import to_json
from relalg.samples import truncated_integration_zinbiel

ZMOD2 = {
    "elements": ["0", "1"],
    "product": [[0, 1], [1, 0]],
    "unit": "0",
    "commutative": True,
}


def test_semigroup_roundtrip():
    s = load_semigroup(ZMOD2)
    assert s.unit == 0 and s.claims_commutative
    assert dump_semigroup(s) == ZMOD2


def test_semigroup_schema_errors_carry_paths():
    with pytest.raises(MalformedInputError, match="missing key 'product'"):
        load_semigroup({"elements": ["0"]})
    with pytest.raises(MalformedInputError, match=r"product\[0\]\[1\]"):
        load_semigroup({"elements": ["0", "1"], "product": [[0, "x"], [1, 0]]})
    with pytest.raises(MalformedInputError, match="semigroup"):
        load_semigroup([])


def test_dimonoid_roundtrip():
    doc = {"elements": ["a", "b"], "left": [[0, 0], [1, 1]], "right": [[0, 1], [0, 1]]}
    d = load_dimonoid(doc)
    assert d.is_matching_form()
    assert dump_dimonoid(d) == doc


def test_cocycle_roundtrip():
    doc = dict(ZMOD2, values=[["1/1", "1/1"], ["1/1", "-1/1"]])
    c = load_cocycle(doc)
    assert c(1, 1) == -1
    assert dump_cocycle(c) == doc


def test_cocycle_rejects_zero_value():
    with pytest.raises(MalformedInputError):
        load_cocycle(dict(ZMOD2, values=[["1/1", "0/1"], ["1/1", "1/1"]]))


def cocycle_algebra_doc():
    return {
        "dim": 1,
        "basis": ["u"],
        "semigroup": ZMOD2,
        "ops": {
            "mul": {
                "(0,0)": [[["1/1"]]],
                "(0,1)": [[["1/1"]]],
                "(1,0)": [[["1/1"]]],
                "(1,1)": [[["-1/1"]]],
            }
        },
        "unit": ["1/1"],
    }


def test_algebra_roundtrip():
    doc = cocycle_algebra_doc()
    alg = load_algebra(doc)
    assert alg.dim == 1
    assert alg.unit_vector == LinComb.single(0)
    assert check_axioms(alg.as_carrier(), "RelAssoc", finite_domain(alg)).passed
    assert dump_algebra(alg) == doc
    assert load_algebra(dump_algebra(alg)).ops == alg.ops


def test_algebra_family_keys():
    doc = {
        "dim": 1,
        "basis": ["u"],
        "semigroup": ZMOD2,
        "ops": {"ast": {"0": [[["1/1"]]], "1": [[["1/2"]]]}},
        "unit": None,
    }
    alg = load_algebra(doc)
    assert alg.role_arity("ast") == 1
    assert dump_algebra(alg)["ops"]["ast"]["1"] == [[["1/2"]]]


def test_algebra_schema_errors():
    doc = cocycle_algebra_doc()
    del doc["ops"]["mul"]["(1,1)"]
    with pytest.raises(MalformedInputError, match="wrong index keys"):
        load_algebra(doc)
    doc = cocycle_algebra_doc()
    doc["ops"]["mul"]["(0,3)"] = [[["1/1"]]]
    with pytest.raises(MalformedInputError, match="unknown element"):
        load_algebra(doc)
    doc = cocycle_algebra_doc()
    doc["dim"] = 2
    with pytest.raises(MalformedInputError, match="basis"):
        load_algebra(doc)
    doc = cocycle_algebra_doc()
    doc["unit"] = ["1/1", "2/1"]
    with pytest.raises(MalformedInputError, match="unit"):
        load_algebra(doc)


def test_dump_algebra_survives_reload_for_bigger_carrier():
    alg = truncated_integration_zinbiel(4)
    doc = dump_algebra(alg)
    again = load_algebra(doc)
    assert again.ops == alg.ops
    assert again.basis == alg.basis


def test_rb_builtin_and_finite():
    rb = load_rota_baxter({"builtin": "reciprocal"})
    assert rb.apply(4, LinComb.single(0)) == LinComb.single(0, Fraction(1, 4))
    with pytest.raises(MalformedInputError):
        load_rota_baxter({"builtin": "nope"})
    doc = {
        "algebra": cocycle_algebra_doc(),
        "maps": {"0": [["0/1"]], "1": [["0/1"]]},
    }
    rb = load_rota_baxter(doc)
    assert rb.apply(0, LinComb.single(0)).is_zero()
    doc["maps"] = {"0": [["0/1"]]}
    with pytest.raises(MalformedInputError):
        load_rota_baxter(doc)


def test_morphism_loader():
    doc = {
        "source": cocycle_algebra_doc(),
        "target": cocycle_algebra_doc(),
        "maps": {"0": [["1/1"]], "1": [["-1/1"]]},
    }
    f = load_morphism(doc)
    assert f.apply(1, LinComb.single(0)) == LinComb.single(0, -1)
    doc["maps"]["1"] = [["1/1", "0/1"]]
    with pytest.raises(MalformedInputError):
        load_morphism(doc)


def test_load_file_errors(tmp_path):
    with pytest.raises(MalformedInputError):
        load_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    with pytest.raises(MalformedInputError, match="invalid JSON"):
        load_file(bad)


def test_report_json_roundtrip_is_byte_identical():
    alg = load_algebra(cocycle_algebra_doc())
    report = check_axioms(alg.as_carrier(), "RelAssoc", finite_domain(alg))
    text = to_json(report.to_payload())
    assert to_json(json.loads(text)) == text
