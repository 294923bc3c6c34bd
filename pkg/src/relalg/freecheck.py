"""Axiom checks and derived operation bundles on the free tree carrier."""

from .axioms import check_axioms
from .constructions import (
    assoc_from_dend,
    family_to_pair,
    lie_from_prelie,
    prelie_from_dend,
)
from .errors import ContractError
from .freedend import SampledTreeDomain
from .ops import OpCarrier

FREE_SUITES = (
    "DimonoidDendriform",
    "FamDendriform",
    "RelDendriform",
    "RelAssoc",
    "RelPreLie",
    "RelLie",
)


def free_pair_ops(carrier):
    """Pair-indexed prec/succ on the free carrier, via the family lifting;
    needs a semigroup-form dimonoid."""
    prec_fam, succ_fam = carrier.family_ops()
    return family_to_pair("prec", prec_fam), family_to_pair("succ", succ_fam)


def free_suite_carrier(carrier, suite_name):
    """Operation bundle on the free carrier appropriate for the suite, and
    the index structure the suite runs over."""
    if suite_name == "DimonoidDendriform":
        prec, succ = carrier.dimonoid_ops()
        return OpCarrier(carrier.dimonoid, {"prec": prec, "succ": succ})
    if suite_name == "FamDendriform":
        prec, succ = carrier.family_ops()
        return OpCarrier(prec.index, {"prec": prec, "succ": succ})
    prec, succ = free_pair_ops(carrier)
    index = prec.index
    if suite_name == "RelDendriform":
        return OpCarrier(index, {"prec": prec, "succ": succ})
    if suite_name == "RelAssoc":
        return OpCarrier(index, {"mul": assoc_from_dend(prec, succ)})
    if suite_name == "RelPreLie":
        return OpCarrier(index, {"circ": prelie_from_dend(prec, succ)})
    if suite_name == "RelLie":
        return OpCarrier(index, {"bracket": lie_from_prelie(prelie_from_dend(prec, succ))})
    raise ContractError(
        f"suite {suite_name!r} is not available on free carriers "
        f"(choose from {', '.join(FREE_SUITES)})"
    )


def free_check(carrier, suite_name, samples=200, max_vertices=6, seed=0):
    """Run a suite over seeded random tree tuples and all index tuples."""
    opc = free_suite_carrier(carrier, suite_name)
    domain = SampledTreeDomain(carrier, opc.index, samples, max_vertices, seed)
    report = check_axioms(opc, suite_name, domain, check_name=f"free-check:{suite_name}")
    info = dict(report.info)
    info.update(
        {
            "samples": samples,
            "max_vertices": max_vertices,
            "seed": seed,
            "decorations": list(carrier.decorations),
            "index_elements": list(
                carrier.dimonoid.elements
                if suite_name == "DimonoidDendriform"
                else opc.index.elements
            ),
        }
    )
    return type(report)(
        check=report.check,
        passed=report.passed,
        instances=report.instances,
        counterexample=report.counterexample,
        info=info,
    )
