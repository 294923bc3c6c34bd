"""Structured check reports.

Every verification in the package returns a :class:`CheckReport`: a machine
name for the check, a pass bit, the number of verified instances, and (on
failure) the first counterexample in the check's deterministic scan order.
Reports serialize to JSON with a canonical rendering so that identical runs
produce byte-identical output.
"""

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Counterexample:
    equation: str
    elements: tuple = ()
    indices: tuple = ()
    lhs: object = None
    rhs: object = None

    def to_payload(self):
        return {
            "equation": self.equation,
            "elements": list(self.elements),
            "indices": list(self.indices),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class CheckReport:
    check: str
    passed: bool
    instances: int
    counterexample: Counterexample | None = None
    info: dict = field(default_factory=dict)

    def to_payload(self):
        return {
            "check": self.check,
            "passed": self.passed,
            "instances": self.instances,
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_payload(),
            "info": self.info,
        }

    def summary(self):
        if self.passed:
            return f"PASS {self.check}: {self.instances} instances verified"
        ce = self.counterexample
        where = ""
        if ce is not None:
            bits = [ce.equation]
            if ce.indices:
                bits.append("indices (" + ", ".join(ce.indices) + ")")
            if ce.elements:
                bits.append("elements (" + ", ".join(ce.elements) + ")")
            where = " at " + ", ".join(bits)
        return f"FAIL {self.check}{where}"


def to_json(payload):
    """Canonical JSON rendering used by the CLI and the tests."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
