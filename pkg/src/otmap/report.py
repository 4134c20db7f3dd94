"""Certificate containers and JSON serialization for the verification suite.

Every machine check produces a Certificate: a check id, a PASS/FAIL status,
a list of items carrying exact values as "p/q" strings, and (on failure)
explicit witnesses.  Decimals appearing in reports are presentation only;
no pass/fail decision is derived from them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .intervals import RInt

SCHEMA_VERSION = "1"


def jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, RInt):
        return {
            "lo": jsonable(value.lo),
            "hi": jsonable(value.hi),
            "approx": float(value.midpoint()),
        }
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return repr(value)


@dataclass
class Certificate:
    check_id: str
    label: str
    items: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "PASS" if not self.failures else "FAIL"

    def ok(self, name, **values):
        self.items.append({"name": name, **{k: jsonable(v) for k, v in values.items()}})

    def fail(self, name, **values):
        self.failures.append({"name": name, **{k: jsonable(v) for k, v in values.items()}})

    def require(self, condition: bool, name, **values):
        if condition:
            self.ok(name, **values)
        else:
            self.fail(name, **values)
        return condition

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "label": self.label,
            "status": self.status,
            "items": self.items,
            "failures": self.failures,
        }


@dataclass
class Report:
    config: dict
    certificates: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def add(self, cert: Certificate):
        self.certificates.append(cert)
        return cert

    @property
    def overall(self) -> str:
        return "PASS" if all(c.status == "PASS" for c in self.certificates) else "FAIL"

    def to_dict(self, timing=None):
        out = {
            "schema": SCHEMA_VERSION,
            "config": jsonable(self.config),
            "overall": self.overall,
            "checks": [c.to_dict() for c in self.certificates],
            "warnings": list(self.warnings),
        }
        if timing is not None:
            out["timing"] = timing
        return out

    def to_json(self, timing=None) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)
