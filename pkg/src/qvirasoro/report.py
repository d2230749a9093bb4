"""Check reports: one JSON object per verified identity."""

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "not-stabilized", "pole-at-sample")


@dataclass
class CheckReport:
    suite: str
    check: str
    anchor: str
    params: dict = field(default_factory=dict)
    status: str = "pass"
    witness: dict = None
    wall_time: float = None

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self, timings=False):
        out = {
            "suite": self.suite,
            "check": self.check,
            "anchor": self.anchor,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
        }
        if timings:
            out["wall_time"] = None if self.wall_time is None else round(self.wall_time, 3)
        return out

    def to_json(self, timings=False):
        return json.dumps(self.to_dict(timings), sort_keys=False, separators=(",", ":"))
