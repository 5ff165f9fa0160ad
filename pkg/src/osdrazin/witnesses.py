"""Witness and verification-report records shared by every verifier.

A Witness packages a candidate inverse together with the side and the flavor
of the defining system it is claimed to satisfy. A VerificationReport is the
per-instance record every campaign trial produces; reports serialize to JSON
objects with exact matrix entries so failures are fully reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .matrix import SquareMatrix

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two-sided"

REGULAR = "regular"
STRONGLY_PI = "strongly-pi"
DRAZIN = "drazin"
GROUP = "group"
GENERALIZED_DRAZIN = "generalized-drazin"

_SIDES = (LEFT, RIGHT, TWO_SIDED)
_KINDS = (REGULAR, STRONGLY_PI, DRAZIN, GROUP, GENERALIZED_DRAZIN)


@dataclass(frozen=True)
class Witness:
    """A candidate one-sided or two-sided inverse with its claimed index.

    index is None exactly for the kinds whose defining system has no index
    (regular and generalized-drazin).
    """

    candidate: SquareMatrix
    side: str
    kind: str
    index: Optional[int] = None

    def __post_init__(self):
        if self.side not in _SIDES:
            raise ValueError(f"unknown side {self.side!r}")
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind in (REGULAR, GENERALIZED_DRAZIN):
            if self.index is not None:
                raise ValueError(f"{self.kind} witnesses carry no index")
        elif self.index is None or self.index < 0:
            raise ValueError(f"{self.kind} witnesses need an index >= 0")

    def to_doc(self) -> dict:
        return {
            "candidate": self.candidate.to_doc(),
            "side": self.side,
            "kind": self.kind,
            "index": self.index,
        }

    @staticmethod
    def from_doc(doc: dict) -> "Witness":
        return Witness(
            candidate=SquareMatrix.from_doc(doc["candidate"]),
            side=doc["side"],
            kind=doc["kind"],
            index=doc.get("index"),
        )


@dataclass
class VerificationReport:
    """Outcome of verifying one instance: named boolean checks plus context.

    checks preserve insertion order; ok() is the conjunction. matrices holds
    the exact inputs/outputs worth reproducing a failure from; indices holds
    named integers (Drazin indices, witness indices); notes are free-form
    strings; timings (seconds, floats) are observability-only and are dropped
    by deterministic aggregation.
    """

    instance_id: str
    checks: list = field(default_factory=list)
    witness: Optional[Witness] = None
    indices: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def check(self, name: str, passed: bool) -> bool:
        self.checks.append((name, bool(passed)))
        return bool(passed)

    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def failed_checks(self) -> list:
        return [name for name, passed in self.checks if not passed]

    def record_matrix(self, name: str, m: SquareMatrix):
        self.matrices[name] = m

    def to_doc(self, include_timings: bool = True) -> dict:
        doc = {
            "instance": self.instance_id,
            "ok": self.ok(),
            "checks": [[name, passed] for name, passed in self.checks],
            "indices": dict(self.indices),
            "matrices": {k: m.to_doc() for k, m in self.matrices.items()},
            "notes": list(self.notes),
        }
        if self.witness is not None:
            doc["witness"] = self.witness.to_doc()
        if include_timings and self.timings:
            doc["timings"] = dict(self.timings)
        return doc

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_doc(include_timings), sort_keys=True)
