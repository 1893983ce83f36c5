"""Structured pass/fail records returned by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class Report:
    suite: str
    params: dict
    passed: bool
    anchor: str = ""
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    warn: bool = False
    timing: float | None = None

    @property
    def status(self) -> str:
        if not self.passed:
            return "fail"
        return "warn" if self.warn else "pass"

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": jsonable(self.params),
            "status": self.status,
            "pass": self.passed,
            "anchor": self.anchor,
            "witnesses": jsonable(self.witnesses),
            "details": jsonable(self.details),
            "timing": self.timing,
        }


def jsonable(obj: Any) -> Any:
    """Convert partitions, fractions, tuples and nested containers to JSON values."""
    from skewtca.partition import Partition

    if isinstance(obj, Partition):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(jsonable(k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=repr)
        return items
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)
