"""A tiny record type shared by every verification routine."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object
    passed: bool

    def to_json(self):
        return {"name": self.name, "expected": _plain(self.expected), "actual": _plain(self.actual), "pass": self.passed}


def _plain(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)


def equal(name, expected, actual):
    return Check(name, expected, actual, expected == actual)


def holds(name, condition, detail=None):
    """A boolean check; ``detail`` is reported as the actual value."""
    return Check(name, True, detail if detail is not None else bool(condition), bool(condition))


def all_passed(checks):
    return all(c.passed for c in checks)
