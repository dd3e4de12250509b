"""Validation reports shared by every checker.

A report records, for each named law, whether it held and the concrete
instances that broke it.  Malformed input (dangling identifiers, ill-typed
cells) is kept apart from genuine law violations.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class MalformedError(ValueError):
    """Raised when input tables or cells are structurally broken."""


class NotEnumerable(ValueError):
    """Raised when a search is asked of a substrate with infinite hom-sets."""


def _plain(x):
    """Turn witnesses into JSON-friendly values (tuples become lists)."""
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if hasattr(x, "tolist"):
        return x.tolist()
    return repr(x)


@dataclass
class Violation:
    law: str
    witness: object = None
    detail: str = ""
    malformed: bool = False

    def to_dict(self):
        d = {"law": self.law, "witness": _plain(self.witness)}
        if self.detail:
            d["detail"] = self.detail
        if self.malformed:
            d["malformed"] = True
        return d


@dataclass
class Report:
    subject: str = ""
    laws: dict = field(default_factory=dict)  # law name -> list[Violation]

    def law(self, name):
        """Register a law as checked (passing unless violations follow)."""
        self.laws.setdefault(name, [])
        return self

    def check(self, name, ok, witness=None, detail=""):
        self.law(name)
        if not ok:
            self.laws[name].append(Violation(name, witness, detail))
        return ok

    def malformed(self, name, witness=None, detail=""):
        self.law(name)
        self.laws[name].append(Violation(name, witness, detail, malformed=True))

    @property
    def ok(self):
        return all(not v for v in self.laws.values())

    @property
    def has_malformed(self):
        return any(x.malformed for v in self.laws.values() for x in v)

    def __bool__(self):
        return self.ok

    def failed(self):
        return [k for k, v in self.laws.items() if v]

    def passed(self):
        return [k for k, v in self.laws.items() if not v]

    def violations(self, name=None):
        if name is not None:
            return list(self.laws.get(name, []))
        return [x for v in self.laws.values() for x in v]

    def merge(self, other, prefix=""):
        for k, v in other.laws.items():
            key = f"{prefix}{k}"
            self.law(key)
            for x in v:
                self.laws[key].append(Violation(key, x.witness, x.detail, x.malformed))
        return self

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "laws": [
                {"law": k, "ok": not v, "violations": [x.to_dict() for x in v]}
                for k, v in self.laws.items()
            ],
        }

    def summary(self):
        lines = [f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"]
        for k, v in self.laws.items():
            mark = "ok  " if not v else "FAIL"
            extra = "" if not v else f"  e.g. {_plain(v[0].witness)}"
            lines.append(f"  [{mark}] {k}{extra}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Report({self.subject!r}, ok={self.ok}, failed={self.failed()})"
