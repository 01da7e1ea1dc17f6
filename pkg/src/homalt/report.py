"""Axiom reports returned by every checker."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator


@dataclass(frozen=True)
class AxiomEntry:
    name: str
    holds: bool
    witness: tuple | None = None
    defect: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "defect": [str(a) for a in self.defect] if self.defect is not None else None,
        }

    def describe(self, names: tuple | None = None) -> str:
        if self.holds:
            return f"PASS  {self.name}"
        w = self.witness
        where = ""
        if w is not None:
            where = f" at {tuple(w)}"
            if names is not None and all(isinstance(i, int) and 0 <= i < len(names) for i in w):
                where += " (" + ", ".join(names[i] for i in w) + ")"
        defect = ""
        if self.defect is not None:
            defect = " defect [" + ", ".join(str(a) for a in self.defect) + "]"
        return f"FAIL  {self.name}{where}{defect}"


@dataclass
class AxiomReport:
    entries: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)

    def __bool__(self) -> bool:
        return self.holds

    def __iter__(self) -> Iterator[AxiomEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, name: str) -> AxiomEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self) -> list:
        return [e.name for e in self.entries]

    def failures(self) -> list:
        return [e for e in self.entries if not e.holds]

    def __add__(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(list(self.entries) + list(other.entries))

    def to_dict(self) -> dict:
        return {"holds": self.holds, "axioms": [e.to_dict() for e in self.entries]}


def passed(name: str) -> AxiomEntry:
    return AxiomEntry(name, True)


def failed(name: str, witness=None, defect=None) -> AxiomEntry:
    return AxiomEntry(name, False, witness, defect)


def flag(name: str, ok: bool) -> AxiomEntry:
    """Entry for a yes/no condition that has no natural witness."""
    return AxiomEntry(name, bool(ok))


def scan(name: str, n: int, arity: int, defect: Callable) -> AxiomEntry:
    """Evaluate ``defect`` on every basis tuple in lexicographic order.

    ``defect`` returns a vector (tuple of Fractions) or a single Fraction; the
    first tuple with a nonzero defect becomes the witness.
    """
    for idx in itertools.product(range(n), repeat=arity):
        d = defect(*idx)
        if isinstance(d, (Fraction, int)):
            if d:
                return failed(name, idx, (Fraction(d),))
        elif any(d):
            return failed(name, idx, tuple(d))
    return passed(name)


def combine(*reports: Iterable) -> AxiomReport:
    out = []
    for r in reports:
        if isinstance(r, AxiomEntry):
            out.append(r)
        else:
            out.extend(r)
    return AxiomReport(out)
