"""Derivation DAGs: ordered rule applications with axiom citations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Axiom:
    """A tagged external fact.

    ``statement`` is either a cohomology fact (see ``cohomology.Fact``) or a
    plain string for axioms consumed by the replay scripts.
    """

    id: str
    statement: object
    citation: str

    def __post_init__(self):
        if not self.citation:
            raise ValueError(f"axiom {self.id} needs a citation")


@dataclass(frozen=True)
class Step:
    id: int
    rule: str
    inputs: tuple[int, ...]
    output: dict
    note: str = ""

    def to_json(self) -> dict:
        doc = {"id": self.id, "rule": self.rule, "inputs": list(self.inputs),
               "output": self.output}
        if self.note:
            doc["note"] = self.note
        return doc


class DerivationError(ValueError):
    pass


@dataclass
class Derivation:
    steps: list[Step] = field(default_factory=list)
    axioms: dict[str, str] = field(default_factory=dict)

    def add(self, rule: str, inputs=(), output=None, note: str = "") -> int:
        sid = len(self.steps)
        inputs = tuple(sorted(set(int(i) for i in inputs if i is not None)))
        if any(i >= sid or i < 0 for i in inputs):
            raise DerivationError(f"step {sid} cites a step that does not precede it")
        self.steps.append(Step(sid, rule, inputs, dict(output or {}), note))
        return sid

    def claim(self, rule: str, text: str, inputs=(), **data) -> int:
        """Record a non-cohomological conclusion (arithmetic, counting, axiom use)."""
        out = {"kind": "claim", "text": text}
        out.update(data)
        return self.add(rule, inputs, out)

    def use_axiom(self, axiom: Axiom, inputs=()) -> int:
        self.axioms.setdefault(axiom.id, axiom.citation)
        return self.claim("R-axiom", str(axiom.statement), inputs, axiom=axiom.id)

    def merge(self, other: Derivation) -> dict[int, int]:
        """Append ``other``'s steps, renumbered; returns the id map."""
        offset = len(self.steps)
        mapping = {}
        for s in other.steps:
            mapping[s.id] = s.id + offset
            self.steps.append(
                Step(s.id + offset, s.rule, tuple(i + offset for i in s.inputs),
                     s.output, s.note)
            )
        for k, v in other.axioms.items():
            self.axioms.setdefault(k, v)
        return mapping

    @property
    def last(self) -> int | None:
        return self.steps[-1].id if self.steps else None

    def rules_used(self) -> set[str]:
        return {s.rule for s in self.steps}

    def validate(self) -> None:
        """Check ids are dense and every input strictly precedes its step."""
        for pos, s in enumerate(self.steps):
            if s.id != pos:
                raise DerivationError(f"step at position {pos} has id {s.id}")
            if any(i >= s.id for i in s.inputs):
                raise DerivationError(f"step {s.id} is not topologically ordered")

    def to_json(self) -> dict:
        return {
            "axioms": [{"id": k, "citation": v} for k, v in sorted(self.axioms.items())],
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, doc: dict) -> Derivation:
        d = cls()
        for s in doc["steps"]:
            d.steps.append(Step(int(s["id"]), s["rule"], tuple(s["inputs"]),
                                s["output"], s.get("note", "")))
        d.axioms = {a["id"]: a["citation"] for a in doc.get("axioms", [])}
        d.validate()
        return d
