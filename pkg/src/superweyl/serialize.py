"""
Deterministic JSON reports.

Scalars are written as "p/q" strings, roots as integer arrays, and every
report embeds the base it was computed against.  Each report type has a
``from_json`` that rebuilds the emitting data.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra_base import fstr, scalar
from .errors import InvalidInput
from .rootdata import SimpleSystem, parse_family, root_system
from .weylmod.mapweight import MapWeight


def dumps(obj):
    """Byte-stable JSON text for a report dict."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def root_json(root):
    return [int(x) if Fraction(x).denominator == 1 else fstr(x) for x in root]


def root_from_json(data):
    return tuple(scalar(x) if isinstance(x, str) else int(x) for x in data)


def weight_json(weight):
    return [fstr(x) for x in weight]


def weight_from_json(data):
    return tuple(scalar(x) for x in data)


def character_json(ch):
    """Sorted list of {"weight", "dim"}; highest coordinates first."""
    items = sorted(ch.items(), key=lambda kv: tuple(-x for x in kv[0]))
    return [{"weight": weight_json(w), "dim": n} for w, n in items]


def character_from_json(data):
    return {weight_from_json(d["weight"]): int(d["dim"]) for d in data}


def system_from_json(family, roots):
    rs, _ = root_system(family)
    return SimpleSystem(rs, tuple(root_from_json(r) for r in roots))


def roots_report(family, system):
    rs = system.rs
    order = list(rs.parity)
    return {
        "algebra": family.descriptor,
        "label": family.label,
        "support": family.support_level,
        "coordinates": list(rs.labels),
        "roots": [{"root": root_json(r), "parity": p,
                   "positive": system.is_positive(r)} for r, p in rs.parity.items()],
        "system": [root_json(b) for b in system.roots],
        "base": [order.index(b) for b in system.roots],
        "parities": list(system.parities),
        "cartan": [[fstr(x) for x in row] for row in system.cartan_matrix],
        "counts": {"even": len(rs.even_roots), "odd": len(rs.odd_roots)},
    }


def condition_report(family, system, report):
    out = {"algebra": family.descriptor, "system": [root_json(b) for b in system.roots]}
    out["holds"] = report.holds
    out["witnesses"] = [{"simple": root_json(a), "partner": root_json(b) if b else None}
                        for a, b in report.witnesses.items()]
    return out


@dataclass
class CharacterReport:
    """A computed module summarized by its character."""

    algebra: str
    system: tuple
    psi: object
    truncation: object
    dimension: int
    character: dict
    trace: list = field(default_factory=list)
    kind: str = "weyl"

    @classmethod
    def of_module(cls, family, module):
        psi = getattr(module, "psi", None)
        plan = getattr(module, "plan", None)
        return cls(
            algebra=family.descriptor,
            system=tuple(module.system.roots),
            psi=psi,
            truncation=plan.M if plan is not None else None,
            dimension=module.dim,
            character=module.character(),
            trace=list(getattr(module, "trace", []) or []),
            kind="weyl" if psi is not None else "kac",
        )

    def to_json(self):
        out = {
            "algebra": self.algebra,
            "system": [root_json(b) for b in self.system],
            "psi": self.psi.to_json() if self.psi is not None else None,
            "truncation": self.truncation,
            "dimension": self.dimension,
            "character": character_json(self.character),
        }
        if self.kind != "weyl":
            out["kind"] = self.kind
        if self.trace:
            out["trace"] = [{"M": m, "dim": d} for m, d in self.trace]
        return out

    @classmethod
    def from_json(cls, data):
        try:
            parse_family(data["algebra"])
            psi = data["psi"]
            return cls(
                algebra=data["algebra"],
                system=tuple(root_from_json(r) for r in data["system"]),
                psi=MapWeight.from_json(psi) if psi is not None else None,
                truncation=data["truncation"],
                dimension=int(data["dimension"]),
                character=character_from_json(data["character"]),
                trace=[(d["M"], d["dim"]) for d in data.get("trace", [])],
                kind=data.get("kind", "weyl"),
            )
        except (KeyError, TypeError) as e:
            raise InvalidInput("malformed character report") from e

    def system_object(self):
        return system_from_json(parse_family(self.algebra), self.system)
