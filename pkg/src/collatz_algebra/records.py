"""One-record-per-line serialization of result objects.

Every record is a flat-ish JSON object with a ``"type"`` tag.  Integers and
rationals are written as decimal strings so any magnitude survives, and
``from_record(to_record(obj)) == obj`` for every supported type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .affine import CycleSolution
from .core import OrbitRecord
from .enumeration import LevelSet, PruneStats
from .families import FamilyMember, FamilyParams
from .solver import SolveResult
from .stats import DensityReport, ResidueReport
from .words import format_blocks, format_word, parse_blocks, parse_word


@dataclass(frozen=True)
class CycleListing:
    k: int
    solutions: tuple[CycleSolution, ...]


def _opt(v: Any) -> str | None:
    return None if v is None else str(v)


def _opt_int(v: str | None) -> int | None:
    return None if v is None else int(v)


def _ints(xs) -> list[str]:
    return [str(x) for x in xs]


def to_record(obj: Any) -> dict[str, Any]:
    if isinstance(obj, OrbitRecord):
        return {
            "type": "orbit",
            "start": str(obj.start),
            "iterates": _ints(obj.iterates),
            "word": format_word(obj.word),
            "length": _opt(obj.length),
            "minimum": str(obj.minimum),
            "terminated": obj.terminated,
            "steps": str(obj.steps),
            "truncated": obj.truncated,
        }
    if isinstance(obj, SolveResult):
        return {
            "type": "solve",
            "blocks": format_blocks(obj.blocks),
            "candidate": str(obj.candidate),
            "natural": _opt(obj.natural),
            "verified_length": _opt(obj.verified_length),
        }
    if isinstance(obj, FamilyMember):
        return {
            "type": "family",
            "m": _ints(obj.params.m),
            "l": _ints(obj.params.l),
            "blocks": format_blocks(obj.blocks),
            "alpha": str(obj.alpha),
            "length": str(obj.length),
        }
    if isinstance(obj, LevelSet):
        rec = {"type": "level", "depth": str(obj.depth), "members": _ints(obj.members)}
        if obj.words:
            rec["words"] = {str(n): format_word(w) for n, w in sorted(obj.words.items())}
        return rec
    if isinstance(obj, PruneStats):
        return {"type": "prune", **{k: str(v) for k, v in vars(obj).items()}}
    if isinstance(obj, DensityReport):
        return {
            "type": "density",
            "M": str(obj.M),
            "A": str(obj.A),
            "ratio": str(obj.ratio),
            "cutoff": str(obj.cutoff),
            "undecided": str(obj.undecided),
            "never": str(obj.never),
        }
    if isinstance(obj, ResidueReport):
        return {
            "type": "residue",
            "range_end": str(obj.range_end),
            "checked": str(obj.checked),
            "cutoff": str(obj.cutoff),
            "glides_3mod4": {str(g): str(c) for g, c in obj.glides_3mod4.items()},
            "undecided_3mod4": _ints(obj.undecided_3mod4),
        }
    if isinstance(obj, CycleListing):
        return {
            "type": "cycles",
            "k": str(obj.k),
            "solutions": [{"word": format_word(s.word), "x": str(s.x)} for s in obj.solutions],
        }
    raise TypeError(f"no record form for {type(obj).__name__}")


def from_record(rec: dict[str, Any]) -> Any:
    kind = rec["type"]
    if kind == "orbit":
        return OrbitRecord(
            start=int(rec["start"]),
            iterates=tuple(int(x) for x in rec["iterates"]),
            word=parse_word(rec["word"]),
            length=_opt_int(rec["length"]),
            minimum=int(rec["minimum"]),
            terminated=rec["terminated"],
            steps=int(rec["steps"]),
            truncated=rec["truncated"],
        )
    if kind == "solve":
        return SolveResult(
            parse_blocks(rec["blocks"]),
            Fraction(rec["candidate"]),
            _opt_int(rec["natural"]),
            _opt_int(rec["verified_length"]),
        )
    if kind == "family":
        return FamilyMember(
            FamilyParams(tuple(map(int, rec["m"])), tuple(map(int, rec["l"]))),
            parse_blocks(rec["blocks"]),
            int(rec["alpha"]),
            int(rec["length"]),
        )
    if kind == "level":
        words = {int(n): parse_word(w) for n, w in rec.get("words", {}).items()}
        return LevelSet(int(rec["depth"]), tuple(map(int, rec["members"])), words)
    if kind == "prune":
        return PruneStats(**{k: int(v) for k, v in rec.items() if k != "type"})
    if kind == "density":
        return DensityReport(
            int(rec["M"]), int(rec["A"]), Fraction(rec["ratio"]),
            int(rec["cutoff"]), int(rec["undecided"]), int(rec["never"]),
        )
    if kind == "residue":
        return ResidueReport(
            int(rec["range_end"]),
            int(rec["checked"]),
            int(rec["cutoff"]),
            {int(g): int(c) for g, c in rec["glides_3mod4"].items()},
            tuple(map(int, rec["undecided_3mod4"])),
        )
    if kind == "cycles":
        sols = tuple(CycleSolution(parse_word(s["word"]), int(s["x"])) for s in rec["solutions"])
        return CycleListing(int(rec["k"]), sols)
    raise ValueError(f"unknown record type {kind!r}")


def dumps(obj: Any) -> str:
    rec = obj if isinstance(obj, dict) else to_record(obj)
    return json.dumps(rec, separators=(",", ":"))


def loads(line: str) -> Any:
    return from_record(json.loads(line))
