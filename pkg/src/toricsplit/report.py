"""Structured reports: a JSON-native tree with a text rendering of the same tree."""

from __future__ import annotations

import json
from typing import Any

from .toric import LatticeVector


class Report:
    """Sections: input, computed, catalogue, comparisons, notes (plus timing on request).

    Everything stored is plain JSON data, so ``to_json`` followed by
    ``from_json`` reproduces the document exactly, and the text form is
    rendered from the same tree.
    """

    def __init__(self, command: str, doc: dict | None = None):
        self.doc: dict[str, Any] = doc if doc is not None else {
            "command": command,
            "status": "ok",
            "input": {},
            "computed": {},
            "catalogue": [],
            "comparisons": [],
            "notes": [],
        }

    @property
    def command(self) -> str:
        return self.doc["command"]

    def __getitem__(self, key):
        return self.doc[key]

    def note(self, text: str) -> None:
        self.doc["notes"].append(text)

    def degrade(self, text: str) -> None:
        self.doc["status"] = "budget_exhausted"
        self.note(text)

    def to_json(self) -> str:
        return json.dumps(self.doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        return cls(doc["command"], doc)

    def to_text(self) -> str:
        lines: list[str] = []
        _render(self.doc, 0, lines)
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _scalar(x) -> bool:
    return x is None or isinstance(x, (bool, int, float, str))


def _inline(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, list):
        return "[" + ", ".join(_inline(y) for y in x) + "]"
    return str(x)


def _flat(x) -> bool:
    return _scalar(x) or (isinstance(x, list) and all(_flat(y) for y in x) and len(_inline(x)) <= 100)


def _render(node, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    if isinstance(node, dict):
        for key in sorted(node):
            value = node[key]
            if _flat(value):
                lines.append(f"{pad}{key}: {_inline(value)}")
            elif isinstance(value, (list, dict)) and not value:
                lines.append(f"{pad}{key}: {'[]' if isinstance(value, list) else '{}'}")
            else:
                lines.append(f"{pad}{key}:")
                _render(value, depth + 1, lines)
    elif isinstance(node, list):
        for item in node:
            if _flat(item):
                lines.append(f"{pad}- {_inline(item)}")
            else:
                sub: list[str] = []
                _render(item, depth + 1, sub)
                first = sub[0].lstrip()
                lines.append(f"{pad}- {first}")
                lines.extend(sub[1:])
    else:
        lines.append(f"{pad}{_inline(node)}")


# ---------------------------------------------------------------- helpers for callers


def vector_entry(v: LatticeVector, var: str = "x", names: list[str] | None = None) -> dict:
    return {"vector": list(v.coords), "binomial": binomial_text(v, var, names)}


def binomial_text(v: LatticeVector, var: str = "x", names: list[str] | None = None) -> str:
    if names is None:
        return v.binomial(var)

    def mono(part):
        terms = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(part) if e]
        return "*".join(terms) or "1"

    return f"{mono(v.positive_part)} - {mono(v.negative_part)}"


def one_based(indices) -> list[int]:
    return [i + 1 for i in sorted(indices)]
