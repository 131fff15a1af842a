"""Parametric families and the catalogue of recorded examples.

Expected values attached to a FamilyInstance are catalogue data, kept
apart from anything computed.  Each carries a characteristic tag:
"any", "0", "p" (every positive characteristic), or a specific
restriction such as "3" or "p!=3".
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Any, Sequence

from .exactla import IntMatrix
from .toric import (
    MINIMAL_GENERATORS,
    RADICAL_GENERATORS,
    Configuration,
    GeneratorSet,
    LatticeVector,
    as_configuration,
)

CATALOGUE_IDS = ("ex2_8", "ex4_4", "ex4_5", "k33")
CHAR_TAGS = ("any", "0", "p", "3", "p!=3")


@dataclass(frozen=True)
class Expected:
    """One recorded quantity: an exact value or a closed interval."""

    quantity: str
    value: Any = None
    interval: tuple[int, int] | None = None
    char: str = "any"

    def matches(self, computed) -> bool:
        if self.interval is not None:
            lo, hi = self.interval
            return computed is not None and lo <= computed <= hi
        return computed == self.value

    def describe(self) -> str:
        v = f"[{self.interval[0]}, {self.interval[1]}]" if self.interval is not None else repr(self.value)
        return f"{self.quantity} = {v} (char {self.char})"

    def as_dict(self) -> dict:
        d = {"quantity": self.quantity, "char": self.char, "source": "catalogue"}
        if self.interval is not None:
            d["interval"] = list(self.interval)
        else:
            d["value"] = self.value
        return d


@dataclass
class FamilyInstance:
    family: str
    params: dict
    config: Configuration
    expected: list[Expected] = field(default_factory=list)
    vectors: dict[str, LatticeVector] = field(default_factory=dict)
    generator_sets: dict[str, GeneratorSet] = field(default_factory=dict)
    extra: dict[str, Any] = field(default_factory=dict)

    def values(self, quantity: str, char: str | None = None) -> list[Expected]:
        return [e for e in self.expected if e.quantity == quantity and (char is None or e.char == char)]

    def value(self, quantity: str, char: str = "any"):
        """The single exact value recorded for `quantity` under `char`; KeyError if absent."""
        for e in self.expected:
            if e.quantity == quantity and e.char == char and e.interval is None:
                return e.value
        raise KeyError(f"{self.family}: no catalogued {quantity} for char {char}")


# ---------------------------------------------------------------- binomials

_MONO = re.compile(r"^([A-Za-z]\w*?)(?:\^(\d+))?$")


def parse_binomial(text: str, variables: Sequence[str]) -> LatticeVector:
    """'x1^3 - x2^2*x3' -> the lattice vector of exponents, left minus right."""
    index = {v: k for k, v in enumerate(variables)}
    sides = text.split("-")
    if len(sides) != 2:
        raise ValueError(f"not a binomial: {text!r}")
    u = [0] * len(variables)
    for sign, side in zip((1, -1), sides):
        side = side.strip()
        if side == "1":
            continue
        for factor in side.split("*"):
            mo = _MONO.match(factor.strip())
            if mo is None or mo.group(1) not in index:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            u[index[mo.group(1)]] += sign * int(mo.group(2) or 1)
    return LatticeVector(tuple(u))


# ---------------------------------------------------------------- symmetric curves


def symmetric_curve(a: int, b: int) -> FamilyInstance:
    """The 2x4 configuration [[1,1,1,1],[0,a,b,a+b]] of a symmetric monomial curve in P^3."""
    if not (isinstance(a, int) and isinstance(b, int)) or a <= 0 or a >= b:
        raise ValueError(f"need integers 0 < a < b, got a={a}, b={b}")
    d = a + b
    if gcd(a, b) != 1:
        warnings.warn(f"gcd(a, b, d) = {gcd(a, b)} != 1 for (a, b) = ({a}, {b})", stacklevel=2)
    A = Configuration([[1, 1, 1, 1], [0, a, b, d]], name=f"symmetric_curve({a},{b})")
    w = LatticeVector((1, -1, -1, 1))
    gens = [w] + [LatticeVector((b - a - i, -(b - i), a + i, -i)) for i in range(b - a + 1)]
    graver = [LatticeVector((b - i, i - a - b, i, a - i)) for i in range(a + b + 1)] + [w]
    expected = [
        Expected("height", 2),
        Expected("mu", b - a + 2),
        Expected("graver_size", a + b + 2),
        Expected("split", b - a + 2),
        Expected("split_rad", 2, char="p"),
        Expected("split_rad", 3, char="0"),
    ]
    return FamilyInstance(
        "symmetric_curve",
        {"a": a, "b": b, "d": d},
        A,
        expected,
        {"w": w},
        {
            "minimal": GeneratorSet(tuple(gens), MINIMAL_GENERATORS, "listed generators"),
            "graver": GeneratorSet(tuple(v.canonical() for v in graver), MINIMAL_GENERATORS, "v_i and w"),
        },
    )


# ---------------------------------------------------------------- Lawrence liftings


def lawrence_lifting(A) -> Configuration:
    """[[A, 0], [I_n, I_n]]."""
    A = as_configuration(A)
    n = A.n
    top = [list(row) + [0] * n for row in A.matrix.rows]
    bottom = [[int(i == j) for j in range(n)] + [int(i == j) for j in range(n)] for i in range(n)]
    name = f"lawrence({A.name})" if A.name else None
    return Configuration(top + bottom, name=name)


def lift(u: Sequence[int]) -> LatticeVector:
    """u -> (u, -u)."""
    return LatticeVector(tuple(u) + tuple(-x for x in u))


def lawrence_of_symmetric_curve(a: int, b: int) -> FamilyInstance:
    base = symmetric_curve(a, b)
    L = lawrence_lifting(base.config)
    # the four circuits of the curve, written x^(left) - x^(right)
    curve_circuits = [
        (-(b - a), b, -a, 0),
        (-b, a + b, 0, -a),
        (0, -a, b, -(b - a)),
        (-a, 0, a + b, -b),
    ]
    circuits = [lift(c) for c in curve_circuits]
    # E1..E4 are the supports of the leading monomials, E5..E8 of the trailing ones
    E = [frozenset(c.plus) for c in circuits] + [frozenset(c.minus) for c in circuits]
    expected = [
        Expected("height", 2),
        Expected("mu", a + b + 2),
        Expected("circuits", 4),
        Expected("gamma_vertices", 8),
        Expected("gamma_edges", 4),
        Expected("delta01", 4),
        Expected("bar", 4),
        Expected("split", a + b + 2),
        Expected("split_rad", 4),
    ]
    graver = base.generator_sets["graver"]
    return FamilyInstance(
        "lawrence_of_symmetric_curve",
        {"a": a, "b": b},
        L,
        expected,
        {},
        {
            "minimal": GeneratorSet(tuple(lift(v).canonical() for v in graver), MINIMAL_GENERATORS, "lifted Graver basis"),
            "circuits": GeneratorSet(tuple(circuits), RADICAL_GENERATORS, "lifted circuits"),
        },
        # each edge joins the two sides of one lifted circuit
        {"E": E, "gamma_edge_pairs": [(0, 4), (1, 5), (2, 6), (3, 7)]},
    )


# ---------------------------------------------------------------- cyclic configurations


def cyclic_configuration(d: int, t: Sequence[int] | None = None) -> FamilyInstance:
    """Columns (1, t, t^2, ..., t^(2d-2)) for 2d+1 increasing integers t."""
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    t = list(range(2 * d + 1)) if t is None else [int(x) for x in t]
    if len(t) != 2 * d + 1:
        raise ValueError(f"need {2 * d + 1} parameters, got {len(t)}")
    if any(x >= y for x, y in zip(t, t[1:])):
        raise ValueError("parameters must be strictly increasing")
    rows = [[x**k for x in t] for k in range(2 * d - 1)]
    A = Configuration(rows, name=f"cyclic({d})")
    expected = [
        Expected("height", 2),
        Expected("rank", 2 * d - 1),
        Expected("circuits", 2 * d + 1),
        Expected("gamma_vertices", 2 * d + 1),
        Expected("gamma_edges", 2 * d + 1),
        Expected("delta01", d + 1),
        Expected("split_rad", interval=(d + 1, 2 * d + 1)),
    ]
    return FamilyInstance("cyclic", {"d": d, "t": t}, A, expected)


# ---------------------------------------------------------------- catalogue


@lru_cache(maxsize=1)
def load_catalogue() -> dict:
    with resources.files("toricsplit").joinpath("data/catalogue.json").open("r", encoding="utf-8") as fh:
        return json.load(fh)


def _expected(entries) -> list[Expected]:
    out = []
    for e in entries:
        interval = tuple(e["interval"]) if "interval" in e else None
        out.append(Expected(e["quantity"], e.get("value"), interval, e.get("char", "any")))
    return out


def catalogued_example(example_id: str, catalogue: dict | None = None) -> FamilyInstance:
    cat = catalogue if catalogue is not None else load_catalogue()
    if example_id not in cat["examples"]:
        raise KeyError(f"unknown catalogued example {example_id!r}; known: {', '.join(sorted(cat['examples']))}")
    entry = cat["examples"][example_id]
    expected = _expected(entry.get("values", []))
    params = {"id": example_id, "catalogue_version": cat["version"]}

    if example_id == "k33" or "graph" in entry:
        from .graphs import BipartiteGraph, incidence_configuration

        G = BipartiteGraph.complete(entry["graph"]["m"], entry["graph"]["n"])
        A = incidence_configuration(G)
        var = entry["variables"]
        gens = tuple(parse_binomial(s, var) for s in entry["generators"])
        sets = {"minimal": GeneratorSet(gens, MINIMAL_GENERATORS, "catalogue")}
        subgraphs = {}
        for name, sg in entry["subgraphs"].items():
            sets[name] = GeneratorSet(tuple(parse_binomial(s, var) for s in sg["generators"]), MINIMAL_GENERATORS, "catalogue")
            subgraphs[name] = ([i - 1 for i in sg["left"]], [j - 1 for j in sg["right"]])
        return FamilyInstance("catalogued_example", params, A, expected, {}, sets, {"graph": G, "subgraphs": subgraphs})

    A = Configuration(entry["matrix"], name=example_id)
    vectors = {k: LatticeVector(tuple(v)) for k, v in entry.get("vectors", {}).items()}
    sets: dict[str, GeneratorSet] = {}
    extra: dict[str, Any] = {}
    var = entry.get("variables")
    if "generators" in entry:
        sets["minimal"] = GeneratorSet(
            tuple(parse_binomial(s, var) for s in entry["generators"]), MINIMAL_GENERATORS, "catalogue"
        )
    if "radical_generators" in entry:
        sets["radical"] = GeneratorSet(
            tuple(parse_binomial(s, var) for s in entry["radical_generators"]), RADICAL_GENERATORS, "catalogue"
        )
    for char, names in entry.get("radical_generating_sets", {}).items():
        sets[f"radical[char {char}]"] = GeneratorSet(
            tuple(vectors[k] for k in names), RADICAL_GENERATORS, f"catalogue, char {char}"
        )
    for name, names in entry.get("covers", {}).items():
        extra.setdefault("covers", {})[name] = list(names)
    for name, wm in entry.get("witness_matrices", {}).items():
        extra.setdefault("witness_matrices", {})[name] = (wm["cover"], IntMatrix.from_rows(wm["matrix"]))
    for name, bs in entry.get("binomial_sets", {}).items():
        sets[name] = GeneratorSet(
            tuple(parse_binomial(s, bs["variables"]) for s in bs["binomials"]), RADICAL_GENERATORS, "catalogue"
        )
    if "t_min" in entry:
        extra["t_min"] = [frozenset(i - 1 for i in s) for s in entry["t_min"]]
    if "gamma_edges" in entry:
        extra["gamma_edges"] = [tuple(e) for e in entry["gamma_edges"]]
    return FamilyInstance("catalogued_example", params, A, expected, vectors, sets, extra)


def match_catalogue(A) -> str | None:
    """Id of the catalogued matrix example equal to A, if any."""
    A = as_configuration(A)
    for key, entry in load_catalogue()["examples"].items():
        if "matrix" in entry and [list(r) for r in A.matrix.rows] == entry["matrix"]:
            return key
    return None
