"""Command-line front end.

    toricsplit kernel FILE          toricsplit graph-gens FILE
    toricsplit circuits FILE        toricsplit kmn-split M N
    toricsplit graver FILE          toricsplit family NAME ARGS...
    toricsplit markov FILE          toricsplit verify-paper
    toricsplit gamma FILE
    toricsplit delta FILE
    toricsplit bar-bounds FILE
    toricsplit split FILE

Exit status: 0 success, 1 catalogue mismatch, 2 input error, 3 budget exhausted.
Indices in reports are 1-based.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import networkx as nx

from . import exactla
from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded
from .families import (
    Expected,
    FamilyInstance,
    catalogued_example,
    cyclic_configuration,
    lawrence_of_symmetric_curve,
    load_catalogue,
    match_catalogue,
    symmetric_curve,
)
from .formats import InputError, read_graph, read_matrix
from .graphs import (
    BipartiteGraph,
    chordless_even_cycles,
    graph_split_numbers,
    incidence_configuration,
    kmn_split,
)
from .report import Report, binomial_text, one_based, vector_entry
from .splitting import (
    RADICAL_SPLITTING,
    FullKernelPart,
    Quantity,
    SplitCertificate,
    build_subconfigurations,
    classify_sufficient_conditions,
    find_cover,
    kernel_identity_problems,
    min_cover,
    split_numbers,
    verify_certificate,
)
from .supports import bar_bounds, circuits, cmin, delta01, gamma_graph
from .toric import (
    Configuration,
    GeneratorSet,
    GraverCapExceeded,
    NotPointedError,
    graver_basis,
    minimal_markov,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
_EXIT = {"ok": EXIT_OK, "mismatch": EXIT_MISMATCH, "input_error": EXIT_INPUT, "budget_exhausted": EXIT_BUDGET}


def exit_code(report: Report) -> int:
    return _EXIT[report["status"]]


# ---------------------------------------------------------------- serialization


def _sets(sets) -> list[list[int]]:
    return [one_based(s) for s in sets]


def _quantity(q: Quantity) -> dict:
    return q.as_dict()


def _certificate(cert: SplitCertificate, names: list[str] | None = None) -> dict:
    d = {
        "kind": cert.kind,
        "r": cert.r,
        "parts": [one_based(p) for p in cert.parts],
        "span_dims": list(cert.span_dims),
        "kernel_dim": cert.kernel_dim,
        "witness_matrices": [M.tolist() for M in cert.witness_configs],
        "verification_problems": verify_certificate(cert),
    }
    if names is not None:
        d["part_names"] = [[names[k] for k in p] for p in cert.parts]
    return d


def _gamma(G) -> dict:
    return {
        "vertices": _sets(G.vertices),
        "edges": [
            {"endpoints": [a + 1, b + 1], "witness": list(G.witnesses[(a, b)].coords)} for a, b in G.edges
        ],
    }


def _bar(bb) -> dict:
    return {
        "lower": bb.lo,
        "upper": bb.hi,
        "lower_rule": bb.lo_reason,
        "upper_rule": bb.hi_reason,
        "height": bb.height,
        "delta01": bb.delta,
        "mu": bb.mu,
        "circuits": bb.n_circuits,
        "exact": bb.exact,
        "notes": list(bb.notes),
    }


def _config(A: Configuration) -> dict:
    return {"matrix": A.matrix.tolist(), "shape": [A.m, A.n]}


# ---------------------------------------------------------------- comparisons


def char_visible(tag: str, flag: str) -> bool:
    if flag == "any" or tag == "any":
        return True
    if flag == "0":
        return tag == "0"
    return tag != "0"


class Comparer:
    """Collects computed-vs-catalogue comparisons into a report."""

    def __init__(self, report: Report, char: str = "any"):
        self.report = report
        self.char = char

    def _add(self, example, quantity, computed, catalogue, char, status):
        self.report["comparisons"].append({
            "example": example,
            "quantity": quantity,
            "computed": computed,
            "catalogue": catalogue,
            "char": char,
            "status": status,
        })
        if status == "mismatch":
            self.report.note(f"{example}: {quantity}: computed {computed}, catalogue {catalogue} (char {char})")
            if self.report["status"] == "ok":
                self.report.doc["status"] = "mismatch"

    def value(self, example: str, quantity: str, computed, expected: Expected | None):
        """Compare an exact computed value, or a Quantity/interval, with one catalogue entry."""
        if expected is None or not char_visible(expected.char, self.char):
            return
        cat = list(expected.interval) if expected.interval is not None else expected.value
        if isinstance(computed, Quantity):
            lo, hi = computed.lo, computed.hi
            shown = computed.exact if computed.exact is not None else [lo, hi]
        elif isinstance(computed, tuple):
            lo, hi = computed
            shown = [lo, hi]
        else:
            self._add(example, quantity, computed, cat, expected.char,
                      "match" if expected.matches(computed) else "mismatch")
            return
        if lo is not None and lo == hi:
            self._add(example, quantity, lo, cat, expected.char, "match" if expected.matches(lo) else "mismatch")
            return
        c_lo, c_hi = (expected.interval if expected.interval is not None else (expected.value, expected.value))
        ok = (lo is None or lo <= c_hi) and (hi is None or c_lo <= hi)
        self._add(example, quantity, shown, cat, expected.char, "consistent" if ok else "mismatch")

    def values(self, example: str, quantity: str, computed, inst: FamilyInstance):
        for e in inst.values(quantity):
            self.value(example, quantity, computed, e)

    def claim(self, example: str, quantity: str, computed, catalogue, char: str = "any"):
        """Exact comparison against a catalogue object that is not a single Expected entry."""
        if not char_visible(char, self.char):
            return
        self._add(example, quantity, computed, catalogue, char, "match" if computed == catalogue else "mismatch")

    def check(self, example: str, quantity: str, ok: bool, detail=None):
        """A structural property with no catalogue number behind it."""
        self._add(example, quantity, ok, True, "any", "match" if ok else "mismatch")
        if detail is not None:
            self.report["comparisons"][-1]["detail"] = detail


# ---------------------------------------------------------------- matrix commands


def _load_config(path: str, report: Report) -> Configuration:
    rows = read_matrix(path)
    report["input"].update({"file": str(path), "matrix": rows, "shape": [len(rows), len(rows[0])]})
    try:
        return Configuration(rows, name=Path(path).stem)
    except NotPointedError as exc:
        raise InputError(f"configuration is not pointed: {exc}", None, None, str(path)) from None
    except ValueError as exc:
        raise InputError(str(exc), None, None, str(path)) from None


def cmd_kernel(args, report: Report, budget: Budget) -> None:
    rows = read_matrix(args.file)
    report["input"].update({"file": str(args.file), "matrix": rows, "shape": [len(rows), len(rows[0])]})
    c = report["computed"]
    r = exactla.rank(rows)
    c["rank"] = r
    c["height"] = len(rows[0]) - r
    c["rational_kernel_basis"] = [list(v) for v in exactla.rational_kernel_basis(rows)]
    c["integer_kernel_basis"] = [list(v) for v in exactla.integer_kernel_basis(rows)]
    c["method"] = "fraction-free rank; RREF over Q; column reduction of [M | I] then Hermite normal form"


def cmd_circuits(args, report, budget):
    A = _load_config(args.file, report)
    circ = circuits(A)
    c = report["computed"]
    c["circuits"] = [dict(vector_entry(u), support=one_based(u.support)) for u in circ]
    c["count"] = len(circ)
    c["cmin"] = _sets(cmin(A, circ))
    c["method"] = "maximal minors of every (rank+1)-column subset"


def cmd_graver(args, report, budget):
    A = _load_config(args.file, report)
    G = graver_basis(A, budget)
    report["computed"]["graver"] = [vector_entry(u) for u in G]
    report["computed"]["size"] = len(G)
    report["computed"]["method"] = "completion of a lattice basis with conformal reduction"


def cmd_markov(args, report, budget):
    A = _load_config(args.file, report)
    M = minimal_markov(A, budget)
    c = report["computed"]
    c["generators"] = [vector_entry(u) for u in M.generators]
    c["mu"] = len(M.generators)
    c["unique"] = M.unique
    c["degrees"] = [
        {
            "degree": list(d.degree),
            "fiber_size": d.fiber_size,
            "components": len(d.components),
            "generators": len(d.generators),
            "indispensable": d.indispensable,
        }
        for d in M.degrees
    ]
    c["method"] = "connected components of Graver-degree fibers under lower-degree moves"


def cmd_gamma(args, report, budget):
    A = _load_config(args.file, report)
    report["computed"]["gamma"] = _gamma(gamma_graph(A))
    report["computed"]["method"] = "vertices: minimal circuit supports; edges: exact LP for a kernel vector with prescribed signs"


def cmd_delta(args, report, budget):
    A = _load_config(args.file, report)
    G = gamma_graph(A)
    d, matching = delta01(G) if G.vertices else (0, None)
    c = report["computed"]
    c["gamma"] = _gamma(G)
    c["delta01"] = d
    c["matching"] = [[v + 1 for v in p] for p in matching.parts] if matching else []
    c["method"] = "|V| minus a maximum matching"


def cmd_bar_bounds(args, report, budget):
    A = _load_config(args.file, report)
    report["computed"]["bar"] = _bar(bar_bounds(A, args.assume_circuit_radical, budget))


def cmd_split(args, report, budget):
    A = _load_config(args.file, report)
    c = report["computed"]
    rep = split_numbers(A, budget, args.assume_circuit_radical)
    c["height"] = rep.height
    c["method"] = rep.method
    c["split"] = _quantity(rep.split)
    c["split_rad"] = _quantity(rep.split_rad)
    c["mu"] = rep.mu
    c["certificate"] = _certificate(rep.certificate) if rep.certificate else None
    if rep.bar is not None:
        c["bar"] = _bar(rep.bar)
    c["rules"] = [r.as_dict() for r in classify_sufficient_conditions(A, budget=budget)]
    for n in rep.notes:
        report.note(n)
    key = match_catalogue(A)
    if key is not None:
        _catalogue_split(key, A, report, budget, args.char)


def _catalogue_split(key: str, A, report: Report, budget: Budget, char: str) -> None:
    """Certificates for the catalogued radical generating sets and covers of a recognised example."""
    inst = catalogued_example(key)
    report["input"]["catalogue_match"] = key
    report["catalogue"].extend(e.as_dict() for e in inst.expected if char_visible(e.char, char))
    certs = {}
    for name, gens in sorted(inst.generator_sets.items()):
        if not name.startswith("radical"):
            continue
        tag = name[name.find("char ") + 5:-1] if "char " in name else "any"
        if not char_visible(tag, char):
            continue
        cert = min_cover(A, gens, budget, max_size=None)
        if cert is not None:
            cert.kind = RADICAL_SPLITTING
        certs[name] = {"char": tag, "size": len(gens), "certificate": _certificate(cert) if cert else None}
    report["computed"]["catalogue_generating_set_covers"] = certs
    covers = inst.extra.get("covers")
    if covers:
        parts = [[inst.vectors[k].coords for k in members] for members in covers.values()]
        try:
            mats, log = build_subconfigurations(parts, A.height)
            problems = []
        except (FullKernelPart, AssertionError) as exc:
            mats, log, problems = [], [], [str(exc)]
        gens = GeneratorSet(tuple(inst.vectors[k] for members in covers.values() for k in members))
        idx, parts_idx = 0, []
        for members in covers.values():
            parts_idx.append(tuple(range(idx, idx + len(members))))
            idx += len(members)
        if mats:
            cert = SplitCertificate(gens, parts_idx, [exactla.span_dimension(p) for p in parts], A.height, mats,
                                    RADICAL_SPLITTING)
            problems += verify_certificate(cert, A)
        report["computed"]["catalogued_cover"] = {
            "covers": {k: list(v) for k, v in covers.items()},
            "r": len(covers),
            "span_dims": [exactla.span_dimension(p) for p in parts],
            "kernel_dim": A.height,
            "witness_matrices": [M.tolist() for M in mats],
            "log": log,
            "verification_problems": problems,
        }


# ---------------------------------------------------------------- graph commands


def _graph_input(G: BipartiteGraph) -> dict:
    return {"m": G.m, "n": G.n, "edges": [[i + 1, j + 1] for i, j in G.edges]}


def _edge_names(G: BipartiteGraph) -> list[str]:
    return [G.edge_name(e) for e in range(len(G.edges))]


def cmd_graph_gens(args, report, budget):
    G = read_graph(args.file)
    report["input"].update(dict(_graph_input(G), file=str(args.file)))
    names = _edge_names(G)
    cyc = chordless_even_cycles(G)
    c = report["computed"]
    c["generators"] = [
        {
            "cycle": [G.vertex_name(v) for v in cy.vertices],
            "binomial": binomial_text(cy.vector(len(G.edges)), names=names),
            "vector": list(cy.vector(len(G.edges)).coords),
        }
        for cy in cyc
    ]
    c["mu"] = len(cyc)
    c["method"] = "chordless even cycles (unique minimal generating set)"
    gs = graph_split_numbers(G, budget)
    c["split"] = _quantity(gs.split)
    c["split_rad"] = _quantity(gs.split_rad)
    c["certificate"] = _certificate(gs.certificate, [g["binomial"] for g in c["generators"]]) if gs.certificate else None


def cmd_kmn_split(args, report, budget):
    if args.m < 2 or args.n < 2 or (args.m, args.n) == (2, 2):
        raise InputError("kmn-split needs m, n >= 2 and (m, n) != (2, 2)", None, None, "<arguments>")
    report["input"].update({"m": args.m, "n": args.n})
    S = kmn_split(args.m, args.n)
    K = S.graph
    names = _edge_names(K)
    subs = []
    for t, ((left, right), sub, emap, part) in enumerate(zip(S.vertex_sets, S.subgraphs, S.edge_maps, S.assignment)):
        subs.append({
            "name": f"G{t + 1}",
            "vertices": [f"x{i + 1}" for i in left] + [f"y{j + 1}" for j in right],
            "edges": [names[e] for e in emap],
            "assigned_generators": [binomial_text(v, names=names) for v in part],
        })
    c = report["computed"]
    c["subgraphs"] = subs
    c["counts"] = list(S.counts)
    c["total"] = sum(S.counts)
    c["checks"] = dict(S.checks)
    c["ok"] = S.ok
    c["larger_side_on_right"] = S.swapped


# ---------------------------------------------------------------- families


def _family_instance(args) -> FamilyInstance:
    name, params = args.name, args.params
    try:
        if name == "symmetric-curve" and len(params) == 2:
            return symmetric_curve(int(params[0]), int(params[1]))
        if name == "lawrence" and len(params) == 2:
            return lawrence_of_symmetric_curve(int(params[0]), int(params[1]))
        if name == "cyclic" and len(params) >= 1:
            d = int(params[0])
            return cyclic_configuration(d, [int(x) for x in params[1:]] or None)
        if name == "catalogue" and len(params) == 1:
            return catalogued_example(params[0])
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc).strip("'\""), None, None, "<arguments>") from None
    raise InputError(
        "usage: family symmetric-curve A B | lawrence A B | cyclic D [T1 .. T2D+1] | catalogue ID",
        None, None, "<arguments>",
    )


def cmd_family(args, report, budget):
    inst = _family_instance(args)
    label = f"{args.name}({','.join(args.params)})"
    report["input"].update({"family": inst.family, "params": _jsonable(inst.params)})
    report["catalogue"].extend(e.as_dict() for e in inst.expected if char_visible(e.char, args.char))
    cmp = Comparer(report, args.char)
    c = report["computed"]
    if "graph" in inst.extra:
        G = inst.extra["graph"]
        report["input"]["graph"] = _graph_input(G)
        gens = {cy.vector(len(G.edges)).canonical().coords for cy in chordless_even_cycles(G)}
        c["mu"] = len(gens)
        gs = graph_split_numbers(G, budget)
        c["split"], c["split_rad"] = _quantity(gs.split), _quantity(gs.split_rad)
        cmp.values(label, "mu", len(gens), inst)
        cmp.values(label, "split", gs.split, inst)
        cmp.values(label, "split_rad", gs.split_rad, inst)
        cmp.claim(label, "generators", sorted(gens), sorted(inst.generator_sets["minimal"].classes()))
        _finish_comparisons(report)
        return
    A = inst.config
    report["input"]["configuration"] = _config(A)
    c["height"] = A.height
    c["rank"] = A.rank
    cmp.values(label, "height", A.height, inst)
    cmp.values(label, "rank", A.rank, inst)
    circ = circuits(A)
    c["circuits"] = len(circ)
    cmp.values(label, "circuits", len(circ), inst)
    G = gamma_graph(A, cmin(A, circ))
    c["gamma"] = _gamma(G)
    d = delta01(G)[0] if G.vertices else 0
    c["delta01"] = d
    cmp.values(label, "gamma_vertices", len(G.vertices), inst)
    cmp.values(label, "gamma_edges", len(G.edges), inst)
    cmp.values(label, "delta01", d, inst)
    if inst.values("graver_size"):
        gr = graver_basis(A, budget)
        c["graver_size"] = len(gr)
        cmp.values(label, "graver_size", len(gr), inst)
    rep = split_numbers(A, budget, args.assume_circuit_radical)
    c["mu"] = rep.mu
    c["split"] = _quantity(rep.split)
    c["split_rad"] = _quantity(rep.split_rad)
    if rep.bar is not None:
        c["bar"] = _bar(rep.bar)
        cmp.values(label, "bar_lower_bound", rep.bar.lo, inst)
        cmp.values(label, "bar", (rep.bar.lo, rep.bar.hi), inst)
    else:
        cmp.values(label, "bar", (max(A.height, d), None), inst)
    cmp.values(label, "mu", rep.mu, inst)
    cmp.values(label, "split", rep.split, inst)
    cmp.values(label, "split_rad", rep.split_rad, inst)
    for n in rep.notes:
        report.note(n)
    _finish_comparisons(report)


def _finish_comparisons(report: Report) -> None:
    report["computed"]["comparison_summary"] = {
        s: sum(1 for x in report["comparisons"] if x["status"] == s) for s in ("match", "consistent", "mismatch")
    }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------- verify-paper


def verify_paper(
    budget: int | None = DEFAULT_BUDGET, char: str = "any", catalogue: dict | None = None, timing: bool = False
) -> Report:
    """Recompute every catalogued example and family instance and compare with the catalogue.

    Each group of checks draws on its own budget of `budget` work units.
    Status "mismatch" if any comparison fails, "budget_exhausted" if any
    group ran out (takes precedence, since the report is then partial).
    """
    report = Report("verify-paper")
    cat = catalogue if catalogue is not None else load_catalogue()
    report["input"].update({"catalogue_version": cat["version"], "budget": budget, "char": char})
    cmp = Comparer(report, char)
    groups = [
        ("ex4_4", lambda b: _verify_ex4_4(cmp, cat, b)),
        ("ex4_5", lambda b: _verify_ex4_5(cmp, cat, b)),
        ("symmetric_curves", lambda b: _verify_symmetric(cmp, b)),
        ("lawrence(2,3)", lambda b: _verify_lawrence(cmp, b)),
        ("k33", lambda b: _verify_k33(cmp, cat, b)),
        ("cyclic", lambda b: _verify_cyclic(cmp, b)),
        ("ex2_8", lambda b: _verify_ex2_8(cmp, cat, b)),
    ]
    degraded = False
    times = {}
    for name, run in groups:
        t0 = time.perf_counter()
        try:
            run(Budget(budget))
        except (BudgetExceeded, GraverCapExceeded) as exc:
            degraded = True
            report.note(f"{name}: incomplete, {exc}")
        times[name] = round(time.perf_counter() - t0, 3)
    _finish_comparisons(report)
    if degraded:
        report.doc["status"] = "budget_exhausted"
    if timing:
        report.doc["timing"] = times
    return report


def _verify_ex4_4(cmp: Comparer, cat, budget):
    inst = catalogued_example("ex4_4", cat)
    A = inst.config
    M = minimal_markov(A, budget)
    cmp.values("ex4_4", "height", A.height, inst)
    cmp.values("ex4_4", "mu", len(M.generators), inst)
    cmp.claim("ex4_4", "generators", sorted(M.generators.classes()), sorted(inst.generator_sets["minimal"].classes()))
    rep = split_numbers(A, budget)
    cmp.values("ex4_4", "split_rad", rep.split_rad, inst)
    rules = {r.name for r in classify_sufficient_conditions(A, budget=budget)}
    cmp.check("ex4_4", "simplicial_height2 rule applies", "simplicial_height2" in rules)


def _verify_ex4_5(cmp: Comparer, cat, budget):
    inst = catalogued_example("ex4_5", cat)
    A = inst.config
    M = minimal_markov(A, budget)
    cmp.values("ex4_5", "height", A.height, inst)
    cmp.values("ex4_5", "mu", len(M.generators), inst)
    cmp.claim("ex4_5", "generators", sorted(M.generators.classes()), sorted(inst.generator_sets["minimal"].classes()))
    cm = cmin(A)
    cmp.claim("ex4_5", "t_min", sorted(_sets(cm)), sorted(_sets(inst.extra["t_min"])))
    G = gamma_graph(A, cm)
    cmp.values("ex4_5", "gamma_vertices", len(G.vertices), inst)
    cmp.values("ex4_5", "gamma_edges", len(G.edges), inst)
    cmp.values("ex4_5", "delta01", delta01(G)[0], inst)
    bb = bar_bounds(A, False, budget)
    cmp.values("ex4_5", "bar_lower_bound", bb.lo, inst)
    cmp.values("ex4_5", "bar", (bb.lo, bb.hi), inst)
    rad = inst.generator_sets["radical"]
    cmp.check("ex4_5", "radical generators lie in ker_Z(A)", all(A.contains(v.coords) for v in rad))


def _verify_symmetric(cmp: Comparer, budget):
    from math import gcd

    for a in range(1, 7):
        for b in range(a + 1, 7):
            if gcd(a, b) != 1:
                continue
            inst = symmetric_curve(a, b)
            A, label = inst.config, f"symmetric_curve({a},{b})"
            gr = graver_basis(A, budget)
            M = minimal_markov(A, budget, graver=gr)
            cmp.values(label, "graver_size", len(gr), inst)
            cmp.claim(label, "graver", sorted(v.canonical().coords for v in gr),
                      sorted(inst.generator_sets["graver"].classes()))
            cmp.values(label, "mu", len(M.generators), inst)
            cmp.claim(label, "generators", sorted(M.generators.classes()),
                      sorted(inst.generator_sets["minimal"].classes()))
            rep = split_numbers(A, budget)
            cmp.values(label, "split", rep.split, inst)
            cmp.check(label, "split licensed by the height-2 rule", rep.split.rule.startswith("height 2"))
            cmp.values(label, "split_rad", rep.split_rad, inst)


def _verify_lawrence(cmp: Comparer, budget):
    inst = lawrence_of_symmetric_curve(2, 3)
    A, label = inst.config, "lawrence(2,3)"
    M = minimal_markov(A, budget)
    cmp.values(label, "mu", len(M.generators), inst)
    cmp.claim(label, "generators", sorted(M.generators.classes()), sorted(inst.generator_sets["minimal"].classes()))
    circ = circuits(A)
    cmp.values(label, "circuits", len(circ), inst)
    cmp.claim(label, "circuit list", sorted(u.canonical().coords for u in circ),
              sorted(inst.generator_sets["circuits"].classes()))
    G = gamma_graph(A, cmin(A, circ))
    cmp.values(label, "gamma_vertices", len(G.vertices), inst)
    cmp.values(label, "gamma_edges", len(G.edges), inst)
    E = inst.extra["E"]
    cmp.claim(label, "gamma edges", sorted(sorted(_sets(e)) for e in G.edge_sets()),
              sorted(sorted(_sets((E[a], E[b]))) for a, b in inst.extra["gamma_edge_pairs"]))
    ends = [v for e in G.edges for v in e]
    cmp.check(label, "gamma edges pairwise disjoint", len(ends) == len(set(ends)))
    cmp.values(label, "delta01", delta01(G)[0], inst)
    rep = split_numbers(A, budget, assume_circuit_radical=True)
    cmp.values(label, "split", rep.split, inst)
    cmp.values(label, "split_rad", rep.split_rad, inst)
    cmp.values(label, "bar", (rep.bar.lo, rep.bar.hi), inst)


def _verify_k33(cmp: Comparer, cat, budget):
    inst = catalogued_example("k33", cat)
    G = inst.extra["graph"]
    A = incidence_configuration(G)
    cyc = chordless_even_cycles(G)
    gens = GeneratorSet(tuple(c.vector(len(G.edges)) for c in cyc))
    cmp.values("k33", "mu", len(cyc), inst)
    cmp.claim("k33", "generators", sorted(gens.classes()), sorted(inst.generator_sets["minimal"].classes()))
    cmp.check("k33", "no cover with r = 2", find_cover(A, gens, 2, budget, max_size=None) is None)
    cmp.check("k33", "cover with r = 3", find_cover(A, gens, 3, budget, max_size=None) is not None)
    S = kmn_split(3, 3)
    cmp.claim("k33", "kmn_split counts", list(S.counts), [len(inst.generator_sets[g]) for g in ("G1", "G2", "G3")])
    cmp.check("k33", "kmn_split checks", S.ok)
    for t, name in enumerate(("G1", "G2", "G3")):
        left, right = inst.extra["subgraphs"][name]
        cmp.claim("k33", f"{name} vertex set", [list(x) for x in S.vertex_sets[t]], [left, right])
        cmp.claim("k33", f"{name} assigned generators", sorted(v.canonical().coords for v in S.assignment[t]),
                  sorted(inst.generator_sets[name].classes()))
    gs = graph_split_numbers(G, budget)
    cmp.values("k33", "split", gs.split, inst)
    cmp.values("k33", "split_rad", gs.split_rad, inst)


def _verify_cyclic(cmp: Comparer, budget):
    for d in (2, 3):
        inst = cyclic_configuration(d)
        A, label = inst.config, f"cyclic({d})"
        cmp.values(label, "rank", A.rank, inst)
        cmp.values(label, "height", A.height, inst)
        circ = circuits(A)
        cmp.values(label, "circuits", len(circ), inst)
        cmp.check(label, "circuits alternate in sign", all(_alternates(u.coords) for u in circ))
        cmp.check(label, "circuit supports have size 2d, halves of size d",
                  all(len(u.support) == 2 * d and len(u.plus) == d for u in circ))
        G = gamma_graph(A, cmin(A, circ))
        cmp.values(label, "gamma_vertices", len(G.vertices), inst)
        cmp.values(label, "gamma_edges", len(G.edges), inst)
        g = G.to_networkx()
        cmp.check(label, "gamma is a cycle", nx.is_connected(g) and all(k == 2 for _, k in g.degree()))
        cmp.values(label, "delta01", delta01(G)[0], inst)
        rep = split_numbers(A, budget, assume_circuit_radical=True)
        cmp.values(label, "split_rad", rep.split_rad, inst)


def _alternates(u) -> bool:
    signs = [x > 0 for x in u if x]
    return all(s != t for s, t in zip(signs, signs[1:]))


def _verify_ex2_8(cmp: Comparer, cat, budget):
    inst = catalogued_example("ex2_8", cat)
    A = inst.config
    cmp.values("ex2_8", "height", A.height, inst)
    for k, v in inst.vectors.items():
        cmp.check("ex2_8", f"{k} in ker_Z(A)", A.contains(v.coords))
    covers = inst.extra["covers"]
    parts = [[inst.vectors[k].coords for k in covers[c]] for c in sorted(covers)]
    dims = [exactla.span_dimension(p) for p in parts]
    cmp.check("ex2_8", "cover span dims below ht", all(x < A.height for x in dims), dims)
    covered = sorted(inst.vectors[k].canonical().coords for c in covers.values() for k in c)
    cmp.check("ex2_8", "covers partition the char-0 radical set",
              covered == sorted(inst.generator_sets["radical[char 0]"].classes()))
    try:
        _, log = build_subconfigurations(parts, A.height)
        built = True
    except (FullKernelPart, AssertionError):
        built = False
    cmp.check("ex2_8", "built witness matrices have kernel = span", built)
    for name, (cover, M) in sorted(inst.extra["witness_matrices"].items()):
        problems = kernel_identity_problems(M, [inst.vectors[k].coords for k in covers[cover]])
        cmp.check("ex2_8", f"published {name} kernel = span({cover})", not problems)
    a3 = inst.generator_sets["A3"]
    cmp.check("ex2_8", "A3 binomials in ker_Z(A), proper span",
              all(A.contains(v.coords) for v in a3) and exactla.span_dimension([v.coords for v in a3]) < A.height)
    for name, gens in sorted(inst.generator_sets.items()):
        if name.startswith("radical"):
            cert = find_cover(A, gens, 2, budget, max_size=None)
            cmp.check("ex2_8", f"{name} covered by 2 proper parts", cert is not None)
    for e in inst.values("radical_generator_count"):
        sets = [g for n, g in inst.generator_sets.items() if n == f"radical[char {e.char}]"]
        cmp.value("ex2_8", "radical_generator_count", len(sets[0]) if sets else None, e)
    circ = circuits(A)
    G = gamma_graph(A, cmin(A, circ))
    lower = max(A.height, delta01(G)[0])
    for e in inst.values("bar"):
        cmp.value("ex2_8", "bar (lower bound consistency)", (lower, None), e)


# ---------------------------------------------------------------- driver

COMMANDS = {
    "kernel": cmd_kernel,
    "circuits": cmd_circuits,
    "graver": cmd_graver,
    "markov": cmd_markov,
    "gamma": cmd_gamma,
    "delta": cmd_delta,
    "bar-bounds": cmd_bar_bounds,
    "split": cmd_split,
    "graph-gens": cmd_graph_gens,
    "kmn-split": cmd_kmn_split,
    "family": cmd_family,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="work units for Graver completion, fibers and cover search (default %(default)s)")
    common.add_argument("--assume-circuit-radical", action="store_true",
                        help="use the number of circuits as an upper bound for bar")
    common.add_argument("--char", choices=("0", "p", "any"), default="any",
                        help="characteristic annotation for catalogue values")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="add wall-clock timings (breaks byte-identical output)")

    ap = argparse.ArgumentParser(prog="toricsplit", description="Splittings of toric ideals.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("kernel", "circuits", "graver", "markov", "gamma", "delta", "bar-bounds", "split", "graph-gens"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
    p = sub.add_parser("kmn-split", parents=[common])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p = sub.add_parser("family", parents=[common])
    p.add_argument("name", choices=("symmetric-curve", "lawrence", "cyclic", "catalogue"))
    p.add_argument("params", nargs="*")
    p = sub.add_parser("verify-paper", parents=[common])
    p.add_argument("--catalogue", metavar="FILE", help="alternative catalogue JSON")
    return ap


def run(argv: list[str] | None = None) -> tuple[Report, int]:
    args = build_parser().parse_args(argv)
    report, code = _dispatch(args)
    return report, code


def _dispatch(args) -> tuple[Report, int]:
    budget_limit = args.budget if args.budget and args.budget > 0 else 1
    if args.command == "verify-paper":
        cat = None
        if args.catalogue:
            import json

            try:
                cat = json.loads(Path(args.catalogue).read_text(encoding="utf-8"))
            except (OSError, ValueError) as exc:
                report = Report("verify-paper")
                report.note(f"{args.catalogue}: cannot load catalogue: {exc}")
                report.doc["status"] = "input_error"
                return report, EXIT_INPUT
        report = verify_paper(budget_limit, args.char, cat, args.timing)
        return report, exit_code(report)

    report = Report(args.command)
    report["input"]["char"] = args.char
    budget = Budget(budget_limit)
    t0 = time.perf_counter()
    try:
        COMMANDS[args.command](args, report, budget)
    except InputError as exc:
        report.doc["status"] = "input_error"
        report.doc["error"] = {"message": exc.message, "line": exc.line, "column": exc.col, "source": exc.source}
        report.note(str(exc))
        return report, EXIT_INPUT
    except (BudgetExceeded, GraverCapExceeded) as exc:
        report.degrade(f"incomplete: {exc}")
    if args.timing:
        report.doc["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    if report["status"] == "ok" and any(x["status"] == "mismatch" for x in report["comparisons"]):
        report.doc["status"] = "mismatch"
    return report, exit_code(report)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report, code = _dispatch(args)
    text = report.render(args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if code == EXIT_INPUT:
        sys.stderr.write(report["notes"][-1] + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
