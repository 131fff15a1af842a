"""Readers for the two input formats.

    matrix m n              bipartite m n
    <m rows of n ints>      <one "i j" per edge, 1-based>

Blank lines and lines whose first non-blank character is '#' are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .graphs import BipartiteGraph


class InputError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None, source: str = "<input>"):
        self.message = message
        self.line = line
        self.col = col
        self.source = source
        where = source
        if line is not None:
            where += f":{line}"
            if col is not None:
                where += f":{col}"
        super().__init__(f"{where}: {message}")


def _tokens(line: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    col = 0
    while col < len(line):
        if line[col].isspace():
            col += 1
            continue
        start = col
        while col < len(line) and not line[col].isspace():
            col += 1
        out.append((start + 1, line[start:col]))
    return out


def _content_lines(text: str):
    for k, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield k, line


def _int(tok: str, line: int, col: int, source: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise InputError(f"expected an integer, found {tok!r}", line, col, source) from None


def _header(lines, kind: str, source: str) -> tuple[int, int, int]:
    try:
        k, line = next(lines)
    except StopIteration:
        raise InputError(f"empty file; expected header '{kind} m n'", 1, 1, source) from None
    toks = _tokens(line)
    if toks[0][1] != kind:
        raise InputError(f"expected header '{kind} m n', found {toks[0][1]!r}", k, toks[0][0], source)
    if len(toks) != 3:
        col = toks[3][0] if len(toks) > 3 else len(line.rstrip()) + 1
        raise InputError(f"header must be '{kind} m n'", k, col, source)
    m = _int(toks[1][1], k, toks[1][0], source)
    n = _int(toks[2][1], k, toks[2][0], source)
    for v, (c, _) in ((m, toks[1]), (n, toks[2])):
        if v < 0 or (kind == "matrix" and v == 0):
            raise InputError(f"dimension must be positive, got {v}", k, c, source)
    return k, m, n


def parse_matrix(text: str, source: str = "<input>") -> list[list[int]]:
    lines = _content_lines(text)
    hk, m, n = _header(lines, "matrix", source)
    rows = []
    last = hk
    for k, line in lines:
        last = k
        if len(rows) == m:
            raise InputError(f"extra row; header declares {m} rows", k, _tokens(line)[0][0], source)
        toks = _tokens(line)
        if len(toks) != n:
            col = toks[n][0] if len(toks) > n else len(line.rstrip()) + 1
            raise InputError(f"row has {len(toks)} entries, expected {n}", k, col, source)
        rows.append([_int(t, k, c, source) for c, t in toks])
    if len(rows) < m:
        raise InputError(f"found {len(rows)} rows, header declares {m}", last + 1, 1, source)
    return rows


def parse_graph(text: str, source: str = "<input>") -> BipartiteGraph:
    lines = _content_lines(text)
    hk, m, n = _header(lines, "bipartite", source)
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for k, line in lines:
        toks = _tokens(line)
        if len(toks) != 2:
            col = toks[2][0] if len(toks) > 2 else len(line.rstrip()) + 1
            raise InputError("an edge line must be 'i j'", k, col, source)
        (ci, ti), (cj, tj) = toks
        i, j = _int(ti, k, ci, source), _int(tj, k, cj, source)
        if not 1 <= i <= m:
            raise InputError(f"left index {i} out of range 1..{m}", k, ci, source)
        if not 1 <= j <= n:
            raise InputError(f"right index {j} out of range 1..{n}", k, cj, source)
        if (i, j) in seen:
            raise InputError(f"duplicate edge ({i}, {j}), first on line {seen[(i, j)]}", k, ci, source)
        seen[(i, j)] = k
        edges.append((i - 1, j - 1))
    try:
        return BipartiteGraph(m, n, tuple(edges))
    except ValueError as exc:
        raise InputError(str(exc), None, None, source) from None


def read_matrix(path: str | Path) -> list[list[int]]:
    return parse_matrix(_read(path), str(path))


def read_graph(path: str | Path) -> BipartiteGraph:
    return parse_graph(_read(path), str(path))


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", None, None, str(path)) from None


def format_matrix(rows) -> str:
    rows = [list(r) for r in rows]
    out = [f"matrix {len(rows)} {len(rows[0]) if rows else 0}"]
    out += [" ".join(str(x) for x in r) for r in rows]
    return "\n".join(out) + "\n"


def format_graph(G: BipartiteGraph) -> str:
    return "\n".join([f"bipartite {G.m} {G.n}"] + [f"{i + 1} {j + 1}" for i, j in G.edges]) + "\n"
