"""Plain-text formats for patterns and blow-up subgraphs.

Pattern files (".pat"):

    pattern <v> <e>
    e <i> <j>          one line per pattern edge, 1 <= i < j <= v

Blow-up subgraph files (".pbg"):

    blowup <vH> <eH> <n>
    p <i> <j>          the eH pattern edges, 1 <= i < j <= vH
    e <i>.<a> <j>.<b>  any number of subgraph edges, endpoints as part.index

Lines starting with "#" and blank lines are skipped, so writers may prepend
metadata comments.  Loaders are strict about everything else and report the
offending line number.
"""

from __future__ import annotations

import os

from .core import BlowupHost, PartiteGraph, PartiteVertex, PatternGraph


class FormatError(ValueError):
    """Malformed pattern or blow-up file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield ln, stripped


def _int_field(ln: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(ln, f"{what} must be an integer, got {token!r}") from None


def parse_pattern(text: str) -> PatternGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError(1, "empty file, expected a 'pattern <v> <e>' header")
    ln, header = lines[0]
    tokens = header.split()
    if len(tokens) != 3 or tokens[0] != "pattern":
        raise FormatError(ln, f"expected 'pattern <v> <e>', got {header!r}")
    v = _int_field(ln, tokens[1], "vertex count")
    e = _int_field(ln, tokens[2], "edge count")
    if v < 1:
        raise FormatError(ln, f"vertex count must be positive, got {v}")
    if e < 0:
        raise FormatError(ln, f"edge count must be non-negative, got {e}")
    if len(lines) - 1 != e:
        raise FormatError(ln, f"header promises {e} edges but file has {len(lines) - 1} edge lines")
    edges = []
    seen = set()
    for ln, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[0] != "e":
            raise FormatError(ln, f"expected 'e <i> <j>', got {line!r}")
        i = _int_field(ln, tokens[1], "endpoint")
        j = _int_field(ln, tokens[2], "endpoint")
        if not (1 <= i < j <= v):
            raise FormatError(ln, f"edge {i} {j} violates 1 <= i < j <= {v}")
        if (i, j) in seen:
            raise FormatError(ln, f"duplicate edge {i} {j}")
        seen.add((i, j))
        edges.append((i, j))
    return PatternGraph(v, edges)


def dump_pattern(pattern: PatternGraph) -> str:
    lines = [f"pattern {pattern.vertex_count} {pattern.edge_count()}"]
    lines.extend(f"e {i} {j}" for i, j in sorted(pattern.edges))
    return "\n".join(lines) + "\n"


def _parse_endpoint(ln: int, token: str) -> tuple[int, int]:
    part, dot, index = token.partition(".")
    if not dot:
        raise FormatError(ln, f"endpoint {token!r} must look like <part>.<index>")
    return (
        _int_field(ln, part, "endpoint part"),
        _int_field(ln, index, "endpoint index"),
    )


def parse_blowup_graph(text: str) -> PartiteGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError(1, "empty file, expected a 'blowup <vH> <eH> <n>' header")
    ln, header = lines[0]
    tokens = header.split()
    if len(tokens) != 4 or tokens[0] != "blowup":
        raise FormatError(ln, f"expected 'blowup <vH> <eH> <n>', got {header!r}")
    v = _int_field(ln, tokens[1], "pattern vertex count")
    e = _int_field(ln, tokens[2], "pattern edge count")
    n = _int_field(ln, tokens[3], "part size")
    if v < 1:
        raise FormatError(ln, f"pattern vertex count must be positive, got {v}")
    if e < 0:
        raise FormatError(ln, f"pattern edge count must be non-negative, got {e}")
    if n < 1:
        raise FormatError(ln, f"part size must be positive, got {n}")
    if len(lines) - 1 < e:
        raise FormatError(ln, f"header promises {e} pattern edges but file ends early")

    pattern_edges = []
    seen_pattern = set()
    for ln, line in lines[1 : 1 + e]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[0] != "p":
            raise FormatError(ln, f"expected 'p <i> <j>', got {line!r}")
        i = _int_field(ln, tokens[1], "pattern endpoint")
        j = _int_field(ln, tokens[2], "pattern endpoint")
        if not (1 <= i < j <= v):
            raise FormatError(ln, f"pattern edge {i} {j} violates 1 <= i < j <= {v}")
        if (i, j) in seen_pattern:
            raise FormatError(ln, f"duplicate pattern edge {i} {j}")
        seen_pattern.add((i, j))
        pattern_edges.append((i, j))
    pattern = PatternGraph(v, pattern_edges)
    host = BlowupHost(pattern, n)

    edges = []
    seen_edges = set()
    for ln, line in lines[1 + e :]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[0] != "e":
            raise FormatError(ln, f"expected 'e <i>.<a> <j>.<b>', got {line!r}")
        pi, ai = _parse_endpoint(ln, tokens[1])
        pj, bj = _parse_endpoint(ln, tokens[2])
        u = PartiteVertex(pi, ai)
        w = PartiteVertex(pj, bj)
        if not host.contains_vertex(u):
            raise FormatError(ln, f"endpoint {pi}.{ai} out of range ({v} parts of size {n})")
        if not host.contains_vertex(w):
            raise FormatError(ln, f"endpoint {pj}.{bj} out of range ({v} parts of size {n})")
        if not host.is_allowed_slot(u, w):
            raise FormatError(
                ln, f"slot {pi}.{ai} {pj}.{bj} is not allowed, parts {pi} and {pj} are not pattern-adjacent"
            )
        key = (u, w) if u < w else (w, u)
        if key in seen_edges:
            raise FormatError(ln, f"duplicate edge {pi}.{ai} {pj}.{bj}")
        seen_edges.add(key)
        edges.append(key)
    return PartiteGraph(host, edges)


def dump_blowup_graph(G: PartiteGraph, comment: str | None = None) -> str:
    pattern = G.host.pattern
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"blowup {pattern.vertex_count} {pattern.edge_count()} {G.host.n}")
    lines.extend(f"p {i} {j}" for i, j in sorted(pattern.edges))
    lines.extend(
        f"e {u.part}.{u.index} {v.part}.{v.index}" for u, v in G.sorted_edges()
    )
    return "\n".join(lines) + "\n"


def load_pattern(path) -> PatternGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pattern(fh.read())


def save_pattern(pattern: PatternGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_pattern(pattern))


def load_blowup_graph(path) -> PartiteGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_blowup_graph(fh.read())


def save_blowup_graph(G: PartiteGraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_blowup_graph(G, comment))


_BUILTIN_RANGES = {
    "k": (2, 6, PatternGraph.complete),
    "p": (3, 8, PatternGraph.path),
    "c": (4, 8, PatternGraph.cycle),
}


def builtin_pattern(name: str) -> PatternGraph:
    """Named patterns: k2..k6, p3..p8, c4..c8 and star-2..star-6."""
    name = name.strip().lower()
    if name.startswith("star-"):
        try:
            r = int(name[5:])
        except ValueError:
            raise ValueError(f"unknown pattern name {name!r}") from None
        if not (2 <= r <= 6):
            raise ValueError(f"star-{r} is outside the built-in range star-2..star-6")
        return PatternGraph.star(r)
    if len(name) >= 2 and name[0] in _BUILTIN_RANGES and name[1:].isdigit():
        lo, hi, make = _BUILTIN_RANGES[name[0]]
        r = int(name[1:])
        if lo <= r <= hi:
            return make(r)
        raise ValueError(f"{name!r} is outside the built-in range {name[0]}{lo}..{name[0]}{hi}")
    raise ValueError(f"unknown pattern name {name!r}")


def resolve_pattern(spec: str) -> PatternGraph:
    """Accepts a built-in pattern name or a path to a '.pat' file."""
    try:
        return builtin_pattern(spec)
    except ValueError:
        pass
    if os.path.exists(spec):
        return load_pattern(spec)
    raise ValueError(f"{spec!r} is neither a built-in pattern name nor an existing file")
