"""Graph types and partite-copy machinery for blow-up hosts.

A pattern graph H on vertices 1..v is blown up into a host H[n] by replacing
each pattern vertex with a part of n independent vertices and each pattern
edge with a complete bipartite bundle of n*n edge slots.  Subgraphs of the
host are the central object of this package: a partite copy of the pattern is
a choice of one vertex per part that carries every pattern edge, and
everything downstream (saturation verdicts, extremal constructions, exact
searches) is phrased in terms of counting or locating such copies.

Since each part is an independent set, a one-vertex-per-part subgraph
isomorphic to the pattern can only place its edges inside slot bundles, so it
must carry exactly the pattern edges under the identity part mapping.  That
is why the copy test below never permutes parts.

Vertices are addressed as (part, index) pairs, 1-based on the public surface.
Copy counts are exact Python integers.  All public values are immutable after
construction and every operation is pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional


class PatternGraph:
    """A small simple graph on vertices 1..vertex_count, used as a blow-up pattern."""

    __slots__ = ("vertex_count", "edges", "_adj0", "_prev0")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError("pattern needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            i, j = e
            if not (1 <= i <= vertex_count and 1 <= j <= vertex_count):
                raise ValueError(f"edge {e} out of range for {vertex_count} vertices")
            if i == j:
                raise ValueError(f"loop at vertex {i} is not allowed")
            if i > j:
                i, j = j, i
            seen.add((i, j))
        self.vertex_count = vertex_count
        self.edges = frozenset(seen)
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for i, j in seen:
            adj[i - 1].append(j - 1)
            adj[j - 1].append(i - 1)
        self._adj0 = tuple(tuple(sorted(a)) for a in adj)
        self._prev0 = tuple(tuple(j for j in a if j < i) for i, a in enumerate(self._adj0))

    # -- constructors for the usual suspects ---------------------------------

    @classmethod
    def complete(cls, r: int) -> "PatternGraph":
        return cls(r, itertools.combinations(range(1, r + 1), 2))

    @classmethod
    def path(cls, r: int) -> "PatternGraph":
        return cls(r, ((i, i + 1) for i in range(1, r)))

    @classmethod
    def cycle(cls, r: int) -> "PatternGraph":
        if r < 3:
            raise ValueError("a cycle needs at least three vertices")
        return cls(r, [(i, i + 1) for i in range(1, r)] + [(1, r)])

    @classmethod
    def star(cls, leaves: int) -> "PatternGraph":
        """The star with one center (vertex 1) and `leaves` leaves."""
        if leaves < 1:
            raise ValueError("a star needs at least one leaf")
        return cls(leaves + 1, ((1, k) for k in range(2, leaves + 2)))

    # -------------------------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(u + 1 for u in self._adj0[v - 1])

    def degree_of(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj0[v - 1])

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj0[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.vertex_count - 1

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.vertex_count):
            raise ValueError(f"vertex {v} out of range 1..{self.vertex_count}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PatternGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"PatternGraph({self.vertex_count}, {sorted(self.edges)})"


class PartiteVertex(NamedTuple):
    """A host vertex, addressed by its part and its index within the part."""

    part: int
    index: int


Slot = tuple[PartiteVertex, PartiteVertex]


class BlowupHost:
    """The blow-up H[n]: parts of size n, one per pattern vertex, with slot
    bundles along pattern edges.  Carries no edge set of its own; subgraphs
    live in PartiteGraph."""

    __slots__ = ("pattern", "n", "_slots")

    def __init__(self, pattern: PatternGraph, n: int):
        if n < 1:
            raise ValueError("blow-up needs n >= 1")
        self.pattern = pattern
        self.n = n
        self._slots: Optional[tuple[Slot, ...]] = None

    @property
    def total_vertices(self) -> int:
        return self.pattern.vertex_count * self.n

    def slot_count(self) -> int:
        return self.pattern.edge_count() * self.n * self.n

    def vertices(self) -> Iterator[PartiteVertex]:
        for part in self.pattern.vertices:
            for index in range(1, self.n + 1):
                yield PartiteVertex(part, index)

    def contains_vertex(self, u: PartiteVertex) -> bool:
        return 1 <= u.part <= self.pattern.vertex_count and 1 <= u.index <= self.n

    def is_allowed_slot(self, u: PartiteVertex, v: PartiteVertex) -> bool:
        return (
            self.contains_vertex(u)
            and self.contains_vertex(v)
            and self.pattern.has_edge(u.part, v.part)
        )

    def slots(self) -> tuple[Slot, ...]:
        """All edge slots in lexicographic order on (part, index) endpoint pairs."""
        if self._slots is None:
            out = []
            rng = range(1, self.n + 1)
            for i, j in self.pattern.edges:
                for a in rng:
                    for b in rng:
                        out.append((PartiteVertex(i, a), PartiteVertex(j, b)))
            out.sort()
            self._slots = tuple(out)
        return self._slots

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlowupHost):
            return NotImplemented
        return self.n == other.n and self.pattern == other.pattern

    def __hash__(self) -> int:
        return hash((self.pattern, self.n))

    def __repr__(self) -> str:
        return f"BlowupHost({self.pattern!r}, n={self.n})"


@dataclass(frozen=True)
class PartiteSelection:
    """One chosen index per part; the candidate vertex set of a partite copy.

    indices[k] is the 1-based index chosen in part k+1.
    """

    indices: tuple[int, ...]

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "PartiteSelection":
        parts = sorted(mapping)
        if parts != list(range(1, len(parts) + 1)):
            raise ValueError("selection must cover parts 1..v exactly once")
        return cls(tuple(mapping[p] for p in parts))

    def index_for(self, part: int) -> int:
        return self.indices[part - 1]

    def to_mapping(self) -> dict[int, int]:
        return {p + 1: a for p, a in enumerate(self.indices)}

    def vertices(self) -> tuple[PartiteVertex, ...]:
        return tuple(PartiteVertex(p + 1, a) for p, a in enumerate(self.indices))


def _normalize_edge(host: BlowupHost, edge) -> Slot:
    (ip, ia), (jp, jb) = edge
    u = PartiteVertex(int(ip), int(ia))
    v = PartiteVertex(int(jp), int(jb))
    if v < u:
        u, v = v, u
    if not host.is_allowed_slot(u, v):
        raise ValueError(f"edge {u}-{v} is not an allowed slot of this host")
    return (u, v)


def _build_masks(v: int, n: int, edges0) -> list[list[list[int]]]:
    """Adjacency bitmasks: masks[p][a][q] has bit b set when (p+1,a+1)-(q+1,b+1)
    is an edge.  All arguments 0-based."""
    masks = [[[0] * v for _ in range(n)] for _ in range(v)]
    for (p, a), (q, b) in edges0:
        masks[p][a][q] |= 1 << b
        masks[q][b][p] |= 1 << a
    return masks


class PartiteGraph:
    """An immutable subgraph of a blow-up host.  Edges must sit in slot bundles."""

    __slots__ = ("host", "edges", "_masks")

    def __init__(self, host: BlowupHost, edges: Iterable = ()):
        self.host = host
        self.edges = frozenset(_normalize_edge(host, e) for e in edges)
        self._masks = _build_masks(
            host.pattern.vertex_count,
            host.n,
            (((u.part - 1, u.index - 1), (v.part - 1, v.index - 1)) for u, v in self.edges),
        )

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u, v) -> bool:
        u = PartiteVertex(*u)
        v = PartiteVertex(*v)
        return (u, v) in self.edges or (v, u) in self.edges

    def with_edge(self, u, v) -> "PartiteGraph":
        e = _normalize_edge(self.host, (u, v))
        if e in self.edges:
            return self
        return PartiteGraph(self.host, self.edges | {e})

    def without_edge(self, u, v) -> "PartiteGraph":
        e = _normalize_edge(self.host, (u, v))
        if e not in self.edges:
            return self
        return PartiteGraph(self.host, self.edges - {e})

    def allowed_non_edges(self) -> Iterator[Slot]:
        """Host slots not used by this graph, in lexicographic order."""
        for slot in self.host.slots():
            if slot not in self.edges:
                yield slot

    def sorted_edges(self) -> list[Slot]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartiteGraph):
            return NotImplemented
        return self.host == other.host and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.host, self.edges))

    def __repr__(self) -> str:
        return f"PartiteGraph({self.host!r}, {len(self.edges)} edges)"


def blow_up(pattern: PatternGraph, n: int) -> PartiteGraph:
    """The complete blow-up H[n]: every slot of every bundle is an edge."""
    host = BlowupHost(pattern, n)
    return PartiteGraph(host, host.slots())


# --------------------------------------------------------------------------
# The copy engine.  Parts are filled in ascending order; the candidate set
# for a part is the intersection of the bitmask rows of its already-placed
# neighbors.  `fixed` pins some parts to specific indices and implicitly
# treats any pattern edge between two fixed parts as carried, which is
# exactly the "count copies through this slot as if it were present"
# semantics needed for saturation checks.
# --------------------------------------------------------------------------


def _candidates(pattern: PatternGraph, n: int, masks, part0: int, chosen, fixed) -> int:
    cand = (1 << n) - 1
    for q in pattern._adj0[part0]:
        if fixed is not None and q in fixed:
            cand &= masks[q][fixed[q]][part0]
        elif q < part0 and chosen[q] >= 0 and (fixed is None or q not in fixed):
            cand &= masks[q][chosen[q]][part0]
        if not cand:
            break
    return cand


def _free_parts(v: int, fixed) -> list[int]:
    if fixed is None:
        return list(range(v))
    return [p for p in range(v) if p not in fixed]


def _count(pattern: PatternGraph, n: int, masks, fixed=None) -> int:
    v = pattern.vertex_count
    free = _free_parts(v, fixed)
    chosen = [-1] * v

    def rec(k: int) -> int:
        if k == len(free):
            return 1
        p = free[k]
        cand = _candidates(pattern, n, masks, p, chosen, fixed)
        if not cand:
            return 0
        if not any(q > p and q not in (fixed or ()) for q in pattern._adj0[p]):
            # no later free neighbor consults this choice, so just multiply
            total = rec(k + 1)
            return total * cand.bit_count()
        total = 0
        while cand:
            bit = cand & -cand
            cand ^= bit
            chosen[p] = bit.bit_length() - 1
            total += rec(k + 1)
        chosen[p] = -1
        return total

    return rec(0)


def _find(pattern: PatternGraph, n: int, masks, fixed=None) -> Optional[tuple[int, ...]]:
    v = pattern.vertex_count
    free = _free_parts(v, fixed)
    chosen = [-1] * v
    if fixed:
        for p, a in fixed.items():
            chosen[p] = a

    def rec(k: int) -> bool:
        if k == len(free):
            return True
        p = free[k]
        cand = _candidates(pattern, n, masks, p, chosen, fixed)
        while cand:
            bit = cand & -cand
            cand ^= bit
            chosen[p] = bit.bit_length() - 1
            if rec(k + 1):
                return True
        chosen[p] = -1
        return False

    if rec(0):
        return tuple(chosen)
    return None


def count_partite_copies(G: PartiteGraph) -> int:
    """Exact number of partite copies of the pattern inside G."""
    return _count(G.host.pattern, G.host.n, G._masks)


def has_partite_copy(G: PartiteGraph) -> bool:
    return _find(G.host.pattern, G.host.n, G._masks) is not None


def find_partite_copy(G: PartiteGraph) -> Optional[PartiteSelection]:
    """The lexicographically least partite copy of the pattern in G, if any."""
    got = _find(G.host.pattern, G.host.n, G._masks)
    if got is None:
        return None
    return PartiteSelection(tuple(a + 1 for a in got))


def selection_carries_pattern(G: PartiteGraph, sel: PartiteSelection) -> bool:
    """Does this one-vertex-per-part choice carry every pattern edge of G?"""
    pattern = G.host.pattern
    if len(sel.indices) != pattern.vertex_count:
        raise ValueError("selection length does not match the pattern")
    for a in sel.indices:
        if not (1 <= a <= G.host.n):
            raise ValueError(f"selection index {a} out of range 1..{G.host.n}")
    for i, j in pattern.edges:
        if not G.has_edge((i, sel.index_for(i)), (j, sel.index_for(j))):
            return False
    return True


def _through_fixed(G: PartiteGraph, u, v) -> dict[int, int]:
    u = PartiteVertex(*u)
    v = PartiteVertex(*v)
    if not G.host.is_allowed_slot(u, v):
        raise ValueError(f"{u}-{v} is not an allowed slot of this host")
    return {u.part - 1: u.index - 1, v.part - 1: v.index - 1}


def count_copies_through(G: PartiteGraph, u, v) -> int:
    """Copies that would run through slot (u, v), with that slot treated as
    present whether or not it is an edge of G.  On a non-edge this equals the
    copy-count increase caused by adding it."""
    return _count(G.host.pattern, G.host.n, G._masks, _through_fixed(G, u, v))


def creates_copy_through(G: PartiteGraph, u, v) -> bool:
    """Existence version of count_copies_through, short-circuiting."""
    return _find(G.host.pattern, G.host.n, G._masks, _through_fixed(G, u, v)) is not None


# --------------------------------------------------------------------------
# degrees and pattern connectivity
# --------------------------------------------------------------------------


def degree(G: PartiteGraph, v) -> int:
    v = PartiteVertex(*v)
    if not G.host.contains_vertex(v):
        raise ValueError(f"{v} is not a vertex of this host")
    row = G._masks[v.part - 1][v.index - 1]
    return sum(m.bit_count() for m in row)


def min_degree_per_part(G: PartiteGraph) -> list[int]:
    """Minimum degree within each part; entry k is for part k+1."""
    out = []
    for p in range(G.host.pattern.vertex_count):
        out.append(min(sum(m.bit_count() for m in G._masks[p][a]) for a in range(G.host.n)))
    return out


def cut_vertex_components(pattern: PatternGraph, v: int) -> int:
    """Number of connected components of the pattern with vertex v removed."""
    pattern._check_vertex(v)
    rest = [u for u in range(pattern.vertex_count) if u != v - 1]
    if not rest:
        return 0
    unseen = set(rest)
    components = 0
    while unseen:
        components += 1
        stack = [unseen.pop()]
        while stack:
            u = stack.pop()
            for w in pattern._adj0[u]:
                if w in unseen:
                    unseen.remove(w)
                    stack.append(w)
    return components


def is_two_connected(pattern: PatternGraph) -> bool:
    """Connected with no cut vertex.  A single edge counts as two-connected;
    a single vertex does not."""
    if pattern.vertex_count == 1:
        return False
    if not pattern.is_connected():
        return False
    if pattern.vertex_count == 2:
        return True
    return all(
        cut_vertex_components(pattern, v) == 1 for v in pattern.vertices
    )
