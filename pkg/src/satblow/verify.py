"""Saturation verdicts for blow-up subgraphs.

A subgraph G of H[n] is partite-saturated when it has no partite copy of H
but adding any allowed non-edge creates one, and extra-saturated when adding
any allowed non-edge strictly increases the copy count.  Both scans localize
the effect of an added slot: since a new copy must run through the new edge,
it suffices to search for copies with both endpoints of that slot pinned.

Verdicts are deterministic.  Non-edges are scanned in lexicographic order,
so a failing verdict always carries the least witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .core import (
    PartiteGraph,
    PartiteSelection,
    PartiteVertex,
    PatternGraph,
    count_partite_copies,
    creates_copy_through,
    degree,
    find_partite_copy,
    min_degree_per_part,
)

NonEdge = tuple[PartiteVertex, PartiteVertex]


class VerdictStatus(str, Enum):
    OK = "ok"
    NOT_FREE = "not_free"
    NOT_SATURATED = "not_saturated"
    NOT_EXTRA_SATURATED = "not_extra_saturated"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a saturation scan.

    witness is a PartiteSelection for not_free and an offending non-edge for
    the other failures.  baseline_count is the copy count of the input when
    the scan needed it.
    """

    status: VerdictStatus
    witness: Union[PartiteSelection, NonEdge, None] = None
    baseline_count: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.status is VerdictStatus.OK


def is_partite_free(G: PartiteGraph) -> Verdict:
    """OK iff G has no partite copy; otherwise the least copy is the witness."""
    copy = find_partite_copy(G)
    if copy is None:
        return Verdict(VerdictStatus.OK, baseline_count=0)
    return Verdict(VerdictStatus.NOT_FREE, witness=copy)


def is_partite_saturated(G: PartiteGraph) -> Verdict:
    """OK iff G is partite-free and every allowed non-edge closes a copy."""
    free = is_partite_free(G)
    if not free.ok:
        return free
    for u, v in G.allowed_non_edges():
        if not creates_copy_through(G, u, v):
            return Verdict(VerdictStatus.NOT_SATURATED, witness=(u, v), baseline_count=0)
    return Verdict(VerdictStatus.OK, baseline_count=0)


def is_extra_saturated(G: PartiteGraph) -> Verdict:
    """OK iff adding any allowed non-edge strictly increases the copy count.

    Any copy gained by adding a slot runs through that slot, so the count
    increase equals the number of copies pinned at its two endpoints.
    """
    baseline = count_partite_copies(G)
    for u, v in G.allowed_non_edges():
        if not creates_copy_through(G, u, v):
            return Verdict(
                VerdictStatus.NOT_EXTRA_SATURATED, witness=(u, v), baseline_count=baseline
            )
    return Verdict(VerdictStatus.OK, baseline_count=baseline)


# --------------------------------------------------------------------------
# structural diagnostics for saturated subgraphs of K4[n]
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    status: str  # "pass", "fail" or "not_applicable"
    counterexample: Optional[PartiteVertex] = None
    note: str = ""


def _is_k4(pattern: PatternGraph) -> bool:
    return pattern.vertex_count == 4 and pattern.edge_count() == 6


def _neighbors_of(G: PartiteGraph, v: PartiteVertex) -> list[PartiteVertex]:
    out = []
    row = G._masks[v.part - 1][v.index - 1]
    for q, mask in enumerate(row):
        while mask:
            bit = mask & -mask
            mask ^= bit
            out.append(PartiteVertex(q + 1, bit.bit_length()))
    return sorted(out)


def _degree4_profile_ok(G: PartiteGraph, v: PartiteVertex) -> tuple[bool, str]:
    nbrs = _neighbors_of(G, v)
    parts = sorted(u.part for u in nbrs)
    counts = sorted((parts.count(p) for p in set(parts)), reverse=True)
    if counts != [2, 1, 1]:
        return False, f"neighbor part profile {counts} is not [2, 1, 1]"
    induced = [
        (x, y) for k, x in enumerate(nbrs) for y in nbrs[k + 1 :] if G.has_edge(x, y)
    ]
    if len(induced) != 3:
        return False, f"neighborhood induces {len(induced)} edges, a path needs 3"
    deg = {u: 0 for u in nbrs}
    for x, y in induced:
        deg[x] += 1
        deg[y] += 1
    if sorted(deg.values()) != [1, 1, 2, 2]:
        return False, "neighborhood edges do not form a path"
    ends = [u for u, d in deg.items() if d == 1]
    if ends[0].part != ends[1].part:
        return False, f"induced path ends {ends[0]} and {ends[1]} lie in different parts"
    n = G.host.n
    weak = [u for u in nbrs if degree(G, u) < n - 2]
    if weak:
        return False, f"neighbor {weak[0]} has degree {degree(G, weak[0])} < n - 2"
    return True, ""


def check_k4_lemmas(G: PartiteGraph, n: Optional[int] = None) -> list[LemmaCheck]:
    """Structural facts that hold in every saturated subgraph of K4[n],
    each gated by the part size it needs:

    * n >= 2: minimum degree at least 4;
    * n >= 3: every degree-4 vertex sees one part twice and two parts once,
      its neighborhood induces a path whose ends share a part, and all its
      neighbors have degree at least n - 2;
    * n >= 22: at most two parts attain minimum degree exactly 4.

    Raises if the pattern is not K4 or if G is not saturated.
    """
    pattern = G.host.pattern
    if not _is_k4(pattern):
        raise ValueError("check_k4_lemmas needs a subgraph of a K4 blow-up")
    if n is None:
        n = G.host.n
    elif n != G.host.n:
        raise ValueError(f"n={n} does not match the host part size {G.host.n}")
    verdict = is_partite_saturated(G)
    if not verdict.ok:
        raise ValueError(f"input graph is not saturated ({verdict.status.value})")

    checks: list[LemmaCheck] = []

    if n < 2:
        checks.append(LemmaCheck("min_degree_4", "not_applicable", note="needs n >= 2"))
    else:
        bad = None
        for v in G.host.vertices():
            if degree(G, v) < 4:
                bad = v
                break
        if bad is None:
            checks.append(LemmaCheck("min_degree_4", "pass"))
        else:
            checks.append(
                LemmaCheck(
                    "min_degree_4",
                    "fail",
                    counterexample=bad,
                    note=f"degree {degree(G, bad)}",
                )
            )

    if n < 3:
        checks.append(
            LemmaCheck("degree_4_neighborhoods", "not_applicable", note="needs n >= 3")
        )
    else:
        bad = None
        why = ""
        for v in G.host.vertices():
            if degree(G, v) != 4:
                continue
            ok, why = _degree4_profile_ok(G, v)
            if not ok:
                bad = v
                break
        if bad is None:
            checks.append(LemmaCheck("degree_4_neighborhoods", "pass"))
        else:
            checks.append(
                LemmaCheck("degree_4_neighborhoods", "fail", counterexample=bad, note=why)
            )

    if n < 22:
        checks.append(
            LemmaCheck("few_min_degree_4_parts", "not_applicable", note="needs n >= 22")
        )
    else:
        mins = min_degree_per_part(G)
        parts4 = [p + 1 for p, d in enumerate(mins) if d == 4]
        if len(parts4) <= 2:
            checks.append(LemmaCheck("few_min_degree_4_parts", "pass"))
        else:
            checks.append(
                LemmaCheck(
                    "few_min_degree_4_parts",
                    "fail",
                    note=f"parts {parts4} all have minimum degree exactly 4",
                )
            )

    return checks


def all_applicable_pass(checks: list[LemmaCheck]) -> bool:
    return all(c.status != "fail" for c in checks)
