import pytest

from satblow import (
    BlowupHost,
    PartiteGraph,
    PartiteSelection,
    PatternGraph,
    VerdictStatus,
    all_applicable_pass,
    blow_up,
    check_k4_lemmas,
    clique_exsat_construction,
    count_copies_through,
    count_partite_copies,
    creates_copy_through,
    is_extra_saturated,
    is_partite_free,
    is_partite_saturated,
    k4_construction,
    selection_carries_pattern,
    star_construction,
    tree_exsat_construction,
)


def test_free_verdicts():
    K3 = PatternGraph.complete(3)
    empty = PartiteGraph(BlowupHost(K3, 2))
    verdict = is_partite_free(empty)
    assert verdict.ok and verdict.status is VerdictStatus.OK
    assert verdict.baseline_count == 0 and verdict.witness is None

    full = blow_up(K3, 2)
    verdict = is_partite_free(full)
    assert not verdict.ok and verdict.status is VerdictStatus.NOT_FREE
    assert isinstance(verdict.witness, PartiteSelection)
    assert selection_carries_pattern(full, verdict.witness)
    assert verdict.witness == PartiteSelection((1, 1, 1))


def test_saturated_verdicts():
    G = star_construction(2, 3)
    assert is_partite_saturated(G).ok

    # a saturated graph minus any edge stops being saturated: putting the
    # edge back recreates a free graph, so it closes no copy
    G5 = k4_construction(5)
    for u, v in G5.sorted_edges():
        verdict = is_partite_saturated(G5.without_edge(u, v))
        assert verdict.status is VerdictStatus.NOT_SATURATED
        wu, wv = verdict.witness
        assert not creates_copy_through(G5.without_edge(u, v), wu, wv)


def test_saturated_verdict_on_non_free_input():
    full = blow_up(PatternGraph.complete(3), 2)
    verdict = is_partite_saturated(full)
    assert verdict.status is VerdictStatus.NOT_FREE
    assert isinstance(verdict.witness, PartiteSelection)


def test_not_saturated_witness_is_least():
    K3 = PatternGraph.complete(3)
    empty = PartiteGraph(BlowupHost(K3, 2))
    verdict = is_partite_saturated(empty)
    assert verdict.status is VerdictStatus.NOT_SATURATED
    assert verdict.witness == empty.host.slots()[0]


def test_extra_saturated_verdicts():
    G = tree_exsat_construction(PatternGraph.path(3), 4)
    verdict = is_extra_saturated(G)
    assert verdict.ok
    assert verdict.baseline_count == 4 == count_partite_copies(G)

    empty = PartiteGraph(BlowupHost(PatternGraph.complete(3), 2))
    verdict = is_extra_saturated(empty)
    assert verdict.status is VerdictStatus.NOT_EXTRA_SATURATED
    assert verdict.baseline_count == 0
    wu, wv = verdict.witness
    assert count_copies_through(empty, wu, wv) == 0


def test_extra_saturated_tolerates_copies():
    G = clique_exsat_construction(3, 3)
    verdict = is_extra_saturated(G)
    assert verdict.ok and verdict.baseline_count >= 1


def test_localization_identity_on_a_fixed_graph():
    G = star_construction(3, 2).without_edge((1, 1), (2, 1))
    base = count_partite_copies(G)
    for u, v in G.allowed_non_edges():
        grown = count_partite_copies(G.with_edge(u, v))
        assert grown - base == count_copies_through(G, u, v)


# ---------------------------------------------------------------------------
# K4 structure checks


def test_k4_lemmas_pass_on_construction():
    checks = check_k4_lemmas(k4_construction(5))
    assert all_applicable_pass(checks)
    by_name = {c.name: c for c in checks}
    assert by_name["min_degree_4"].status == "pass"
    assert by_name["degree_4_neighborhoods"].status == "pass"
    assert by_name["few_min_degree_4_parts"].status == "not_applicable"


def test_k4_lemmas_all_applicable_at_large_n():
    checks = check_k4_lemmas(k4_construction(22))
    assert {c.status for c in checks} == {"pass"}


def test_k4_lemmas_small_n_gating():
    from satblow import greedy_saturate

    G2 = greedy_saturate(PartiteGraph(BlowupHost(PatternGraph.complete(4), 2)), 0)
    checks = check_k4_lemmas(G2)
    by_name = {c.name: c for c in checks}
    assert by_name["min_degree_4"].status == "pass"
    assert by_name["degree_4_neighborhoods"].status == "not_applicable"


def test_k4_lemmas_preconditions():
    with pytest.raises(ValueError):
        check_k4_lemmas(star_construction(3, 3))  # wrong pattern
    with pytest.raises(ValueError):
        check_k4_lemmas(PartiteGraph(BlowupHost(PatternGraph.complete(4), 3)))
    with pytest.raises(ValueError):
        check_k4_lemmas(k4_construction(4), n=5)  # host has n=4
