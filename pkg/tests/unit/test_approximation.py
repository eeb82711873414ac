"""Tests for k-approximation SFTs, essential graphs and transitivity/mixing."""

from __future__ import annotations

from collections.abc import Callable

from regional_control.core import Rule
from regional_control.graphs import Digraph
from regional_control.symbolic import (
    approximation_equals_graph,
    essential_subgraph,
    k_approximation,
    sft_is_mixing,
    sft_is_transitive,
    trace_blocks,
)


def test_identity_approximation_is_two_loops(rule: Callable[[int], Rule]) -> None:
    """Rule 204 gives two disjoint self-loops: neither notion of transitivity holds."""
    sft = k_approximation(trace_blocks(rule(204), 1, 2))
    assert sft.n == 1 and sft.k == 2
    assert sft.labelled_edges() == {((0,), (0,)), ((1,), (1,))}
    assert str(sft.vertex_label(1)[0]) == "1"
    verdict = sft_is_transitive(sft)
    assert not verdict.strict and not verdict.essential
    assert not verdict.essential_empty and verdict.essential_vertex_count == 2
    assert not sft_is_mixing(sft).mixing


def test_xor_approximation_mixes(rule: Callable[[int], Rule]) -> None:
    """Rule 90 at n=1 yields the complete graph on two symbols."""
    sft = k_approximation(trace_blocks(rule(90), 1, 2))
    assert sft.to_digraph().edge_count == 4
    assert sft_is_transitive(sft).strict
    mixing = sft_is_mixing(sft)
    assert mixing.mixing and mixing.period == 1


def test_null_rule_is_only_essentially_transitive(rule: Callable[[int], Rule]) -> None:
    """Rule 0: the word 1 has no predecessor, the essential part is the loop at 0."""
    sft = k_approximation(trace_blocks(rule(0), 1, 2))
    verdict = sft_is_transitive(sft)
    assert not verdict.strict
    assert verdict.essential and verdict.essential_vertex_count == 1
    assert sft_is_mixing(sft).mixing


def test_height_one_approximation_is_complete(rule: Callable[[int], Rule]) -> None:
    """With k=1 any allowed symbol may follow any other."""
    sft = k_approximation(trace_blocks(rule(0), 1, 1))
    assert sft.to_digraph().edge_set() == {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_height_three_uses_two_row_vertices(rule: Callable[[int], Rule]) -> None:
    """Vertices of the 3-approximation are 2-blocks."""
    sft = k_approximation(trace_blocks(rule(90), 1, 3))
    assert sft.vertices.shape == (4, 2)
    assert sft.to_digraph().edge_count == 8
    assert sft_is_mixing(sft).mixing


def test_essential_subgraph_prunes_transient_vertices() -> None:
    """Sources and sinks are removed until every vertex lies on a bi-infinite walk."""
    essential, kept = essential_subgraph(Digraph.from_edges(3, [(0, 1), (1, 1), (1, 2)]))
    assert kept.tolist() == [1]
    assert essential.edge_set() == {(0, 0)}


def test_empty_essential_graph() -> None:
    """A graph without cycles presents the empty subshift."""
    chain = Digraph.from_edges(2, [(0, 1)])
    verdict = sft_is_transitive(chain)
    assert verdict.essential_empty and not verdict.essential
    mixing = sft_is_mixing(chain)
    assert not mixing.mixing and mixing.essential_empty and mixing.period is None


def test_height_two_approximation_equals_transition_graph(rule: Callable[[int], Rule]) -> None:
    """Height-2 trace blocks are exactly the deduplicated edges of G_n."""
    for code in (0, 30, 90, 110, 204):
        comparison = approximation_equals_graph(rule(code), 3)
        assert comparison
        assert comparison.only_in_approximation == () and comparison.only_in_graph == ()
