import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degswap.core import (
    DegreeSequence,
    DiDegreeSequence,
    Digraph,
    Graph,
    canonical_key,
    decompose_alternating,
    find_disjoint_3walk,
    format_degree_sequence,
    format_edgelist,
    graph_from_key,
    parse_degree_sequence,
    parse_edgelist,
    symmetric_difference,
)
from degswap.errors import InvalidInputError
from degswap.moves import swap_alternating_cycle
from degswap.statespace import enumerate_realizations


def test_sequence_validation():
    with pytest.raises(InvalidInputError):
        DegreeSequence([])
    with pytest.raises(InvalidInputError):
        DegreeSequence([1, -1])
    with pytest.raises(InvalidInputError):
        DiDegreeSequence([(1, -2)])
    assert DegreeSequence([0, 0]).n == 2  # zero entries are allowed


def test_graph_validation():
    with pytest.raises(InvalidInputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InvalidInputError):
        Graph(3, [(0, 1), (1, 0)])  # duplicate after normalization
    with pytest.raises(InvalidInputError):
        Graph(2, [(0, 2)])
    g = Digraph(3, [(0, 1), (1, 0)])  # antiparallel arcs are fine
    assert g.anti == 1
    with pytest.raises(InvalidInputError):
        Digraph(3, [(0, 1), (0, 1)])


def test_symmetric_difference_identity():
    g = Graph(4, [(0, 1), (2, 3)])
    sd = symmetric_difference(g, g.copy())
    assert sd.size == 0 and not sd.left_only and not sd.right_only


def test_symmetric_difference_matchings():
    g = Graph(4, [(0, 1), (2, 3)])
    h = Graph(4, [(0, 2), (1, 3)])
    assert symmetric_difference(g, h).size == 4


def test_symmetric_difference_cycle_reversal():
    g = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    h = Digraph(3, [(1, 0), (2, 1), (0, 2)])
    sd = symmetric_difference(g, h)
    assert sd.size == 6
    assert sd.vertices() == {0, 1, 2}


def test_symmetric_difference_kind_mismatch():
    with pytest.raises(InvalidInputError):
        symmetric_difference(Graph(3), Digraph(3))
    with pytest.raises(InvalidInputError):
        symmetric_difference(Graph(3), Graph(4))


def test_decompose_empty():
    g = Graph(4, [(0, 1)])
    assert decompose_alternating(symmetric_difference(g, g.copy())) == []


def test_decompose_single_swap():
    g = Graph(4, [(0, 1), (2, 3)])
    h = Graph(4, [(0, 2), (1, 3)])
    cycles = decompose_alternating(symmetric_difference(g, h))
    assert len(cycles) == 1
    assert cycles[0].length == 4


def test_decompose_cycle_reversal_brute():
    g = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    h = Digraph(3, [(1, 0), (2, 1), (0, 2)])
    cycles = decompose_alternating(symmetric_difference(g, h))
    assert len(cycles) == 1
    c = cycles[0]
    assert c.length == 6
    assert set(c.vertices) == {0, 1, 2}
    # brute-force walk check: consecutive arcs chain and alternate membership
    assert set(c.left) == g.arc_set()
    assert set(c.right) == h.arc_set()


def _check_decomposition(g, h):
    sd = symmetric_difference(g, h)
    cycles = decompose_alternating(sd)
    seen_left, seen_right = [], []
    for c in cycles:
        assert c.length % 2 == 0 and c.length >= 4
        assert len(c.left) == len(c.right)
        seen_left.extend(c.left)
        seen_right.extend(c.right)
    assert sorted(seen_left) == sorted(sd.left_only)
    assert sorted(seen_right) == sorted(sd.right_only)
    # swapping every cycle in turn maps g onto h
    work = g.copy()
    for c in cycles:
        swap_alternating_cycle(work, c)
        assert work.degree_sequence() == g.degree_sequence()
    assert work == h


@given(st.data())
@settings(max_examples=60, deadline=None, derandomize=True)
def test_decompose_reassembles_undirected(data):
    degs = data.draw(
        st.sampled_from([(1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2, 2), (2, 1, 1, 2, 2)])
    )
    reals = enumerate_realizations(DegreeSequence(degs))
    g = data.draw(st.sampled_from(reals))
    h = data.draw(st.sampled_from(reals))
    _check_decomposition(g, h)


@given(st.data())
@settings(max_examples=60, deadline=None, derandomize=True)
def test_decompose_reassembles_directed(data):
    pairs = data.draw(
        st.sampled_from(
            [
                ((1, 1),) * 4,
                ((1, 1),) * 5,
                ((2, 1), (1, 2), (1, 1), (1, 1)),
                ((2, 2), (1, 1), (1, 1), (1, 1), (1, 1)),
            ]
        )
    )
    reals = enumerate_realizations(DiDegreeSequence(pairs))
    g = data.draw(st.sampled_from(reals))
    h = data.draw(st.sampled_from(reals))
    _check_decomposition(g, h)


def test_decompose_rejects_unbalanced():
    g = Graph(3, [(0, 1)])
    h = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InvalidInputError):
        decompose_alternating(symmetric_difference(g, h))


def test_find_3walk_undirected_always_exists():
    reals = enumerate_realizations(DegreeSequence((2, 2, 1, 1, 2)))
    for g in reals:
        for h in reals:
            if g == h:
                continue
            sd = symmetric_difference(g, h)
            walk = find_disjoint_3walk(sd)
            assert walk is not None
            (e1, s1), (e2, s2), (e3, s3) = walk.arcs()
            assert len(set(walk.vertices)) == 4
            assert (s1, s2, s3) == ("left", "right", "left")
            assert e1 in sd.left_only and e3 in sd.left_only
            assert e2 in sd.right_only


def test_find_3walk_cycle_reversal_absent():
    g = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    h = Digraph(3, [(1, 0), (2, 1), (0, 2)])
    assert find_disjoint_3walk(symmetric_difference(g, h)) is None


def test_find_3walk_q_only_counterexample():
    # only a Q-type walk exists for this pair
    g = Digraph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    h = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    sd = symmetric_difference(g, h)
    walk = find_disjoint_3walk(sd)
    assert walk is not None and walk.pattern == "Q"
    for arc, side in walk.arcs():
        assert arc in (sd.left_only if side == "left" else sd.right_only)


def test_find_3walk_membership_recheck_eight_arcs():
    reals = enumerate_realizations(DiDegreeSequence(((1, 1),) * 4))
    found = 0
    for g in reals:
        for h in reals:
            sd = symmetric_difference(g, h)
            if sd.size != 8:
                continue
            walk = find_disjoint_3walk(sd)
            if walk is None:
                continue
            found += 1
            assert len(set(walk.vertices)) == 4
            for arc, side in walk.arcs():
                assert arc in (sd.left_only if side == "left" else sd.right_only)
    assert found > 0


def test_canonical_key_basics():
    g = Graph(4)
    assert canonical_key(g).bits == 0
    g = Graph(4, [(0, 1), (2, 3)])
    assert canonical_key(g) == canonical_key(g.copy())
    h = Graph(4, [(0, 2), (1, 3)])
    assert canonical_key(g) != canonical_key(h)
    assert canonical_key(g).diff_size(canonical_key(h)) == 4


def test_canonical_key_injective_small():
    seen = {}
    for g in enumerate_realizations(DiDegreeSequence(((1, 1),) * 4)):
        key = canonical_key(g)
        assert key not in seen
        seen[key] = g
        assert graph_from_key(key) == g


def test_degree_sequence_text_roundtrip():
    s = DegreeSequence((3, 2, 0, 1))
    assert parse_degree_sequence(format_degree_sequence(s)) == s
    ds = DiDegreeSequence(((2, 0), (1, 1), (0, 2)))
    assert parse_degree_sequence(format_degree_sequence(ds)) == ds
    with pytest.raises(InvalidInputError):
        parse_degree_sequence("")
    with pytest.raises(InvalidInputError):
        parse_degree_sequence("1 2/1")


def test_edgelist_roundtrip():
    g = Digraph(4, [(0, 1), (1, 0), (2, 3)])
    assert parse_edgelist(format_edgelist(g)) == g
    u = Graph(3, [(0, 2)])
    assert parse_edgelist(format_edgelist(u)) == u
    text = "# comment\nundirected n=3\n0 1  # trailing\n\n1 2\n"
    assert parse_edgelist(text) == Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InvalidInputError):
        parse_edgelist("0 1\n")
    with pytest.raises(InvalidInputError):
        parse_edgelist("mixed n=3\n0 1\n")
