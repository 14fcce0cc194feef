import pytest
from hypothesis import given

from offalliance import generators as gen
from offalliance.errors import InvalidParameterError
from offalliance.graph import VertexSet, degree_in, from_edge_list
from offalliance.predicates import (
    is_dominating,
    is_global_offensive_r_alliance,
    is_independent,
    is_k_dominating,
    is_offensive_r_alliance,
    is_vertex_cover,
    valid_r_range,
)

import oracles
from strategies import graph_and_independent_set, graph_and_set


def vs(n, *members):
    return VertexSet.of(n, members)


def test_offensive_examples():
    rep = is_offensive_r_alliance(gen.complete(3), vs(3, 0, 1), 1)
    assert rep.holds and rep.margins == {2: 1}
    rep = is_offensive_r_alliance(gen.path(3), vs(3, 0), 1)
    assert not rep.holds and rep.failing == (1,) and rep.margins[1] == -1
    g = gen.petersen()
    rep = is_offensive_r_alliance(g, VertexSet.full(10), g.max_degree)
    assert rep.holds and rep.margins == {}


def test_global_examples():
    c4 = gen.cycle(4)
    assert is_global_offensive_r_alliance(c4, vs(4, 0, 2), 1).holds
    rep = is_global_offensive_r_alliance(c4, vs(4, 0, 1), 1)
    assert not rep.holds and 2 in rep.failing
    assert is_global_offensive_r_alliance(gen.path(2), vs(2, 0), 1).holds


def test_offensive_but_not_global():
    # {0} on a path 0-1-2: vertex 1 is in the boundary with 1 inside, 1 outside
    rep = is_offensive_r_alliance(gen.path(3), vs(3, 0), 0)
    assert rep.holds and not rep.is_global
    assert not is_global_offensive_r_alliance(gen.path(3), vs(3, 0), 0).holds


def test_empty_set_and_bad_r_are_errors():
    g = gen.complete(3)
    with pytest.raises(InvalidParameterError):
        is_offensive_r_alliance(g, VertexSet.empty(3), 1)
    with pytest.raises(InvalidParameterError):
        is_offensive_r_alliance(g, vs(3, 0), 3)
    with pytest.raises(InvalidParameterError):
        is_offensive_r_alliance(g, vs(4, 0), 1)


def test_domination_family_examples():
    assert is_dominating(gen.cycle(6), vs(6, 0, 3))
    assert is_k_dominating(gen.cycle(4), vs(4, 0, 2), 2)
    k4 = gen.complete(4)
    assert is_vertex_cover(k4, vs(4, 0, 1, 2))
    assert not is_independent(k4, vs(4, 0, 1, 2))


def test_valid_r_range_examples():
    assert list(valid_r_range(gen.complete(5))) == [-2, -1, 0, 1, 2, 3, 4]
    assert list(valid_r_range(gen.cycle(4))) == [0, 1, 2]
    assert list(valid_r_range(gen.path(2))) == [1]
    assert list(valid_r_range(from_edge_list(3, []))) == []


def test_report_record_shape():
    rec = is_global_offensive_r_alliance(gen.cycle(4), vs(4, 0, 1), 1).to_record()
    assert rec["holds"] is False and rec["global"] is True
    assert rec["violations"] == [{"vertex": 2, "margin": -1}, {"vertex": 3, "margin": -1}]


@given(graph_and_set())
def test_matches_set_oracle(gs):
    g, s = gs
    adj = oracles.adjacency(g)
    for r in valid_r_range(g):
        assert is_offensive_r_alliance(g, s, r).holds == oracles.offensive(adj, s.members, r)
        assert is_global_offensive_r_alliance(g, s, r).holds == oracles.offensive(adj, s.members, r, True)


@given(graph_and_set())
def test_report_invariants(gs):
    g, s = gs
    for r in valid_r_range(g):
        rep = is_offensive_r_alliance(g, s, r)
        assert rep.holds == all(m >= 0 for m in rep.margins.values())
        assert rep.is_global == (set(rep.margins) == set(s.complement()))
        for v, mg in rep.margins.items():
            inside = degree_in(g, v, s)
            assert inside >= 1
            assert mg == inside - (g.degree(v) - inside) - r


@given(graph_and_set())
def test_monotone_in_r(gs):
    g, s = gs
    rr = valid_r_range(g)
    for r in rr[1:]:
        if is_offensive_r_alliance(g, s, r).holds:
            assert is_offensive_r_alliance(g, s, r - 1).holds
        if is_global_offensive_r_alliance(g, s, r).holds:
            assert is_global_offensive_r_alliance(g, s, r - 1).holds


@given(graph_and_set())
def test_global_alliance_is_degree_dominating(gs):
    g, s = gs
    for r in valid_r_range(g):
        if is_global_offensive_r_alliance(g, s, r).holds:
            for v in s.complement():
                assert 2 * degree_in(g, v, s) >= g.degree(v) + r


@given(graph_and_independent_set())
def test_complement_of_independent_set(gs):
    g, s = gs
    assert is_independent(g, s)
    for r in valid_r_range(g):
        if r <= g.min_degree:
            assert is_global_offensive_r_alliance(g, s.complement(), r).holds


@given(graph_and_set())
def test_parity_collapse(gs):
    g, s = gs
    seq = g.degree_sequence()
    rr = valid_r_range(g)
    if seq.all_even():
        pairs = [(r, r + 1) for r in rr if r % 2 == 1 and r + 1 in rr]
    elif seq.all_odd():
        pairs = [(r, r + 1) for r in rr if r % 2 == 0 and r + 1 in rr]
    else:
        pairs = []
    for a, b in pairs:
        assert is_offensive_r_alliance(g, s, a).holds == is_offensive_r_alliance(g, s, b).holds
        assert is_global_offensive_r_alliance(g, s, a).holds == is_global_offensive_r_alliance(g, s, b).holds


def test_parity_collapse_on_regular_families():
    # hypothesis rarely draws all-even or all-odd graphs, so sweep a few by hand
    for g in (gen.cycle(6), gen.complete(5), gen.petersen(), gen.complete(4), gen.hypercube(3)):
        even = g.degree_sequence().all_even()
        rr = valid_r_range(g)
        for mask in range(1, 1 << g.n):
            s = VertexSet(mask, g.n)
            for r in rr:
                if (r % 2 == 1) == even and r + 1 in rr:
                    assert (is_global_offensive_r_alliance(g, s, r).holds
                            == is_global_offensive_r_alliance(g, s, r + 1).holds)
