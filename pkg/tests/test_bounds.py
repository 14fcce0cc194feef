from fractions import Fraction

import pytest

from offalliance import generators as gen
from offalliance.bounds import (
    BoundNotApplicable,
    bounds_report,
    cockayne_upper_bound,
    degree_bounds,
    kdom_upper_bound,
    kn_formula,
    line_graph_bound_raw,
    line_graph_lower_bound,
    sandwich_bounds,
    sandwich_k,
    spectral_lower_bound,
)
from offalliance.errors import InvalidParameterError
from offalliance.graph import from_edge_list, line_graph
from offalliance.solvers import (
    independence_number,
    min_global_offensive_alliance,
    min_k_dominating,
    min_offensive_alliance,
)


def test_degree_bounds_k5_printed_ceiling_is_false():
    db = degree_bounds(gen.complete(5), 1)
    assert (db.lower, db.upper_printed, db.upper_proof) == (3, 2, 3)
    assert db.printed_differs
    assert min_global_offensive_alliance(gen.complete(5), 1).optimum == 3 > db.upper_printed


def test_degree_bounds_c4_r2():
    db = degree_bounds(gen.cycle(4), 2)
    assert (db.lower, db.upper_printed, db.upper_proof) == (2, 3, 3)
    assert min_offensive_alliance(gen.cycle(4), 2).optimum == 2


@pytest.mark.parametrize("n", range(3, 9))
def test_degree_bounds_attained_on_complete_graphs(n):
    for r in range(3 - n, n):
        if (n + r - 1) % 2 == 0:
            db = degree_bounds(gen.complete(n), r)
            assert db.lower == db.upper_printed == db.upper_proof == kn_formula(n, r)


def test_degree_bounds_range():
    with pytest.raises(BoundNotApplicable):
        degree_bounds(gen.cycle(4), 3)


def test_spectral_examples():
    assert spectral_lower_bound(gen.complete(5), 1) == 3
    assert spectral_lower_bound(gen.cycle(4), 1) == 2
    p = gen.petersen()
    assert spectral_lower_bound(p, 1) == 4
    assert spectral_lower_bound(p, 1) <= min_global_offensive_alliance(p, 1).optimum


def test_spectral_safety_margin_keeps_exact_quotients():
    # n * need / mu is exactly an integer on K_n; the inflation must not push it up
    for n in range(2, 13):
        for r in range(max(1, 3 - n), n):
            assert spectral_lower_bound(gen.complete(n), r) == -(-(n - 1 + r) // 2)


def test_spectral_needs_connected():
    with pytest.raises(BoundNotApplicable):
        spectral_lower_bound(from_edge_list(4, [(0, 1), (2, 3)]), 1)


def test_kdom_examples():
    assert kdom_upper_bound(gen.complete(5), 1, 1) == 3
    c6 = gen.cycle(6)
    assert min_k_dominating(c6, 1).optimum == 2
    assert kdom_upper_bound(c6, 1, 2) == 4 >= min_global_offensive_alliance(c6, 1).optimum == 3
    assert kdom_upper_bound(gen.cycle(4), 2, 2) == 3
    with pytest.raises(BoundNotApplicable):
        kdom_upper_bound(c6, 0, 2)


def test_cockayne_examples():
    assert cockayne_upper_bound(gen.complete(5), 1) == 3
    assert cockayne_upper_bound(gen.cycle(4), 1) == 3
    assert cockayne_upper_bound(gen.cycle(4), 2) == 3
    with pytest.raises(BoundNotApplicable):
        cockayne_upper_bound(gen.cycle(4), 3)


def test_line_graph_examples():
    k4 = gen.complete(4)
    assert line_graph_lower_bound(k4, 1) == 3
    assert line_graph_lower_bound(k4, 1) <= min_global_offensive_alliance(line_graph(k4), 1).optimum
    c6 = gen.cycle(6)
    assert line_graph_bound_raw(c6, 1) == Fraction(3)
    assert line_graph_lower_bound(c6, 1) == 3 == min_global_offensive_alliance(c6, 1).optimum
    with pytest.raises(BoundNotApplicable):
        line_graph_lower_bound(gen.path(4), 1)


def test_sandwich_examples():
    k5 = gen.complete(5)
    k = sandwich_k(k5, 1)
    assert k == 3
    lower, upper = sandwich_bounds(k5, 1, independence_number(k5).optimum, min_k_dominating(k5, k).optimum)
    assert (lower, upper) == (3, 4)
    c6 = gen.cycle(6)
    lower, upper = sandwich_bounds(c6, 1, independence_number(c6).optimum, min_k_dominating(c6, 2).optimum)
    assert lower <= 3 == upper
    p = gen.petersen()
    _, upper = sandwich_bounds(p, 1, 4, None)
    assert upper == 6


def test_kn_formula_examples():
    assert kn_formula(5, 1) == 3
    assert kn_formula(4, -1) == 1
    assert kn_formula(6, 5) == 5
    with pytest.raises(InvalidParameterError):
        kn_formula(4, 4)


def test_report_for_c4():
    g = gen.cycle(4)
    rep = bounds_report(g, 1, exact=2, gamma_r=2, alpha=2, gamma_k=2)
    assert rep.get("spectral_lower").value == 2
    assert rep.get("cockayne_upper").value == 3
    assert rep.get("spectral_lower").tight and not rep.get("cockayne_upper").tight
    assert rep.violations() == [] and rep.inconsistent_pairs() == []
    assert "spectral_lower" in rep.to_table()


def test_report_flags_printed_ceiling():
    rep = bounds_report(gen.complete(5), 1, exact=3)
    printed = rep.get("degree_upper_printed")
    assert printed.flagged and printed.violated_by(3)
    assert rep.violations() == []
    assert [e.name for e in rep.violations(include_flagged=True)] == ["degree_upper_printed"]
    assert not rep.get("kdom_upper").applicable


def test_report_line_graph_entry():
    k4 = gen.complete(4)
    rep = bounds_report(line_graph(k4), 1, line_graph_of=k4)
    assert rep.get("line_graph_lower").value == 3
