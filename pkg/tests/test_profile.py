import time
import importlib

import pytest
import networkx as nx

from sqfdepth.utils import PreconditionViolated, ZeroIdeal, InconsistentResult
from sqfdepth.ideal import SqfIdeal
from sqfdepth.betti import depth as hochster_depth
from sqfdepth.graphs import (Graph, edge_ideal, path, cycle, complete_bipartite,
                             path_complement, whiskered)
from sqfdepth.corpus import random_graphs
from sqfdepth.profile import (HOCHSTER, LINQUOT, profile, graph_profile,
                              power_depth, check_nonincreasing, tail_zero_start,
                              equivalence_triangle)


def test_path_profile():
    p = graph_profile(path(4))
    assert p.g == (1, 0)
    assert p.depths == (2, 3)
    assert p.nu == 2
    assert [r.method for r in p.rows] == [LINQUOT, HOCHSTER]
    assert p.to_text().split('\n')[2:] == ['1 2 2 1 linquot', '2 4 3 0 hochster']
    assert p.as_dict()['g'] == [1, 0]


def test_methods_agree():
    I = edge_ideal(path_complement(6))
    fast = profile(I)
    slow = profile(I, use_linquot=False)
    assert fast.depths == slow.depths == (2, 3, 5)
    assert all(r.method == HOCHSTER for r in slow.rows)
    assert profile(I, cross_check=True).g == fast.g


def test_cross_check_mismatch(monkeypatch):
    profile_mod = importlib.import_module('sqfdepth.profile')
    monkeypatch.setattr(profile_mod, 'hochster_depth', lambda *a, **kw: -1)
    with pytest.raises(InconsistentResult):
        power_depth(edge_ideal(path(4)), cross_check=True)


def test_search_budget_falls_back_to_hochster():
    C4 = edge_ideal(cycle(4))
    value, method = power_depth(C4)
    assert method == LINQUOT
    assert power_depth(C4, max_steps=1) == (value, HOCHSTER)
    assert value == hochster_depth(C4)
    rows = profile(C4, max_steps=1).rows
    assert [r.method for r in rows] == [HOCHSTER] * len(rows)


def test_random_graphs_on_eight_vertices():
    graphs = [Graph.from_networkx(nx.gnp_random_graph(8, 0.5, seed=287852352))]
    graphs += [inst.graph for inst in random_graphs(5, 8, seed=1)]
    t0 = time.monotonic()
    for G in graphs:
        fast = graph_profile(G)
        slow = graph_profile(G, use_linquot=False)
        assert fast.depths == slow.depths
        assert fast.g[-1] == 0
    assert time.monotonic() - t0 < 120


def test_known_profiles():
    assert graph_profile(complete_bipartite(2, 3)).g == (0, 0)
    assert graph_profile(whiskered(1, 1, 1, 1)).g == (3, 1, 0, 0)


def test_zero_ideal():
    with pytest.raises(ZeroIdeal):
        profile(SqfIdeal(3))


def test_nonincreasing_and_tail():
    assert check_nonincreasing((3, 1, 0, 0))
    assert not check_nonincreasing((1, 2))
    assert check_nonincreasing(())
    assert tail_zero_start((3, 1, 0, 0)) == 3
    assert tail_zero_start((0, 0)) == 1
    assert tail_zero_start((1, 2)) is None
    assert tail_zero_start(()) is None
    assert tail_zero_start(graph_profile(path(4))) == 2


def test_equivalence_triangle():
    t = equivalence_triangle(path(4))
    assert (t.complement_disconnected, t.g1_zero, t.all_zero) == (False, False, False)
    assert t.agree
    t = equivalence_triangle(complete_bipartite(2, 2))
    assert (t.complement_disconnected, t.g1_zero, t.all_zero) == (True, True, True)
    with pytest.raises(PreconditionViolated):
        equivalence_triangle(Graph(3, [(1, 2)]))
