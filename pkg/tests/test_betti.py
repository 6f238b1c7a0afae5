import pytest

from sqfdepth.utils import (BudgetExceeded, OutOfRange, PreconditionViolated,
                            ZeroIdeal)
from sqfdepth.ideal import SqfIdeal
from sqfdepth.graphs import Graph, path, complete, edge_ideal
from sqfdepth.betti import (hochster_betti, projdim, depth, lcm_lattice,
                            multigraded_betti, top_betti_mindepth,
                            alexander_dual, regularity, terai_projdim,
                            compare_fields)

P4 = SqfIdeal(4, [(1, 2), (2, 3), (3, 4)])

# Stanley-Reisner ideal of the six-vertex real projective plane
RP2_IDEAL = SqfIdeal(6, [(1, 2, 4), (1, 2, 5), (1, 3, 5), (1, 3, 6), (1, 4, 6),
                         (2, 3, 4), (2, 3, 6), (2, 5, 6), (3, 4, 5), (4, 5, 6)])


def test_betti_table_of_path():
    table = hochster_betti(P4)
    assert table.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert (table.projdim, table.depth, table.regularity) == (2, 2, 1)
    assert table.diagram().tolist() == [[1, 0, 0], [0, 3, 2]]
    assert table.to_text().split('\n') == ['0 0 1', '1 2 3', '2 3 2']
    assert table.total(1) == 3
    assert table.as_dict()['betti'] == [[0, 0, 1], [1, 2, 3], [2, 3, 2]]


def test_lcm_lattice():
    assert lcm_lattice(SqfIdeal(3, [(1, 2), (2, 3)])) == [0, 0b011, 0b110, 0b111]


def test_depth_shortcut_matches_table():
    for ideal in (P4, edge_ideal(complete(4)), SqfIdeal(5, [(1, 2, 3), (3, 4, 5)]),
                  SqfIdeal(3, [(1,), (2,), (3,)])):
        table = hochster_betti(ideal)
        assert projdim(ideal) == table.projdim
        assert depth(ideal) == table.depth
    assert depth(SqfIdeal(3, [(1,), (2,), (3,)])) == 0


def test_workers_give_same_table():
    ideal = edge_ideal(complete(5))
    assert hochster_betti(ideal, workers=2) == hochster_betti(ideal)
    assert projdim(ideal, workers=2) == projdim(ideal)


def test_budget_and_zero_ideal():
    with pytest.raises(BudgetExceeded):
        hochster_betti(P4, budget=3)
    with pytest.raises(BudgetExceeded):
        depth(P4, budget=3)
    zero = SqfIdeal(3)
    assert hochster_betti(zero).entries == {(0, 0): 1}
    with pytest.raises(ZeroIdeal):
        depth(zero)


def test_multigraded_betti():
    assert multigraded_betti(P4, 2, (1, 2, 3)) == 1
    assert multigraded_betti(P4, 2, (1, 2, 4)) == 0
    assert multigraded_betti(P4, 1, (3, 4)) == 1


def test_top_betti_mindepth():
    G = path(4)
    assert top_betti_mindepth(G, 2)
    assert not top_betti_mindepth(G, 1)
    with pytest.raises(OutOfRange):
        top_betti_mindepth(G, 3)
    with pytest.raises(PreconditionViolated):
        top_betti_mindepth(Graph(3, [(1, 2)]), 1)


def test_alexander_dual():
    assert alexander_dual(P4) == SqfIdeal(4, [(1, 3), (2, 3), (2, 4)])
    assert alexander_dual(SqfIdeal(2, [(1, 2)])) == SqfIdeal(2, [(1,), (2,)])
    triangle = edge_ideal(complete(3))
    assert alexander_dual(triangle) == triangle
    for ideal in (P4, RP2_IDEAL, SqfIdeal(5, [(1, 2, 3), (3, 4, 5)])):
        assert alexander_dual(alexander_dual(ideal)) == ideal
    with pytest.raises(ZeroIdeal):
        alexander_dual(SqfIdeal(3))


def test_terai():
    assert regularity(alexander_dual(P4)) == 1
    assert terai_projdim(P4) == projdim(P4) == 2
    for ideal in (edge_ideal(complete(4)), SqfIdeal(5, [(1, 2, 3), (3, 4, 5)])):
        assert terai_projdim(ideal) == projdim(ideal)


def test_compare_fields():
    assert compare_fields(P4, 3) == []
    diffs = compare_fields(RP2_IDEAL, 2)
    assert [key for key, bq, bp in diffs] == [(3, 6), (4, 6)]
    assert all(bp - bq == 1 for key, bq, bp in diffs)
    assert depth(RP2_IDEAL, 'q') == 3
    assert depth(RP2_IDEAL, 2) == 2
