import time

import pytest

from sqfdepth.utils import (BadSpec, InvalidCertificate, MixedDegrees,
                            PreconditionViolated, PropertyNotVerified,
                            SearchTimeout, SearchBudgetExceeded,
                            SingleGenerator, Deadline)
from sqfdepth.ideal import (SqfMonomial, SqfIdeal, veronese, maximal_ideal,
                            ordinary_power, squarefree_power)
from sqfdepth.graphs import (Graph, edge_ideal, complete, cycle, path, whiskered)
from sqfdepth.betti import depth as hochster_depth
from sqfdepth.linquot import (colon_generators, find_linear_quotients,
                              verify_ordering, lex_order,
                              depth_from_linear_quotients, is_matroidal,
                              is_polymatroidal, squarefree_part_preserves,
                              mindepth_criterion)

P4 = edge_ideal(path(4))


def test_colon_generators():
    prefix = [SqfMonomial.from_vars((1, 2)), SqfMonomial.from_vars((3, 4))]
    colon = colon_generators(prefix, SqfMonomial.from_vars((1, 3)))
    assert [g.vars for g in colon] == [(2,), (4,)]


def test_path_and_cycle():
    cert = find_linear_quotients(P4)
    assert cert.ordering == (0, 1, 2)
    assert cert.r == (0, 1, 1)
    assert depth_from_linear_quotients(cert) == 2 == hochster_depth(P4)

    C4 = edge_ideal(cycle(4))
    cert = find_linear_quotients(C4)
    assert cert.r == (0, 1, 1, 2)
    assert depth_from_linear_quotients(cert) == 1 == hochster_depth(C4)
    assert cert.as_dict()['depth'] == 1


def test_no_linear_quotients():
    assert find_linear_quotients(edge_ideal(cycle(5))) is None
    assert find_linear_quotients(SqfIdeal(4, [(1, 2), (3, 4)])) is None


def test_search_timeout():
    deadline = Deadline(60)
    deadline.stop = time.monotonic() - 1
    with pytest.raises(SearchTimeout):
        find_linear_quotients(edge_ideal(cycle(4)), deadline=deadline)


def test_search_step_budget():
    C5 = edge_ideal(cycle(5))
    with pytest.raises(SearchBudgetExceeded):
        find_linear_quotients(C5, max_steps=3)
    assert find_linear_quotients(C5, max_steps=None) is None
    assert find_linear_quotients(P4, max_steps=None).r == (0, 1, 1)


def test_verify_ordering():
    assert verify_ordering(P4, (0, 2, 1)) is None
    assert verify_ordering(P4, lex_order(P4)).r == (0, 1, 1)
    assert lex_order(P4) == (0, 1, 2)
    with pytest.raises(BadSpec):
        verify_ordering(P4, (0, 0, 1))


def test_single_generator():
    cert = find_linear_quotients(SqfIdeal(3, [(1, 2)]))
    with pytest.raises(SingleGenerator):
        depth_from_linear_quotients(cert)
    assert depth_from_linear_quotients(cert, delegate=True) == 2
    cert = find_linear_quotients(SqfIdeal(3, [(1,)]))
    assert depth_from_linear_quotients(cert) == 2


def test_linear_quotients_depth_agrees_with_homology():
    for G in (complete(4), complete(5), whiskered(1, 1, 1)):
        I = edge_ideal(G)
        for k in (1, 2):
            power = squarefree_power(I, k)
            if len(power) < 2:
                continue
            cert = find_linear_quotients(power)
            assert cert is not None
            assert depth_from_linear_quotients(cert) == hochster_depth(power)


def test_matroidal():
    assert is_matroidal(veronese(4, 2))
    assert not is_matroidal(P4)
    with pytest.raises(MixedDegrees):
        is_matroidal(SqfIdeal(3, [(1,), (2, 3)]))
    assert is_polymatroidal(ordinary_power(veronese(3, 2), 2))
    assert not is_polymatroidal(P4)


def test_squarefree_part_preserves():
    report = squarefree_part_preserves(ordinary_power(maximal_ideal(4), 2), 'matroidal')
    assert report.ok
    assert report.output == veronese(4, 2)

    report = squarefree_part_preserves(ordinary_power(P4, 2), 'linear_quotients')
    assert report.ok
    assert report.output == SqfIdeal(4, [(1, 2, 3, 4)])

    with pytest.raises(PropertyNotVerified):
        squarefree_part_preserves(P4, 'matroidal')
    with pytest.raises(BadSpec):
        squarefree_part_preserves(P4, 'shellable')


def test_mindepth_criterion_whiskered():
    G = whiskered(1, 1, 1, 1)
    I = edge_ideal(G)
    cert3 = find_linear_quotients(squarefree_power(I, 3))
    witness = mindepth_criterion(G, 3, cert3)
    assert witness is not None
    assert len(witness.matching) == 3

    cert2 = find_linear_quotients(squarefree_power(I, 2))
    assert mindepth_criterion(G, 2, cert2) is None
    with pytest.raises(InvalidCertificate):
        mindepth_criterion(G, 2, cert3)


def test_mindepth_criterion_complete():
    G = complete(5)
    power = squarefree_power(edge_ideal(G), 2)
    cert = verify_ordering(power, lex_order(power))
    witness = mindepth_criterion(G, 2, cert)
    assert witness.index == 2
    assert witness.exchanges[0][:2] == (4, 1)

    principal = squarefree_power(edge_ideal(whiskered(0, 0, 1)), 2)
    cert = find_linear_quotients(principal)
    assert mindepth_criterion(whiskered(0, 0, 1), 2, cert).index == 1

    with pytest.raises(PreconditionViolated):
        mindepth_criterion(Graph(3, [(1, 2)]), 1, cert)
