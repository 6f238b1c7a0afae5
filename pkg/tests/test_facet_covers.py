import pytest

from sqfdepth.utils import (NoDominatingClique, OutOfRange, PreconditionViolated,
                            ZeroIdeal, mask_of, bits_of)
from sqfdepth.ideal import SqfIdeal, veronese
from sqfdepth.complexes import SimplicialComplex
from sqfdepth.graphs import (complete, complete_bipartite, path, whiskered,
                             disjoint_union, join)
from sqfdepth.facet_covers import (FacetCover, facet_complex, verify_well_ordered,
                                   is_well_ordered_cover, find_well_ordered_cover,
                                   construct_cover_disconnected,
                                   construct_cover_dominating_clique,
                                   confirm_certificate)

HOLLOW_TRIANGLE = SimplicialComplex([0b011, 0b110, 0b101])


def facets_of(cover):
    return [bits_of(f) for f in cover.sequence]


def test_facet_complex():
    host = facet_complex(SqfIdeal(4, [(1, 2), (2, 3), (3, 4)]))
    assert host.facets == (0b0011, 0b0110, 0b1100)
    assert host.vertices == 0b1111
    with pytest.raises(ZeroIdeal):
        facet_complex(SqfIdeal(3))


def test_verify_well_ordered():
    ok, transcript = verify_well_ordered(FacetCover(HOLLOW_TRIANGLE, (0b011, 0b110)))
    assert ok
    assert transcript == [{'check': 'order', 'facet': [1, 3], 'index': 1, 'ok': True}]
    assert not is_well_ordered_cover(FacetCover(HOLLOW_TRIANGLE, (0b011, 0b011)))
    assert not is_well_ordered_cover(FacetCover(HOLLOW_TRIANGLE, (0b011, 0b111)))
    assert not is_well_ordered_cover(FacetCover(HOLLOW_TRIANGLE, (0b011,)))


def test_find_well_ordered_cover():
    cover = find_well_ordered_cover(HOLLOW_TRIANGLE, 2)
    assert facets_of(cover) == [(1, 2), (1, 3)]
    assert cover.cardinality == 2
    assert find_well_ordered_cover(HOLLOW_TRIANGLE, 3) is None
    assert find_well_ordered_cover(HOLLOW_TRIANGLE, 4) is None
    with pytest.raises(OutOfRange):
        find_well_ordered_cover(HOLLOW_TRIANGLE, 0)


def test_disconnected_complement_construction():
    G = join(complete(2), disjoint_union(complete(1), complete(2)))
    cover = construct_cover_disconnected(G, 2)
    assert facets_of(cover) == [(1, 2, 4, 5), (1, 3, 4, 5)]
    assert cover.cardinality == G.n - 2*2 + 1
    assert is_well_ordered_cover(cover)
    assert confirm_certificate(cover) > 0


def test_disconnected_complement_preconditions():
    with pytest.raises(PreconditionViolated):
        construct_cover_disconnected(path(4), 2)
    with pytest.raises(PreconditionViolated):
        construct_cover_disconnected(complete_bipartite(2, 2), 2)
    G = join(complete(2), disjoint_union(complete(1), complete(2)))
    with pytest.raises(PreconditionViolated):
        construct_cover_disconnected(G, 1)


def test_dominating_clique_construction():
    cover = construct_cover_dominating_clique(whiskered(0, 0, 1), 2)
    assert facets_of(cover) == [(1, 2, 3, 4)]

    cover = construct_cover_dominating_clique(complete(5), 2)
    assert facets_of(cover) == [(1, 2, 3, 4), (1, 2, 3, 5)]
    assert cover.host == facet_complex(veronese(5, 4))
    # 2-skeleton of the 4-simplex: H~_2 has dimension 4
    assert confirm_certificate(cover) == 4

    with pytest.raises(NoDominatingClique):
        construct_cover_dominating_clique(path(4), 2)
    with pytest.raises(OutOfRange):
        construct_cover_dominating_clique(complete(5), 3)


def test_certificate_of_hollow_triangle():
    cover = find_well_ordered_cover(HOLLOW_TRIANGLE, 2)
    assert confirm_certificate(cover) == 2
    d = cover.as_dict()
    assert d['cardinality'] == 2
    assert d['facets'] == [[1, 2], [1, 3]]
    assert d['vertices'] == [1, 2, 3]
