"""
Graphs, matchings, edge ideals and named graph families
"""
from ..utils import BadSpec
from .base import (Graph, Matching, edge_ideal, k_matchings, matching_number,
                   maximum_matching, complement, components, is_connected,
                   complement_components, perfect_elimination_ordering,
                   is_chordal, is_cochordal, gamma_k, is_dominating,
                   dominating_clique, dominating_k_matching,
                   perfect_matching_on, is_complete_bipartite)
from .families import (complete, complete_bipartite, path, cycle,
                        path_complement, empty_graph, whiskered,
                        disjoint_union, join)

FAMILIES = {'complete': complete,
            'k': complete,
            'complete_bipartite': complete_bipartite,
            'bipartite': complete_bipartite,
            'path': path,
            'cycle': cycle,
            'path_complement': path_complement,
            'empty': empty_graph,
            'whiskered': whiskered}


def is_family_spec(text):
    name = str(text).split(':', 1)[0].strip().lower()
    return ':' in str(text) and name in FAMILIES


def get_family(spec):
    """returns the Graph named by a family shorthand such as
         'whiskered:1,1,1,1', 'path_complement:6', 'complete_bipartite:3,3'
    """
    name, _, args = str(spec).partition(':')
    name = name.strip().lower()
    builder = FAMILIES.get(name, None)
    if builder is None:
        raise BadSpec(f"unknown graph family '{name}'; "
                      f"known: {', '.join(sorted(FAMILIES))}")
    try:
        values = [int(a) for a in args.replace(' ', '').split(',') if a]
    except ValueError:
        raise BadSpec(f"family arguments must be integers: '{spec}'")
    try:
        return builder(*values)
    except TypeError:
        raise BadSpec(f"wrong number of arguments for '{name}': '{spec}'")
