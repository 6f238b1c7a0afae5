"""
named graph families with fixed vertex labelings

  complete(n)              K_n on 1..n
  complete_bipartite(m,n)  sides 1..m and m+1..m+n
  path(n)                  1-2-...-n
  cycle(n)                 path(n) plus {1,n}, n >= 3
  path_complement(n)       complement of path(n)
  whiskered(a_1,...,a_s)   K_s on 1..s, then the a_1 whiskers of vertex 1,
                           the a_2 whiskers of vertex 2, ... labeled s+1, s+2, ...
  empty_graph(n)           n isolated vertices
"""
from itertools import combinations

from ..utils import BadSpec
from .base import Graph, complement


def _check(name, value, least):
    if int(value) != value or value < least:
        raise BadSpec(f"{name} needs an integer >= {least}, got {value}")
    return int(value)


def complete(n):
    n = _check('complete', n, 1)
    return Graph(n, combinations(range(1, n+1), 2))


def complete_bipartite(m, n):
    m = _check('complete_bipartite', m, 1)
    n = _check('complete_bipartite', n, 1)
    return Graph(m+n, [(i, j) for i in range(1, m+1)
                       for j in range(m+1, m+n+1)])


def path(n):
    n = _check('path', n, 1)
    return Graph(n, [(i, i+1) for i in range(1, n)])


def cycle(n):
    n = _check('cycle', n, 3)
    return Graph(n, [(i, i+1) for i in range(1, n)] + [(1, n)])


def path_complement(n):
    return complement(path(n))


def empty_graph(n):
    return Graph(_check('empty', n, 1))


def whiskered(*whiskers):
    """H(a_1, ..., a_s): K_s with a_i pendant edges at vertex i"""
    if len(whiskers) < 2:
        raise BadSpec(f"whiskered needs s >= 2 clique vertices, got {len(whiskers)}")
    whiskers = [_check('whiskered', a, 0) for a in whiskers]
    s = len(whiskers)
    edges = list(combinations(range(1, s+1), 2))
    nxt = s + 1
    for i, a in enumerate(whiskers, start=1):
        for _ in range(a):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt-1, edges)


def disjoint_union(G, H):
    """G and H side by side; H's vertices are shifted by G.n"""
    return Graph(G.n + H.n, list(G.edges) +
                 [(i+G.n, j+G.n) for i, j in H.edges])


def join(G, H):
    """disjoint union plus every edge between G and the shifted H"""
    between = [(i, j+G.n) for i in range(1, G.n+1) for j in range(1, H.n+1)]
    return Graph(G.n + H.n, list(disjoint_union(G, H).edges) + between)
