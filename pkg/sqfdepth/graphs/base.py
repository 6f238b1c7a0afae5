"""
basic Graph and Matching classes, edge ideals, the complexes Gamma_k(G),
chordality and dominating structures
"""
import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from ..utils import (BadSpec, OutOfRange, bits_of, popcount, full_mask,
                     lowest_bit, max_disjoint_family)
from ..ideal import SqfIdeal, squarefree_power
from ..complexes import stanley_reisner

logger = logging.getLogger(__name__)


class Graph(object):
    """
    simple undirected graph on the vertices 1..n

    edges are kept as sorted pairs (i, j) with i < j, in lex order.
    adj[v] is the bit set of neighbors of v (adj[0] is unused).
    """
    def __init__(self, n, edges=()):
        n = int(n)
        if n < 1:
            raise BadSpec(f"graph needs at least one vertex, got n={n}")
        clean = set()
        for e in edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise BadSpec(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise BadSpec(f"edge {{{i},{j}}} outside vertices 1..{n}")
            clean.add((min(i, j), max(i, j)))
        self.n = n
        self.edges = tuple(sorted(clean))
        self.adj = [0]*(n+1)
        for i, j in self.edges:
            self.adj[i] |= 1 << (j-1)
            self.adj[j] |= 1 << (i-1)

    @property
    def vertex_mask(self):
        return full_mask(self.n)

    @property
    def edge_masks(self):
        return tuple((1 << (i-1)) | (1 << (j-1)) for i, j in self.edges)

    def neighbors(self, v):
        return bits_of(self.adj[v])

    def degree(self, v):
        return popcount(self.adj[v])

    def has_edge(self, i, j):
        return bool(self.adj[i] & (1 << (j-1)))

    def isolated_vertices(self):
        return tuple(v for v in range(1, self.n+1) if self.adj[v] == 0)

    def has_isolated_vertices(self):
        return any(self.adj[v] == 0 for v in range(1, self.n+1))

    def closed_neighborhood(self, mask):
        "vertices in mask or adjacent to a vertex of mask"
        out = mask
        for v in bits_of(mask):
            out |= self.adj[v]
        return out

    def induced(self, mask):
        """induced subgraph on a vertex set, relabeled 1..|mask|

        returns (graph, tuple of old labels)
        """
        kept = bits_of(mask)
        relabel = {old: new for new, old in enumerate(kept, start=1)}
        edges = [(relabel[i], relabel[j]) for i, j in self.edges
                 if i in relabel and j in relabel]
        return Graph(max(len(kept), 1), edges), kept

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "<Graph n=%d, %d edges>" % (self.n, len(self.edges))

    @classmethod
    def from_networkx(cls, g):
        """convert a networkx graph; nodes are relabeled 1..n in sorted order"""
        nodes = sorted(g.nodes())
        relabel = {v: i for i, v in enumerate(nodes, start=1)}
        return cls(max(len(nodes), 1),
                   [(relabel[a], relabel[b]) for a, b in g.edges() if a != b])

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n+1))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class Matching:
    """set of pairwise disjoint edges, kept as sorted pairs in lex order"""
    edges: tuple

    def __post_init__(self):
        edges = tuple(sorted((min(e), max(e)) for e in self.edges))
        seen = 0
        for i, j in edges:
            m = (1 << (i-1)) | (1 << (j-1))
            if seen & m:
                raise BadSpec(f"edges of a matching must be disjoint: {edges}")
            seen |= m
        object.__setattr__(self, 'edges', edges)

    @property
    def vertex_mask(self):
        out = 0
        for i, j in self.edges:
            out |= (1 << (i-1)) | (1 << (j-1))
        return out

    @property
    def vertices(self):
        return bits_of(self.vertex_mask)

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        return '{%s}' % ', '.join('{%d,%d}' % e for e in self.edges)


def edge_ideal(G):
    """I(G): one generator x_i x_j per edge"""
    return SqfIdeal(G.n, G.edge_masks)


def _matchings(G, k):
    "generate k-matchings as tuples of edges, in lex order"
    edges = G.edges

    def extend(start, used, chosen):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for idx in range(start, len(edges) - (k - len(chosen)) + 1):
            i, j = edges[idx]
            m = (1 << (i-1)) | (1 << (j-1))
            if used & m:
                continue
            chosen.append(edges[idx])
            yield from extend(idx+1, used | m, chosen)
            chosen.pop()

    yield from extend(0, 0, [])


def k_matchings(G, k):
    """all k-matchings of G, canonically sorted"""
    if k < 1:
        raise OutOfRange(f"k-matchings need k >= 1, got {k}")
    return tuple(Matching(m) for m in _matchings(G, k))


def matching_number(G):
    """nu(G), by branch and bound over the edges"""
    return len(max_disjoint_family(G.edge_masks))


def maximum_matching(G):
    masks = max_disjoint_family(G.edge_masks)
    return Matching(tuple(bits_of(m) for m in masks))


def complement(G):
    return Graph(G.n, [e for e in combinations(range(1, G.n+1), 2)
                       if not G.has_edge(*e)])


def components(G):
    """vertex bit sets of the connected components, ordered by lowest vertex"""
    out = []
    left = G.vertex_mask
    while left:
        comp = frontier = lowest_bit(left)
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= G.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def is_connected(G):
    return len(components(G)) == 1


def complement_components(G):
    "connected components of G^c"
    return components(complement(G))


def perfect_elimination_ordering(G):
    """perfect elimination ordering of G, or None if G is not chordal

    Maximum cardinality search (ties to the lowest vertex); the reverse
    visiting order is then verified directly.
    """
    weight = [0]*(G.n+1)
    visited = 0
    visit = []
    for _ in range(G.n):
        best = None
        for v in range(1, G.n+1):
            if visited & (1 << (v-1)):
                continue
            if best is None or weight[v] > weight[best]:
                best = v
        visit.append(best)
        visited |= 1 << (best-1)
        for w in bits_of(G.adj[best] & ~visited):
            weight[w] += 1
    order = tuple(reversed(visit))
    later = G.vertex_mask
    for v in order:
        later &= ~(1 << (v-1))
        nbrs = G.adj[v] & later
        for w in bits_of(nbrs):
            if (nbrs & ~(1 << (w-1))) & ~G.adj[w]:
                return None
    return order


def is_chordal(G):
    return perfect_elimination_ordering(G) is not None


def is_cochordal(G):
    return is_chordal(complement(G))


def gamma_k(G, k):
    """Gamma_k(G): vertex sets containing no k-matching's vertex set

    its Stanley-Reisner ideal is I(G)^[k].
    """
    nu = matching_number(G)
    if not 1 <= k <= nu:
        raise OutOfRange(f"Gamma_k needs 1 <= k <= nu(G) = {nu}, got k={k}")
    return stanley_reisner(squarefree_power(edge_ideal(G), k))


def is_dominating(G, mask):
    "every vertex outside mask has a neighbor in mask"
    return G.closed_neighborhood(mask) == G.vertex_mask


def _cliques(G, m):
    "vertex bit sets of m-cliques, in lex order of their vertices"
    def extend(start, clique, cands, size):
        if size == m:
            yield clique
            return
        for v in range(start, G.n+1):
            bit = 1 << (v-1)
            if cands & bit:
                yield from extend(v+1, clique | bit, cands & G.adj[v], size+1)

    yield from extend(1, 0, G.vertex_mask, 0)


def dominating_clique(G, m):
    """first m-clique (lex order) whose vertex set dominates G, or None"""
    if m < 1:
        raise OutOfRange(f"clique size must be >= 1, got {m}")
    for clique in _cliques(G, m):
        if is_dominating(G, clique):
            return bits_of(clique)
    return None


def dominating_k_matching(G, k):
    """first k-matching (lex order) whose vertex set dominates G, or None"""
    if k < 1:
        raise OutOfRange(f"k-matchings need k >= 1, got {k}")
    for edges in _matchings(G, k):
        m = Matching(edges)
        if is_dominating(G, m.vertex_mask):
            return m
    return None


def perfect_matching_on(G, mask):
    """a matching of G with vertex set exactly mask, or None"""
    def search(left):
        if left == 0:
            return []
        low = lowest_bit(left)
        v = popcount(low - 1) + 1
        for w in bits_of(G.adj[v] & left & ~low):
            rest = search(left & ~low & ~(1 << (w-1)))
            if rest is not None:
                return [(v, w)] + rest
        return None

    if popcount(mask) % 2:
        return None
    edges = search(mask)
    return None if edges is None else Matching(tuple(edges))


def is_complete_bipartite(G):
    """True for K_{m,n}, m, n >= 1 (every edge between the two sides)"""
    parts = complement_components(G)
    if len(parts) != 2:
        return False
    a, b = parts
    for v in bits_of(a):
        if G.adj[v] & a or (G.adj[v] & b) != b:
            return False
    return not any(G.adj[v] & b for v in bits_of(b))
