#!/usr/bin/env python
"""
Facet complexes, well-ordered facet covers and their Betti certificates

A sequence F_1, ..., F_c of facets of Delta is a well-ordered facet cover
if it is a minimal facet cover and every other facet H admits some
i <= c-1 with

    F_i  ⊆  H ∪ F_{i+1} ∪ ... ∪ F_c.

Such a cover certifies beta_{c,u}(S/F(Delta)) != 0, u the vertex set.
"""
import logging
from dataclasses import dataclass, field

from .utils import (InconsistentResult, NoDominatingClique, OutOfRange,
                    PreconditionViolated, ZeroIdeal, bits_of, lex_key)
from .ideal import SqfIdeal, squarefree_power
from .complexes import SimplicialComplex, FACE_BUDGET
from .graphs import (edge_ideal, matching_number, complement_components,
                     is_complete_bipartite, dominating_clique)
from .graphs.base import _matchings
from .betti import multigraded_betti

logger = logging.getLogger(__name__)


def facet_complex(ideal):
    """complex whose facets are the supports of G(I)"""
    if ideal.is_zero():
        raise ZeroIdeal("the zero ideal has no facet complex")
    return SimplicialComplex(ideal.masks, vertices=ideal.support)


@dataclass(frozen=True)
class FacetCover:
    host: SimplicialComplex
    sequence: tuple
    transcript: tuple = field(default=(), compare=False)

    @property
    def cardinality(self):
        return len(self.sequence)

    @property
    def vertices(self):
        out = 0
        for f in self.sequence:
            out |= f
        return out

    def as_dict(self):
        return {'cardinality': self.cardinality,
                'facets': [list(bits_of(f)) for f in self.sequence],
                'vertices': list(bits_of(self.host.vertices)),
                'transcript': [dict(t) for t in self.transcript]}


def verify_well_ordered(cover):
    """check a facet sequence; returns (ok, transcript)

    the transcript lists, for each facet H outside the sequence, the
    index i (1-based) whose containment was found, or None.
    """
    host, seq = cover.host, tuple(cover.sequence)
    transcript = []
    if not seq or len(set(seq)) != len(seq):
        return False, [{'check': 'distinct', 'ok': False}]
    facets = set(host.facets)
    for f in seq:
        if f not in facets:
            transcript.append({'check': 'facet', 'face': list(bits_of(f)),
                               'ok': False})
            return False, transcript
    union = 0
    for f in seq:
        union |= f
    if union != host.vertices:
        transcript.append({'check': 'cover',
                           'missing': list(bits_of(host.vertices & ~union)),
                           'ok': False})
        return False, transcript
    for pos, f in enumerate(seq):
        others = 0
        for q, g in enumerate(seq):
            if q != pos:
                others |= g
        if not f & ~others:
            transcript.append({'check': 'minimal', 'index': pos+1, 'ok': False})
            return False, transcript

    ok = True
    for h in host.facets:
        if h in seq:
            continue
        found = None
        for i in range(len(seq) - 1):
            rest = h
            for g in seq[i+1:]:
                rest |= g
            if (seq[i] & rest) == seq[i]:
                found = i + 1
                break
        transcript.append({'check': 'order', 'facet': list(bits_of(h)),
                           'index': found, 'ok': found is not None})
        if found is None:
            ok = False
            break
    return ok, transcript


def is_well_ordered_cover(cover):
    return verify_well_ordered(cover)[0]


def _certified(host, seq):
    ok, transcript = verify_well_ordered(FacetCover(host, tuple(seq)))
    if ok:
        return FacetCover(host, tuple(seq), tuple(transcript))
    return None


def find_well_ordered_cover(host, cardinality, deadline=None):
    """first well-ordered facet cover of the given cardinality, or None

    Facets are tried in canonical order; a prefix is extended only while
    every facet in it keeps a vertex no other prefix facet has.
    """
    if cardinality < 1:
        raise OutOfRange(f"cover cardinality must be >= 1, got {cardinality}")
    facets = sorted(host.facets, key=lex_key)
    if cardinality > len(facets):
        return None

    def private_ok(seq):
        for pos, f in enumerate(seq):
            others = 0
            for q, g in enumerate(seq):
                if q != pos:
                    others |= g
            if not f & ~others:
                return False
        return True

    def search(seq, used):
        if deadline is not None:
            deadline.check()
        if len(seq) == cardinality:
            return _certified(host, seq)
        for idx, f in enumerate(facets):
            if used & (1 << idx):
                continue
            seq.append(f)
            if private_ok(seq):
                found = search(seq, used | (1 << idx))
                if found is not None:
                    return found
            seq.pop()
        return None

    return search([], 0)


def _split(G):
    """(G_1, G_2) vertex sets: the complement component holding vertex 1,
    and everything else"""
    parts = complement_components(G)
    first = parts[0]
    rest = 0
    for p in parts[1:]:
        rest |= p
    return first, rest


def _has(mask, v):
    return bool(mask & (1 << (v-1)))


def _inside(edge, mask):
    return _has(mask, edge[0]) and _has(mask, edge[1])


def _edge_mask(edge):
    return (1 << (edge[0]-1)) | (1 << (edge[1]-1))


def choose_edges(G, k):
    """(side_1, side_2, M, v) for the disconnected-complement construction

    side_1, side_2 are vertex sets with every edge between them present,
    M is a (k-1)-matching listed with M[0] inside side_1, and v is a
    vertex of side_2 off M.  Ties go to the lowest labels.
    """
    g1, g2 = _split(G)

    # a k-matching with an edge inside one side
    for matching in _matchings(G, k):
        for a, b in ((g1, g2), (g2, g1)):
            inner = [e for e in matching if _inside(e, a)]
            if not inner:
                continue
            e1 = inner[0]
            v = bits_of(b)[0]
            others = [e for e in matching if e != e1 and v not in e]
            return a, b, [e1] + others[:k-2], v

    # every k-matching crosses between the sides
    matching = next(_matchings(G, k))
    for a, b in ((g1, g2), (g2, g1)):
        # (end in a, end in b) of each matching edge
        ends = [(i, j) if _has(a, i) else (j, i) for i, j in matching]
        for p in range(k):
            for q in range(p+1, k):
                x, y = ends[p][0], ends[q][0]
                if G.has_edge(x, y):
                    keep = [e for e in matching if x not in e and y not in e]
                    return a, b, [(x, y)] + keep, ends[q][1]

    # both ends of the matching independent; use an edge f inside a side
    for a, b in ((g1, g2), (g2, g1)):
        inner = [e for e in G.edges if _inside(e, a)]
        if not inner:
            continue
        f = inner[0]
        touched = [e for e in matching if set(e) & set(f)]
        free = [e for e in matching if not set(e) & set(f)]
        ordered = touched + free
        last = ordered[-1]
        v = last[0] if _has(b, last[0]) else last[1]
        return a, b, [f] + ordered[1:k-1], v

    raise InconsistentResult("no edge inside either side of a graph "
                             "that is not complete bipartite")


def construct_cover_disconnected(G, k):
    """well-ordered facet cover of cardinality n-2k+1 of the facet complex
    of I(G)^[k], for G with disconnected complement"""
    if G.has_isolated_vertices():
        raise PreconditionViolated(f"graph has isolated vertices "
                                   f"{G.isolated_vertices()}")
    nu = matching_number(G)
    if nu < 2:
        raise PreconditionViolated(f"need nu(G) >= 2, got {nu}")
    if len(complement_components(G)) < 2:
        raise PreconditionViolated("complement of G is connected")
    if is_complete_bipartite(G):
        raise PreconditionViolated("G is complete bipartite")
    if not 2 <= k <= nu:
        raise PreconditionViolated(f"need 2 <= k <= nu(G) = {nu}, got k={k}")

    side1, side2, M, v = choose_edges(G, k)
    core = 1 << (v-1)
    for e in M:
        core |= _edge_mask(e)
    xs = bits_of(side1 & ~core) + bits_of(side2 & ~core)
    seq = [core | (1 << (x-1)) for x in xs]

    host = facet_complex(squarefree_power(edge_ideal(G), k))
    cover = _certified(host, seq)
    if cover is None:
        raise InconsistentResult(f"constructed sequence is not a well-ordered "
                                 f"cover (M={M}, v={v})")
    logger.debug("disconnected-complement cover for k=%d: M=%s, v=%d", k, M, v)
    return cover


def construct_cover_dominating_clique(G, k):
    """cover F_j = K ∪ {x_j} for a dominating clique K of size 2k-1"""
    nu = matching_number(G)
    if not 2 <= k <= nu:
        raise OutOfRange(f"need 2 <= k <= nu(G) = {nu}, got k={k}")
    clique = dominating_clique(G, 2*k - 1)
    if clique is None:
        raise NoDominatingClique(f"no dominating clique K_{2*k-1}")
    core = 0
    for x in clique:
        core |= 1 << (x-1)
    seq = [core | (1 << (x-1)) for x in bits_of(G.vertex_mask & ~core)]

    host = facet_complex(squarefree_power(edge_ideal(G), k))
    cover = _certified(host, seq)
    if cover is None:
        raise InconsistentResult(f"clique cover on {clique} is not well-ordered")
    return cover


def confirm_certificate(cover, field='q', face_budget=FACE_BUDGET):
    """beta_{c,u}(S/F(Delta)), c the cardinality and u the host vertices"""
    host = cover.host
    ambient = max(bits_of(host.vertices))
    ideal = SqfIdeal(ambient, host.facets)
    return multigraded_betti(ideal, cover.cardinality, host.vertices,
                             field=field, face_budget=face_budget)
