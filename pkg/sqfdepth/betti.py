#!/usr/bin/env python
"""
Graded Betti numbers of S/I by Hochster's formula

    beta_{i,j}(S/I) = sum_{|W| = j} dim H~_{j-i-1}(Delta_W)

with Delta the Stanley-Reisner complex of I.  Only sets W that are unions
of generator supports (the lcm lattice) can contribute: any other W has a
vertex lying in no generator inside W, and Delta_W is a cone over it.

depth(S/I) = n - projdim(S/I) (Auslander-Buchsbaum).  The depth shortcut
scans |W| = j downward, asks only for homology in degrees that could raise
the current projdim, and stops once beta_{i,j} = 0 for j < d_1 + i - 1
makes a larger projdim impossible.
"""
import logging
from collections import defaultdict
from multiprocessing import Pool

import numpy as np

from .utils import (BudgetExceeded, InconsistentResult, OutOfRange,
                    PreconditionViolated, ZeroIdeal, popcount, lex_key,
                    minimal_transversals)
from .ideal import SqfIdeal, _as_mask
from .complexes import (FACE_BUDGET, SimplicialComplex, get_field,
                        stanley_reisner, reduced_homology, homology_dim,
                        lowest_nonzero_homology)
from .graphs import matching_number, gamma_k

logger = logging.getLogger(__name__)

HOCHSTER_BUDGET = 16
CHUNKSIZE = 64


class BettiTable(object):
    """graded Betti numbers beta_{i,j}(S/I), with beta_{0,0} = 1"""
    def __init__(self, ambient, entries, field):
        self.ambient = ambient
        self.field = get_field(field)
        self.entries = {key: val for key, val in entries.items() if val}

    def __getitem__(self, key):
        return self.entries.get(tuple(key), 0)

    @property
    def projdim(self):
        return max(i for i, j in self.entries)

    @property
    def depth(self):
        return self.ambient - self.projdim

    @property
    def regularity(self):
        "regularity of S/I: max j - i over nonzero entries"
        return max(j - i for i, j in self.entries)

    def rows(self):
        "sorted list of (i, j, beta)"
        return [(i, j, self.entries[(i, j)]) for i, j in sorted(self.entries)]

    def total(self, i):
        return sum(b for (ii, j), b in self.entries.items() if ii == i)

    def diagram(self):
        """Betti diagram: row j - i, column i"""
        out = np.zeros((self.regularity+1, self.projdim+1), dtype=int)
        for (i, j), b in self.entries.items():
            out[j-i, i] = b
        return out

    def as_dict(self):
        return {'ambient': self.ambient, 'field': str(self.field),
                'projdim': self.projdim, 'depth': self.depth,
                'regularity': self.regularity,
                'betti': [list(row) for row in self.rows()]}

    def to_text(self):
        return '\n'.join('%d %d %d' % row for row in self.rows())

    def __eq__(self, other):
        return (isinstance(other, BettiTable) and self.ambient == other.ambient
                and self.entries == other.entries)

    def __repr__(self):
        return "<BettiTable n=%d, projdim=%d, %s>" % (self.ambient, self.projdim,
                                                      self.field)


def check_budget(ideal, budget=HOCHSTER_BUDGET):
    if budget is not None and ideal.ambient > budget:
        raise BudgetExceeded(f"ambient size {ideal.ambient} is above the "
                             f"Hochster budget {budget}")


def lcm_lattice(ideal):
    """all unions of generator supports, including 0, canonically sorted"""
    lattice = {0}
    for g in ideal.masks:
        lattice |= {w | g for w in lattice}
    return sorted(lattice, key=lex_key)


def _hochster_chunk(args):
    facets, vertices, field, face_budget, subsets = args
    sr = SimplicialComplex(facets, vertices)
    return [(w, reduced_homology(sr.restrict(w), field,
                                 face_budget=face_budget).dims)
            for w in subsets]


def _lowest_chunk(args):
    facets, vertices, field, face_budget, subsets, max_degree = args
    sr = SimplicialComplex(facets, vertices)
    return [(w, lowest_nonzero_homology(sr.restrict(w), field, max_degree,
                                        face_budget=face_budget))
            for w in subsets]


def _chunks(seq, size=CHUNKSIZE):
    return [seq[i:i+size] for i in range(0, len(seq), size)]


def _run(task, jobs, workers):
    "map task over jobs, in order; a Pool is used only for workers > 1"
    if workers and workers > 1 and len(jobs) > 1:
        with Pool(workers) as pool:
            parts = pool.map(task, jobs)
    else:
        parts = [task(job) for job in jobs]
    return [item for part in parts for item in part]


def hochster_betti(ideal, field='q', budget=HOCHSTER_BUDGET, workers=1,
                   face_budget=FACE_BUDGET):
    """complete graded Betti table of S/I"""
    field = get_field(field)
    check_budget(ideal, budget)
    entries = defaultdict(int)
    entries[(0, 0)] = 1
    if ideal.is_zero():
        return BettiTable(ideal.ambient, entries, field)

    sr = stanley_reisner(ideal)
    lattice = [w for w in lcm_lattice(ideal) if w]
    jobs = [(sr.facets, sr.vertices, field, face_budget, chunk)
            for chunk in _chunks(lattice)]
    for w, dims in _run(_hochster_chunk, jobs, workers):
        j = popcount(w)
        for idx, h in enumerate(dims):
            if h:
                entries[(j - idx, j)] += h

    table = BettiTable(ideal.ambient, entries, field)
    for d in ideal.degrees():
        if table[(1, d)] != ideal.count_in_degree(d):
            raise InconsistentResult(f"beta_(1,{d}) = {table[(1, d)]} but I has "
                                     f"{ideal.count_in_degree(d)} generators "
                                     f"of degree {d}")
    logger.debug("Betti table of %r: projdim=%d", ideal, table.projdim)
    return table


def projdim(ideal, field='q', budget=HOCHSTER_BUDGET, workers=1,
            face_budget=FACE_BUDGET):
    """projdim(S/I) through the depth shortcut"""
    if ideal.is_zero():
        raise ZeroIdeal("projdim needs a nonzero ideal")
    field = get_field(field)
    check_budget(ideal, budget)
    d1 = ideal.min_degree
    sr = stanley_reisner(ideal)

    levels = defaultdict(list)
    for w in lcm_lattice(ideal):
        if w:
            levels[popcount(w)].append(w)

    pdim = 0
    for j in sorted(levels, reverse=True):
        if j - d1 + 1 <= pdim:
            break
        if workers and workers > 1:
            jobs = [(sr.facets, sr.vertices, field, face_budget, chunk, j-2-pdim)
                    for chunk in _chunks(levels[j])]
            found = [low for w, low in _run(_lowest_chunk, jobs, workers)
                     if low is not None]
            if found:
                pdim = max(pdim, j - min(found) - 1)
        else:
            for w in levels[j]:
                low = lowest_nonzero_homology(sr.restrict(w), field, j-2-pdim,
                                              face_budget=face_budget)
                if low is not None:
                    pdim = j - low - 1
    return pdim


def depth(ideal, field='q', budget=HOCHSTER_BUDGET, workers=1,
          face_budget=FACE_BUDGET):
    """depth(S/I) over the given field"""
    if ideal.is_zero():
        raise ZeroIdeal("depth needs a nonzero ideal")
    return ideal.ambient - projdim(ideal, field=field, budget=budget,
                                   workers=workers, face_budget=face_budget)


def multigraded_betti(ideal, i, u, field='q', face_budget=FACE_BUDGET):
    """beta_{i,u}(S/I) for a squarefree multidegree u"""
    u = _as_mask(u)
    sr = stanley_reisner(ideal)
    return homology_dim(sr.restrict(u), popcount(u) - i - 1, field,
                        face_budget=face_budget)


def top_betti_mindepth(G, k, field='q', face_budget=FACE_BUDGET):
    """True iff H~_{2k-2}(Gamma_k(G)) != 0, that is g_{I(G)}(k) = 0"""
    if G.has_isolated_vertices():
        raise PreconditionViolated(f"graph has isolated vertices "
                                   f"{G.isolated_vertices()}")
    nu = matching_number(G)
    if not 1 <= k <= nu:
        raise OutOfRange(f"need 1 <= k <= nu(G) = {nu}, got k={k}")
    return homology_dim(gamma_k(G, k), 2*k - 2, field,
                        face_budget=face_budget) != 0


def alexander_dual(ideal):
    """I^v: generated by the minimal vertex covers of the generator hypergraph

    (I^v)^v = I; the dual of (x1x2) is (x1, x2).
    """
    if ideal.is_zero():
        raise ZeroIdeal("the zero ideal has no Alexander dual")
    return SqfIdeal(ideal.ambient, minimal_transversals(ideal.masks))


def regularity(ideal, field='q', budget=HOCHSTER_BUDGET, workers=1):
    """Castelnuovo-Mumford regularity of S/I"""
    return hochster_betti(ideal, field=field, budget=budget,
                          workers=workers).regularity


def terai_projdim(ideal, field='q', budget=HOCHSTER_BUDGET, workers=1):
    """projdim(S/I) as reg(I^v) = reg(S/I^v) + 1"""
    return regularity(alexander_dual(ideal), field=field, budget=budget,
                      workers=workers) + 1


def compare_fields(ideal, prime=32003, budget=HOCHSTER_BUDGET, workers=1):
    """Betti entries that differ between QQ and GF(prime)

    returns a sorted list of ((i, j), beta over QQ, beta over GF(p))
    """
    over_q = hochster_betti(ideal, 'q', budget=budget, workers=workers)
    over_p = hochster_betti(ideal, prime, budget=budget, workers=workers)
    keys = sorted(set(over_q.entries) | set(over_p.entries))
    diffs = [(key, over_q[key], over_p[key]) for key in keys
             if over_q[key] != over_p[key]]
    if diffs:
        logger.warning("Betti numbers of %r depend on the field: %s vs %s",
                       ideal, over_q.field, over_p.field)
    return diffs
