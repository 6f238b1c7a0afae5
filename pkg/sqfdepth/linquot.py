#!/usr/bin/env python
"""
Linear quotients, matroidal exchange and the minimum-depth criterion

I has linear quotients if G(I) can be ordered u_1, ..., u_s so that each
colon (u_1, ..., u_{i-1}) : u_i is generated by variables.  With r_i the
number of those variables,

    depth(S/I) = n - max(r_2, ..., r_s) - 1.

For squarefree I the colon is generated by the minimal elements of
{ supp(u_j) minus supp(u_i) : j < i }, so the search never leaves bit sets.
The ordering search is a depth-first search with memoized dead prefixes
(the colon of u depends only on the set of generators placed before it).
"""
import logging
from dataclasses import dataclass

import numpy as np

from .utils import (BadSpec, InvalidCertificate, MixedDegrees, OutOfRange,
                    PreconditionViolated, PropertyNotVerified, SingleGenerator,
                    SearchBudgetExceeded, ZeroIdeal, Deadline, bits_of, popcount,
                    minimal_masks)
from .ideal import (SqfIdeal, SqfMonomial, MonomialIdeal, squarefree_part,
                    squarefree_power, _as_mask)
from .betti import depth as hochster_depth, HOCHSTER_BUDGET
from .graphs import (edge_ideal, matching_number, is_dominating,
                     perfect_matching_on)

logger = logging.getLogger(__name__)

# colon evaluations allowed per ordering search (None: unlimited)
SEARCH_STEPS = 50000


@dataclass(frozen=True)
class LinearQuotientsCert:
    """ordering: indices into ideal.masks (or ideal.exponents);
    r[0] = 0, r[i] = number of variables generating the i-th colon"""
    ideal: object
    ordering: tuple
    r: tuple

    @property
    def ambient(self):
        return self.ideal.ambient

    @property
    def monomials(self):
        if isinstance(self.ideal, SqfIdeal):
            return tuple(SqfMonomial(self.ideal.masks[i]) for i in self.ordering)
        return tuple(tuple(int(e) for e in self.ideal.exponents[i])
                     for i in self.ordering)

    def as_dict(self):
        out = {'ordering': list(self.ordering), 'r': list(self.r)}
        if isinstance(self.ideal, SqfIdeal):
            out['generators'] = [list(bits_of(self.ideal.masks[i]))
                                 for i in self.ordering]
            if len(self.ordering) > 1:
                out['depth'] = depth_from_linear_quotients(self)
        return out


def colon_generators(prefix, u):
    """minimal generators of (prefix) : u, as SqfMonomials"""
    u = _as_mask(u)
    return tuple(SqfMonomial(m) for m in
                 minimal_masks(_as_mask(w) & ~u for w in prefix))


def _colon_rank(prefix_masks, u):
    """number of variables generating (prefix):u, or None if not linear"""
    diffs = [w & ~u for w in prefix_masks]
    variables = 0
    for d in diffs:
        if popcount(d) == 1:
            variables |= d
    for d in diffs:
        if not d & variables:
            return None
    return popcount(variables)


def _exponent_colon_rank(prefix_rows, u):
    if not len(prefix_rows):
        return 0
    diffs = np.maximum(np.asarray(prefix_rows) - u, 0)
    single = diffs.sum(axis=1) == 1
    variables = diffs[single].sum(axis=0) > 0
    for d in diffs:
        if not np.any((d > 0) & variables):
            return None
    return int(variables.sum())


def _search(count, rank_of, deadline=None, max_steps=SEARCH_STEPS):
    """ordering of range(count) with every colon linear, or None

    rank_of(placed, idx) gives r for idx after the placed list.
    Candidates are tried in index order, so lex order is tried first.
    Raises SearchBudgetExceeded after max_steps calls of rank_of.
    """
    dead = set()
    full = (1 << count) - 1
    steps = [0]

    def extend(placed, mask, ranks):
        if mask == full:
            return list(placed), list(ranks)
        if mask in dead:
            return None
        if deadline is not None:
            deadline.check()
        for idx in range(count):
            if mask & (1 << idx):
                continue
            steps[0] += 1
            if max_steps is not None and steps[0] > max_steps:
                raise SearchBudgetExceeded(f"linear quotients search passed "
                                           f"{max_steps} colon evaluations")
            r = rank_of(placed, idx)
            if r is None:
                continue
            placed.append(idx)
            ranks.append(r)
            found = extend(placed, mask | (1 << idx), ranks)
            if found is not None:
                return found
            placed.pop()
            ranks.pop()
        dead.add(mask)
        return None

    return extend([], 0, [])


def find_linear_quotients(ideal, timeout=None, deadline=None,
                          max_steps=SEARCH_STEPS):
    """LinearQuotientsCert for a SqfIdeal or MonomialIdeal, or None

    raises SearchTimeout when the timeout (seconds) runs out and
    SearchBudgetExceeded after max_steps colon evaluations.
    """
    if ideal.is_zero():
        raise ZeroIdeal("linear quotients need a nonzero ideal")
    if deadline is None:
        deadline = Deadline(timeout, what='linear quotients search')
    if isinstance(ideal, MonomialIdeal):
        rows = ideal.exponents
        count = len(rows)

        def rank_of(placed, idx):
            return _exponent_colon_rank(rows[placed], rows[idx])
    else:
        masks = ideal.masks
        count = len(masks)

        def rank_of(placed, idx):
            return _colon_rank([masks[p] for p in placed], masks[idx])

    found = _search(count, rank_of, deadline=deadline, max_steps=max_steps)
    if found is None:
        return None
    ordering, ranks = found
    return LinearQuotientsCert(ideal, tuple(ordering), tuple(ranks))


def lex_order(ideal):
    """generator indices, largest first in lex order (x1 > x2 > ... > xn)"""
    def key(i):
        m = ideal.masks[i]
        return tuple(1 - ((m >> b) & 1) for b in range(ideal.ambient))
    return tuple(sorted(range(len(ideal.masks)), key=key))


def verify_ordering(ideal, ordering):
    """LinearQuotientsCert if the ordering has linear quotients, else None"""
    ordering = tuple(int(i) for i in ordering)
    if sorted(ordering) != list(range(len(ideal))):
        raise BadSpec(f"ordering {ordering} is not a permutation of the "
                      f"{len(ideal)} generators")
    if isinstance(ideal, MonomialIdeal):
        rows = ideal.exponents

        def rank_of(placed, idx):
            return _exponent_colon_rank(rows[list(placed)], rows[idx])
    else:
        def rank_of(placed, idx):
            return _colon_rank([ideal.masks[p] for p in placed], ideal.masks[idx])
    ranks = []
    for pos, idx in enumerate(ordering):
        r = rank_of(ordering[:pos], idx)
        if r is None:
            return None
        ranks.append(r)
    return LinearQuotientsCert(ideal, ordering, tuple(ranks))


def depth_from_linear_quotients(cert, delegate=False, field='q', budget=None):
    """n - max(r_2, ..., r_s) - 1

    a principal ideal of degree 1 gives n - 1.  Other principal ideals
    raise SingleGenerator, or with delegate=True are handed to the
    homology engine.
    """
    ideal = cert.ideal
    n = ideal.ambient
    if len(cert.r) >= 2:
        return n - max(cert.r[1:]) - 1
    if isinstance(ideal, SqfIdeal) and ideal.max_degree == 1:
        return n - 1
    if not delegate:
        raise SingleGenerator("depth formula needs at least two generators")
    logger.warning("single generator %s: depth taken from the homology engine",
                   ideal)
    return hochster_depth(ideal, field=field,
                          budget=HOCHSTER_BUDGET if budget is None else budget)


def is_matroidal(ideal):
    """basis exchange: for u, v in G(I) and x_k | u, x_k !| v there is
    x_l | v, x_l !| u with x_l u / x_k in G(I)"""
    if ideal.is_zero():
        raise ZeroIdeal("matroidal test needs a nonzero ideal")
    if len(ideal.degrees()) > 1:
        raise MixedDegrees(f"generators in degrees {ideal.degrees()}")
    gens = set(ideal.masks)
    for u in ideal.masks:
        for v in ideal.masks:
            for k in bits_of(u & ~v):
                base = u & ~(1 << (k-1))
                if not any(base | (1 << (l-1)) in gens
                           for l in bits_of(v & ~u)):
                    return False
    return True


def is_polymatroidal(ideal):
    """exchange on exponent vectors: if u_i > v_i there is j with
    u_j < v_j and x_j u / x_i in G(I)"""
    if not isinstance(ideal, MonomialIdeal):
        ideal = MonomialIdeal.from_sqf(ideal)
    if ideal.is_zero():
        raise ZeroIdeal("polymatroidal test needs a nonzero ideal")
    if len(ideal.degrees()) > 1:
        raise MixedDegrees(f"generators in degrees {ideal.degrees()}")
    rows = ideal.exponents
    gens = set(tuple(int(e) for e in r) for r in rows)
    for u in rows:
        for v in rows:
            for i in np.nonzero(u > v)[0]:
                ok = False
                for j in np.nonzero(u < v)[0]:
                    w = u.copy()
                    w[i] -= 1
                    w[j] += 1
                    if tuple(int(e) for e in w) in gens:
                        ok = True
                        break
                if not ok:
                    return False
    return True


@dataclass(frozen=True)
class PreservationReport:
    prop: str
    input_certificate: object
    output: SqfIdeal
    output_certificate: object
    ok: bool

    def as_dict(self):
        def cert(c):
            if c is None or isinstance(c, bool):
                return c
            return c.as_dict()
        return {'property': self.prop, 'ok': self.ok,
                'input_certificate': cert(self.input_certificate),
                'output': [list(bits_of(m)) for m in self.output.masks],
                'output_certificate': cert(self.output_certificate)}


def squarefree_part_preserves(ideal, prop='linear_quotients', timeout=None):
    """check that the squarefree part keeps linear quotients / the
    (poly)matroidal property of the input"""
    if not isinstance(ideal, MonomialIdeal):
        ideal = MonomialIdeal.from_sqf(ideal)
    if prop == 'linear_quotients':
        before = find_linear_quotients(ideal, timeout=timeout)
        if before is None:
            raise PropertyNotVerified("input does not have linear quotients")
    elif prop == 'matroidal':
        before = is_polymatroidal(ideal)
        if not before:
            raise PropertyNotVerified("input is not polymatroidal")
    else:
        raise BadSpec(f"unknown property '{prop}'")

    sqf = squarefree_part(ideal)
    if sqf.is_zero():
        return PreservationReport(prop, before, sqf, None, True)
    if prop == 'linear_quotients':
        after = find_linear_quotients(sqf, timeout=timeout)
        ok = after is not None
    else:
        after = is_matroidal(sqf)
        ok = after
    if not ok:
        logger.warning("squarefree part %s lost the %s property", sqf, prop)
    return PreservationReport(prop, before, sqf, after, ok)


@dataclass(frozen=True)
class MindepthWitness:
    """position i (1-based) of u_i, the matching M with V(M) = supp(u_i),
    and for each t outside V(M) the pair (j, M') with V(M') = supp(u_j)"""
    index: int
    matching: object
    exchanges: tuple

    def as_dict(self):
        return {'index': self.index,
                'matching': [list(e) for e in self.matching.edges],
                'exchanges': [{'t': t, 'j': j,
                               'matching': [list(e) for e in m.edges]}
                              for t, j, m in self.exchanges]}


def mindepth_criterion(G, k, cert):
    """witness that g_{I(G)}(k) = 0 from a linear quotients order, or None

    some u_i (i >= 2) must have a dominating matching on its support and,
    for every vertex t off it, an earlier u_j with supp(u_j) inside
    supp(u_i) + t.  A principal I(G)^[k] counts as a witness exactly
    when its support is every vertex.
    """
    if G.has_isolated_vertices():
        raise PreconditionViolated(f"graph has isolated vertices "
                                   f"{G.isolated_vertices()}")
    nu = matching_number(G)
    if not 1 <= k <= nu:
        raise OutOfRange(f"need 1 <= k <= nu(G) = {nu}, got k={k}")
    power = squarefree_power(edge_ideal(G), k)
    if cert.ideal != power:
        raise InvalidCertificate(f"certificate is not for I(G)^[{k}]")
    if verify_ordering(power, cert.ordering) is None:
        raise InvalidCertificate("ordering does not have linear quotients")

    supports = [power.masks[i] for i in cert.ordering]
    first = 0 if len(supports) == 1 else 1
    for pos in range(first, len(supports)):
        u = supports[pos]
        exchanges = []
        for t in bits_of(G.vertex_mask & ~u):
            grown = u | (1 << (t-1))
            j = next((j for j in range(pos) if (supports[j] & grown) == supports[j]),
                     None)
            if j is None:
                break
            exchanges.append((t, j+1, perfect_matching_on(G, supports[j])))
        else:
            if not is_dominating(G, u):
                raise InvalidCertificate(f"support of u_{pos+1} is not dominating")
            return MindepthWitness(pos+1, perfect_matching_on(G, u),
                                   tuple(exchanges))
    return None
