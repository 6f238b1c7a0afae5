#!/usr/bin/env python
"""
Normalized depth profiles

    g_I(k) = depth(S/I^[k]) - (d_k - 1),   k = 1 .. nu(I)

Each power takes the linear quotients path when a certificate is found
(and has at least two generators), the Hochster path otherwise.  The
ordering search is bounded by a timeout and a step budget; running out of
either sends the power down the Hochster path.
"""
import logging
from dataclasses import dataclass

from .utils import (InconsistentResult, SearchTimeout, SearchBudgetExceeded,
                    ZeroIdeal, PreconditionViolated, Deadline)
from .ideal import squarefree_powers
from .complexes import FACE_BUDGET, get_field
from .betti import depth as hochster_depth, top_betti_mindepth, HOCHSTER_BUDGET
from .linquot import (find_linear_quotients, depth_from_linear_quotients,
                      SEARCH_STEPS)
from .graphs import edge_ideal, complement_components

logger = logging.getLogger(__name__)

HOCHSTER, LINQUOT = 'hochster', 'linquot'


@dataclass(frozen=True)
class ProfileRow:
    k: int
    d_k: int
    depth: int
    g: int
    method: str


@dataclass(frozen=True)
class DepthProfile:
    descriptor: str
    ambient: int
    field: str
    rows: tuple

    @property
    def g(self):
        return tuple(r.g for r in self.rows)

    @property
    def depths(self):
        return tuple(r.depth for r in self.rows)

    @property
    def nu(self):
        return len(self.rows)

    def as_dict(self):
        return {'descriptor': self.descriptor, 'ambient': self.ambient,
                'field': self.field, 'g': list(self.g),
                'rows': [{'k': r.k, 'd_k': r.d_k, 'depth': r.depth,
                          'g': r.g, 'method': r.method} for r in self.rows]}

    def to_text(self):
        out = ["# %s  n=%d  field=%s" % (self.descriptor, self.ambient, self.field),
               "# k  d_k  depth  g  method"]
        for r in self.rows:
            out.append("%d %d %d %d %s" % (r.k, r.d_k, r.depth, r.g, r.method))
        return '\n'.join(out)


def power_depth(power, field='q', budget=HOCHSTER_BUDGET, use_linquot=True,
                cross_check=False, timeout=None, workers=1,
                face_budget=FACE_BUDGET, max_steps=SEARCH_STEPS):
    """(depth, method) for one ideal"""
    cert = None
    if use_linquot and len(power) > 1:
        try:
            cert = find_linear_quotients(power, deadline=Deadline(timeout),
                                         max_steps=max_steps)
        except (SearchTimeout, SearchBudgetExceeded) as exc:
            logger.debug("no linear quotients certificate for %r: %s", power, exc)
    if cert is not None:
        value = depth_from_linear_quotients(cert)
        if cross_check:
            slow = hochster_depth(power, field=field, budget=budget,
                                  workers=workers, face_budget=face_budget)
            if slow != value:
                raise InconsistentResult(f"depth of {power}: linear quotients "
                                         f"give {value}, Hochster gives {slow}")
        return value, LINQUOT
    return hochster_depth(power, field=field, budget=budget, workers=workers,
                          face_budget=face_budget), HOCHSTER


def profile(ideal, field='q', budget=HOCHSTER_BUDGET, use_linquot=True,
            cross_check=False, timeout=None, workers=1, descriptor=None,
            face_budget=FACE_BUDGET, max_steps=SEARCH_STEPS):
    """DepthProfile over k = 1 .. nu(I)"""
    if ideal.is_zero():
        raise ZeroIdeal("profile needs a nonzero ideal")
    field = get_field(field)
    rows = []
    for k, power in enumerate(squarefree_powers(ideal), start=1):
        d_k = power.min_degree
        value, method = power_depth(power, field=field, budget=budget,
                                    use_linquot=use_linquot,
                                    cross_check=cross_check, timeout=timeout,
                                    workers=workers, face_budget=face_budget,
                                    max_steps=max_steps)
        rows.append(ProfileRow(k, d_k, value, value - (d_k - 1), method))
        logger.debug("k=%d d_k=%d depth=%d (%s)", k, d_k, value, method)
    if descriptor is None:
        descriptor = repr(ideal)
    return DepthProfile(descriptor, ideal.ambient, str(field), tuple(rows))


def graph_profile(G, descriptor=None, **kws):
    """profile of the edge ideal I(G)"""
    return profile(edge_ideal(G), descriptor=descriptor or repr(G), **kws)


def _g_values(p):
    return p.g if isinstance(p, DepthProfile) else tuple(p)


def check_nonincreasing(p):
    """g_1 >= g_2 >= ... >= g_nu"""
    g = _g_values(p)
    return all(a >= b for a, b in zip(g, g[1:]))


def tail_zero_start(p):
    """least k with g(l) = 0 for every l >= k, or None if g(nu) != 0"""
    g = _g_values(p)
    if not g or g[-1] != 0:
        return None
    k = len(g)
    while k > 1 and g[k-2] == 0:
        k -= 1
    return k


@dataclass(frozen=True)
class Triangle:
    complement_disconnected: bool
    g1_zero: bool
    all_zero: bool

    @property
    def agree(self):
        return self.complement_disconnected == self.g1_zero == self.all_zero


def equivalence_triangle(G, field='q', budget=HOCHSTER_BUDGET, workers=1):
    """three independent readings of minimum depth for I(G):
    complement connectivity, H~_0 of the independence complex, and the
    Hochster depth of every power"""
    if G.has_isolated_vertices():
        raise PreconditionViolated(f"graph has isolated vertices "
                                   f"{G.isolated_vertices()}")
    disconnected = len(complement_components(G)) > 1
    g1 = top_betti_mindepth(G, 1, field=field)
    full = profile(edge_ideal(G), field=field, budget=budget,
                   use_linquot=False, workers=workers)
    return Triangle(disconnected, g1, all(v == 0 for v in full.g))
