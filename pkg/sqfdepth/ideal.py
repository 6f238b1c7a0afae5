#!/usr/bin/env python
"""
Squarefree monomials and squarefree monomial ideals

A squarefree monomial is identified with its support, held as a bit set.
An SqfIdeal is an ambient variable count n plus the antichain G(I) of its
minimal generators; every constructor minimalizes, so no generator ever
divides another.  The zero ideal has no generators, and the unit ideal is
rejected.

Squarefree powers I^[k] are built as k-1 successive squarefree products
with I, so I^[k] is never enumerated through k-subsets of G(I).
"""
import logging
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np

from .utils import (AmbientMismatch, UnitIdeal, NotSquarefree, ZeroIdeal,
                    OutOfRange, PreconditionViolated, mask_of, bits_of,
                    popcount, full_mask, lex_key, minimal_masks,
                    max_disjoint_family)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SqfMonomial:
    """squarefree monomial x_{i_1}...x_{i_d}, stored as its support bit set"""
    mask: int

    @classmethod
    def from_vars(cls, indices):
        return cls(mask_of(indices))

    @property
    def vars(self):
        return bits_of(self.mask)

    @property
    def degree(self):
        return popcount(self.mask)

    def divides(self, other):
        return (self.mask & other.mask) == self.mask

    def coprime(self, other):
        return not (self.mask & other.mask)

    def times(self, other):
        "squarefree product, or None if the two share a variable"
        if self.mask & other.mask:
            return None
        return SqfMonomial(self.mask | other.mask)

    def sort_key(self):
        return lex_key(self.mask)

    def __str__(self):
        if self.mask == 0:
            return '1'
        return ''.join('x%d' % i for i in self.vars)


ONE = SqfMonomial(0)


class SqfIdeal(object):
    """squarefree monomial ideal of K[x_1..x_n] given by G(I)

    gens may be SqfMonomials, bit sets, or iterables of 1-based indices;
    they are minimalized.  gens are kept in canonical order:
    by degree, then lexicographically on the sorted indices.
    """
    def __init__(self, ambient, gens=()):
        ambient = int(ambient)
        if ambient < 1:
            raise AmbientMismatch(f"ambient must be positive, got {ambient}")
        masks = [_as_mask(g) for g in gens]
        limit = full_mask(ambient)
        for m in masks:
            if m & ~limit:
                raise AmbientMismatch(f"generator {SqfMonomial(m)} uses a variable "
                                      f"outside x1..x{ambient}")
            if m == 0:
                raise UnitIdeal("the unit ideal is not a squarefree power target")
        self.ambient = ambient
        self.masks = tuple(minimal_masks(masks))

    @property
    def gens(self):
        return tuple(SqfMonomial(m) for m in self.masks)

    def is_zero(self):
        return len(self.masks) == 0

    @property
    def support(self):
        "bit set of variables used by some generator"
        out = 0
        for m in self.masks:
            out |= m
        return out

    @property
    def min_degree(self):
        if self.is_zero():
            raise ZeroIdeal("zero ideal has no generator degrees")
        return min(popcount(m) for m in self.masks)

    @property
    def max_degree(self):
        if self.is_zero():
            raise ZeroIdeal("zero ideal has no generator degrees")
        return max(popcount(m) for m in self.masks)

    def degrees(self):
        "sorted list of distinct generator degrees"
        return sorted(set(popcount(m) for m in self.masks))

    def count_in_degree(self, d):
        return sum(1 for m in self.masks if popcount(m) == d)

    def contains(self, mono):
        "True if the squarefree monomial lies in the ideal"
        m = _as_mask(mono)
        return any((g & m) == g for g in self.masks)

    def is_contained_in(self, other):
        "generator-wise containment test I ⊆ J"
        _check_ambient(self, other)
        return all(other.contains(m) for m in self.masks)

    def trim(self):
        """restrict the ambient ring to supp(I)

        returns (trimmed ideal, tuple of old indices in new order)
        """
        kept = bits_of(self.support)
        if not kept:
            raise ZeroIdeal("cannot trim the zero ideal")
        relabel = {old: new for new, old in enumerate(kept, start=1)}
        gens = [[relabel[i] for i in bits_of(m)] for m in self.masks]
        return SqfIdeal(len(kept), gens), kept

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        return (isinstance(other, SqfIdeal) and self.ambient == other.ambient
                and self.masks == other.masks)

    def __hash__(self):
        return hash((self.ambient, self.masks))

    def __repr__(self):
        if self.is_zero():
            return "<SqfIdeal n=%d: zero>" % self.ambient
        return "<SqfIdeal n=%d: (%s)>" % (self.ambient,
                                         ', '.join(str(g) for g in self.gens))


@dataclass(frozen=True)
class DegreeStats:
    k: int
    d_k: int
    generator_count: int


def _as_mask(g):
    if isinstance(g, SqfMonomial):
        return g.mask
    if isinstance(g, (int, np.integer)):
        return int(g)
    return mask_of(g)


def _check_ambient(L, M):
    if L.ambient != M.ambient:
        raise AmbientMismatch(f"ambient {L.ambient} != {M.ambient}")


def minimalize(monomials, ambient):
    """ideal whose generators are the inclusion-minimal input monomials"""
    return SqfIdeal(ambient, monomials)


def veronese(n, d):
    """squarefree Veronese ideal m^[d] of K[x_1..x_n]"""
    if not 1 <= d <= n:
        raise OutOfRange(f"need 1 <= d <= n, got d={d}, n={n}")
    return SqfIdeal(n, [c for c in combinations(range(1, n+1), d)])


def maximal_ideal(n):
    return veronese(n, 1)


def squarefree_product(L, M):
    """L*M: the squarefree part of LM"""
    _check_ambient(L, M)
    prods = set()
    for u in L.masks:
        for v in M.masks:
            if not u & v:
                prods.add(u | v)
    return SqfIdeal(L.ambient, prods)


def squarefree_power(I, k):
    """I^[k], generated by products of k pairwise coprime generators"""
    if k < 1:
        raise OutOfRange(f"squarefree power needs k >= 1, got {k}")
    power = I
    for _ in range(k - 1):
        if power.is_zero():
            break
        power = squarefree_product(I, power)
    return power


def squarefree_powers(I):
    """list [I^[1], ..., I^[nu]] built along the power tower"""
    out = []
    power = I
    while not power.is_zero():
        out.append(power)
        power = squarefree_product(I, power)
    return out


class MonomialIdeal(object):
    """monomial ideal given by exponent vectors (rows of an int array)

    Only used to form squarefree parts and to test the polymatroidal
    exchange property; generators are minimalized under divisibility.
    """
    def __init__(self, ambient, exponents):
        self.ambient = int(ambient)
        rows = [tuple(int(e) for e in row) for row in exponents]
        for row in rows:
            if len(row) != self.ambient:
                raise AmbientMismatch(f"exponent vector {row} does not have "
                                      f"length {self.ambient}")
            if min(row, default=0) < 0:
                raise NotSquarefree(f"negative exponent in {row}")
        rows = sorted(set(rows), key=lambda r: (sum(r), tuple(-e for e in r)))
        kept = []
        for row in rows:
            a = np.array(row)
            if not any(np.all(k <= a) for k in kept):
                kept.append(a)
        self.exponents = np.array(kept, dtype=int).reshape(len(kept), self.ambient)

    @classmethod
    def from_sqf(cls, I):
        rows = [[(m >> i) & 1 for i in range(I.ambient)] for m in I.masks]
        return cls(I.ambient, rows)

    def __len__(self):
        return len(self.exponents)

    def degrees(self):
        return sorted(set(int(d) for d in self.exponents.sum(axis=1)))

    def is_zero(self):
        return len(self.exponents) == 0


def ordinary_power(I, k):
    """generating set of the ordinary power I^k (as a MonomialIdeal)"""
    if k < 1:
        raise OutOfRange(f"power needs k >= 1, got {k}")
    if not isinstance(I, MonomialIdeal):
        I = MonomialIdeal.from_sqf(I)
    rows = []
    for combo in combinations_with_replacement(range(len(I)), k):
        rows.append(I.exponents[list(combo)].sum(axis=0))
    return MonomialIdeal(I.ambient, rows)


def squarefree_part(monomials, ambient=None):
    """ideal generated by the squarefree monomials among the input

    monomials: a MonomialIdeal, or an iterable of exponent vectors
    """
    if isinstance(monomials, MonomialIdeal):
        ambient = monomials.ambient
        rows = monomials.exponents
    else:
        rows = np.array([list(r) for r in monomials], dtype=int)
        if ambient is None:
            raise AmbientMismatch("ambient needed for a bare list of exponents")
        rows = rows.reshape(len(rows), ambient)
    if len(rows) and rows.min() < 0:
        raise NotSquarefree("negative exponent in input")
    sqf = [mask_of(np.nonzero(r)[0] + 1) for r in rows if r.max(initial=0) <= 1]
    return SqfIdeal(ambient, sqf)


def nu(I, deadline=None):
    """nu(I): largest number of pairwise coprime generators"""
    if I.is_zero():
        raise ZeroIdeal("nu is undefined for the zero ideal")
    return len(max_disjoint_family(I.masks, deadline=deadline))


def degree_stats(I, k):
    """d_k and |G(I^[k])|"""
    if k < 1:
        raise OutOfRange(f"need k >= 1, got {k}")
    power = squarefree_power(I, k)
    if power.is_zero():
        raise ZeroIdeal(f"I^[{k}] is zero (k > nu(I))")
    return DegreeStats(k=k, d_k=power.min_degree, generator_count=len(power))


def disjoint_product(I, J):
    """I*J for ideals in disjoint variables: J is shifted past I's ambient"""
    shift = I.ambient
    gens = [u | (v << shift) for u in I.masks for v in J.masks]
    return SqfIdeal(I.ambient + J.ambient, gens)


def stabilizes_with(I, J, k):
    """check I ⊆ J with I^[k] = J^[k] and compare the higher powers

    returns the list of l >= k (up to max nu + 1) at which I^[l] == J^[l]
    """
    if not I.is_contained_in(J):
        raise PreconditionViolated("stabilization needs I ⊆ J")
    P, Q = squarefree_power(I, k), squarefree_power(J, k)
    if P != Q:
        return []
    agree = [k]
    while not (P.is_zero() and Q.is_zero()):
        P, Q = squarefree_product(I, P), squarefree_product(J, Q)
        if P != Q:
            break
        agree.append(agree[-1] + 1)
    return agree
