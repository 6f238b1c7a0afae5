#!/usr/bin/env python
"""
Errors, timing and bit-set helpers shared by all of sqfdepth.

Variable and vertex sets are held as Python ints used as bit sets:
index i (1-based) is bit i-1.
"""
import time
from datetime import timedelta


class SqfDepthException(Exception):
    """sqfdepth Exception: General Errors"""


class ScanAbort(SqfDepthException):
    """Scan Abort Exception"""


class AmbientMismatch(SqfDepthException):
    """variable index outside the ambient ring, or two ambients differ"""


class UnitIdeal(SqfDepthException):
    """the monomial 1 was given as a generator"""


class NotSquarefree(SqfDepthException):
    """an exponent > 1 (or < 0) reached a squarefree boundary"""


class ZeroIdeal(SqfDepthException):
    """operation needs a nonzero ideal"""


class OutOfRange(SqfDepthException):
    """power index / matching size outside its valid range"""


class BadSpec(SqfDepthException):
    """malformed family, corpus or field description"""


class FileFormatError(BadSpec):
    """malformed ideal or graph file"""


class BudgetExceeded(SqfDepthException):
    """ambient size above the configured Hochster budget"""


class FaceBudgetExceeded(BudgetExceeded):
    """simplicial complex with too many faces"""


class SearchTimeout(BudgetExceeded):
    """backtracking search ran past its deadline"""


class SearchBudgetExceeded(BudgetExceeded):
    """backtracking search tried more steps than allowed"""


class PreconditionViolated(SqfDepthException):
    """hypothesis of a construction does not hold"""


class NoDominatingClique(PreconditionViolated):
    """graph has no dominating clique of the needed size"""


class MixedDegrees(SqfDepthException):
    """ideal is not generated in a single degree"""


class PropertyNotVerified(SqfDepthException):
    """input lacks the property it was claimed to have"""


class InvalidCertificate(SqfDepthException):
    """certificate does not replay on the ideal it claims"""


class SingleGenerator(SqfDepthException):
    """depth formula needs at least two generators"""


class InconsistentResult(SqfDepthException):
    """two independent computations disagree"""


def hms(secs):
    "format time in seconds to H:M:S"
    return str(timedelta(seconds=int(secs)))


class Deadline(object):
    """wall-clock deadline for backtracking searches

    Deadline(None) or Deadline(0) never expires.
    """
    def __init__(self, seconds=None, what='search'):
        self.what = what
        self.seconds = seconds
        self.stop = None
        if seconds:
            self.stop = time.monotonic() + seconds

    def check(self):
        if self.stop is not None and time.monotonic() > self.stop:
            raise SearchTimeout(f"{self.what} exceeded {self.seconds} s")


def mask_of(indices):
    """bit set for an iterable of 1-based indices"""
    mask = 0
    for i in indices:
        i = int(i)
        if i < 1:
            raise AmbientMismatch(f"index {i} is not positive")
        mask |= 1 << (i - 1)
    return mask


def bits_of(mask):
    """sorted tuple of 1-based indices in a bit set"""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask):
    return mask.bit_count()


def full_mask(n):
    return (1 << n) - 1


def lowest_bit(mask):
    """lowest set bit of a nonzero bit set, as a bit set"""
    return mask & -mask


def lex_key(mask):
    """canonical (size, sorted indices) order for bit sets"""
    return (mask.bit_count(), bits_of(mask))


def minimal_masks(masks):
    """inclusion-minimal elements of a collection of bit sets, canonically sorted"""
    kept = []
    for m in sorted(set(masks), key=popcount):
        if not any((k & m) == k for k in kept):
            kept.append(m)
    return sorted(kept, key=lex_key)


def maximal_masks(masks):
    """inclusion-maximal elements of a collection of bit sets, canonically sorted"""
    kept = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any((k & m) == m for k in kept):
            kept.append(m)
    return sorted(kept, key=lex_key)


def max_disjoint_family(masks, deadline=None):
    """largest family of pairwise disjoint bit sets, by branch and bound

    returns the family as a tuple of masks (empty tuple for no input).
    """
    cands = sorted(set(m for m in masks if m), key=lex_key)
    if not cands:
        return ()
    dmin = min(popcount(m) for m in cands)
    best = [()]

    def search(pool, chosen):
        if deadline is not None:
            deadline.check()
        if len(chosen) > len(best[0]):
            best[0] = tuple(chosen)
        if not pool:
            return
        free = 0
        for m in pool:
            free |= m
        bound = min(len(pool), popcount(free) // dmin)
        if len(chosen) + bound <= len(best[0]):
            return
        for i, m in enumerate(pool):
            if len(chosen) + len(pool) - i <= len(best[0]):
                return
            rest = [c for c in pool[i+1:] if not c & m]
            chosen.append(m)
            search(rest, chosen)
            chosen.pop()

    search(cands, [])
    return best[0]


def minimal_transversals(masks):
    """minimal transversals (vertex covers) of a hypergraph given by bit sets

    Berge's incremental algorithm.  An empty hypergraph has the single
    transversal 0; a hypergraph containing the empty edge has none.
    """
    trans = [0]
    for edge in sorted(set(masks), key=lex_key):
        if edge == 0:
            return []
        grown = []
        for t in trans:
            if t & edge:
                grown.append(t)
            else:
                m = edge
                while m:
                    b = lowest_bit(m)
                    grown.append(t | b)
                    m ^= b
        trans = minimal_masks(grown)
    return trans
