#!/usr/bin/env python
"""
Simplicial complexes on bit-set vertices and exact reduced homology

A complex is stored by its facets.  The void complex has no facets (and
no faces); the irrelevant complex has the single facet 0, the empty face.

Reduced homology over a field K is read off boundary ranks:

    dim H~_i = f_i - rank d_i - rank d_{i+1}

with f_{-1} = 1 and the augmentation d_0 sending each vertex to the
empty face.  Boundary matrices are built sparsely (faces ordered
lexicographically) as sympy DomainMatrix objects over QQ or GF(p).
"""
import logging
from dataclasses import dataclass
from itertools import combinations

from sympy import isprime
from sympy.polys.domains import QQ, GF
from sympy.polys.matrices import DomainMatrix

from .utils import (BadSpec, FaceBudgetExceeded, bits_of, popcount,
                    full_mask, lex_key, maximal_masks, minimal_transversals)

logger = logging.getLogger(__name__)

FACE_BUDGET = 200000


@dataclass(frozen=True)
class Field:
    """coefficient field: characteristic 0 for QQ, or a prime p for GF(p)"""
    characteristic: int = 0

    @property
    def domain(self):
        if self.characteristic == 0:
            return QQ
        return GF(self.characteristic)

    def __str__(self):
        if self.characteristic == 0:
            return 'QQ'
        return 'GF(%d)' % self.characteristic


QQ_FIELD = Field(0)


def get_field(spec='q'):
    """Field from 'q', 'Q', 'QQ', 0, a prime p, or 'GF(p)'"""
    if isinstance(spec, Field):
        return spec
    text = str(spec).strip().lower()
    if text in ('q', 'qq', 'rationals', '0'):
        return QQ_FIELD
    if text.startswith('gf(') and text.endswith(')'):
        text = text[3:-1]
    try:
        p = int(text)
    except ValueError:
        raise BadSpec(f"field must be 'q' or a prime, got '{spec}'")
    if not isprime(p):
        raise BadSpec(f"field characteristic {p} is not prime")
    return Field(p)


class SimplicialComplex(object):
    """
    simplicial complex given by its facets (bit sets)

    vertices defaults to the union of the facets; it may be larger
    (vertices that are not faces are allowed and are ignored by homology).
    """
    def __init__(self, facets, vertices=None):
        self.facets = tuple(maximal_masks(facets))
        union = 0
        for f in self.facets:
            union |= f
        self.vertices = union if vertices is None else (vertices | union)

    @classmethod
    def simplex(cls, n):
        return cls([full_mask(n)])

    def is_void(self):
        return len(self.facets) == 0

    def is_irrelevant(self):
        return self.facets == (0,)

    @property
    def dim(self):
        "dimension; None for the void complex"
        if self.is_void():
            return None
        return max(popcount(f) for f in self.facets) - 1

    def contains(self, face):
        return any((face & f) == face for f in self.facets)

    def restrict(self, mask):
        """Delta_W: faces of the complex contained in W"""
        if self.is_void():
            return SimplicialComplex([], vertices=mask & self.vertices)
        return SimplicialComplex([f & mask for f in self.facets],
                                 vertices=mask & self.vertices)

    def is_cone(self):
        "some vertex lies in every facet"
        if self.is_void() or self.is_irrelevant():
            return False
        common = self.facets[0]
        for f in self.facets[1:]:
            common &= f
        return common != 0

    def faces_by_dim(self, max_dim=None, face_budget=FACE_BUDGET):
        """dict dim -> lexicographically sorted list of faces

        includes dim -1 (the empty face) for a nonvoid complex.
        faces above max_dim are not enumerated.
        """
        if self.is_void():
            return {}
        top = self.dim if max_dim is None else min(max_dim, self.dim)
        found = set()
        for f in self.facets:
            verts = bits_of(f)
            for size in range(0, min(len(verts), top+1) + 1):
                for combo in combinations(verts, size):
                    mask = 0
                    for v in combo:
                        mask |= 1 << (v-1)
                    found.add(mask)
                if face_budget and len(found) > face_budget:
                    raise FaceBudgetExceeded(f"complex has more than "
                                             f"{face_budget} faces")
        out = {d: [] for d in range(-1, top+1)}
        for face in found:
            out[popcount(face)-1].append(face)
        for d in out:
            out[d].sort(key=lex_key)
        return out

    def f_vector(self):
        faces = self.faces_by_dim()
        return tuple(len(faces[d]) for d in sorted(faces))

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.facets == other.facets)

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        if self.is_void():
            return "<SimplicialComplex: void>"
        facets = ', '.join('{%s}' % ','.join(str(i) for i in bits_of(f))
                           for f in self.facets)
        return "<SimplicialComplex: %s>" % facets


@dataclass(frozen=True)
class HomologyVector:
    """dims[i+1] = dim H~_i for i = -1 .. len(dims)-2"""
    dims: tuple
    field: Field = QQ_FIELD

    def __getitem__(self, i):
        if -1 <= i < len(self.dims) - 1:
            return self.dims[i+1]
        return 0

    def is_zero(self):
        return not any(self.dims)

    def lowest_nonzero(self):
        for i, d in enumerate(self.dims):
            if d:
                return i - 1
        return None

    def as_dict(self):
        return {'field': str(self.field),
                'reduced_homology': {str(i-1): d for i, d in enumerate(self.dims)}}


def stanley_reisner(ideal):
    """complex whose faces are the sets containing no generator support

    facets are the complements of the minimal transversals of G(I).
    """
    n = ideal.ambient
    full = full_mask(n)
    facets = [full & ~t for t in minimal_transversals(ideal.masks)]
    return SimplicialComplex(facets, vertices=full)


def boundary_matrix(rows, cols, domain):
    """sparse boundary map from the faces `cols` (dim d) to `rows` (dim d-1)"""
    index = {face: i for i, face in enumerate(rows)}
    one, neg = domain.one, -domain.one
    entries = {}
    for j, face in enumerate(cols):
        for t, v in enumerate(bits_of(face)):
            i = index[face & ~(1 << (v-1))]
            entries.setdefault(i, {})[j] = one if t % 2 == 0 else neg
    return DomainMatrix(entries, (len(rows), len(cols)), domain)


def _rank(rows, cols, domain):
    if not rows or not cols:
        return 0
    return boundary_matrix(rows, cols, domain).rank()


def reduced_homology(cx, field=QQ_FIELD, max_degree=None, first_nonzero=False,
                     face_budget=FACE_BUDGET):
    """reduced homology dimensions of a simplicial complex

    max_degree: compute H~_i only for i <= max_degree
    first_nonzero: stop after the first nonzero H~_i (lowest degree)
    """
    field = get_field(field)
    if cx.is_void() or (max_degree is not None and max_degree < -1):
        return HomologyVector((), field)
    if cx.is_irrelevant():
        return HomologyVector((1,), field)
    top = cx.dim if max_degree is None else min(max_degree, cx.dim)
    if cx.is_cone():
        return HomologyVector((0,)*(top+2), field)

    faces = cx.faces_by_dim(max_dim=top+1, face_budget=face_budget)
    domain = field.domain
    ranks = {}

    def rank(d):
        "rank of the boundary map leaving dimension d"
        if d not in ranks:
            if d not in faces or d < 0:
                ranks[d] = 0
            else:
                ranks[d] = _rank(faces[d-1], faces[d], domain)
        return ranks[d]

    dims = []
    for i in range(-1, top+1):
        h = len(faces[i]) - rank(i) - rank(i+1)
        dims.append(h)
        if first_nonzero and h:
            break
    return HomologyVector(tuple(dims), field)


def homology_dim(cx, i, field=QQ_FIELD, face_budget=FACE_BUDGET):
    "dim H~_i of a complex"
    if i < -1:
        return 0
    return reduced_homology(cx, field, max_degree=i,
                            face_budget=face_budget)[i]


def lowest_nonzero_homology(cx, field=QQ_FIELD, max_degree=None,
                            face_budget=FACE_BUDGET):
    """least i <= max_degree with H~_i != 0, or None"""
    hv = reduced_homology(cx, field, max_degree=max_degree,
                          first_nonzero=True, face_budget=face_budget)
    return hv.lowest_nonzero()
