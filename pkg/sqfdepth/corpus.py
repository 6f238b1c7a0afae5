#!/usr/bin/env python
"""
Instance streams for scans and the verification suite

A corpus descriptor is one of

    exhaustive:N                 all graphs on 2..N vertices (N <= 7), up to
                                 isomorphism, without isolated vertices
    random:COUNT:N[:SEED]        G(N, 1/2) graphs, resampled until no vertex
                                 is isolated
    random-ideals:COUNT:N[:SEED] random squarefree ideals in N variables
    whiskered-ones:A..B          whiskered(1,...,1) for s = A..B
    <family>:<args>              a family shorthand ('path_complement:6'),
                                 single-argument families accept A..B
    <file or folder>             .ideal / .graph files

An optional select expression is evaluated by asteval for every instance
with the symbols n, nu, edges, gens, cochordal and graph.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import networkx as nx
from asteval import Interpreter

from .utils import BadSpec, bits_of
from .ideal import SqfIdeal, nu
from .graphs import (Graph, edge_ideal, is_cochordal, is_family_spec,
                     get_family, whiskered, FAMILIES)
from .datafile import (read_ideal, read_graph, IDEAL_SUFFIXES, GRAPH_SUFFIXES)

logger = logging.getLogger(__name__)

ATLAS_MAX = 7
DEFAULT_SEED = 1
EDGE_PROBABILITY = 0.5


@dataclass(frozen=True)
class Instance:
    name: str
    ideal: SqfIdeal
    graph: Graph = None

    @property
    def encoding(self):
        """canonical text: 'n|gen;gen;...', generators as dotted indices"""
        gens = ';'.join('.'.join(str(i) for i in bits_of(m))
                        for m in self.ideal.masks)
        return f"{self.ideal.ambient}|{gens}"

    @property
    def sort_key(self):
        return (self.ideal.ambient, len(self.ideal), self.ideal.masks, self.name)

    def symbols(self):
        G = self.graph
        return {'n': self.ideal.ambient,
                'nu': nu(self.ideal),
                'gens': len(self.ideal),
                'edges': len(G.edges) if G is not None else 0,
                'cochordal': bool(G is not None and is_cochordal(G)),
                'graph': G is not None}


def graph_instance(name, G):
    return Instance(name, edge_ideal(G), G)


@dataclass
class Corpus:
    descriptor: str
    instances: list = field(default_factory=list)

    def __len__(self):
        return len(self.instances)

    def __iter__(self):
        return iter(self.instances)

    def extend(self, other):
        self.instances.extend(other.instances)
        self.descriptor = f"{self.descriptor} + {other.descriptor}"


def exhaustive_graphs(nmax):
    """non-isomorphic graphs on 2..nmax vertices, no isolated vertices"""
    if nmax > ATLAS_MAX:
        raise BadSpec(f"exhaustive corpus goes up to {ATLAS_MAX} vertices, "
                      f"got {nmax}")
    out = []
    for index, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if n < 2 or n > nmax:
            continue
        if min(d for _, d in g.degree()) == 0:
            continue
        out.append(graph_instance(f"atlas:{index}", Graph.from_networkx(g)))
    return out


def _seeds(count, seed):
    rng = np.random.default_rng(seed)
    return [int(s) for s in rng.integers(0, 2**31 - 1, size=count)]


def random_graphs(count, n, seed=DEFAULT_SEED):
    if n < 2:
        raise BadSpec(f"random graphs need at least 2 vertices, got {n}")
    out = []
    for s in _seeds(count, seed):
        g = nx.gnp_random_graph(n, EDGE_PROBABILITY, seed=s)
        while min(d for _, d in g.degree()) == 0:
            s += 1
            g = nx.gnp_random_graph(n, EDGE_PROBABILITY, seed=s)
        out.append(graph_instance(f"random:{n}:{s}", Graph.from_networkx(g)))
    return out


def random_ideals(count, n, seed=DEFAULT_SEED):
    """random squarefree ideals: 2..n+1 generators of degree 1..max(2, n//2)"""
    if n < 2:
        raise BadSpec(f"random ideals need at least 2 variables, got {n}")
    rng = np.random.default_rng(seed)
    top = max(2, n // 2)
    out = []
    for idx in range(count):
        ngens = int(rng.integers(2, n + 2))
        gens = []
        for _ in range(ngens):
            size = int(rng.integers(1, top + 1))
            gens.append([int(v) + 1 for v in rng.choice(n, size=size, replace=False)])
        out.append(Instance(f"random-ideal:{n}:{seed}:{idx}", SqfIdeal(n, gens)))
    return out


def _int_range(text, spec):
    lo, sep, hi = text.partition('..')
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return range(int(lo), int(lo) + 1)
    except ValueError:
        raise BadSpec(f"expected an integer or A..B range: '{spec}'")


def _ints(words, spec):
    try:
        return [int(w) for w in words]
    except ValueError:
        raise BadSpec(f"expected integers: '{spec}'")


def family_instances(spec):
    name, _, args = spec.partition(':')
    name = name.strip().lower()
    if name == 'whiskered-ones':
        return [graph_instance(f"whiskered:{','.join(['1']*s)}", whiskered(*[1]*s))
                for s in _int_range(args, spec)]
    if '..' in args and name in FAMILIES:
        return [graph_instance(f"{name}:{v}", get_family(f"{name}:{v}"))
                for v in _int_range(args, spec)]
    return [graph_instance(spec, get_family(spec))]


def file_instances(path):
    path = Path(path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir()
                       if p.suffix in IDEAL_SUFFIXES + GRAPH_SUFFIXES)
    else:
        files = [path]
    out = []
    for p in files:
        if p.suffix in GRAPH_SUFFIXES:
            out.append(graph_instance(p.name, read_graph(p)))
        else:
            out.append(Instance(p.name, read_ideal(p)))
    return out


def make_select(expr):
    """predicate on Instances from an asteval expression, or None"""
    if not expr:
        return None
    interp = Interpreter(builtins_readonly=True, minimal=True)

    def select(inst):
        interp.symtable.update(inst.symbols())
        interp.error = []
        value = interp(expr, show_errors=False)
        if len(interp.error) > 0:
            exc, emsg = interp.error[0].get_error()
            raise BadSpec(f"select expression '{expr}': {exc}: "
                          f"{emsg.split(chr(10))[-1]}")
        return bool(value)
    return select


def parse_corpus(spec, select=None):
    """Corpus for one descriptor, optionally filtered by a select expression"""
    spec = str(spec).strip()
    words = spec.split(':')
    head = words[0].lower()
    if head == 'exhaustive':
        if len(words) != 2:
            raise BadSpec(f"expected 'exhaustive:N': '{spec}'")
        instances = exhaustive_graphs(*_ints(words[1:], spec))
    elif head in ('random', 'random-ideals'):
        if len(words) not in (3, 4):
            raise BadSpec(f"expected '{head}:COUNT:N[:SEED]': '{spec}'")
        maker = random_graphs if head == 'random' else random_ideals
        instances = maker(*_ints(words[1:], spec))
    elif head == 'whiskered-ones' or is_family_spec(spec):
        instances = family_instances(spec)
    elif Path(spec).exists():
        instances = file_instances(spec)
    else:
        raise BadSpec(f"unknown corpus '{spec}'")

    if callable(select):
        keep = select
    else:
        keep = make_select(select)
    if keep is not None:
        before = len(instances)
        instances = [inst for inst in instances if keep(inst)]
        logger.debug("select kept %d of %d instances", len(instances), before)
    return Corpus(spec, instances)
