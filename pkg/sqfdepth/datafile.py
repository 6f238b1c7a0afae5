#!/usr/bin/env python
"""
Text file layer for ideals, graphs and reports

Ideal files:                     Graph files:
    # comment lines                  # comment lines
    n <ambient>                      n <count>
    1 2                              1 2
    2 3 4                            2 3

one generator (1-based variable indices) or one edge per line; '#' starts
a comment anywhere on a line.  Written files begin with a '#' header
holding a title and a time stamp, and list generators in canonical order
(degree, then lexicographic on the sorted indices).

Files are not clobbered: write_* pick a new name with new_filename(),
unless overwrite=True (used for the rolling scan checkpoint).
"""
import json
from pathlib import Path

from .file_utils import new_filename, get_timestamp, fix_filename
from .utils import FileFormatError, bits_of
from .ideal import SqfIdeal
from .graphs import Graph

COM1 = '#'
IDEAL_TOP = '# sqfdepth ideal'
GRAPH_TOP = '# sqfdepth graph'
IDEAL_SUFFIXES = ('.ideal', '.txt')
GRAPH_SUFFIXES = ('.graph', '.edges')


def _records(text, source):
    """(line number, integer list) for each non-comment line"""
    out = []
    for lineno, line in enumerate(text.split('\n'), start=1):
        line = line.split(COM1, 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if not out and words[0] == 'n':
            words = words[1:]
            if len(words) != 1:
                raise FileFormatError(f"{source}:{lineno}: expected 'n <count>'")
        try:
            out.append((lineno, [int(w) for w in words]))
        except ValueError:
            raise FileFormatError(f"{source}:{lineno}: not a list of integers: "
                                  f"'{line}'")
    if not out:
        raise FileFormatError(f"{source}: no 'n <count>' line")
    return out


def _header_size(records, source):
    lineno, first = records[0]
    if len(first) != 1 or first[0] < 1:
        raise FileFormatError(f"{source}:{lineno}: first line must be 'n <count>'")
    return first[0]


def parse_ideal(text, source='<string>'):
    records = _records(text, source)
    ambient = _header_size(records, source)
    gens = []
    for lineno, indices in records[1:]:
        if min(indices) < 1:
            raise FileFormatError(f"{source}:{lineno}: indices start at 1")
        gens.append(indices)
    return SqfIdeal(ambient, gens)


def parse_graph(text, source='<string>'):
    records = _records(text, source)
    n = _header_size(records, source)
    edges = []
    for lineno, pair in records[1:]:
        if len(pair) != 2:
            raise FileFormatError(f"{source}:{lineno}: an edge is 'u v'")
        edges.append(pair)
    return Graph(n, edges)


def read_ideal(filename):
    with open(filename, 'r') as fh:
        return parse_ideal(fh.read(), source=str(filename))


def read_graph(filename):
    with open(filename, 'r') as fh:
        return parse_graph(fh.read(), source=str(filename))


def _header(top, title, comments):
    out = [f"{top}: {title or ''}".rstrip(),
           f"{COM1} Time: {get_timestamp()}"]
    if comments:
        out.extend(f"{COM1} {line}" for line in comments.split('\n'))
    return out


def ideal_to_text(ideal, title=None, comments=None):
    out = _header(IDEAL_TOP, title, comments)
    out.append(f"n {ideal.ambient}")
    out.extend(' '.join(str(i) for i in bits_of(m)) for m in ideal.masks)
    return '\n'.join(out) + '\n'


def graph_to_text(graph, title=None, comments=None):
    out = _header(GRAPH_TOP, title, comments)
    out.append(f"n {graph.n}")
    out.extend('%d %d' % e for e in graph.edges)
    return '\n'.join(out) + '\n'


def safe_path(filename, overwrite=False):
    """fixed-up file name in the same folder, not yet existing
    unless overwrite is set"""
    path = Path(filename)
    path.parent.mkdir(parents=True, exist_ok=True)
    fname = str(path.with_name(fix_filename(path.name)))
    return fname if overwrite else new_filename(fname)


def write_text(filename, text, overwrite=False):
    fname = safe_path(filename, overwrite=overwrite)
    with open(fname, 'w') as fh:
        fh.write(text)
    return fname


def write_ideal(filename, ideal, title=None, comments=None):
    """write an ideal file, returning the name actually used"""
    return write_text(filename, ideal_to_text(ideal, title, comments))


def write_graph(filename, graph, title=None, comments=None):
    return write_text(filename, graph_to_text(graph, title, comments))


def to_json(obj):
    if hasattr(obj, 'as_dict'):
        obj = obj.as_dict()
    return json.dumps(obj, sort_keys=True, indent=1)


def write_json(filename, obj, overwrite=False):
    return write_text(filename, to_json(obj) + '\n', overwrite=overwrite)
