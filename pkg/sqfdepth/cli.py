#!/usr/bin/env python
"""
sqfdepth command line

    sqfdepth power   <ideal> -k K
    sqfdepth betti   <ideal>
    sqfdepth depth   <ideal|graph>
    sqfdepth profile <ideal|graph>
    sqfdepth cover   <graph> -k K [--construct disconnected|clique]
    sqfdepth linquot <ideal>
    sqfdepth scan    <corpus> [<corpus> ...] [--select EXPR]
    sqfdepth verify-paper [--quick]

An <ideal> is a .ideal file; a <graph> is a .graph / .edges file or a
family shorthand such as whiskered:1,1,1,1 (--graph forces a graph file).

Exit codes: 0 ok, 1 check failure or error, 2 usage, 3 budget or timeout.
"""
import sys
import logging
import argparse
from pathlib import Path

from . import __version__
from .utils import SqfDepthException, BudgetExceeded, BadSpec, bits_of
from .ideal import squarefree_power
from .complexes import get_field
from .betti import hochster_betti
from .graphs import edge_ideal, is_family_spec, get_family
from .facet_covers import (facet_complex, find_well_ordered_cover,
                           construct_cover_disconnected,
                           construct_cover_dominating_clique,
                           confirm_certificate)
from .linquot import find_linear_quotients
from .profile import profile, power_depth
from .corpus import parse_corpus
from .scan import DepthScan
from .verify import verify_paper
from .datafile import (read_ideal, read_graph, ideal_to_text, to_json,
                       GRAPH_SUFFIXES)
from .lab_config import LabConfig

logger = logging.getLogger('sqfdepth')

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def load_input(source, as_graph=False):
    """(ideal, graph or None, descriptor) for a file name or family shorthand"""
    if is_family_spec(source):
        G = get_family(source)
        return edge_ideal(G), G, source
    path = Path(source)
    if not path.exists():
        raise BadSpec(f"no such file or graph family: '{source}'")
    if as_graph or path.suffix in GRAPH_SUFFIXES:
        G = read_graph(path)
        return edge_ideal(G), G, path.name
    return read_ideal(path), None, path.name


def check_support(ideal, graph, trim=False):
    """warn about unused variables; with trim, drop them"""
    if ideal.is_zero() or ideal.support == (1 << ideal.ambient) - 1:
        return ideal, graph
    unused = [i for i in range(1, ideal.ambient+1)
              if not (ideal.support >> (i-1)) & 1]
    if not trim:
        logger.warning("variables %s do not occur in I; each adds one to the "
                       "depth (use --trim to drop them)", unused)
        return ideal, graph
    ideal, kept = ideal.trim()
    logger.warning("trimmed ambient ring to variables %s", list(kept))
    return ideal, None


def output(args, obj, text=None):
    if args.json:
        sys.stdout.write(to_json(obj) + '\n')
    else:
        sys.stdout.write((text if text is not None else obj.to_text()) + '\n')


def cmd_power(args, conf):
    ideal, graph, name = load_input(args.input, args.graph)
    ideal, _ = check_support(ideal, graph, args.trim)
    power = squarefree_power(ideal, args.k)
    obj = {'k': args.k, 'ambient': power.ambient,
           'generators': [list(bits_of(m)) for m in power.masks]}
    output(args, obj, ideal_to_text(power, title=f"{name}^[{args.k}]").rstrip())
    return EXIT_OK


def cmd_betti(args, conf):
    ideal, graph, name = load_input(args.input, args.graph)
    ideal, _ = check_support(ideal, graph, args.trim)
    table = hochster_betti(ideal, field=conf.get('setup', 'field'),
                           budget=conf.get('setup', 'budget'),
                           workers=conf.get('setup', 'workers'),
                           face_budget=conf.get('setup', 'face_budget'))
    output(args, table)
    return EXIT_OK


def _timeout(conf):
    return conf.get('setup', 'timeout') or None


def _search_steps(conf):
    "0 turns the step budget of the ordering search off"
    return conf.get('setup', 'search_steps') or None


def cmd_depth(args, conf):
    ideal, graph, name = load_input(args.input, args.graph)
    ideal, _ = check_support(ideal, graph, args.trim)
    value, method = power_depth(ideal, field=conf.get('setup', 'field'),
                                budget=conf.get('setup', 'budget'),
                                timeout=_timeout(conf),
                                max_steps=_search_steps(conf),
                                workers=conf.get('setup', 'workers'),
                                face_budget=conf.get('setup', 'face_budget'))
    obj = {'input': name, 'ambient': ideal.ambient, 'depth': value,
           'method': method}
    output(args, obj, f"depth(S/I) = {value}  ({method})")
    return EXIT_OK


def cmd_profile(args, conf):
    ideal, graph, name = load_input(args.input, args.graph)
    ideal, _ = check_support(ideal, graph, args.trim)
    prof = profile(ideal, field=conf.get('setup', 'field'),
                   budget=conf.get('setup', 'budget'),
                   use_linquot=not args.no_linquot, cross_check=args.cross_check,
                   timeout=_timeout(conf), workers=conf.get('setup', 'workers'),
                   descriptor=name, face_budget=conf.get('setup', 'face_budget'),
                   max_steps=_search_steps(conf))
    output(args, prof)
    return EXIT_OK


def cmd_cover(args, conf):
    ideal, graph, name = load_input(args.input, as_graph=True)
    if graph is None:
        raise BadSpec("cover needs a graph")
    k = args.k
    if args.construct == 'disconnected':
        cover = construct_cover_disconnected(graph, k)
    elif args.construct == 'clique':
        cover = construct_cover_dominating_clique(graph, k)
    else:
        host = facet_complex(squarefree_power(ideal, k))
        cover = find_well_ordered_cover(host, graph.n - 2*k + 1,
                                        deadline=None)
        if cover is None:
            sys.stdout.write(f"no well-ordered facet cover of cardinality "
                             f"{graph.n - 2*k + 1}\n")
            return EXIT_FAIL
    beta = confirm_certificate(cover, field=conf.get('setup', 'field'))
    obj = cover.as_dict()
    obj['betti'] = beta
    lines = ['cover: ' + ' '.join('{%s}' % ','.join(str(v) for v in bits_of(f))
                                  for f in cover.sequence),
             f"beta_({cover.cardinality},u) = {beta}"]
    output(args, obj, '\n'.join(lines))
    return EXIT_OK if beta else EXIT_FAIL


def cmd_linquot(args, conf):
    ideal, graph, name = load_input(args.input, args.graph)
    ideal, _ = check_support(ideal, graph, args.trim)
    cert = find_linear_quotients(ideal, timeout=_timeout(conf),
                                 max_steps=_search_steps(conf))
    if cert is None:
        output(args, {'input': name, 'linear_quotients': False},
               "no linear quotients order")
        return EXIT_FAIL
    obj = cert.as_dict()
    text = [f"order: {' '.join(str(m) for m in cert.monomials)}",
            f"r: {list(cert.r)}"]
    if 'depth' in obj:
        text.append(f"depth(S/I) = {obj['depth']}")
    output(args, obj, '\n'.join(text))
    return EXIT_OK


def cmd_scan(args, conf):
    corpus = None
    for spec in args.corpus:
        part = parse_corpus(spec, select=args.select)
        if corpus is None:
            corpus = part
        else:
            corpus.extend(part)
    messenger = sys.stderr.write if args.json else sys.stdout.write
    dscan = DepthScan(corpus, field=conf.get('setup', 'field'),
                      budget=conf.get('setup', 'budget'),
                      timeout=_timeout(conf),
                      max_steps=_search_steps(conf),
                      workers=conf.get('setup', 'workers'),
                      face_budget=conf.get('setup', 'face_budget'),
                      report_dir=conf.get('scan', 'report_dir'),
                      checkpoint_every=conf.get('scan', 'checkpoint_every'),
                      message_points=conf.get('scan', 'message_points'),
                      messenger=messenger)
    report = dscan.run()
    output(args, report)
    return EXIT_FAIL if report.violations else EXIT_OK


def cmd_verify(args, conf):
    only = None
    if args.only:
        try:
            only = {int(w) for w in args.only.split(',')}
        except ValueError:
            raise BadSpec(f"--only takes check numbers: '{args.only}'")
    messenger = sys.stderr.write if args.json else sys.stdout.write
    report = verify_paper(field=conf.get('setup', 'field'),
                          budget=conf.get('setup', 'budget'),
                          quick=conf.get('verify', 'quick'),
                          messenger=messenger, config=conf, only=only,
                          workers=conf.get('setup', 'workers'))
    output(args, report)
    if report.failed:
        return EXIT_FAIL
    if report.budget_exceeded:
        return EXIT_BUDGET
    return EXIT_OK


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--field', default=None,
                        help="coefficient field: q (rationals) or a prime p")
    common.add_argument('--budget', type=int, default=None,
                        help="largest ambient size for Hochster sums")
    common.add_argument('--timeout', type=float, default=None,
                        help="seconds for linear quotients searches (0: none)")
    common.add_argument('--search-steps', type=int, default=None,
                        help="colon evaluations per linear quotients search "
                        "(0: no limit)")
    common.add_argument('--workers', type=int, default=None,
                        help="worker processes")
    common.add_argument('--config', default=None, help="configuration file")
    common.add_argument('--json', action='store_true', default=False,
                        help="JSON output")
    common.add_argument('-v', '--verbose', action='store_true', default=False,
                        help="debug messages")

    single = argparse.ArgumentParser(add_help=False, parents=[common])
    single.add_argument('input', help="ideal file, graph file or graph family")
    single.add_argument('--graph', action='store_true', default=False,
                        help="read the input file as a graph")
    single.add_argument('--trim', action='store_true', default=False,
                        help="drop variables that do not occur in I")

    parser = argparse.ArgumentParser(prog='sqfdepth',
                                     description="depth of squarefree powers")
    parser.add_argument('--version', action='version',
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('power', parents=[single], help="squarefree power I^[k]")
    p.add_argument('-k', type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser('betti', parents=[single], help="graded Betti numbers")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser('depth', parents=[single], help="depth of S/I")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser('profile', parents=[single],
                       help="normalized depth function g(k)")
    p.add_argument('--no-linquot', action='store_true', default=False,
                   help="Hochster depth for every power")
    p.add_argument('--cross-check', action='store_true', default=False,
                   help="also run Hochster on certified powers")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser('cover', parents=[single],
                       help="well-ordered facet cover of I(G)^[k]")
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--construct', choices=('disconnected', 'clique'), default=None)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser('linquot', parents=[single], help="linear quotients order")
    p.set_defaults(func=cmd_linquot)

    p = sub.add_parser('scan', parents=[common], help="scan a corpus")
    p.add_argument('corpus', nargs='+',
                   help="exhaustive:N, random:COUNT:N[:SEED], family, file or folder")
    p.add_argument('--select', default=None, help="filter expression")
    p.add_argument('--report-dir', default=None)
    p.add_argument('--checkpoint-every', type=int, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser('verify-paper', parents=[common],
                       help="run the acceptance suite")
    p.add_argument('--quick', action='store_true', default=None)
    p.add_argument('--only', default=None, help="comma separated check numbers")
    p.set_defaults(func=cmd_verify)
    return parser


def make_config(args):
    conf = LabConfig()
    if args.config:
        conf.Read(args.config)
    conf.update('setup', field=args.field, budget=args.budget,
                timeout=args.timeout, workers=args.workers,
                search_steps=args.search_steps)
    conf.update('scan', report_dir=getattr(args, 'report_dir', None),
                checkpoint_every=getattr(args, 'checkpoint_every', None))
    conf.update('verify', quick=getattr(args, 'quick', None))
    get_field(conf.get('setup', 'field'))
    return conf


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        conf = make_config(args)
        return args.func(args, conf)
    except BudgetExceeded as exc:
        logger.error("%s: %s", exc.__class__.__name__, exc)
        return EXIT_BUDGET
    except SqfDepthException as exc:
        logger.error("%s: %s", exc.__class__.__name__, exc)
        return EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main())
