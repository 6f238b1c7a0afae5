#!/usr/bin/env python
"""
Acceptance suite for the published depth results

Every check returns a CheckResult with one of the statuses

    pass             the computed values match the published ones
    fail             they do not
    finding          a nonincreasing-g violation: reported for review,
                     not counted as a failure
    field-dependent  fails over the requested field but passes over QQ
    budget           a Hochster or face budget (or a timeout) ran out

`quick` replaces the exhaustive n <= 6 corpus by n <= 4, drops the random
n = 7, 8 graphs and shrinks the random ideal sample.
"""
import sys
import time
import logging
from dataclasses import dataclass

from .utils import (SqfDepthException, BudgetExceeded, PreconditionViolated,
                    OutOfRange)
from .ideal import (SqfIdeal, veronese, squarefree_power, ordinary_power, nu)
from .complexes import QQ_FIELD, get_field
from .betti import HOCHSTER_BUDGET, depth as hochster_depth, terai_projdim
from .graphs import (edge_ideal, matching_number, whiskered, path_complement,
                     complete_bipartite, is_cochordal,
                     dominating_k_matching)
from .facet_covers import (construct_cover_disconnected,
                           construct_cover_dominating_clique,
                           is_well_ordered_cover, confirm_certificate)
from .linquot import (find_linear_quotients, depth_from_linear_quotients,
                      mindepth_criterion, is_matroidal, squarefree_part_preserves,
                      SEARCH_STEPS)
from .profile import (profile, power_depth, check_nonincreasing, tail_zero_start,
                      equivalence_triangle)
from .corpus import exhaustive_graphs, random_graphs, random_ideals
from .lab_config import LabConfig
from .timer import StepTimer

logger = logging.getLogger(__name__)

PASS, FAIL, FINDING = 'pass', 'fail', 'finding'
FIELD_DEPENDENT, BUDGET = 'field-dependent', 'budget'

COUNTEREXAMPLE = SqfIdeal(11, [(1, 3, 5), (2, 4, 6), (5, 7, 9), (4, 6, 8),
                               (4, 7, 10), (9, 10, 11), (5, 8, 11)])

WHISKERED_G = {4: (3, 1, 0, 0),
               5: (4, 2, 0, 0, 0),
               6: (5, 3, 1, 0, 0, 0)}


@dataclass
class CheckResult:
    number: int
    name: str
    status: str
    detail: str = ''
    elapsed: float = 0.0

    def as_dict(self):
        return {'number': self.number, 'name': self.name, 'status': self.status,
                'detail': self.detail, 'elapsed': round(self.elapsed, 3)}


class VerifyReport(object):
    def __init__(self, field, results=None):
        self.field = str(field)
        self.results = results or []

    def count(self, status):
        return sum(1 for r in self.results if r.status == status)

    @property
    def failed(self):
        return self.count(FAIL) > 0

    @property
    def budget_exceeded(self):
        return self.count(BUDGET) > 0

    def as_dict(self):
        return {'field': self.field,
                'checks': [r.as_dict() for r in self.results],
                'summary': {s: self.count(s) for s in
                            (PASS, FAIL, FINDING, FIELD_DEPENDENT, BUDGET)}}

    def to_text(self):
        out = [f"# verification over {self.field}"]
        for r in self.results:
            out.append("%2d %-34s %-15s %8.2fs  %s" % (r.number, r.name, r.status,
                                                       r.elapsed, r.detail))
        return '\n'.join(out)


def _graph_ideals():
    out = [(f"whiskered(1^{s})", edge_ideal(whiskered(*[1]*s))) for s in WHISKERED_G]
    out.append(("whiskered(2,2,2)", edge_ideal(whiskered(2, 2, 2))))
    out.extend((f"P_{n}^c", edge_ideal(path_complement(n))) for n in (6, 7, 8))
    out.extend((f"K_{m},{n}", edge_ideal(complete_bipartite(m, n)))
               for m in (1, 2, 3) for n in range(m, 4))
    return out


def reference_ideals():
    """(name, ideal) for every ideal named by checks 1 to 6"""
    out = [('counterexample', COUNTEREXAMPLE)]
    out.extend(_graph_ideals())
    out.extend((f"m^[{d}] n={n}", veronese(n, d)) for n, d in
               ((6, 2), (8, 2), (8, 3), (8, 4)))
    return out


class ClaimSuite(object):
    """the acceptance checks; run() executes all of them in order"""
    def __init__(self, field='q', budget=HOCHSTER_BUDGET, quick=False,
                 messenger=None, config=None, workers=None, prime=None):
        if config is None:
            config = LabConfig(text='')
        self.config = config
        self.field = get_field(field)
        self.budget = budget
        self.quick = quick
        self.workers = workers or config.get('setup', 'workers', 1)
        self.timeout = config.get('setup', 'timeout') or None
        self.max_steps = (config.get('setup', 'search_steps', SEARCH_STEPS)
                          or None)
        self.prime = prime or config.get('setup', 'prime', 32003)
        if self.field.characteristic:
            self.prime = self.field.characteristic
        self.seed = config.get('scan', 'seed', 1)
        self.random_count = config.get('verify', 'random_count', 200)
        self.random_ideal_count = config.get('verify', 'random_ideal_count', 100)
        self.messenger = messenger or sys.stdout.write
        self._corpora = {}
        self.checks = [(1, 'counterexample ideal', self.check_counterexample),
                       (2, 'whiskered tables', self.check_whiskered),
                       (3, 'whiskered(2,2,2)', self.check_whiskered_222),
                       (4, 'path complements', self.check_path_complements),
                       (5, 'squarefree Veronese', self.check_veronese),
                       (6, 'complete bipartite', self.check_complete_bipartite),
                       (7, 'matroidal minimum depth', self.check_matroidal),
                       (8, 'equivalence triangle', self.check_triangle),
                       (9, 'g(nu) = 0', self.check_g_nu),
                       (10, 'well-ordered covers', self.check_covers),
                       (11, 'Terai cross-check', self.check_terai),
                       (12, 'linear quotients consistency', self.check_linquot),
                       (13, 'nonincreasing g', self.check_nonincreasing),
                       (14, 'field robustness', self.check_fields)]

    def write(self, msg):
        self.messenger(msg)

    # corpora, built once per suite
    def exhaustive(self, nmax):
        nmax = min(nmax, 4) if self.quick else nmax
        key = ('exhaustive', nmax)
        if key not in self._corpora:
            self._corpora[key] = exhaustive_graphs(nmax)
        return self._corpora[key]

    def _profile(self, ideal, field, **kws):
        return profile(ideal, field=field, budget=self.budget,
                       workers=self.workers, timeout=self.timeout,
                       max_steps=self.max_steps, **kws)

    def _g(self, ideal, field, **kws):
        return self._profile(ideal, field, **kws).g

    def check_counterexample(self, field):
        I = COUNTEREXAMPLE
        p = self._profile(I, field, descriptor='counterexample')
        d3 = squarefree_power(I, 3).min_degree
        ok = (nu(I) == 3 and d3 == 9 and p.g[2] == 1 and p.depths[2] == 9
              and squarefree_power(I, 4).is_zero())
        return ok, f"nu={nu(I)} d_3={d3} g={p.g}"

    def check_whiskered(self, field):
        bad = []
        for s, expected in WHISKERED_G.items():
            p = self._profile(edge_ideal(whiskered(*[1]*s)), field)
            if p.g != expected or tail_zero_start(p) != s//2 + 1:
                bad.append(f"s={s}: g={p.g}")
        return not bad, '; '.join(bad) or f"s={sorted(WHISKERED_G)}"

    def check_whiskered_222(self, field):
        s = 3
        p = self._profile(edge_ideal(whiskered(2, 2, 2)), field)
        ok = p.depths[0] == 5 == s*s - 2*s + 2 and p.depths[1] == 3
        return ok, f"depths={p.depths}"

    def check_path_complements(self, field):
        bad = []
        for n in (6, 7, 8):
            I = edge_ideal(path_complement(n))
            p = self._profile(I, field)
            expect = (2,) + tuple(2*k - 1 for k in range(2, p.nu + 1))
            if (p.depths != expect
                    or squarefree_power(I, 2) != veronese(n, 4)):
                bad.append(f"n={n}: depths={p.depths}")
        return not bad, '; '.join(bad) or 'n=6,7,8'

    def check_veronese(self, field):
        bad, count = [], 0
        for n in range(1, 9):
            for d in range(1, min(4, n) + 1):
                V = veronese(n, d)
                for k in range(1, n//d + 1):
                    P = squarefree_power(V, k)
                    value, _ = power_depth(P, field=field, budget=self.budget,
                                           workers=self.workers,
                                           timeout=self.timeout,
                                           max_steps=self.max_steps)
                    count += 1
                    if P != veronese(n, d*k) or value != d*k - 1:
                        bad.append(f"n={n} d={d} k={k}: depth={value}")
        return not bad, '; '.join(bad) or f"{count} powers"

    def check_complete_bipartite(self, field):
        bad = []
        for m in range(1, 4):
            for n in range(1, 4):
                g = self._g(edge_ideal(complete_bipartite(m, n)), field)
                if len(g) != min(m, n) or any(g):
                    bad.append(f"K_{m},{n}: g={g}")
        return not bad, '; '.join(bad) or 'm,n <= 3'

    def check_matroidal(self, field):
        bad = []
        ideals = [(f"m^[{d}] n={n}", veronese(n, d))
                  for n in range(2, 7) for d in range(1, n)]
        ideals.extend((f"I(K_{m},{n})", edge_ideal(complete_bipartite(m, n)))
                      for m in range(1, 4) for n in range(m, 4))
        for name, I in ideals:
            if not is_matroidal(I):
                bad.append(f"{name} not matroidal")
            elif any(self._g(I, field)):
                bad.append(f"{name}: g={self._g(I, field)}")
        for name, I in ideals[:6] + ideals[-3:]:
            for k in (2, 3):
                report = squarefree_part_preserves(ordinary_power(I, k),
                                                   prop='matroidal')
                if not report.ok:
                    bad.append(f"squarefree part of ({name})^{k}")
        return not bad, '; '.join(bad) or f"{len(ideals)} ideals"

    def check_triangle(self, field):
        bad = []
        graphs = self.exhaustive(6)
        for inst in graphs:
            tri = equivalence_triangle(inst.graph, field=field, budget=self.budget,
                                       workers=self.workers)
            if not tri.agree:
                bad.append(f"{inst.name}: {tri}")
        return not bad, '; '.join(bad) or f"{len(graphs)} graphs"

    def check_g_nu(self, field):
        graphs = list(self.exhaustive(5))
        if not self.quick:
            half = self.random_count // 2
            graphs += random_graphs(half, 7, self.seed)
            graphs += random_graphs(self.random_count - half, 8, self.seed)
        bad = [inst.name for inst in graphs
               if self._g(inst.ideal, field)[-1] != 0]
        return not bad, ', '.join(bad) or f"{len(graphs)} graphs"

    def check_covers(self, field):
        bad, built = [], 0
        for inst in self.exhaustive(6):
            G = inst.graph
            n = G.n
            for k in range(2, matching_number(G) + 1):
                for construct in (construct_cover_disconnected,
                                  construct_cover_dominating_clique):
                    try:
                        cover = construct(G, k)
                    except (PreconditionViolated, OutOfRange):
                        continue
                    built += 1
                    beta = confirm_certificate(cover, field=field)
                    if (not is_well_ordered_cover(cover) or beta == 0
                            or cover.cardinality != n - 2*k + 1):
                        bad.append(f"{inst.name} k={k} {construct.__name__}")
        return not bad, '; '.join(bad) or f"{built} covers"

    def check_terai(self, field):
        count = self.random_ideal_count // (5 if self.quick else 1)
        ideals = [(inst.name, inst.ideal) for n in range(4, 9)
                  for inst in random_ideals(max(1, count // 5), n, self.seed)]
        ideals += reference_ideals()
        bad = []
        for name, I in ideals:
            pd = I.ambient - hochster_depth(I, field=field, budget=self.budget,
                                            workers=self.workers)
            dual = terai_projdim(I, field=field, budget=self.budget,
                                 workers=self.workers)
            if pd != dual:
                bad.append(f"{name}: projdim={pd} reg(dual)+1={dual}")
        return not bad, '; '.join(bad) or f"{len(ideals)} ideals"

    def check_linquot(self, field):
        bad, count = [], 0
        for inst in self.exhaustive(6):
            G = inst.graph
            if not is_cochordal(G):
                continue
            for k in range(1, matching_number(G) + 1):
                count += 1
                power = squarefree_power(inst.ideal, k)
                cert = find_linear_quotients(power, timeout=self.timeout,
                                             max_steps=self.max_steps)
                if cert is None:
                    bad.append(f"{inst.name} k={k}: no linear quotients")
                    continue
                slow = hochster_depth(power, field=field, budget=self.budget)
                if len(power) > 1 and depth_from_linear_quotients(cert) != slow:
                    bad.append(f"{inst.name} k={k}: formula depth differs")
                g_zero = slow == power.min_degree - 1
                witness = mindepth_criterion(G, k, cert)
                if (witness is not None) != g_zero:
                    bad.append(f"{inst.name} k={k}: criterion disagrees")
                if g_zero and dominating_k_matching(G, k) is None:
                    bad.append(f"{inst.name} k={k}: no dominating matching")
        return not bad, '; '.join(bad) or f"{count} powers"

    def check_nonincreasing(self, field):
        instances = [(inst.name, inst.ideal) for inst in self.exhaustive(6)]
        instances += reference_ideals()
        found = []
        for name, I in instances:
            p = self._profile(I, field)
            if not check_nonincreasing(p):
                found.append(f"{name}: g={p.g}")
        if found:
            logger.warning("g increases on %d instances", len(found))
            return FINDING, '; '.join(found)
        return True, f"{len(instances)} instances"

    def check_fields(self, field):
        other = get_field(self.prime)
        bad = []
        for name, I in reference_ideals():
            if self.quick and I.ambient > 10:
                continue
            over_q = self._profile(I, QQ_FIELD, use_linquot=False)
            over_p = self._profile(I, other, use_linquot=False)
            if over_q.depths != over_p.depths:
                bad.append(f"{name}: QQ {over_q.depths} {other} {over_p.depths}")
        if bad:
            logger.warning("QQ and %s disagree: %s", other, bad)
        return not bad, '; '.join(bad) or f"QQ and {other} agree"

    def run_check(self, number, name, method):
        timer = StepTimer(name)
        try:
            ok, detail = method(self.field)
            if ok == FINDING:
                status = FINDING
            elif ok:
                status = PASS
            else:
                status = FAIL
                if self.field != QQ_FIELD and number != 14:
                    ok_q, _ = method(QQ_FIELD)
                    if ok_q is True:
                        status = FIELD_DEPENDENT
                        detail = f"passes over QQ; {detail}"
        except BudgetExceeded as exc:
            status, detail = BUDGET, f"{exc.__class__.__name__}: {exc}"
        except SqfDepthException as exc:
            status, detail = FAIL, f"{exc.__class__.__name__}: {exc}"
        timer.add('done')
        result = CheckResult(number, name, status, detail, timer.elapsed)
        self.write("%2d %-34s %s\n" % (number, name, status))
        return result

    def run(self, only=None):
        report = VerifyReport(self.field)
        t0 = time.monotonic()
        for number, name, method in self.checks:
            if only and number not in only:
                continue
            report.results.append(self.run_check(number, name, method))
        logger.info("verification finished in %.1f s", time.monotonic() - t0)
        return report


def verify_paper(field='q', budget=HOCHSTER_BUDGET, quick=False, messenger=None,
                 config=None, only=None, workers=None):
    """run the acceptance suite, returning a VerifyReport"""
    suite = ClaimSuite(field=field, budget=budget, quick=quick,
                       messenger=messenger, config=config, workers=workers)
    return suite.run(only=only)
