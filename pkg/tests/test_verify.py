import time

import pytest

from sqfdepth.utils import PreconditionViolated
from sqfdepth.complexes import QQ_FIELD
from sqfdepth.ideal import nu, squarefree_power
from sqfdepth.graphs import edge_ideal, whiskered, path_complement
from sqfdepth.profile import profile, tail_zero_start
from sqfdepth.linquot import SEARCH_STEPS
from sqfdepth.lab_config import LabConfig
from sqfdepth.verify import (PASS, FAIL, FINDING, FIELD_DEPENDENT, BUDGET,
                             COUNTEREXAMPLE, WHISKERED_G, CheckResult,
                             VerifyReport, ClaimSuite, reference_ideals, verify_paper)


class Messages(list):
    def __call__(self, msg):
        self.append(msg)


def test_single_check_passes():
    msgs = Messages()
    report = verify_paper(only={6}, messenger=msgs)
    assert [r.status for r in report.results] == [PASS]
    assert not report.failed
    assert msgs[0].split() == ['6', 'complete', 'bipartite', 'pass']


def test_budget_status():
    report = verify_paper(budget=2, only={11}, messenger=Messages())
    assert report.results[0].status == BUDGET
    assert report.budget_exceeded
    assert not report.failed


def test_field_dependent_status():
    suite = ClaimSuite(field=2, messenger=Messages())

    def only_over_q(field):
        return field == QQ_FIELD, 'differs'
    result = suite.run_check(99, 'fake', only_over_q)
    assert result.status == FIELD_DEPENDENT
    assert result.detail == 'passes over QQ; differs'


def test_other_statuses():
    suite = ClaimSuite(messenger=Messages())
    assert suite.run_check(98, 'finding', lambda f: (FINDING, 'g up')).status == FINDING
    assert suite.run_check(97, 'fails', lambda f: (False, 'no')).status == FAIL

    def broken(field):
        raise PreconditionViolated('isolated vertex')
    result = suite.run_check(96, 'broken', broken)
    assert result.status == FAIL
    assert result.detail == 'PreconditionViolated: isolated vertex'


def test_report():
    report = VerifyReport('QQ', [CheckResult(1, 'a', PASS), CheckResult(2, 'b', FINDING),
                                 CheckResult(3, 'c', FAIL)])
    summary = report.as_dict()['summary']
    assert summary == {PASS: 1, FAIL: 1, FINDING: 1, FIELD_DEPENDENT: 0, BUDGET: 0}
    assert report.failed
    assert report.to_text().split('\n')[0] == '# verification over QQ'


def test_search_limits_from_config():
    suite = ClaimSuite(messenger=Messages())
    assert suite.timeout == 60
    assert suite.max_steps == SEARCH_STEPS
    conf = LabConfig(text="[setup]\ntimeout = 0\nsearch_steps = 0\n")
    suite = ClaimSuite(messenger=Messages(), config=conf)
    assert suite.timeout is None
    assert suite.max_steps is None


def test_g_nu_with_random_graphs():
    conf = LabConfig(text="[verify]\nrandom_count = 6\n")
    suite = ClaimSuite(messenger=Messages(), config=conf)
    t0 = time.monotonic()
    ok, detail = suite.check_g_nu(QQ_FIELD)
    assert time.monotonic() - t0 < 120
    assert ok
    assert detail == f"{len(suite.exhaustive(5)) + 6} graphs"


def test_reference_ideals():
    names = [name for name, _ in reference_ideals()]
    assert len(names) == 18
    assert names[0] == 'counterexample'
    assert len(set(names)) == len(names)


def test_counterexample_structure():
    assert nu(COUNTEREXAMPLE) == 3
    assert squarefree_power(COUNTEREXAMPLE, 3).min_degree == 9
    assert squarefree_power(COUNTEREXAMPLE, 4).is_zero()


@pytest.mark.slow
def test_counterexample_profile():
    p = profile(COUNTEREXAMPLE)
    assert p.g[2] == 1
    assert p.depths[2] == 9


@pytest.mark.slow
@pytest.mark.parametrize('s', sorted(WHISKERED_G))
def test_whiskered_tables(s):
    p = profile(edge_ideal(whiskered(*[1]*s)))
    assert p.g == WHISKERED_G[s]
    assert tail_zero_start(p) == s//2 + 1


@pytest.mark.slow
def test_whiskered_222():
    p = profile(edge_ideal(whiskered(2, 2, 2)))
    assert p.depths[:2] == (5, 3)


@pytest.mark.slow
@pytest.mark.parametrize('n', (6, 7, 8))
def test_path_complements(n):
    p = profile(edge_ideal(path_complement(n)))
    assert p.depths == (2,) + tuple(2*k - 1 for k in range(2, p.nu + 1))


@pytest.mark.slow
def test_quick_suite():
    report = verify_paper(quick=True, messenger=Messages())
    assert len(report.results) == 14
    assert not report.failed
    assert not report.budget_exceeded
