#!/usr/bin/env python
"""
=== Depth scans ===

A DepthScan profiles every instance of a corpus and checks that the
normalized depth function g(k) = depth(S/I^[k]) - (d_k - 1) is
nonincreasing.  The loop is roughly

    for inst in corpus:
        p = profile(inst.ideal)
        if not check_nonincreasing(p):
            write a replay file, record the violation
        record the g-pattern (and where its zero tail starts)
        every message_points instances: send a progress message
        every checkpoint_every instances: rewrite the interim report
                                          (one file, scan_checkpoint.json)

Instances that raise a SqfDepthException are logged and recorded as
errors; the scan moves on.  ScanAbort (or a KeyboardInterrupt) stops the
scan and the partial report is returned.

With workers > 1 instances are profiled in a process pool; the report
is sorted by canonical instance encoding, so it does not depend on the
schedule.
"""
import sys
import time
import logging
from collections import Counter
from multiprocessing import Pool
from pathlib import Path

from .utils import SqfDepthException, ScanAbort, hms
from .complexes import FACE_BUDGET, get_field
from .betti import HOCHSTER_BUDGET
from .linquot import SEARCH_STEPS
from .profile import profile, check_nonincreasing, tail_zero_start
from .datafile import write_ideal, write_json
from .timer import StepTimer

logger = logging.getLogger(__name__)

CHECKPOINT_FILE = 'scan_checkpoint.json'


def _profile_job(args):
    "profile one instance; returns (index, profile or None, error text or None)"
    index, inst, opts = args
    try:
        return index, profile(inst.ideal, descriptor=inst.name, **opts), None
    except SqfDepthException as exc:
        return index, None, f"{exc.__class__.__name__}: {exc}"


class ScanReport(object):
    """result of a DepthScan

    profiles    (encoding, name, g, tail zero start) per profiled instance
    violations  (encoding, name, g, replay file) where g increases somewhere
    errors      (encoding, name, message)
    patterns    Counter of g tuples
    """
    def __init__(self, descriptor, field):
        self.descriptor = descriptor
        self.field = str(field)
        self.instances = 0
        self.profiles = []
        self.violations = []
        self.errors = []
        self.patterns = Counter()
        self.elapsed = 0.0
        self.aborted = False

    def tail_patterns(self):
        """profiles whose g is zero exactly on a tail k >= t with t > 1"""
        return [p for p in self.profiles if p['tail_zero_start'] not in (None, 1)]

    def sort(self):
        for items in (self.profiles, self.violations, self.errors):
            items.sort(key=lambda d: (d['encoding'], d['name']))

    def as_dict(self):
        self.sort()
        return {'descriptor': self.descriptor,
                'field': self.field,
                'instances': self.instances,
                'elapsed': round(self.elapsed, 3),
                'aborted': self.aborted,
                'violations': self.violations,
                'errors': self.errors,
                'profiles': self.profiles,
                'patterns': {','.join(str(v) for v in g): count
                             for g, count in sorted(self.patterns.items())}}

    def to_text(self):
        self.sort()
        out = [f"# scan of {self.descriptor}  field={self.field}",
               f"# instances: {self.instances}  violations: {len(self.violations)}"
               f"  errors: {len(self.errors)}  time: {hms(self.elapsed)}"]
        if self.aborted:
            out.append("# scan aborted")
        for v in self.violations:
            out.append(f"VIOLATION {v['name']} g={v['g']} replay={v['replay']}")
        for e in self.errors:
            out.append(f"ERROR {e['name']}: {e['message']}")
        for g, count in sorted(self.patterns.items()):
            out.append(f"g={g}  count={count}")
        return '\n'.join(out)


class DepthScan(object):
    def __init__(self, corpus, field='q', budget=HOCHSTER_BUDGET, use_linquot=True,
                 timeout=None, workers=1, report_dir='sqfdepth_reports',
                 checkpoint_every=0, message_points=25, messenger=None,
                 face_budget=FACE_BUDGET, max_steps=SEARCH_STEPS):
        self.corpus = corpus
        self.field = get_field(field)
        self.budget = budget
        self.use_linquot = use_linquot
        self.timeout = timeout
        self.max_steps = max_steps
        self.face_budget = face_budget
        self.workers = workers
        self.report_dir = Path(report_dir)
        self.checkpoint_every = checkpoint_every
        self.message_points = max(1, message_points)
        self.messenger = messenger or sys.stdout.write
        self.abort = False
        self.cpt = 0
        self.report = None
        self.dtimer = None

    def write(self, msg):
        self.messenger(msg)

    def _options(self):
        return {'field': self.field, 'budget': self.budget,
                'use_linquot': self.use_linquot, 'timeout': self.timeout,
                'max_steps': self.max_steps, 'face_budget': self.face_budget,
                'workers': 1}

    def _results(self, jobs):
        if self.workers and self.workers > 1 and len(jobs) > 1:
            with Pool(self.workers) as pool:
                yield from pool.imap(_profile_job, jobs)
        else:
            for job in jobs:
                yield _profile_job(job)

    def record(self, inst, prof, error):
        report = self.report
        report.instances += 1
        encoding = inst.encoding
        if error is not None:
            logger.warning("instance %s: %s", inst.name, error)
            report.errors.append({'encoding': encoding, 'name': inst.name,
                                  'message': error})
            return
        g = list(prof.g)
        report.patterns[tuple(g)] += 1
        report.profiles.append({'encoding': encoding, 'name': inst.name, 'g': g,
                                'tail_zero_start': tail_zero_start(prof)})
        if not check_nonincreasing(prof):
            replay = write_ideal(Path(self.report_dir, f"violation_{inst.name}.ideal"),
                                 inst.ideal, title=f"g increases: {inst.name}",
                                 comments=f"g = {g}\nfield = {self.field}")
            logger.warning("g is not nonincreasing for %s: g=%s (replay: %s)",
                           inst.name, g, replay)
            report.violations.append({'encoding': encoding, 'name': inst.name,
                                      'g': g, 'replay': replay})

    def at_break(self):
        "write an interim report"
        fname = write_json(Path(self.report_dir, CHECKPOINT_FILE), self.report,
                           overwrite=True)
        logger.debug("checkpoint %d written to %s", self.cpt, fname)

    def run(self):
        """profile the whole corpus, returning the ScanReport"""
        self.report = ScanReport(self.corpus.descriptor, self.field)
        self.dtimer = StepTimer('scan start')
        npts = len(self.corpus)
        instances = list(self.corpus)
        jobs = [(i, inst, self._options()) for i, inst in enumerate(instances)]
        t0 = time.monotonic()
        self.abort = False
        self.cpt = 0
        try:
            for index, prof, error in self._results(jobs):
                self.cpt += 1
                self.record(instances[index], prof, error)
                if self.cpt % self.message_points == 0 or self.cpt == npts:
                    self.write("%d/%d instances, %d violations\n" %
                               (self.cpt, npts, len(self.report.violations)))
                if self.checkpoint_every and self.cpt % self.checkpoint_every == 0:
                    self.at_break()
                if self.abort:
                    raise ScanAbort("scan aborted on request")
        except (ScanAbort, KeyboardInterrupt):
            self.abort = True
            self.report.aborted = True
            self.write("scan aborted at instance %d of %d\n" % (self.cpt, npts))
        self.dtimer.add('scan done')
        self.report.elapsed = time.monotonic() - t0
        self.report.sort()
        return self.report


def scan(corpus, field='q', budget=HOCHSTER_BUDGET, **kws):
    """profile every instance of a corpus, returning a ScanReport"""
    return DepthScan(corpus, field=field, budget=budget, **kws).run()
