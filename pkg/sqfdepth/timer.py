#!/usr/bin/env python
"""step timer for scans and verification checks"""
import time
import logging

logger = logging.getLogger(__name__)


class StepTimer(object):
    def __init__(self, label='start'):
        self.clear()
        self.add(label)

    def clear(self):
        self.times = []

    def add(self, msg=''):
        logger.debug("%s at %s", msg, time.ctime())
        self.times.append((msg, time.monotonic()))

    @property
    def elapsed(self):
        return self.times[-1][1] - self.times[0][1] if self.times else 0.0

    def steps(self):
        "list of (message, seconds since previous step)"
        out = []
        for (m0, t0), (m1, t1) in zip(self.times, self.times[1:]):
            out.append((m1, t1 - t0))
        return out

    def get_report(self):
        m0, t0 = self.times[0]
        tlast = t0
        out = ["# %s" % m0,
               "#----------------",
               "#       Message                       Total     Delta"]
        for m, t in self.times[1:]:
            out.append("  %-32s    %.3f    %.3f" % (m, t-t0, t-tlast))
            tlast = t
        return "\n".join(out)

    def get_brief(self):
        msg0 = self.times[0][0]
        msgx = self.times[-1][0]
        return '%s -> %s : %.4f sec' % (msg0, msgx, self.elapsed)
