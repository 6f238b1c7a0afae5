#!/usr/bin/python
"""
Lab Configuration file for sqfdepth

The Lab Configuration holds the defaults used by the command line and
the scan / verification drivers: coefficient field, Hochster budgets,
worker count, report directory and corpus sizes.
"""
import os
from configparser import ConfigParser
from pathlib import Path

from .file_utils import get_homedir, get_timestamp
from .utils import BadSpec

TITLE = "sqfdepth Lab Configuration"

DEFAULT_CONF = """
### %s
[setup]
field = q
prime = 32003
budget = 16
face_budget = 200000
workers = 1
timeout = 60
search_steps = 50000
#--------------------------#
[scan]
report_dir = sqfdepth_reports
message_points = 25
checkpoint_every = 0
seed = 1
#--------------------------#
[verify]
quick = False
random_count = 200
random_ideal_count = 100
""" % TITLE

DEF_CONFFILE = os.path.join(get_homedir(), '.sqfdepth', 'sqfdepth.ini')


def str2val(val):
    """convert a config string: True/False/None to python objects,
    integers and floats to numbers, anything else stays a string"""
    val = val.strip()
    if val == 'True':
        return True
    elif val == 'False':
        return False
    elif val == 'None':
        return None
    try:
        return int(val)
    except ValueError:
        try:
            return float(val)
        except ValueError:
            return val


def opts2dict(opts_string):
    """convert options string like
    field = 2, budget = 12, quick
    into a dictionary (a bare key means True)"""
    d = {}
    for expr in opts_string.split(','):
        if not expr.strip():
            continue
        key, _, val = expr.partition('=')
        d[key.strip()] = str2val(val) if val else True
    return d


def dict2opts(d):
    """convert options dict to options string, keys sorted"""
    return ', '.join("%s=%s" % (key, d[key]) for key in sorted(d))


class LabConfig(object):
    __sects = ('setup', 'scan', 'verify')

    def __init__(self, filename=None, text=None):
        for s in self.__sects:
            setattr(self, s, {})
        self._cp = ConfigParser()
        self._cp.read_string(DEFAULT_CONF)
        if filename is None:
            filename = DEF_CONFFILE
        self.filename = filename
        if text is not None:
            self._cp.read_string(text)
        elif os.path.isfile(filename):
            self._cp.read(filename)
        self.Read()

    def Read(self, filename=None):
        "read config"
        if filename is not None:
            if not os.path.isfile(filename):
                raise BadSpec(f"no configuration file '{filename}'")
            self._cp.read(filename)
            self.filename = filename
        for sect in self.__sects:
            if not self._cp.has_section(sect):
                continue
            thissect = {}
            for opt in self._cp.options(sect):
                thissect[opt] = str2val(self._cp.get(sect, opt))
            setattr(self, sect, thissect)

    def get(self, sect, key, default=None):
        return getattr(self, sect, {}).get(key, default)

    def update(self, sect, **kws):
        "override values, skipping None (unset command-line flags)"
        thissect = getattr(self, sect)
        for key, val in kws.items():
            if val is not None:
                thissect[key] = val

    def Save(self, fname=None):
        "save config file"
        if fname is None:
            fname = self.filename
        self.filename = fname
        Path(fname).parent.mkdir(mode=0o755, parents=True, exist_ok=True)
        out = ['### %s: %s' % (TITLE, get_timestamp())]
        for sect in self.__sects:
            out.append('#--------------------------#\n[%s]' % sect)
            for name, val in getattr(self, sect).items():
                out.append("%s = %s" % (name, val))
        with open(fname, 'w') as fh:
            fh.write('\n'.join(out) + '\n')

    def sections(self):
        return self.__sects
