#!/usr/bin/python
"""
file and path utilities: home directory, time stamps,
safe and auto-incremented file names for reports and replay files.
"""
import os
import re
from datetime import datetime
from pathlib import Path

UNSAFE_CHARS = re.compile(r'[^\w.+=-]')
NUMBERED_STEM = re.compile(r'^(.*)_(\d+)$')


def get_timestamp():
    """local time to the second, as '2024-05-02 17:31:12'"""
    return datetime.now().isoformat(sep=' ', timespec='seconds')


def get_homedir():
    """return home directory, or best approximation"""
    try:
        return str(Path.home())
    except RuntimeError:
        return '.'


def fix_filename(name):
    """name with every unsafe character replaced by '_';
    only the last '.' (the suffix separator) is kept"""
    stem, dot, suffix = UNSAFE_CHARS.sub('_', str(name)).rpartition('.')
    if not dot:
        return suffix
    return f"{stem.replace('.', '_')}.{suffix}"


def increment_filename(inpfile, ndigits=3):
    """
    next free file name with the same suffix: a trailing '_NNN' counter
    on the stem is incremented, otherwise '_001' is appended.

    >>> increment_filename('viol_017.ideal')
    'viol_018.ideal'
    >>> increment_filename('viol.ideal')
    'viol_001.ideal'
    """
    path = Path(inpfile)
    width = max(ndigits, 3)
    match = NUMBERED_STEM.match(path.stem)
    if match:
        base, count = match.group(1), int(match.group(2))
    else:
        base, count = path.stem, 0
    while True:
        count += 1
        fout = path.with_name(f"{base}_{count:0{width}d}{path.suffix}")
        if not fout.exists():
            return str(fout)


def new_filename(fname, ndigits=3):
    """file name based on fname that does not exist yet"""
    if os.path.exists(fname):
        fname = increment_filename(fname, ndigits=ndigits)
    return fname
