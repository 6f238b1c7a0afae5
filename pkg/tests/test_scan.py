import importlib
import json
from pathlib import Path

from sqfdepth.utils import ScanAbort
from sqfdepth.corpus import Corpus, parse_corpus
from sqfdepth.datafile import read_ideal
from sqfdepth.scan import DepthScan, ScanReport, scan


class Messages(list):
    def __call__(self, msg):
        self.append(msg)


def test_small_exhaustive_scan(tmp_path):
    msgs = Messages()
    report = scan(parse_corpus('exhaustive:4'), report_dir=tmp_path, messenger=msgs)
    assert report.instances == 10
    assert report.violations == []
    assert report.errors == []
    assert sum(report.patterns.values()) == 10
    assert msgs[-1] == '10/10 instances, 0 violations\n'
    encodings = [p['encoding'] for p in report.profiles]
    assert encodings == sorted(encodings)


def test_tail_patterns(tmp_path):
    report = scan(parse_corpus('whiskered-ones:2..4'), report_dir=tmp_path,
                  messenger=Messages())
    starts = {p['name']: p['tail_zero_start'] for p in report.profiles}
    assert starts == {'whiskered:1,1': 2, 'whiskered:1,1,1': 2,
                      'whiskered:1,1,1,1': 3}
    assert len(report.tail_patterns()) == 3
    assert (3, 1, 0, 0) in report.patterns


def test_workers_do_not_change_report(tmp_path):
    corpus = parse_corpus('exhaustive:4')
    serial = scan(corpus, report_dir=tmp_path, messenger=Messages()).as_dict()
    pooled = scan(corpus, report_dir=tmp_path, workers=2,
                  messenger=Messages()).as_dict()
    assert serial['profiles'] == pooled['profiles']
    assert serial['patterns'] == pooled['patterns']


def test_violations_write_replay_files(tmp_path, monkeypatch):
    scan_mod = importlib.import_module('sqfdepth.scan')
    monkeypatch.setattr(scan_mod, 'check_nonincreasing', lambda p: False)
    corpus = parse_corpus('path:4')
    report = scan(corpus, report_dir=tmp_path, messenger=Messages())
    assert len(report.violations) == 1
    replay = report.violations[0]['replay']
    assert Path(replay).parent == tmp_path
    assert read_ideal(replay) == corpus.instances[0].ideal
    assert 'VIOLATION path:4' in report.to_text()


def test_errors_do_not_stop_the_scan(tmp_path):
    corpus = parse_corpus('path:4')
    corpus.extend(parse_corpus('complete:3'))
    report = scan(corpus, budget=3, report_dir=tmp_path, messenger=Messages())
    assert report.instances == 2
    assert len(report.errors) == 1
    assert report.errors[0]['name'] == 'path:4'
    assert report.errors[0]['message'].startswith('BudgetExceeded')


def test_checkpoints(tmp_path):
    scan(parse_corpus('exhaustive:3'), report_dir=tmp_path, checkpoint_every=2,
         messenger=Messages())
    fname = tmp_path / 'scan_checkpoint.json'
    assert fname.exists()
    with open(fname) as fh:
        assert json.load(fh)['instances'] == 2


def test_checkpoint_is_rewritten(tmp_path):
    scan(parse_corpus('exhaustive:4'), report_dir=tmp_path, checkpoint_every=2,
         messenger=Messages())
    assert [f.name for f in tmp_path.iterdir()] == ['scan_checkpoint.json']
    with open(tmp_path / 'scan_checkpoint.json') as fh:
        assert json.load(fh)['instances'] == 10


def test_abort(tmp_path):
    msgs = Messages()

    def stop_once(msg):
        msgs(msg)
        if len(msgs) == 1:
            raise ScanAbort("stop requested")
    dscan = DepthScan(parse_corpus("exhaustive:4"), report_dir=tmp_path,
                      message_points=1, messenger=stop_once)
    report = dscan.run()
    assert report.aborted
    assert report.instances == 1
    assert msgs[-1] == "scan aborted at instance 1 of 10\n"


def test_empty_corpus(tmp_path):
    report = scan(Corpus('nothing'), report_dir=tmp_path, messenger=Messages())
    assert isinstance(report, ScanReport)
    assert report.instances == 0
    assert report.as_dict()['patterns'] == {}
