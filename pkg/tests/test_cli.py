import json

import pytest

from sqfdepth import lab_config
from sqfdepth.ideal import SqfIdeal
from sqfdepth.datafile import write_ideal
from sqfdepth.cli import main, load_input, check_support


@pytest.fixture(autouse=True)
def no_user_config(tmp_path, monkeypatch):
    monkeypatch.setattr(lab_config, 'DEF_CONFFILE', str(tmp_path / 'none.ini'))


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_power(capsys):
    code, out = run(capsys, 'power', 'path:4', '-k', '2')
    assert code == 0
    assert out.strip().split('\n')[-2:] == ['n 4', '1 2 3 4']


def test_betti_json(capsys):
    code, out = run(capsys, 'betti', 'path:4', '--json')
    assert code == 0
    table = json.loads(out)
    assert table['betti'] == [[0, 0, 1], [1, 2, 3], [2, 3, 2]]
    assert table['depth'] == 2


def test_budget_exit_code(capsys):
    code, _ = run(capsys, 'betti', 'path:4', '--budget', '2')
    assert code == 3


def test_depth_and_profile(capsys):
    code, out = run(capsys, 'depth', 'path:4')
    assert (code, out) == (0, 'depth(S/I) = 2  (linquot)\n')
    code, out = run(capsys, 'profile', 'whiskered:1,1', '--json')
    assert code == 0
    assert json.loads(out)['g'] == [1, 0]
    code, out = run(capsys, 'profile', 'path:4', '--no-linquot', '--field', '2')
    assert code == 0
    assert 'linquot' not in out


def test_linquot(capsys):
    code, out = run(capsys, 'linquot', 'cycle:4')
    assert code == 0
    assert out.split('\n')[1] == 'r: [0, 1, 1, 2]'
    code, out = run(capsys, 'linquot', 'cycle:5')
    assert (code, out) == (1, 'no linear quotients order\n')


def test_search_steps(capsys):
    code, _ = run(capsys, 'linquot', 'cycle:5', '--search-steps', '3')
    assert code == 3
    code, _ = run(capsys, 'linquot', 'cycle:5', '--search-steps', '0')
    assert code == 1
    code, out = run(capsys, 'depth', 'cycle:4', '--search-steps', '1')
    assert (code, out) == (0, 'depth(S/I) = 1  (hochster)\n')


def test_cover(capsys):
    code, out = run(capsys, 'cover', 'complete:5', '-k', '2', '--construct', 'clique')
    assert code == 0
    assert out.split('\n')[:2] == ['cover: {1,2,3,4} {1,2,3,5}', 'beta_(2,u) = 4']
    code, out = run(capsys, 'cover', 'path:4', '-k', '2')
    assert code == 0
    code, _ = run(capsys, 'cover', 'path:4', '-k', '2', '--construct', 'clique')
    assert code == 1


def test_input_errors(capsys, tmp_path):
    code, _ = run(capsys, 'depth', str(tmp_path / 'missing.ideal'))
    assert code == 1
    code, _ = run(capsys, 'depth', 'path:4', '--field', '4')
    assert code == 1
    code, _ = run(capsys, 'depth', 'path:4', '--config', str(tmp_path / 'x.ini'))
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_trim(capsys, tmp_path):
    fname = write_ideal(tmp_path / 'wide.ideal', SqfIdeal(5, [(1, 2), (2, 3)]))
    code, out = run(capsys, 'depth', fname)
    assert (code, out) == (0, 'depth(S/I) = 3  (linquot)\n')
    code, out = run(capsys, 'depth', fname, '--trim')
    assert (code, out) == (0, 'depth(S/I) = 1  (linquot)\n')


def test_load_input(tmp_path):
    ideal, graph, name = load_input('whiskered:1,1')
    assert graph.n == 4
    assert name == 'whiskered:1,1'
    trimmed, graph = check_support(SqfIdeal(4, [(2, 3)]), None, trim=True)
    assert trimmed == SqfIdeal(2, [(1, 2)])


def test_scan_and_verify(capsys, tmp_path):
    code, out = run(capsys, 'scan', 'exhaustive:3', 'path:4',
                    '--report-dir', str(tmp_path), '--json')
    assert code == 0
    assert json.loads(out)['instances'] == 4
    code, out = run(capsys, 'verify-paper', '--only', '6')
    assert code == 0
    assert 'complete bipartite' in out
    code, _ = run(capsys, 'verify-paper', '--only', 'six')
    assert code == 1
