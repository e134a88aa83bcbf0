import json
import numpy as np
import pandas as pd
import pytest
import tailscore as ts
from tailscore.cli import main, build_parser, RunConfig
from tailscore._private_tools.exceptions import InputArgumentError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval(capsys):
    code, out, _ = run(capsys, 'eval', '--input', ts.demo.u4_sample_file, '--level-p', '0.5')
    assert code == 0
    document = json.loads(out)
    assert document['command'] == 'eval'
    assert document['report']['values'] == {'var_minus': 2.0, 'var_plus': 3.0, 'es': 3.5}


def test_eval_more_measures(capsys):
    code, out, _ = run(capsys, 'eval', '--input', ts.demo.u4_sample_file, '--level-p', '0.25', '--level-q', '0.75',
                       '--tau', '0.5', '--measures', 'rvar,expectile')
    assert code == 0
    values = json.loads(out)['report']['values']
    assert values['rvar'] == pytest.approx(2.5)
    assert values['expectile'] == pytest.approx(2.5)


def test_eval_input_errors(capsys):
    code, _, err = run(capsys, 'eval', '--input', ts.demo.u4_sample_file, '--level-p', '0.5', '--measures', 'rvar')
    assert code == 2 and 'tailscore eval' in err
    code, _, _ = run(capsys, 'eval', '--input', ts.demo.u4_sample_file, '--measures', 'median')
    assert code == 2
    code, _, _ = run(capsys, 'eval', '--input', ts.demo.u4_sample_file, '--level-p', '1.5')
    assert code == 2
    code, _, _ = run(capsys, 'eval', '--input', 'no-such-file.csv', '--level-p', '0.5')
    assert code == 2


def test_score(capsys, tmp_path):
    output = str(tmp_path / 'scored.csv')
    code, out, _ = run(capsys, 'score', '--input', ts.demo.u4_forecasts_file, '--family', 'fz', '--level-p', '0.5',
                       '--output', output)
    assert code == 0
    report = json.loads(out)['report']
    frame = pd.read_csv(output)
    assert report['n'] == 4 and report['scores_file'] == output
    assert report['mean_score'] == float(np.mean(frame['score'].to_numpy()))


def test_score_with_a_family_file(capsys):
    code, out, _ = run(capsys, 'score', '--input', ts.demo.u4_forecasts_file, '--family', ts.demo.fz_family_file)
    assert code == 0
    assert json.loads(out)['report']['family']['construction'] == 'fz'


def test_score_rejects_identification_families(capsys):
    code, _, _ = run(capsys, 'score', '--input', ts.demo.u4_forecasts_file, '--family', 'id-var-es',
                     '--level-p', '0.5')
    assert code == 2


def test_fit(capsys):
    code, out, _ = run(capsys, 'fit', '--input', ts.demo.u4_sample_file, '--family', 'fz', '--level-p', '0.5',
                       '--grid', '0:5:0.25')
    assert code == 0
    report = json.loads(out)['report']
    assert report['point'] == [2.0, 3.5]
    assert report['interval'] == [[2.0, 3.0], [3.5, 3.5]]

    code, out, _ = run(capsys, 'fit', '--method', 'z', '--input', ts.demo.u4_sample_file, '--family', 'id-tail-mean',
                       '--level-p', '0.5')
    assert code == 0
    assert json.loads(out)['report']['point'] == pytest.approx([2.0, 3.5], abs=1e-9)


def test_fit_without_grid(capsys):
    code, _, err = run(capsys, 'fit', '--input', ts.demo.u4_sample_file, '--family', 'fz', '--level-p', '0.5')
    assert code == 2 and '--grid' in err


def test_backtest(capsys, tmp_path):
    code, out, _ = run(capsys, 'backtest', '--input', ts.demo.u4_forecasts_file, '--family', 'id-var-es',
                       '--level-p', '0.5')
    assert code == 0
    report = json.loads(out)['report']
    assert report['kind'] == 'calibration' and report['mean_id'] == [0.0, 0.0]

    output = str(tmp_path / 'comparison.json')
    code, _, _ = run(capsys, 'backtest', '--input', ts.demo.u4_forecasts_file, '--input',
                     ts.demo.u4_forecasts_naive_file, '--family', 'fz', '--level-p', '0.5', '--lag', '0',
                     '--output', output)
    assert code == 0
    with open(output, encoding='utf-8') as stream:
        report = json.load(stream)['report']
    assert report['kind'] == 'comparative' and report['lag'] == 0
    assert report['mean_id'][0] < 0.0


def test_backtest_csv_output(capsys, tmp_path):
    arguments = ['backtest', '--input', ts.demo.u4_forecasts_file, '--input', ts.demo.u4_forecasts_naive_file,
                 '--family', 'fz', '--level-p', '0.5', '--lag', '0']
    code, out, _ = run(capsys, *arguments)
    assert code == 0
    expected = json.loads(out)['report']

    output = str(tmp_path / 'comparison.csv')
    code, out, _ = run(capsys, *arguments, '--output', output)
    assert code == 0 and out == ''
    frame = pd.read_csv(output)
    assert len(frame) == 1
    row = frame.iloc[0]
    assert row['kind'] == 'comparative' and row['lag'] == 0
    assert row['mean_id_1'] == expected['mean_id'][0]
    assert row['p_value_1'] == expected['p_value'][0]


def test_comparative_backtest_needs_two_files(capsys):
    code, _, _ = run(capsys, 'backtest', '--input', ts.demo.u4_forecasts_file, '--family', 'fz', '--level-p', '0.5')
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'repair')
    assert code == 0
    assert json.loads(out)['report']['passed'] is True
    code, out, _ = run(capsys, 'verify', '--suite', 'broken-no-correction', '--seed', '7')
    assert code == 3
    assert json.loads(out)['report']['counterexample'] is not None


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, 'verify', '--suite', 'everything')
    assert code == 2
    assert 'Unknown verification suite' in err


def test_argument_errors():
    with pytest.raises(SystemExit) as error:
        main(['eval'])
    assert error.value.code == 2
    with pytest.raises(SystemExit):
        main(['forecast', '--input', 'x.csv'])


def test_run_config():
    arguments = build_parser().parse_args(['score', '--input', 'a.csv', '--family', 'rvar', '--level-p', '0.25',
                                           '--level-q', '0.75'])
    config = RunConfig.from_arguments(arguments)
    assert config.family_spec().build().arity == 3
    with pytest.raises(InputArgumentError):
        RunConfig('score', p=0.75, q=0.25)
    with pytest.raises(InputArgumentError):
        RunConfig('eval').family_spec()
