import json

import numpy as np
import pandas as pd
import pytest

from mav_qgan.bench import ExperimentConfig, run_single, run_sweep
from mav_qgan.collect import SWEEP_COLUMNS, emit_report, sweep_frame
from mav_qgan.errors import ConfigurationError, ReportError
from mav_qgan.fit import DiscriminatorParams, score_attacks
from mav_qgan.load import AttackKind, synth_genuine


@pytest.fixture(scope='module')
def small_report():
    return run_single(ExperimentConfig(iterations=3, measure_mode='x-quadrature'))


def test_config_validation():
    with pytest.raises(ConfigurationError):
        ExperimentConfig(qubits=9)
    with pytest.raises(ConfigurationError):
        ExperimentConfig(layers=0)
    with pytest.raises(ConfigurationError):
        ExperimentConfig(iterations=-1)
    with pytest.raises(ConfigurationError):
        ExperimentConfig(learning_rate=-0.1)


def test_config_integral_floats():
    config = ExperimentConfig(qubits=2.0, layers=1.0, iterations=1.0, seed=3.0)
    assert config.to_dict()['qubits'] == 2 and type(config.iterations) is int
    assert len(run_single(config).gen_history) == 1
    with pytest.raises(ConfigurationError):
        ExperimentConfig(qubits=1.5)


def test_zero_iterations():
    report = run_single(ExperimentConfig(iterations=0))
    assert len(report.disc_history) == 0
    assert len(report.gen_history) == 0
    assert 0 <= report.disc_ms < 1000
    assert 0 <= report.gen_ms < 1000
    assert report.disc_gap_end == report.disc_gap_start


def test_six_qubits_do_not_fit_reference_flight():
    with pytest.raises(ConfigurationError):
        run_single(ExperimentConfig(qubits=6, iterations=1))


def test_report_contents(small_report):
    assert len(small_report.disc_history) == 3
    assert len(small_report.gen_history) == 3
    assert 0 <= small_report.p_real_true <= 1
    assert 0 <= small_report.p_fake_true <= 1
    assert small_report.disc_ms > 0 and small_report.gen_ms > 0
    assert small_report.seed == 42
    assert set(small_report.p_attack) == set(AttackKind)
    assert len(small_report.fake_values) == 4


def test_reproducible_bodies():
    config = ExperimentConfig(iterations=5, seed=7)
    a, b = run_single(config), run_single(config)
    assert np.array_equal(a.disc_history, b.disc_history)
    assert np.array_equal(a.gen_history, b.gen_history)
    assert a.p_real_true == b.p_real_true
    assert a.p_fake_true == b.p_fake_true
    assert np.array_equal(a.disc_params.omega, b.disc_params.omega)


def test_end_to_end_win_condition():
    config = ExperimentConfig(
        qubits=2, layers=2, iterations=100, learning_rate=0.1, seed=42, measure_mode='x-quadrature'
    )
    report = run_single(config)
    assert report.disc_gap_end < report.disc_gap_start
    assert report.gen_history[-1] <= report.gen_history[0]
    assert report.p_fake_true >= 0.5


@pytest.mark.slow
def test_end_to_end_seed_sweep():
    wins = 0
    for seed in range(10):
        config = ExperimentConfig(iterations=100, seed=seed, measure_mode='x-quadrature')
        report = run_single(config)
        wins += report.disc_gap_end < report.disc_gap_start and report.p_fake_true >= 0.5
    assert wins >= 8


def test_data_directory_is_populated(tmp_path):
    config = ExperimentConfig(iterations=1, data_dir=str(tmp_path))
    first = run_single(config)
    assert len(list(tmp_path.glob('*.genuine.csv'))) == 6
    second = run_single(config)
    assert np.array_equal(first.disc_history, second.disc_history)


def test_sweep_single_row():
    df = run_sweep(ExperimentConfig(iterations=2), max_qubits=1, repeats=1)
    assert len(df) == 1
    assert list(df.columns[: len(SWEEP_COLUMNS)]) == SWEEP_COLUMNS
    assert df.loc[0, 'disc_ms'] > 0 and df.loc[0, 'gen_ms'] > 0


def test_sweep_records_row_errors():
    df = run_sweep(ExperimentConfig(iterations=1, layers=1), max_qubits=6, repeats=1)
    assert df['n'].tolist() == [1, 2, 3, 4, 5, 6]
    assert df['error'].iloc[:5].eq('').all()
    assert df['error'].iloc[5].startswith('ConfigurationError')


def test_sweep_threads_match_synchronous():
    config = ExperimentConfig(iterations=2)
    a = run_sweep(config, max_qubits=2, repeats=1)
    b = run_sweep(config, max_qubits=2, repeats=1, scheduler='threads')
    assert a['p_fake_true'].tolist() == b['p_fake_true'].tolist()


def test_sweep_validation():
    with pytest.raises(ConfigurationError):
        run_sweep(ExperimentConfig(), max_qubits=9)
    with pytest.raises(ConfigurationError):
        run_sweep(ExperimentConfig(), max_qubits=2, scheduler='cluster')


@pytest.mark.slow
def test_generator_time_grows_with_qubits():
    df = run_sweep(ExperimentConfig(iterations=10), max_qubits=5, repeats=3)
    per_iteration = df.set_index('n')['gen_ms'] / 10
    for n in (3, 4):
        assert per_iteration[n + 1] / per_iteration[n] >= 1.5


def test_emit_is_deterministic(small_report, tmp_path):
    for fmt in ('json', 'csv'):
        a = emit_report(small_report, tmp_path / f'a.{fmt}')
        b = emit_report(small_report, tmp_path / f'b.{fmt}')
        assert a.read_bytes() == b.read_bytes()


def test_emit_json_layout(small_report, tmp_path):
    path = emit_report(small_report, tmp_path / 'report.json')
    record = json.loads(path.read_text())
    assert list(record)[:6] == ['config', 'seed', 'p_real_true', 'p_fake_true', 'disc_ms', 'gen_ms']
    assert record['config']['measure_mode'] == 'x-quadrature'
    assert len(record['disc_history']) == 3


def test_emit_csv_columns(small_report, tmp_path):
    path = emit_report(small_report, tmp_path / 'report.csv')
    df = pd.read_csv(path)
    assert list(df.columns) == SWEEP_COLUMNS
    assert df.loc[0, 'n'] == 2


def test_empty_sweep_is_header_only(tmp_path):
    path = emit_report(sweep_frame([]), tmp_path / 'sweep.csv')
    lines = path.read_text().splitlines()
    assert lines[0].split(',')[: len(SWEEP_COLUMNS)] == SWEEP_COLUMNS
    assert len(lines) == 1


def test_nan_is_rejected(small_report, tmp_path):
    small_report.p_fake_true = float('nan')
    try:
        with pytest.raises(ReportError):
            emit_report(small_report, tmp_path / 'nan.json')
        with pytest.raises(ReportError):
            emit_report(small_report, tmp_path / 'nan.csv')
    finally:
        small_report.p_fake_true = 0.5


def test_unwritable_destination(small_report, tmp_path):
    with pytest.raises(ReportError):
        emit_report(small_report, tmp_path / 'missing' / 'report.json')


def test_score_attacks_covers_every_kind():
    scores = score_attacks(DiscriminatorParams.zeros(2, 2), synth_genuine(2), 2)
    assert set(scores) == set(AttackKind)
    assert all(0 <= p <= 1 for p in scores.values())
    assert score_attacks(DiscriminatorParams.zeros(1, 6), synth_genuine(2)) == {}
