import json
import math
import pathlib

import numpy as np
import pandas as pd

from .errors import ReportError

SWEEP_COLUMNS = ['n', 'm', 'iters', 'lr', 'seed', 'disc_ms', 'gen_ms', 'p_real_true', 'p_fake_true']
SWEEP_EXTRA_COLUMNS = ['disc_ms_mean', 'gen_ms_mean', 'error']
FORMATS = ('json', 'csv')


def report_record(report):
    '''RunReport as a plain dict with a fixed key order'''
    config = report.config
    return {
        'config': config.to_dict(),
        'seed': report.seed,
        'p_real_true': float(report.p_real_true),
        'p_fake_true': float(report.p_fake_true),
        'disc_ms': float(report.disc_ms),
        'gen_ms': float(report.gen_ms),
        'disc_gap_start': float(report.disc_gap_start),
        'disc_gap_end': float(report.disc_gap_end),
        'disc_history': [float(v) for v in report.disc_history],
        'gen_history': [float(v) for v in report.gen_history],
        'p_attack': {kind.value: float(p) for kind, p in report.p_attack.items()},
        'fake_values': [float(v) for v in report.fake_values],
        'disc_params': {'omega': np.asarray(report.disc_params.omega).tolist()},
        'gen_params': {
            'alpha': [float(v) for v in report.gen_params.alpha],
            'phi': [float(v) for v in report.gen_params.phi],
        },
    }


def report_row(report):
    config = report.config
    return {
        'n': config.qubits,
        'm': config.layers,
        'iters': config.iterations,
        'lr': config.learning_rate,
        'seed': config.seed,
        'disc_ms': float(report.disc_ms),
        'gen_ms': float(report.gen_ms),
        'p_real_true': float(report.p_real_true),
        'p_fake_true': float(report.p_fake_true),
    }


def sweep_frame(rows=()):
    df = pd.DataFrame(list(rows), columns=SWEEP_COLUMNS + SWEEP_EXTRA_COLUMNS)
    if 'error' in df:
        df['error'] = df['error'].fillna('')
    return df


def _check_finite_frame(df):
    numeric = df[[c for c in df.columns if c != 'error']].apply(pd.to_numeric, errors='coerce')
    ok = np.isfinite(numeric.to_numpy(dtype=float)).all(axis=1)
    if 'error' in df:
        # failed sweep rows have no measurements
        ok |= df['error'].astype(str).str.len().to_numpy() > 0
    if not ok.all():
        raise ReportError(f'report row {int(np.argmax(~ok))} contains NaN or infinite values')


def to_json(obj):
    if isinstance(obj, pd.DataFrame):
        _check_finite_frame(obj)
        payload = [
            {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in row.items()}
            for row in obj.to_dict(orient='records')
        ]
    else:
        payload = report_record(obj)
    try:
        return json.dumps(payload, indent=2, allow_nan=False) + '\n'
    except ValueError as e:
        raise ReportError(f'report contains NaN or infinite values ({e})')


def to_frame(obj):
    if isinstance(obj, pd.DataFrame):
        return obj
    return pd.DataFrame([report_row(obj)], columns=SWEEP_COLUMNS)


def emit_report(report, destination, fmt=None):
    """
    Write a RunReport or a sweep table as JSON or CSV

    ``fmt`` defaults to the destination suffix. Output is deterministic for a
    given report; NaN or infinite values raise ``ReportError``.
    """
    path = pathlib.Path(destination)
    fmt = (fmt or path.suffix.lstrip('.') or 'json').lower()
    if fmt not in FORMATS:
        raise ReportError(f'unknown report format {fmt!r} (choose from json, csv)')

    if fmt == 'json':
        text = to_json(report)
    else:
        df = to_frame(report)
        _check_finite_frame(df)
        text = df.to_csv(index=False, float_format='%.17g', lineterminator='\n')

    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    except OSError as e:
        raise ReportError(f'cannot write report to {path}: {e}')
    return path
