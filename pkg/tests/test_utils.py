import pathlib

import numpy as np
import pytest

from mav_qgan import setup
from mav_qgan.errors import ConfigurationError, DomainError
from mav_qgan.simulate import basis_state
from mav_qgan.utils import MAX_SEED, Stopwatch, check_index, make_rng


def test_make_rng_is_seeded():
    assert make_rng(42).random() == make_rng(42).random()
    rng = np.random.default_rng(3)
    assert make_rng(rng) is rng


@pytest.mark.parametrize('seed', [-1, MAX_SEED])
def test_make_rng_range(seed):
    with pytest.raises(ConfigurationError):
        make_rng(seed)


def test_check_index():
    assert check_index(2, 3) == 2
    with pytest.raises(DomainError):
        check_index(3, 3)
    with pytest.raises(DomainError):
        check_index(1.5, 4)
    assert check_index(np.int64(1), 4) == 1


@pytest.mark.parametrize('n', [-1, 0, 0.5])
def test_basis_state_rejects_bad_qubit_counts(n):
    with pytest.raises(DomainError):
        basis_state(n, 0)


def test_make_rng_accepts_largest_seed():
    assert 0 <= make_rng(MAX_SEED - 1).random() < 1
    assert make_rng(7.0).random() == make_rng(7).random()


def test_stopwatch_accumulates():
    sw = Stopwatch()
    with sw:
        pass
    first = sw.elapsed_ms
    with sw:
        sum(range(1000))
    assert 0 <= first <= sw.elapsed_ms


def test_loading(tmp_path, monkeypatch):
    assert setup.loading(tmp_path) == tmp_path
    monkeypatch.setenv('MAV_QGAN_DATA', str(tmp_path / 'env'))
    assert setup.loading() == tmp_path / 'env'
    monkeypatch.delenv('MAV_QGAN_DATA')
    assert setup.loading() == pathlib.Path.home() / 'workdir' / 'mav-qgan'
