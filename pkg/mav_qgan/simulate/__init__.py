# flake8: noqa
from .photonic import MeasureMode, QumodeState, displace, measure, rotate, vacuum
from .statevec import (
    RotTriple,
    StateVector,
    apply_cnot,
    apply_matrix,
    apply_rot,
    apply_rx,
    apply_ry,
    apply_rz,
    basis_state,
    expect_z,
    zero_state,
)
