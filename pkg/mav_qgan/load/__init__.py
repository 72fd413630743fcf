# flake8: noqa
from .trace import (
    AttackKind,
    NavTrace,
    displacement,
    load_trace,
    load_traces,
    phase_slices,
    save_trace,
    synth_genuine,
    synth_trace,
)
