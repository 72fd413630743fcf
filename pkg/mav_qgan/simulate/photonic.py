"""
Single-qumode Gaussian simulation restricted to displaced vacuum.

A displacement followed by a rotation keeps the vacuum coherent, so the whole
state is one complex amplitude. The x quadrature uses hbar = 2, i.e. <x> = 2 Re(disp).
"""
import cmath
import enum
from dataclasses import dataclass

from ..errors import DomainError
from ..utils import check_finite


class MeasureMode(enum.Enum):
    MEAN_PHOTON = 'mean-photon'
    X_QUADRATURE = 'x-quadrature'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace('_', '-'))
        except ValueError:
            choices = ', '.join(m.value for m in cls)
            raise DomainError(f'unknown measure mode {value!r} (choose from {choices})')


@dataclass(frozen=True)
class QumodeState:
    disp: complex = 0j

    def __post_init__(self):
        d = complex(self.disp)
        if not cmath.isfinite(d):
            raise DomainError(f'displacement must be finite, got {self.disp!r}')
        object.__setattr__(self, 'disp', d)

    @property
    def is_vacuum(self):
        return self.disp == 0


def vacuum():
    return QumodeState(0j)


def displace(state, alpha):
    check_finite(alpha, 'alpha')
    return QumodeState(state.disp + float(alpha))


def rotate(state, phi):
    check_finite(phi, 'phi')
    return QumodeState(state.disp * cmath.exp(1j * float(phi)))


def measure(state, mode=MeasureMode.MEAN_PHOTON):
    mode = MeasureMode.parse(mode)
    if mode is MeasureMode.MEAN_PHOTON:
        return abs(state.disp) ** 2
    return 2.0 * state.disp.real
