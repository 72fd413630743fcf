import os
import pathlib

DATA_ENV = 'MAV_QGAN_DATA'


def loading(data=None):
    if data is not None:
        base = pathlib.Path(data)
    elif os.environ.get(DATA_ENV):
        base = pathlib.Path(os.environ[DATA_ENV])
    else:
        base = pathlib.Path(pathlib.Path.home() / 'workdir' / 'mav-qgan')

    return base
