# flake8: noqa
from .loading import loading
