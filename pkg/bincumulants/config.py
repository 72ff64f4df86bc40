"""Run settings"""
import logging
import os

from .exceptions import ValidationError
from .utils import MAX_DENOMINATOR

__all__ = ['Settings']


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValidationError('{} must be an integer, got {!r}'.format(name, raw))


class Settings(object):
    """Defaults shared by the library entry points and the command line.

    Every value can be passed explicitly, or read from the environment
    through :py:meth:`~Settings.from_env`:

        - ``BINCUMULANTS_SEED``
        - ``BINCUMULANTS_TRIALS``
        - ``BINCUMULANTS_SAMPLE_POINTS``
        - ``BINCUMULANTS_STARTS``
        - ``BINCUMULANTS_MAX_DENOMINATOR``
        - ``BINCUMULANTS_LOG_LEVEL``

    None of them is required; explicit command line flags take precedence.
    """
    def __init__(self, seed=0, jacobian_trials=3, sample_points=200, optimizer_starts=1000,
                 max_denominator=MAX_DENOMINATOR, log_level='WARNING'):
        """
        :param int seed: seed for every randomized routine
        :param int jacobian_trials: random points per Jacobian rank estimate
        :param int sample_points: points for sampled vanishing checks
        :param int optimizer_starts: multi-start count of the top cumulant optimizer
        :param int max_denominator: bound used when rationalizing floats
        :param str log_level: name of a :py:mod:`logging` level
        """
        self.seed = seed
        self.jacobian_trials = jacobian_trials
        self.sample_points = sample_points
        self.optimizer_starts = optimizer_starts
        self.max_denominator = max_denominator
        self.log_level = log_level
        self.validate()

    @classmethod
    def from_env(cls):
        """Read settings from the env"""
        return cls(
            seed=_env_int('BINCUMULANTS_SEED', 0),
            jacobian_trials=_env_int('BINCUMULANTS_TRIALS', 3),
            sample_points=_env_int('BINCUMULANTS_SAMPLE_POINTS', 200),
            optimizer_starts=_env_int('BINCUMULANTS_STARTS', 1000),
            max_denominator=_env_int('BINCUMULANTS_MAX_DENOMINATOR', MAX_DENOMINATOR),
            log_level=os.environ.get('BINCUMULANTS_LOG_LEVEL', 'WARNING'),
        )

    def set_defaults(self, **kwargs):
        """Overwrite selected values, skipping ``None``"""
        for key, value in kwargs.items():
            if not hasattr(self, key):
                raise ValidationError('Unknown setting {}'.format(key))
            if value is not None:
                setattr(self, key, value)
        self.validate()
        return self

    def validate(self):
        for name in ('jacobian_trials', 'sample_points', 'optimizer_starts', 'max_denominator'):
            if getattr(self, name) < 1:
                raise ValidationError('{} must be positive'.format(name))
        if not isinstance(logging.getLevelName(str(self.log_level).upper()), int):
            raise ValidationError('Unknown log level {}'.format(self.log_level))

    @property
    def level(self):
        return logging.getLevelName(str(self.log_level).upper())
