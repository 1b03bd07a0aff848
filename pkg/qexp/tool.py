import json
import math

from dataclasses import dataclass, field
from importlib.resources import files
from typing import Tuple

from qexp.lib.errors import ConfigError, ParseError
from qexp.lib.util import parse_assignment

__all__ = ['TOOL', 'PARAMETERS', 'RunConfig']

TOOL = json.loads(files('qexp').joinpath('qexp-tool.json').read_text(encoding='utf8'))

PARAMETERS = TOOL['tools']['qexp']['parameters']


def default(name):
    return PARAMETERS[name]['default']


@dataclass(frozen=True)
class RunConfig:
    '''
    Settings shared by every command; defaults come from qexp-tool.json.
    '''

    order: int = default('order')
    output: str = default('output')
    seed: int = default('seed')
    precision: int = default('precision')
    tolerance: str = default('tolerance')
    specializations: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.order < 0:
            raise ConfigError("Truncation order must be non-negative, got {}".format(self.order))

        if self.precision < 53:
            raise ConfigError("Precision must be at least 53 bits, got {}".format(self.precision))

        if self.output not in PARAMETERS['output']['enum']:
            raise ConfigError("Invalid output format: {}".format(self.output))

        try:
            tolerance = float(self.tolerance)
        except ValueError:
            raise ConfigError("Invalid tolerance: {}".format(self.tolerance))

        if not math.isfinite(tolerance) or tolerance <= 0:
            raise ConfigError("Tolerance must be a positive finite number, got {}".format(self.tolerance))

        for name, literal in self.specializations:
            try:
                parse_assignment("{}={}".format(name, literal))
            except ParseError as err:
                raise ConfigError("Invalid specialization {}={}: {}".format(name, literal, err))

    @classmethod
    def from_options(cls, order=None, output=None, seed=None, precision=None, tolerance=None, specializations=()):
        '''
        Constructs a RunConfig object from CLI options, NAME=LITERAL strings for
        the specializations; options left as None keep their defaults.
        '''

        pairs = []

        for text in specializations:
            name, sep, literal = text.partition('=')

            if not sep:
                raise ConfigError("Expected NAME=LITERAL, got {!r}".format(text))

            pairs.append((name.strip(), literal.strip()))

        options = {
            'order': order,
            'output': output,
            'seed': seed,
            'precision': precision,
            'tolerance': tolerance
        }

        return cls(specializations=tuple(pairs), **{key: value for key, value in options.items() if value is not None})
