"""Defines the configuration and result types of a simulation run."""
import math
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import defaults
from coding import ConfigurationException
from coding.mappings import mappings as mapping_names
from reconstruction import ReconstructionPolicy
from .metrics import psnr

prediction_kinds = ('exact', 'uniform-offset', 'discrete-laplacian')
channel_kinds = ('iid-bitflip', 'at-most-m-flips')
strategy_names = ('threshold', 'neighborhood')


@dataclass(frozen=True)
class PredictionModel:
    """Distribution of the prediction error added to the original value (and clamped to the pixel range)."""

    kind: str = defaults.prediction_kind
    scale: float = defaults.prediction_scale

    def validate(self) -> 'PredictionModel':
        """Raise a ConfigurationException for invalid fields."""
        if self.kind not in prediction_kinds:
            raise ConfigurationException('prediction', 'must be one of {0}, got {1!r}'.format(
                ', '.join(prediction_kinds), self.kind))
        if not self.scale >= 0 or math.isinf(self.scale):
            raise ConfigurationException('prediction_scale', 'must be finite and >= 0, got {0!r}'.format(self.scale))
        return self


@dataclass(frozen=True)
class ChannelModel:
    """Mis-correction model: which bits of the decoded codeword are wrong.

    iid-bitflip flips each bit independently with probability p_flip.
    at-most-m-flips draws the number of flipped bits from flip_counts (the
    probabilities of 0, 1, ..., m flips) and flips that many distinct bits.
    """

    kind: str = defaults.channel_kind
    p_flip: float = defaults.p_flip
    flip_counts: Tuple[float, ...] = ()

    def validate(self, width: int = defaults.max_width) -> 'ChannelModel':
        """Raise a ConfigurationException for invalid fields."""
        if self.kind not in channel_kinds:
            raise ConfigurationException('channel', 'must be one of {0}, got {1!r}'.format(
                ', '.join(channel_kinds), self.kind))
        if not 0 <= self.p_flip <= 1:
            raise ConfigurationException('p_flip', 'must be in [0, 1], got {0!r}'.format(self.p_flip))
        if self.kind == 'at-most-m-flips':
            if not self.flip_counts or len(self.flip_counts) > width + 1:
                raise ConfigurationException('flip_counts', 'needs 1..{0} probabilities, got {1}'.format(
                    width + 1, len(self.flip_counts)))
            if any(not 0 <= p <= 1 for p in self.flip_counts) or not math.isclose(sum(self.flip_counts), 1):
                raise ConfigurationException('flip_counts', 'must be probabilities summing to 1, got {0!r}'.format(
                    self.flip_counts))
        return self


@dataclass(frozen=True)
class SimulationConfig:
    """Everything a simulation run depends on."""

    n: int = defaults.width
    trials: int = defaults.trials
    prediction: PredictionModel = field(default_factory=PredictionModel)
    channel: ChannelModel = field(default_factory=ChannelModel)
    mappings: Tuple[str, ...] = tuple(mapping_names)
    strategies: Tuple[str, ...] = strategy_names
    policy: ReconstructionPolicy = field(default_factory=ReconstructionPolicy)
    threshold: Optional[int] = None
    counting_shift: int = 0
    seed: int = defaults.seed
    workers: int = defaults.workers
    block_size: int = defaults.block_size
    image: Optional[str] = None

    @property
    def maxval(self) -> int:
        """Return the peak pixel value."""
        return (1 << self.n) - 1

    @property
    def effective_threshold(self) -> int:
        """Return the configured threshold or the default 2^(n-3), at least 1."""
        if self.threshold is not None:
            return self.threshold
        return max(1, 1 << max(0, self.n - 3))

    def validate(self) -> 'SimulationConfig':
        """Raise a ConfigurationException naming the first invalid field."""
        if not isinstance(self.n, int) or not 2 <= self.n <= defaults.max_width:
            raise ConfigurationException('n', 'must be in 2..{0}, got {1!r}'.format(defaults.max_width, self.n))
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigurationException('trials', 'must be at least 1, got {0!r}'.format(self.trials))
        self.prediction.validate()
        self.channel.validate(self.n)
        if not self.mappings or any(m not in mapping_names for m in self.mappings):
            raise ConfigurationException('mappings', 'must be a non-empty subset of {0}, got {1!r}'.format(
                ', '.join(mapping_names), self.mappings))
        if not self.strategies or any(s not in strategy_names for s in self.strategies):
            raise ConfigurationException('strategies', 'must be a non-empty subset of {0}, got {1!r}'.format(
                ', '.join(strategy_names), self.strategies))
        self.policy.check_width(self.n)
        if self.threshold is not None and (not isinstance(self.threshold, int) or self.threshold < 0):
            raise ConfigurationException('threshold', 'must be a non-negative integer, got {0!r}'.format(
                self.threshold))
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigurationException('seed', 'must be a non-negative integer, got {0!r}'.format(self.seed))
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigurationException('workers', 'must be at least 1, got {0!r}'.format(self.workers))
        if not isinstance(self.block_size, int) or self.block_size < 1:
            raise ConfigurationException('block_size', 'must be at least 1, got {0!r}'.format(self.block_size))
        return self

    def schemes(self) -> List[Tuple[str, str]]:
        """Return all (mapping, strategy) pairs in report order."""
        return [(mapping, strategy) for mapping in self.mappings for strategy in self.strategies]

    def as_dict(self) -> Dict[str, Any]:
        """Return the configuration as JSON serializable dictionary.

        The number of workers is left out since it never changes the result.
        """
        return OrderedDict([
            ('n', self.n),
            ('trials', self.trials),
            ('prediction', self.prediction.kind),
            ('prediction_scale', self.prediction.scale),
            ('channel', self.channel.kind),
            ('p_flip', self.channel.p_flip),
            ('flip_counts', list(self.channel.flip_counts)),
            ('mappings', list(self.mappings)),
            ('strategies', list(self.strategies)),
            ('radius', self.policy.radius),
            ('include_center', self.policy.include_center),
            ('tie_break', self.policy.tie_break.value),
            ('threshold', self.effective_threshold),
            ('counting_shift', self.counting_shift),
            ('block_size', self.block_size),
            ('image', self.image),
        ])


@dataclass(frozen=True)
class SchemeResult:
    """Accumulated outcome of one mapping combined with one reconstruction strategy."""

    mapping: str
    strategy: str
    trials: int
    squared_error: int
    absolute_error: int
    exact: int
    worse: int
    maxval: int

    @property
    def scheme(self) -> str:
        """Return the scheme id."""
        return '{0}+{1}'.format(self.mapping, self.strategy)

    @property
    def mse(self) -> float:
        """Return the mean squared error."""
        return self.squared_error / self.trials

    @property
    def mae(self) -> float:
        """Return the mean absolute error."""
        return self.absolute_error / self.trials

    @property
    def psnr(self) -> float:
        """Return the PSNR in dB (math.inf for a perfect reconstruction)."""
        return psnr(self.mse, self.maxval)

    @property
    def exact_rate(self) -> float:
        """Return the fraction of trials that recovered the original value."""
        return self.exact / self.trials

    @property
    def worse_rate(self) -> float:
        """Return the fraction of trials whose output is further from the original than the prediction."""
        return self.worse / self.trials


@dataclass(frozen=True)
class SimulationReport:
    """Per-scheme results of one simulation run together with its configuration."""

    config: SimulationConfig
    results: Tuple[SchemeResult, ...]

    @property
    def seed(self) -> int:
        """Return the master seed."""
        return self.config.seed

    def result(self, mapping: str, strategy: str) -> SchemeResult:
        """Return the result of one scheme."""
        for result in self.results:
            if result.mapping == mapping and result.strategy == strategy:
                return result
        raise KeyError('{0}+{1}'.format(mapping, strategy))
