"""Monte-Carlo simulation of prediction-guided reconstruction.

Every trial draws an original pixel value, a prediction and a flip pattern.
The original is encoded with each mapping, the same flip pattern is applied to
every encoded codeword (paired comparison) and each reconstruction strategy
chooses an output value. Squared errors are accumulated as exact integers.

Trials are grouped into blocks of a fixed size; block b draws all of its
randomness from default_rng([seed, b]). Blocks are independent, so they can be
run by a process pool without changing the result.
"""
import logging
import multiprocessing
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from coding import CodeTable, mapping_table
from reconstruction import (ReconstructionPolicy, candidate_matrix, reconstruct, reconstruct_array,
                            threshold_array, threshold_reconstruct)
from .channel import flip_masks
from .models import SchemeResult, SimulationConfig, SimulationReport
from .pgm import read_pgm, requantize
from .prediction import predict_array

Totals = Tuple[int, int, int, int]

MappingContext = NamedTuple('MappingContext', [('name', str), ('table', CodeTable), ('bits', np.ndarray),
                                               ('values', np.ndarray), ('candidates', np.ndarray)])


def mapping_context(name: str, config: SimulationConfig) -> MappingContext:
    """Return the lookup arrays needed to evaluate one mapping."""
    table = mapping_table(name, config.n, shift=config.counting_shift if name == 'counting' else 0)
    return MappingContext(name, table, table.bits_array(), table.values_array(),
                          candidate_matrix(table, config.policy))


def run_trial(original: int, predicted: int, flips: int, table: CodeTable, strategy: str,
              policy: ReconstructionPolicy = ReconstructionPolicy(), threshold: int = 1) -> int:
    """Return the output value of a single trial with a given prediction and flip mask."""
    decoded = table.encode(original).flip(flips)
    if strategy == 'threshold':
        return threshold_reconstruct(table.decode(decoded), predicted, threshold)
    return reconstruct(decoded, predicted, table, policy)


def evaluate_block(originals: np.ndarray, predictions: np.ndarray, masks: np.ndarray,
                   contexts: List[MappingContext], config: SimulationConfig) -> Dict[Tuple[str, str], Totals]:
    """Return (squared error, absolute error, exact, worse) sums per scheme for one block of trials."""
    prediction_error = np.abs(predictions - originals)
    totals = {}
    for context in contexts:
        decoded_bits = context.bits[originals] ^ masks
        for strategy in config.strategies:
            if strategy == 'threshold':
                outputs = threshold_array(context.values[decoded_bits], predictions, config.effective_threshold)
            else:
                outputs = reconstruct_array(decoded_bits, predictions, context.table, config.policy,
                                            matrix=context.candidates)
            error = np.abs(outputs - originals)
            totals[(context.name, strategy)] = (int(np.sum(error * error)), int(np.sum(error)),
                                                int(np.sum(error == 0)), int(np.sum(error > prediction_error)))
    return totals


class BlockRunner(object):
    """Draws and evaluates one block of trials; picklable for the worker pool."""

    def __init__(self, config: SimulationConfig, contexts: List[MappingContext], pixels: Optional[np.ndarray]):
        """Initialize the runner with the lookup arrays of all mappings and optional image pixels."""
        self.config = config
        self.contexts = contexts
        self.pixels = pixels

    def block_sizes(self) -> List[int]:
        """Return the number of trials of every block."""
        full, rest = divmod(self.config.trials, self.config.block_size)
        return [self.config.block_size] * full + ([rest] if rest else [])

    def __call__(self, job: Tuple[int, int]) -> Dict[Tuple[str, str], Totals]:
        """Run block `index` with `size` trials."""
        index, size = job
        config = self.config
        rng = np.random.default_rng([config.seed, index])

        if self.pixels is None:
            originals = rng.integers(0, config.maxval, size=size, endpoint=True, dtype=np.int64)
        else:
            originals = self.pixels[rng.integers(0, len(self.pixels), size=size)]
        predictions = predict_array(originals, config.prediction, config.maxval, rng)
        masks = flip_masks(config.channel, config.n, size, rng)

        logging.debug('Running block %d with %d trials', index, size)
        return evaluate_block(originals, predictions, masks, self.contexts, config)


def load_pixels(config: SimulationConfig) -> Optional[np.ndarray]:
    """Return the flattened, requantized image pixels or None if no image is configured."""
    if config.image is None:
        return None
    image = read_pgm(config.image)
    pixels = requantize(image.pixels, config.n, image.depth).reshape(-1)
    logging.info('Drawing originals from %d pixels of %s', len(pixels), config.image)
    return pixels


def run_simulation(config: SimulationConfig) -> SimulationReport:
    """Run all trials of the configuration and return the per-scheme report."""
    config.validate()

    contexts = [mapping_context(name, config) for name in config.mappings]
    runner = BlockRunner(config, contexts, load_pixels(config))
    jobs = list(enumerate(runner.block_sizes()))

    logging.info('Simulating %d trials in %d blocks with %d worker(s)', config.trials, len(jobs), config.workers)
    if config.workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(config.workers) as pool:
            blocks = pool.map(runner, jobs)
    else:
        blocks = [runner(job) for job in jobs]

    results = []
    for scheme in config.schemes():
        squared, absolute, exact, worse = (sum(column) for column in zip(*(block[scheme] for block in blocks)))
        results.append(SchemeResult(scheme[0], scheme[1], config.trials, squared, absolute, exact, worse,
                                    config.maxval))
    return SimulationReport(config, tuple(results))
