"""Tests the simulation.runner and simulation.report modules."""
import json
import math
import os

import numpy as np
import pytest

from coding import ConfigurationException, ImageFormatException
from reconstruction import ReconstructionPolicy
from simulation import (ChannelModel, PredictionModel, SimulationConfig, evaluate_block, mapping_context,
                        run_simulation, run_trial, to_json, to_text)
from simulation.runner import load_pixels


def test_worked_example_trial(table_n4):
    """Original 7, prediction 8 and decoded word 1001 reconstruct to 7."""
    flips = table_n4.encode(7).bits ^ 0b1001

    assert run_trial(7, 8, flips, table_n4, 'neighborhood', ReconstructionPolicy(radius=1)) == 7
    assert run_trial(7, 8, flips, table_n4, 'threshold', threshold=1) == 8
    assert run_trial(7, 8, flips, table_n4, 'threshold', threshold=3) == 11


def test_worked_example_block(table_n4):
    """The vectorized block evaluation gives squared error 0 for the worked example."""
    config = SimulationConfig(n=4, mappings=('counting',), strategies=('neighborhood',))
    contexts = [mapping_context('counting', config)]
    flips = table_n4.encode(7).bits ^ 0b1001

    totals = evaluate_block(np.array([7]), np.array([8]), np.array([flips]), contexts, config)
    assert totals[('counting', 'neighborhood')] == (0, 0, 1, 0)


@pytest.mark.parametrize('n', [4, 8])
def test_noiseless_pipeline(n):
    """Without bit errors and with exact prediction every scheme is perfect."""
    report = run_simulation(SimulationConfig(n=n, trials=5000, prediction=PredictionModel('exact'),
                                             channel=ChannelModel(p_flip=0.0), seed=3))

    assert len(report.results) == 6
    for result in report.results:
        assert result.mse == 0
        assert math.isinf(result.psnr)
        assert result.exact_rate == 1
        assert result.worse_rate == 0


def test_rates_and_psnr_are_consistent():
    """Rates are fractions and the PSNR follows from the MSE."""
    report = run_simulation(SimulationConfig(n=6, trials=3000, channel=ChannelModel(p_flip=0.1), seed=9))

    for result in report.results:
        assert result.trials == 3000
        assert 0 <= result.exact_rate <= 1
        assert 0 <= result.worse_rate <= 1
        if result.mse > 0:
            assert result.psnr == pytest.approx(10 * math.log10(63 ** 2 / result.mse))


@pytest.mark.parametrize('seed', [2024, 7])
def test_counting_code_beats_thresholding(trials, seed):
    """Counting code with neighborhood reconstruction has lower MSE and more exact recoveries than binary
    thresholding, over paired trials at low noise and concentrated predictions."""
    config = SimulationConfig(n=8, trials=trials, prediction=PredictionModel('discrete-laplacian', 2.0),
                              channel=ChannelModel(p_flip=0.02), mappings=('binary', 'counting'),
                              policy=ReconstructionPolicy(radius=1), seed=seed)
    report = run_simulation(config)
    counting = report.result('counting', 'neighborhood')
    binary = report.result('binary', 'threshold')

    assert counting.mse < binary.mse
    assert counting.exact_rate > binary.exact_rate


def test_reports_are_reproducible():
    """The same configuration and seed give byte-identical reports, other seeds do not."""
    config = SimulationConfig(n=5, trials=2000, channel=ChannelModel(p_flip=0.05), seed=42, block_size=300)

    assert to_json(run_simulation(config)) == to_json(run_simulation(config))
    assert to_text(run_simulation(config)) == to_text(run_simulation(config))
    other = SimulationConfig(n=5, trials=2000, channel=ChannelModel(p_flip=0.05), seed=43, block_size=300)
    assert to_json(run_simulation(other)) != to_json(run_simulation(config))


def test_parallel_and_serial_runs_agree():
    """Worker processes do not change the result."""
    serial = SimulationConfig(n=6, trials=5000, channel=ChannelModel(p_flip=0.05), seed=5, block_size=700)
    parallel = SimulationConfig(n=6, trials=5000, channel=ChannelModel(p_flip=0.05), seed=5, block_size=700,
                                workers=3)

    assert to_json(run_simulation(serial)) == to_json(run_simulation(parallel))


def test_paired_inputs_are_shared_by_schemes():
    """Mappings are compared on the same originals: identical mappings give identical results."""
    config = SimulationConfig(n=4, trials=1000, channel=ChannelModel(p_flip=0.1), mappings=('binary', 'counting'),
                              counting_shift=0, seed=1)
    report = run_simulation(config)

    # Binary thresholding only depends on originals, predictions and flips.
    rerun = run_simulation(SimulationConfig(n=4, trials=1000, channel=ChannelModel(p_flip=0.1), mappings=('binary',),
                                            seed=1))
    assert report.result('binary', 'threshold') == rerun.result('binary', 'threshold')


def test_image_originals(data_dir):
    """Originals can be drawn from a requantized PGM image."""
    config = SimulationConfig(n=4, trials=500, prediction=PredictionModel('exact'), channel=ChannelModel(p_flip=0.0),
                              image=os.path.join(data_dir, 'gradient.pgm'), seed=2)
    report = run_simulation(config)

    assert all(result.mse == 0 for result in report.results)
    assert report.config.as_dict()['image'].endswith('gradient.pgm')


def test_image_depth_follows_maxval(tmp_path):
    """A 4-bit image simulated at n=4 keeps its pixel values."""
    path = tmp_path / 'small.pgm'
    path.write_bytes(b'P2\n2 1\n15\n15 10\n')
    config = SimulationConfig(n=4, trials=20, image=str(path))

    assert load_pixels(config).tolist() == [15, 10]


def test_image_above_maxval(tmp_path):
    path = tmp_path / 'broken.pgm'
    path.write_bytes(b'P2\n2 1\n255\n300 10\n')

    with pytest.raises(ImageFormatException):
        run_simulation(SimulationConfig(n=8, trials=20, image=str(path)))


def test_json_report_layout():
    """The JSON report echoes the configuration and the seed and uses 'inf' for perfect schemes."""
    config = SimulationConfig(n=4, trials=10, prediction=PredictionModel('exact'), channel=ChannelModel(p_flip=0.0),
                              seed=8)
    record = json.loads(to_json(run_simulation(config)))

    assert record['seed'] == 8
    assert record['config']['n'] == 4
    assert record['config']['threshold'] == 2
    assert [r['scheme'] for r in record['results']] == [
        'binary+threshold', 'binary+neighborhood', 'gray+threshold', 'gray+neighborhood', 'counting+threshold',
        'counting+neighborhood']
    assert all(r['psnr'] == 'inf' for r in record['results'])


@pytest.mark.parametrize('config, field', [
    (SimulationConfig(n=1), 'n'),
    (SimulationConfig(n=17), 'n'),
    (SimulationConfig(trials=0), 'trials'),
    (SimulationConfig(mappings=('hilbert',)), 'mappings'),
    (SimulationConfig(strategies=()), 'strategies'),
    (SimulationConfig(n=3, policy=ReconstructionPolicy(radius=4)), 'radius'),
    (SimulationConfig(threshold=-2), 'threshold'),
    (SimulationConfig(seed=-1), 'seed'),
    (SimulationConfig(workers=0), 'workers'),
    (SimulationConfig(channel=ChannelModel(p_flip=2.0)), 'p_flip'),
    (SimulationConfig(prediction=PredictionModel('oracle')), 'prediction'),
])
def test_invalid_configs(config, field):
    """Invalid configurations name the offending field."""
    with pytest.raises(ConfigurationException) as e:
        run_simulation(config)
    assert e.value.field == field
