"""Test configuration."""
import os

import pytest
from hypothesis.strategies import composite, integers

import defaults
from coding import Codeword, generate_counting


########################################################################################################################
# PY.TEST COMMAND LINE OPTIONS
########################################################################################################################
def pytest_addoption(parser):
    """Add some options to the cli argument parser."""
    parser.addoption('--trials', default=100000, type=int, help='paired trials of the simulation ordering tests')
    parser.addoption('--walks', default=10000, type=int, help='number of random even-step walks')


########################################################################################################################
# PY.TEST FIXTURES
########################################################################################################################
@pytest.fixture
def trials(request):
    """Return fixture value from cli."""
    return request.config.getoption('--trials')


@pytest.fixture
def walks(request):
    """Return fixture value from cli."""
    return request.config.getoption('--walks')


@pytest.fixture
def data_dir():
    """Return the directory holding golden files."""
    return os.path.join(os.path.dirname(os.path.realpath(__file__)), 'data')


@pytest.fixture(scope='session')
def table_n4():
    """Return the counting code of length 4."""
    return generate_counting(4)


########################################################################################################################
# HYPOTHESIS STRATEGIES
########################################################################################################################
widths = integers(min_value=defaults.min_width, max_value=defaults.max_width)

small_widths = integers(min_value=2, max_value=10)


@composite
def codewords(draw, width=None):
    """Draw a codeword of the given width (or of a random width)."""
    width = width if width is not None else draw(widths)
    return Codeword(draw(integers(min_value=0, max_value=(1 << width) - 1)), width)


@composite
def codeword_pairs(draw):
    """Draw two codewords of the same width."""
    width = draw(widths)
    return draw(codewords(width)), draw(codewords(width))
