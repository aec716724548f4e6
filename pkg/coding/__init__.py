"""A coding helper module.

This module exports the codeword and code table classes together with the
code constructions needed by the analysis, reconstruction and simulation
modules.
"""

from .code_table import CodeTable, decode, encode, is_counting_sequence, rotate_table
from .codeword import Codeword, complement
from .countingcode import GenerationTrace, generate_counting, generation_trace
from .exceptions import (CodingException, ConfigurationException, ImageFormatException, NotACountingSequenceException,
                         SearchSpaceException, ValueOutOfRangeException, WidthMismatchException,
                         WidthOutOfRangeException)
from .graycode import generate_gray, is_cyclic_gray
from .mappings import generate_binary, mapping_table, mappings
