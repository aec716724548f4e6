"""Monte-Carlo simulation of mis-corrected pixel values and their reconstruction."""

from .channel import flip_bits, flip_masks
from .metrics import psnr
from .models import ChannelModel, PredictionModel, SchemeResult, SimulationConfig, SimulationReport
from .pgm import PgmImage, read_pgm, requantize
from .prediction import mean_absolute_offset, offset_distribution, predict, predict_array, sample_offsets
from .report import report_record, result_rows, to_json, to_text
from .runner import evaluate_block, mapping_context, run_simulation, run_trial
