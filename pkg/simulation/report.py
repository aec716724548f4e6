"""Format simulation reports as JSON or as aligned text table."""
import json
import math
from collections import OrderedDict
from typing import Any, Dict, Union

from coding.table_io import Rows, to_text_table
from .models import SchemeResult, SimulationReport


def _number(value: float) -> Union[float, str]:
    """Return the value or the string 'inf' for infinite values, which JSON cannot represent."""
    return 'inf' if math.isinf(value) else value


def result_record(result: SchemeResult) -> Dict[str, Any]:
    """Return the JSON record of one scheme."""
    return OrderedDict([
        ('scheme', result.scheme),
        ('mapping', result.mapping),
        ('strategy', result.strategy),
        ('trials', result.trials),
        ('mse', result.mse),
        ('psnr', _number(result.psnr)),
        ('mae', result.mae),
        ('exact_rate', result.exact_rate),
        ('worse_rate', result.worse_rate),
    ])


def report_record(report: SimulationReport) -> Dict[str, Any]:
    """Return the whole report as JSON serializable dictionary."""
    return OrderedDict([
        ('seed', report.seed),
        ('config', report.config.as_dict()),
        ('results', [result_record(result) for result in report.results]),
    ])


def to_json(report: SimulationReport) -> str:
    """Return the report as JSON text."""
    return json.dumps(report_record(report), indent=2) + '\n'


def result_rows(report: SimulationReport) -> Rows:
    """Return a header and one formatted row per scheme."""
    header = ['scheme', 'trials', 'mse', 'psnr', 'mae', 'exact', 'worse']
    rows = [[result.scheme, result.trials, '{0:.6f}'.format(result.mse),
             'inf' if math.isinf(result.psnr) else '{0:.3f}'.format(result.psnr), '{0:.6f}'.format(result.mae),
             '{0:.6f}'.format(result.exact_rate), '{0:.6f}'.format(result.worse_rate)] for result in report.results]
    return header, rows


def to_text(report: SimulationReport) -> str:
    """Return the report as aligned text table preceded by the configuration."""
    config = ', '.join('{0}={1}'.format(key, value) for key, value in report.config.as_dict().items())
    return '# seed={0}, {1}\n'.format(report.seed, config) + to_text_table(result_rows(report))
