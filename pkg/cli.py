#!/usr/bin/env python3
"""Generate, verify and simulate counting codes from the command line.

Exit status is 0 on success, 1 if a verification fails and 2 on usage or
configuration errors.
"""
import json
import logging
import sys
from typing import Callable, List, Optional, Tuple

import configargparse as argparse

import defaults
from analysis import (as_record, check_theorem1, check_theorem3, check_theorem4, check_theorem5, near_k_profile,
                      search_constant_even_near1)
from coding import (CodingException, Codeword, ConfigurationException, ValueOutOfRangeException, generate_counting,
                    generate_gray, generation_trace, mapping_table, mappings, rotate_table)
from coding.functions import to_bit_string
from coding.table_io import format_rows, formats, table_rows
from reconstruction import ReconstructionPolicy, TieBreak, candidates, reconstruct, threshold_reconstruct
from simulation import ChannelModel, PredictionModel, SimulationConfig, run_simulation
from simulation import report as simulation_report
from simulation.models import channel_kinds, prediction_kinds, strategy_names

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

Result = Tuple[str, int]


def probabilities(text: str) -> Tuple[float, ...]:
    """Parse comma separated probabilities."""
    try:
        return tuple(float(p) for p in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated numbers, got {0!r}'.format(text))


def required_n(args: argparse.Namespace) -> int:
    """Return the width or raise if it was not given."""
    if args.n is None:
        raise ConfigurationException('n', 'the option --n is required for {0}'.format(args.command))
    return args.n


def gen_gray(args: argparse.Namespace) -> Result:
    """Print the binary-reflected Gray code."""
    return format_rows(table_rows(generate_gray(required_n(args))), args.format or 'csv'), EXIT_OK


def gen_counting(args: argparse.Namespace) -> Result:
    """Print the new counting code, optionally rotated or with all construction steps."""
    n = required_n(args)
    if args.trace:
        trace = generation_trace(n)
        p = len(trace.start)
        columns = dict(start=[to_bit_string(trace.start[k], n - 1) if k < p else '' for k in range(2 * p)],
                       mirrored=[to_bit_string(code, n - 1) for code in trace.mirrored],
                       complemented=[to_bit_string(code, n - 1) for code in trace.complemented])
        return format_rows(table_rows(trace.table, columns), args.format or 'csv'), EXIT_OK

    return format_rows(table_rows(rotate_table(generate_counting(n), args.shift)), args.format or 'csv'), EXIT_OK


def profile(args: argparse.Namespace) -> Result:
    """Print a table with codewords and their near-k distances."""
    table = mapping_table(args.mapping, required_n(args), shift=args.shift)
    columns = {'near-{0}'.format(k): near_k_profile(table, k) for k in args.k or (1, 2)}
    return format_rows(table_rows(table, columns), args.format or 'csv'), EXIT_OK


def verify(args: argparse.Namespace) -> Result:
    """Verify the distance theorems on the counting code and print a verdict table."""
    n = required_n(args)
    table = generate_counting(n)
    checks = [check_theorem1, check_theorem3] + ([check_theorem4] if n >= 3 else []) + [check_theorem5]
    verdicts = [check(table) for check in checks]
    for verdict in verdicts:
        logging.info('%s for n=%d: %s', verdict.theorem, verdict.n, 'pass' if verdict.passed else 'FAIL')

    status = EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAILED
    if args.format == 'json':
        return json.dumps([as_record(v) for v in verdicts], indent=2, sort_keys=True) + '\n', status

    header = ['theorem', 'n', 'pass', 'details']
    rows = [[v.theorem, v.n, 'pass' if v.passed else 'FAIL', json.dumps(as_record(v)['details'], sort_keys=True)]
            for v in verdicts]
    return format_rows((header, rows), args.format or 'table'), status


def reconstruct_command(args: argparse.Namespace) -> Result:
    """Print the reconstructed value of a decoded codeword given a prediction."""
    decoded = Codeword.from_string(args.decoded)
    n = args.n if args.n is not None else decoded.width
    table = mapping_table(args.mapping, n, shift=args.shift)
    policy = ReconstructionPolicy(args.radius, not args.no_center, TieBreak(args.tie_break))

    if args.strategy == 'threshold':
        if not 0 <= args.predicted <= table.maxval:
            raise ValueOutOfRangeException('prediction must be in 0..{0}, got {1}'.format(table.maxval, args.predicted))
        value = threshold_reconstruct(table.decode(decoded), args.predicted, args.threshold)
        options = []
    else:
        value = reconstruct(decoded, args.predicted, table, policy)
        options = [dict(value=v, codeword=str(cw)) for v, cw in candidates(decoded, table, policy)]

    if args.format == 'json':
        record = dict(decoded=str(decoded), decoded_value=table.decode(decoded), predicted=args.predicted,
                      strategy=args.strategy, candidates=options, output=value)
        return json.dumps(record, indent=2, sort_keys=True) + '\n', EXIT_OK
    return '{0}\n'.format(value), EXIT_OK


def search_even(args: argparse.Namespace) -> Result:
    """Search exhaustively for a counting sequence with constant even near-1 distance."""
    n = required_n(args)
    witness = search_constant_even_near1(n, args.l, workers=args.workers)
    status = EXIT_OK if witness is None else EXIT_FAILED
    sequence = None if witness is None else [to_bit_string(w, n) for w in witness]

    if args.format == 'json':
        return json.dumps(dict(n=n, l=args.l, witness=sequence), indent=2, sort_keys=True) + '\n', status
    return '{0}\n'.format('none' if sequence is None else ' '.join(sequence)), status


def simulate(args: argparse.Namespace) -> Result:
    """Run the Monte-Carlo simulation and print its report."""
    config = SimulationConfig(
        n=args.n if args.n is not None else defaults.width,
        trials=args.trials,
        prediction=PredictionModel(args.prediction, args.prediction_scale),
        channel=ChannelModel(args.channel, args.p_flip, args.flip_counts or ()),
        mappings=tuple(args.mapping or mappings),
        strategies=tuple(args.strategy or strategy_names),
        policy=ReconstructionPolicy(args.radius, not args.no_center, TieBreak(args.tie_break)),
        threshold=args.threshold,
        counting_shift=args.counting_shift,
        seed=args.seed,
        workers=args.workers,
        block_size=args.block_size,
        image=args.image,
    )
    report = run_simulation(config)
    if args.format == 'json':
        return simulation_report.to_json(report), EXIT_OK
    if args.format == 'csv':
        return format_rows(simulation_report.result_rows(report), 'csv'), EXIT_OK
    return simulation_report.to_text(report), EXIT_OK


def add_policy_arguments(parser: argparse.ArgumentParser) -> None:
    """Add the options of the neighborhood reconstruction."""
    parser.add_argument('--radius', type=int, default=defaults.radius, help='radius of the Hamming ball')
    parser.add_argument('--no-center', action='store_true', help='do not let the decoded codeword compete')
    parser.add_argument('--tie-break', default=TieBreak.SMALLER_VALUE.value, choices=[t.value for t in TieBreak],
                        help='preferred value among equidistant candidates')


def build_parser() -> argparse.ArgumentParser:
    """Return the parser with one sub parser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', type=int, help='bit width of the codewords')
    common.add_argument('--format', choices=formats, help='output format')
    common.add_argument('--seed', type=int, default=defaults.seed, help='master seed of random draws')
    common.add_argument('--out', help='write output to this file instead of standard output')
    common.add_argument('-v', '--verbose', action='store_true', help='be more verbose')
    common.add_argument('-q', '--quiet', action='store_true', help='be quiet')

    parser = argparse.ArgumentParser(description='Counting codes protecting near-1 and near-2 pixel values.',
                                     formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    def add(name: str, handler: Callable[[argparse.Namespace], Result], help_: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_, description=help_,
                                    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        sub.set_defaults(handler=handler)
        return sub

    add('gen-gray', gen_gray, 'print the binary-reflected Gray code')

    sub = add('gen-counting', gen_counting, 'print the new counting code')
    sub.add_argument('--shift', type=int, default=0, help='rotate the code by this many values')
    sub.add_argument('--trace', action='store_true', help='print all construction steps')

    sub = add('profile', profile, 'print near-k Hamming distances of a mapping')
    sub.add_argument('--mapping', choices=list(mappings), default='counting', help='value to codeword mapping')
    sub.add_argument('--k', type=int, action='append', help='neighbor offset (repeatable, default 1 and 2)')
    sub.add_argument('--shift', type=int, default=0, help='rotate the code by this many values')

    add('verify', verify, 'verify the distance theorems for the counting code')

    sub = add('reconstruct', reconstruct_command, 'reconstruct a decoded codeword with a prediction')
    sub.add_argument('--decoded', required=True, help='decoded codeword as bit string')
    sub.add_argument('--predicted', type=int, required=True, help='predicted pixel value')
    sub.add_argument('--mapping', choices=list(mappings), default='counting', help='value to codeword mapping')
    sub.add_argument('--shift', type=int, default=0, help='rotate the code by this many values')
    sub.add_argument('--strategy', choices=strategy_names, default='neighborhood', help='reconstruction strategy')
    sub.add_argument('--threshold', type=int, default=1, help='threshold of the thresholding strategy')
    add_policy_arguments(sub)

    sub = add('search-even', search_even, 'search a counting sequence with constant even near-1 distance')
    sub.add_argument('--l', type=int, required=True, help='even near-1 distance')
    sub.add_argument('--workers', type=int, default=1, help='number of worker processes')

    sub = add('simulate', simulate, 'run the Monte-Carlo reconstruction simulation')
    sub.add_argument('-c', '--config', is_config_file=True, help='config file path')
    sub.add_argument('--trials', type=int, default=defaults.trials, help='number of trials')
    sub.add_argument('--prediction', choices=prediction_kinds, default=defaults.prediction_kind,
                     help='prediction error model')
    sub.add_argument('--prediction-scale', type=float, default=defaults.prediction_scale,
                     help='offset bound or Laplacian scale of the prediction error')
    sub.add_argument('--channel', choices=channel_kinds, default=defaults.channel_kind, help='bit error model')
    sub.add_argument('--p-flip', type=float, default=defaults.p_flip, help='probability of a bit flip')
    sub.add_argument('--flip-counts', type=probabilities, help='comma separated probabilities of 0, 1, ..., m flips')
    sub.add_argument('--mapping', choices=list(mappings), action='append', help='mapping to test (repeatable)')
    sub.add_argument('--strategy', choices=strategy_names, action='append', help='strategy to test (repeatable)')
    sub.add_argument('--threshold', type=int, help='threshold of the thresholding strategy (default 2^(n-3))')
    sub.add_argument('--counting-shift', type=int, default=0, help='rotate the counting code by this many values')
    sub.add_argument('--workers', type=int, default=defaults.workers, help='number of worker processes')
    sub.add_argument('--block-size', type=int, default=defaults.block_size, help='trials per random block')
    sub.add_argument('--image', help='8-bit PGM image to draw original values from')
    add_policy_arguments(sub)

    return parser


def write_output(output: str, filename: Optional[str]) -> None:
    """Write the output to the file or to standard output if no file is given."""
    if not filename:
        sys.stdout.write(output)
        return
    try:
        with open(filename, 'w') as f:
            f.write(output)
    except OSError as e:
        raise ConfigurationException('out', 'cannot write {0}: {1}'.format(filename, e.strerror))


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command given by argv and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    elif args.quiet:
        logging.basicConfig(level=logging.WARNING)
    else:
        logging.basicConfig(level=logging.INFO)

    try:
        output, status = args.handler(args)
        write_output(output, args.out)
    except CodingException as e:
        print('{0}: error: {1}'.format(args.command, e), file=sys.stderr)
        return EXIT_USAGE
    return status


if __name__ == '__main__':
    sys.exit(main())
