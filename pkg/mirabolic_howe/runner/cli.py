"""Command-line interface: enumeration, actions, oracle runs and the verification suite.

Payloads go to standard output, logs to standard error. Exit codes: 0 success, 1 a check ran
and failed, 2 usage or precondition error, 3 the requested scale exceeds the work budget.
"""
import argparse
import logging
import os
import sys
import time
from fractions import Fraction

if __name__ == '__main__' and __package__ is None:
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))
    __package__ = "mirabolic_howe.runner"

from mirabolic_howe.algebra.action import act_algebra_word, act_left, act_right_printed
from mirabolic_howe.algebra.corrections import BY_ID
from mirabolic_howe.algebra.decorated import Convention, enumerate_decorated
from mirabolic_howe.algebra.generators import generator_element
from mirabolic_howe.algebra.module import Context, GeneratorToken, ModuleElement, Side
from mirabolic_howe.errors import (AmbiguousConvention, MirabolicError, NoConsistentConvention, NotDivisible,
                                   SampleDegenerate, ScaleExceeded, VerificationFailed)
from mirabolic_howe.optimize.config import DEFAULT_SAMPLES, MAX_DIMENSION, PROFILES, SUPPORTED_FIELDS
from mirabolic_howe.optimize.performance import start_monitoring
from mirabolic_howe.oracle.orbits import build_orbit_table
from mirabolic_howe.runner.serialize import element_from_text, render, serialize_element
from mirabolic_howe.utils.helpers import elapsed_since
from mirabolic_howe.verify.agreement import calibrate_normalization, calibration_result, verify_oracle_agreement
from mirabolic_howe.verify.centralizer import centralizer_report
from mirabolic_howe.verify.dimensions import verify_dimensions
from mirabolic_howe.verify.report import VerificationReport
from mirabolic_howe.verify.suite import run_profile
from mirabolic_howe.visualize.logger import Logger, configure_logging

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('expected an integer >= 1, got {}'.format(text))
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('expected an integer >= 0, got {}'.format(text))
    return value


def _field(text):
    value = int(text)
    if value not in SUPPORTED_FIELDS:
        raise argparse.ArgumentTypeError('q must be one of {}, got {}'.format(SUPPORTED_FIELDS, text))
    return value


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--output', default='json', choices=['json', 'text'], help='payload format')
    common.add_argument('--max-work', dest='max_work', default=None, type=_positive,
                        help='triple-count budget for oracle enumerations (overrides MIRABOLIC_MAX_WORK)')
    common.add_argument('--timing', action='store_true', help='include wall times in JSON reports')
    common.add_argument('--workers', default=1, type=_positive, help='processes for oracle agreement')
    common.add_argument('--profile-run', dest='profile_run', default=None, choices=['time', 'memory'],
                        help='run the command under the time or memory profiler')
    common.add_argument('--log-dir', dest='log_dir', default=None, type=str,
                        help='directory for the events.jsonl record of the run')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG')
    return common


def _context_arguments(parser, oracle=False):
    parser.add_argument('--n', required=True, type=_positive, help='number of steps of the first flag, n >= 1')
    parser.add_argument('--m', required=True, type=_positive, help='number of steps of the second flag, m >= 1')
    bound = ', d <= {} for the oracle'.format(MAX_DIMENSION) if oracle else ''
    parser.add_argument('--d', required=True, type=_nonnegative, help='dimension, d >= 0' + bound)


def parse_args(args):
    parser = argparse.ArgumentParser(description='Mirabolic q-Schur algebras: actions, oracle and verification')
    common = _common_parser()
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    basis = commands.add_parser('basis', parents=[common], help='enumerate the decorated basis')
    _context_arguments(basis)

    act = commands.add_parser('act', parents=[common], help='act by a generator token or a word')
    _context_arguments(act)
    act.add_argument('--side', default='left', choices=['left', 'right'], help='left MS_{n,d} or right MS_{m,d}')
    act.add_argument('--token', default=None, type=str,
                     help='E<h> or F<h> with 1 <= h < size, H+<a> or H-<a> with 1 <= a <= size, or L')
    act.add_argument('--word', default=None, type=str,
                     help='space separated tokens t1 t2 ...; the algebra product t1 t2 ... acts')
    act.add_argument('--basis-index', dest='basis_index', default=None, type=_nonnegative,
                     help='index into the canonical basis order')
    act.add_argument('--element', default=None, type=str, help='element in text form')
    act.add_argument('--literal', nargs='*', default=[], choices=sorted(BY_ID),
                     help='correction ids evaluated as printed')
    act.add_argument('--printed', action='store_true', help='right side: use the printed right-hand formulas')

    generator = commands.add_parser('generator', parents=[common], help='a generator as an element of MS_{n,d}')
    generator.add_argument('--n', required=True, type=_positive, help='n >= 1')
    generator.add_argument('--d', required=True, type=_nonnegative, help='d >= 0')
    generator.add_argument('--token', required=True, type=str, help='E<h>, F<h>, H+<a>, H-<a> or L')

    orbits = commands.add_parser('oracle-orbits', parents=[common], help='orbit table over F_q')
    _context_arguments(orbits, oracle=True)
    orbits.add_argument('--q', required=True, type=_field, help='field size in {}'.format(SUPPORTED_FIELDS))

    check = commands.add_parser('oracle-check', parents=[common], help='symbolic action against the oracle')
    _context_arguments(check, oracle=True)
    check.add_argument('--q', required=True, type=_field, help='field size in {}'.format(SUPPORTED_FIELDS))
    check.add_argument('--convention', default=Convention.BLM.value, choices=[c.value for c in Convention],
                       help='normalization convention')

    verify = commands.add_parser('verify', parents=[common], help='run a verification profile')
    verify.add_argument('--profile', default='desk', choices=sorted(PROFILES), help='verification grid')

    calibrate = commands.add_parser('calibrate', parents=[common], help='select the normalization convention')
    _context_arguments(calibrate, oracle=True)
    calibrate.add_argument('--q', nargs='+', default=[2, 3], type=_field, help='field sizes, at least two advised')
    calibrate.add_argument('--candidates', nargs='+', default=[c.value for c in Convention],
                           choices=[c.value for c in Convention], help='conventions to try')

    dims = commands.add_parser('dims', parents=[common], help='formula, enumeration and orbit counts')
    _context_arguments(dims, oracle=True)
    dims.add_argument('--q', nargs='*', default=[], type=_field, help='field sizes for the orbit count')

    centralizer = commands.add_parser('centralizer', parents=[common], help='double centralizer dimensions')
    _context_arguments(centralizer)
    centralizer.add_argument('--samples', nargs='+', default=[str(v) for v in DEFAULT_SAMPLES], type=Fraction,
                             help='rational values of v, avoiding 0 and +-1')
    centralizer.add_argument('--outside-hypothesis', dest='outside_hypothesis', action='store_true',
                             help='compute contexts violating n >= m >= d')

    return parser.parse_args(args)


def _tokens(args):
    if args.token is not None and args.word is not None:
        raise ValueError('give either --token or --word')
    if args.token is None and args.word is None:
        raise ValueError('one of --token or --word is required')
    text = args.token if args.token is not None else args.word
    return [GeneratorToken.parse(part) for part in text.replace(',', ' ').split()]


def _element(args):
    context = Context(args.n, args.m, args.d)
    if (args.basis_index is None) == (args.element is None):
        raise ValueError('give exactly one of --basis-index or --element')
    if args.element is not None:
        return element_from_text(args.element, context)
    basis = enumerate_decorated(args.n, args.m, args.d)
    if args.basis_index >= len(basis):
        raise ValueError('--basis-index must be < {}, got {}'.format(len(basis), args.basis_index))
    return ModuleElement.basis(basis[args.basis_index])


def _command_basis(args):
    basis = enumerate_decorated(args.n, args.m, args.d)
    payload = {'context': {'n': args.n, 'm': args.m, 'd': args.d}, 'dimension': len(basis),
               'basis': [x.to_json() for x in basis]}
    text = '\n'.join('{} {}'.format(k, x.label()) for k, x in enumerate(basis))
    return render(payload, args.output, text), True


def _command_act(args):
    side = Side(args.side)
    tokens = _tokens(args)
    element = _element(args)
    size = args.n if side is Side.LEFT else args.m
    for token in tokens:
        token.validate(size)
    if args.literal or args.printed:
        if len(tokens) != 1:
            raise ValueError('--literal and --printed apply to a single --token')
        if side is Side.LEFT:
            result = act_left(tokens[0], element, args.literal)
        elif args.printed:
            result = act_right_printed(element, tokens[0], args.literal)
        else:
            raise ValueError('--literal on the right needs --printed')
    else:
        result = act_algebra_word(side, tokens, element)
    return serialize_element(result, args.output), True


def _command_generator(args):
    token = GeneratorToken.parse(args.token)
    return serialize_element(generator_element(token, args.n, args.d), args.output), True


def _command_orbits(args):
    table = build_orbit_table(args.n, args.m, args.d, args.q, args.max_work)
    text = '\n'.join('{} {}'.format(x.label(), table.size(x)) for x in table.keys())
    return render(table.to_json(), args.output, text), True


def _report(results, args, sink):
    report = VerificationReport(results)
    for result in report.results:
        sink.check_summary(result)
    text = '\n'.join('{} {} {}'.format(r.check_id, tuple(r.context), r.status) for r in report.results)
    return render(report.to_json(args.timing), args.output, text), report.passed


def _command_oracle_check(args, sink):
    start = time.time()
    result = verify_oracle_agreement(args.n, args.m, args.d, args.q, Convention(args.convention), args.max_work,
                                     args.workers)
    result.elapsed = time.time() - start
    return _report([result], args, sink)


def _command_verify(args, sink):
    report = run_profile(args.profile, args.max_work, args.workers, sink)
    text = '\n'.join('{} {} {}'.format(r.check_id, tuple(r.context), r.status) for r in report.results)
    return render(report.to_json(args.timing), args.output, text), report.passed


def _command_calibrate(args, sink):
    calibration = calibrate_normalization(args.n, args.m, args.d, args.q, [Convention(c) for c in args.candidates],
                                          args.max_work, args.workers, sink)
    return _report([calibration_result(args.n, args.m, args.d, args.q, calibration)], args, sink)


def _command_dims(args, sink):
    return _report([verify_dimensions(args.n, args.m, args.d, args.q, args.max_work)], args, sink)


def _command_centralizer(args, sink):
    start = time.time()
    result = centralizer_report(args.n, args.m, args.d, args.samples, args.outside_hypothesis)
    result.elapsed = time.time() - start
    return _report([result], args, sink)


def run_command(args, sink=None):
    """Dispatches a parsed request.

    :return: (payload text, passed)
    """

    sink = sink or Logger(args.log_dir)
    simple = {'basis': _command_basis, 'act': _command_act, 'generator': _command_generator,
              'oracle-orbits': _command_orbits}
    checks = {'oracle-check': _command_oracle_check, 'verify': _command_verify, 'calibrate': _command_calibrate,
              'dims': _command_dims, 'centralizer': _command_centralizer}
    if args.command in simple:
        return simple[args.command](args)
    return checks[args.command](args, sink)


def _execute(args):
    payload, passed = run_command(args)
    if not passed:
        raise VerificationFailed('{} found a counterexample'.format(args.command), payload)
    return payload


def main(args=None):
    """Runs one command and returns its exit status."""

    if args is None:
        args = sys.argv[1:]
    args = parse_args(args)
    configure_logging(args.verbose)
    start = time.time()

    try:
        payload = start_monitoring(args.profile_run, _execute, args)
    except VerificationFailed as error:
        sys.stdout.write(error.payload + '\n')
        logger.error('%s', error)
        return EXIT_FAILED
    except ScaleExceeded as error:
        logger.error('scale exceeded: %s', error)
        return EXIT_SCALE
    except (NoConsistentConvention, AmbiguousConvention, SampleDegenerate, NotDivisible) as error:
        logger.error('%s: %s', type(error).__name__, error)
        return EXIT_FAILED
    except (ValueError, MirabolicError) as error:
        logger.error('usage error: %s', error)
        return EXIT_USAGE

    sys.stdout.write(payload + '\n')
    logger.info('%s finished in %s', args.command, elapsed_since(start))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
