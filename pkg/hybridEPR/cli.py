# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Command line interface of hybridEPR.

Subcommands
-----------
state
    Phased singlet amplitudes and their global/relative phase split.
chsh
    CHSH statistic at given, canonical or optimized settings.
measures
    Concurrence, entanglement of formation, fidelity and Bures distance.
sweep
    Fidelity and Bures-distance map over a parameter grid, written to file.
table1
    Measures of all five setups as CSV or Markdown.
curve
    CHSH value of the phased singlet against the relative phase.

All angles and phases are in radians.  Exit codes are 0 on success, 2 for
usage or configuration errors, 3 when a result breaks a physical bound and 4
for I/O failures.

"""

import argparse
import json
import logging
import sys

import numpy as np

import pysat

from hybridEPR.instruments import reports
from hybridEPR.instruments import sweeps
from hybridEPR.instruments.methods import grids
from hybridEPR.methods import chsh
from hybridEPR.methods.measures import measure_report
from hybridEPR.methods.phases import apply_phase
from hybridEPR.methods.phases import decompose
from hybridEPR.methods.phases import SETUP_KINDS
from hybridEPR.methods.phases import setup_from_dict
from hybridEPR.methods.phases import setup_params
from hybridEPR.methods.qstate import singlet
from hybridEPR.utils import ConfigError
from hybridEPR.utils import HybridEPRError
from hybridEPR.utils import InvariantViolation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_IO = 4

# Setup parameter flags and their destinations
SETUP_FLAGS = {'--phi-b': 'phi_b', '--mu': 'mu', '--lambda1': 'lambda1',
               '--lambda2': 'lambda2', '--d': 'd', '--lambda-b': 'lambda_b',
               '--gamma': 'gamma', '--g': 'g', '--phi-e': 'phi_e'}

# Flags whose values may start with a minus sign
_VALUE_FLAGS = tuple(SETUP_FLAGS) + ('--p1', '--p2', '--angles')

_OPTIMIZE_MODES = {'in-plane': chsh.IN_PLANE, 'sphere': chsh.FULL_SPHERE}

_BASIS_LABELS = ('|uu>', '|ud>', '|du>', '|dd>')


def _finite_float(text):
    """Argparse type for finite floats."""

    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid number {:}'.format(text))
    if not np.isfinite(value):
        raise argparse.ArgumentTypeError('{:} is not finite'.format(text))

    return value


def _range_arg(text):
    """Argparse type for 'min:max:count' ranges."""

    try:
        return grids.parse_range(text)
    except ConfigError as cerr:
        raise argparse.ArgumentTypeError(str(cerr))


def _angles_arg(text):
    """Argparse type for 'a,b,a_prime,b_prime' angle lists."""

    values = [_finite_float(val) for val in str(text).split(',')]
    if len(values) != 4:
        raise argparse.ArgumentTypeError(
            'expected 4 comma-separated angles, got {:}'.format(text))

    return values


def _join_values(argv):
    """Attach values to their flags so negative numbers are not options."""

    joined = list()
    itr = iter(argv)
    for token in itr:
        if token in _VALUE_FLAGS:
            nxt = next(itr, None)
            token = token if nxt is None else '{:}={:}'.format(token, nxt)
        joined.append(token)

    return joined


def _add_setup_params(parser):
    """Add the numeric setup-parameter flags."""

    group = parser.add_argument_group('setup parameters (radians, natural units)')
    for flag, dest in SETUP_FLAGS.items():
        group.add_argument(flag, dest=dest, type=_finite_float, default=None,
                           metavar='X')

    return


def _build_parser():
    """Construct the argument parser.

    Returns
    -------
    parser : argparse.ArgumentParser
        Top-level parser.
    subparsers : dict
        Subcommand parsers keyed by name.

    """

    parser = argparse.ArgumentParser(
        prog='hybrid-epr',
        description=' '.join(('Entangled spin pairs in hybrid geometric-phase',
                              'setups. All angles are in radians.')))
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (twice for debug)')

    setup_parent = argparse.ArgumentParser(add_help=False)
    setup_parent.add_argument('--setup', choices=sorted(SETUP_KINDS),
                              default=None, help='hybrid setup kind')
    _add_setup_params(setup_parent)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=None, metavar='FILE',
                        help='JSON file whose keys mirror the long flag names')
    common.add_argument('--json', action='store_true',
                        help='print machine-readable JSON')

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    subparsers = dict()

    subparsers['state'] = sub.add_parser(
        'state', parents=[common, setup_parent],
        help='phased singlet and its phase decomposition')
    subparsers['state'].set_defaults(func=cmd_state)

    subparsers['chsh'] = sub.add_parser(
        'chsh', parents=[common, setup_parent],
        help='CHSH statistic of the phased singlet')
    how = subparsers['chsh'].add_mutually_exclusive_group()
    how.add_argument('--angles', type=_angles_arg, default=None,
                     metavar='A,B,AP,BP', help='in-plane angles in radians')
    how.add_argument('--canonical', action='store_true',
                     help='use the settings (0, pi/4, pi/2, 3 pi/4)')
    how.add_argument('--optimize', choices=sorted(_OPTIMIZE_MODES), default=None,
                     help='maximize S over in-plane or full-sphere settings')
    subparsers['chsh'].add_argument('--coarse-points', type=int, default=None,
                                    help='coarse grid points per angle')
    subparsers['chsh'].add_argument('--restarts', type=int, default=None,
                                    help='number of refined coarse cells')
    subparsers['chsh'].set_defaults(func=cmd_chsh)

    subparsers['measures'] = sub.add_parser(
        'measures', parents=[common, setup_parent],
        help='concurrence, EoF, fidelity and Bures distance')
    subparsers['measures'].set_defaults(func=cmd_measures)

    subparsers['sweep'] = sub.add_parser(
        'sweep', parents=[common], help='fidelity and Bures distance map')
    sweep = subparsers['sweep']
    sweep.add_argument('--setup', choices=sweeps.SWEEP_KINDS, default='ac',
                       help='ac (mu, lambda_E) or hmw (d, lambda_B)')
    sweep.add_argument('--p1', type=_range_arg, default='0:4:201',
                       metavar='MIN:MAX:COUNT', help='range of mu or d')
    sweep.add_argument('--p2', type=_range_arg, default='-4:4:201',
                       metavar='MIN:MAX:COUNT',
                       help='range of lambda_E or lambda_B')
    sweep.add_argument('--quantity', choices=sweeps.QUANTITIES, default='both',
                       help='quantity summarized on stdout')
    sweep.add_argument('--out', default=None, metavar='PATH',
                       help='output file')
    sweep.add_argument('--format', choices=('csv', 'json'), default='csv',
                       help='output file format')
    sweep.add_argument('--workers', type=int, default=None,
                       help=' '.join(('threads evaluating rows, defaults to',
                                      grids.WORKERS_ENV, 'or 1')))
    sweep.set_defaults(func=cmd_sweep)

    subparsers['table1'] = sub.add_parser(
        'table1', parents=[common],
        help='measures of all five setups')
    subparsers['table1'].add_argument('--format', choices=reports.TABLE1_FORMATS,
                                      default='csv', help='table format')
    _add_setup_params(subparsers['table1'])
    subparsers['table1'].set_defaults(func=cmd_table1)

    subparsers['curve'] = sub.add_parser(
        'curve', parents=[common],
        help='CHSH value against the relative phase')
    subparsers['curve'].add_argument('--points', type=int, default=101,
                                     help='number of phases in [0, 2 pi]')
    subparsers['curve'].add_argument('--out', default=None, metavar='PATH',
                                     help='CSV output file')
    subparsers['curve'].set_defaults(func=cmd_curve)

    return parser, subparsers


def _load_config(path, known):
    """Read a JSON config file and map its keys onto parser destinations.

    Parameters
    ----------
    path : str
        JSON file holding an object.
    known : iterable of str
        Destinations accepted by the chosen subcommand.

    Returns
    -------
    defaults : dict
        Values keyed by destination.

    """

    with open(path, 'r') as fin:
        try:
            raw = json.load(fin)
        except json.JSONDecodeError as jerr:
            raise ConfigError('Unable to parse config {:}: {:}'.format(path,
                                                                       jerr))
    if not isinstance(raw, dict):
        raise ConfigError('Config {:} must hold a JSON object'.format(path))

    defaults = {key.lstrip('-').replace('-', '_'): val
                for key, val in raw.items()}
    unknown = [key for key in defaults
               if key not in known
               or key in ('command', 'func', 'config', 'verbose')]
    if len(unknown) > 0:
        raise ConfigError(' '.join(('Unknown config keys for this command:',
                                    ', '.join(unknown))))

    return defaults


def _setup_from_args(args):
    """Build the PhaseSetup selected by the setup flags."""

    if args.setup is None:
        raise ConfigError('A setup kind is required, use --setup')

    params = {'kind': args.setup}
    params.update({dest: getattr(args, dest) for dest in SETUP_FLAGS.values()
                   if getattr(args, dest) is not None})

    return setup_from_dict(params)


def _fmt(value):
    """Format a number with 10 significant digits."""

    if isinstance(value, complex):
        return '{:.10g}{:+.10g}j'.format(value.real, value.imag)
    if isinstance(value, (float, np.floating)):
        return '{:.10g}'.format(value)

    return str(value)


def _print_rows(rows):
    """Print (label, value) pairs as a fixed-width table."""

    width = max(len(label) for label, _ in rows) + 2
    for label, value in rows:
        print('{:}{:}'.format(label.ljust(width), _fmt(value)))

    return


def _print_json(obj):
    """Print an object as JSON."""

    print(json.dumps(obj, indent=2))

    return


def _setup_rows(setup):
    """Rows describing a setup."""

    return [('setup', setup.kind)] + [
        (name, value) for name, value in setup.to_dict().items()
        if name != 'kind']


def cmd_state(args):
    """Print the phased singlet and its phase decomposition."""

    setup = _setup_from_args(args)
    phased = apply_phase(singlet(), setup)
    decomp = decompose(setup)

    if args.json:
        out = {'setup': setup.to_dict(), 'amplitudes': phased.to_json()}
        out.update(decomp.to_dict())
        _print_json(out)
    else:
        rows = _setup_rows(setup)
        rows.extend(('amplitude {:}'.format(label), complex(amp))
                    for label, amp in zip(_BASIS_LABELS, phased.amp))
        rows.extend([('global_phase', decomp.global_phase),
                     ('relative_phase', decomp.relative_phase)])
        _print_rows(rows)

    return EXIT_OK


def cmd_chsh(args):
    """Print the CHSH statistic at given, canonical or optimized settings."""

    setup = _setup_from_args(args)
    phased = apply_phase(singlet(), setup)

    if args.optimize is not None:
        cfg_kwargs = dict()
        if args.coarse_points is not None:
            cfg_kwargs['coarse_grid_points_per_angle'] = args.coarse_points
        if args.restarts is not None:
            cfg_kwargs['restarts'] = args.restarts
        result = chsh.maximize_s(phased, mode=_OPTIMIZE_MODES[args.optimize],
                                 cfg=chsh.OptimizerConfig(**cfg_kwargs))
    elif args.angles is not None:
        result = chsh.s_value(phased, chsh.ChshAngles.in_plane(*args.angles))
    else:
        result = chsh.s_value(phased, chsh.ChshAngles.canonical())

    if args.json:
        _print_json(result.to_dict())
    else:
        rows = _setup_rows(setup)
        rows.extend(zip(("E(a,b)", "E(a,b')", "E(a',b)", "E(a',b')"),
                        result.expectations))
        rows.extend([('S', result.s), ('classification', result.classification)])
        _print_rows(rows)

    if result.classification == chsh.EXCEEDS_TSIRELSON:
        pysat.logger.error('S = {:.12f} exceeds the Tsirelson bound'.format(
            result.s))
        return EXIT_INVARIANT

    return EXIT_OK


def cmd_measures(args):
    """Print the measure report of a setup."""

    report = measure_report(_setup_from_args(args))

    if args.json:
        _print_json(report.to_dict())
    else:
        rows = _setup_rows(report.setup)
        rows.extend([('concurrence', report.concurrence), ('eof', report.eof),
                     ('fidelity', report.fidelity), ('bures', report.bures)])
        _print_rows(rows)

    return EXIT_OK


def cmd_sweep(args):
    """Run a sweep, write it to file and print a summary."""

    if args.out is None:
        raise ConfigError('An output path is required, use --out')

    grid = sweeps.SweepGrid(setup_kind=args.setup, param1_range=args.p1,
                            param2_range=args.p2, quantity=args.quantity)
    cells = sweeps.run_sweep(grid, n_workers=args.workers)

    if args.format == 'json':
        sweeps.write_sweep_json(cells, grid, args.out)
    else:
        sweeps.write_sweep_csv(cells, args.out)

    summary = sweeps.sweep_summary(cells, quantity=grid.quantity)
    if args.json:
        _print_json(summary)
    else:
        _print_rows([('cells', summary.pop('cells'))] + list(summary.items()))

    return EXIT_OK


def cmd_table1(args):
    """Print the measures of all five setups."""

    overrides = dict()
    for kind in SETUP_KINDS:
        given = {name: getattr(args, name) for name in setup_params(kind)
                 if getattr(args, name) is not None}
        if len(given) > 0:
            overrides[kind] = given

    table = reports.table1_report(params=overrides)

    if args.json:
        _print_json([report.to_dict() for report in table])
    else:
        sys.stdout.write(reports.format_table1(table, fmt=args.format))

    return EXIT_OK


def cmd_curve(args):
    """Print or write the CHSH value against the relative phase."""

    curve = reports.chsh_curve(num_points=args.points)

    if args.out is not None:
        curve.to_csv(args.out, index=False, float_format='%.10g',
                     lineterminator='\n')
    elif args.json:
        _print_json(curve.to_dict(orient='list'))
    else:
        sys.stdout.write(curve.to_string(index=False, float_format=_fmt))
        sys.stdout.write('\n')

    return EXIT_OK


def main(argv=None):
    """Run the command line interface.

    Parameters
    ----------
    argv : list of str or NoneType
        Arguments without the program name; sys.argv[1:] if None.
        (default=None)

    Returns
    -------
    int
        Exit code.

    """

    argv = _join_values(sys.argv[1:] if argv is None else argv)
    parser, subparsers = _build_parser()
    args = parser.parse_args(argv)

    if args.verbose > 0:
        pysat.logger.setLevel(logging.DEBUG if args.verbose > 1
                              else logging.INFO)

    try:
        if args.config is not None:
            subparsers[args.command].set_defaults(
                **_load_config(args.config, vars(args)))
            args = parser.parse_args(argv)
        return args.func(args)
    except KeyError as kerr:
        print('hybrid-epr: error: {:}'.format(kerr.args[0]), file=sys.stderr)
        return EXIT_USAGE
    except HybridEPRError as herr:
        print('hybrid-epr: error: {:}'.format(herr), file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as ierr:
        print('hybrid-epr: invariant violated: {:}'.format(ierr),
              file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as oerr:
        print('hybrid-epr: I/O error: {:}'.format(oerr), file=sys.stderr)
        return EXIT_IO
