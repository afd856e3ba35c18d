###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

import argparse
from dataclasses import dataclass
from fractions import Fraction
import json
import math
import sys
import typing as tp

from lommel import core, hyp_trig, pade, quadrature, roots
from lommel.errors import INVALID_PARAMETER_ERRORS, DomainError, LommelError, NonConvergence
from lommel.hypergeometric import hyp2f1_series
from lommel.internals import info, set_verbose
from lommel.io import dwim, tables as tables_io, triple as triple_io

__doc__ = """
The ``lommel`` command line.

Every subcommand builds an ``Output`` holding plain data (for JSON/YAML) and,
where it makes sense, a text form (CSV, or the check summary of ``verify``).
``--output PATH`` writes through ``lommel.io.dwim`` with the format taken
from the extension; otherwise the result goes to standard output in
``--format``.
"""

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_NONCONVERGENCE = 3

METHODS = ('series', 'hyp1f2', 'quadrature', 'cosquad', 'trig')
FAMILIES = ('even', 'odd', 'general')

@dataclass
class Output:
    cereal: tp.Any
    text: tp.Optional[str] = None
    default_format: str = 'json'

def parse_real(s: str) -> float:
    """ A decimal string or a ``num/den`` rational. """
    try:
        if '/' in s:
            return float(Fraction(s.strip()))
        return float(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'not a real number: {s!r}')

def parse_count(s: str) -> int:
    try:
        value = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f'not an integer: {s!r}')
    if value < 0:
        raise argparse.ArgumentTypeError(f'must be nonnegative: {s!r}')
    return value

#---------------------------------------------------------------
# subcommands

def cmd_eval(args) -> Output:
    p = core.validate_params(args.mu, args.nu)
    kw = {'tol': args.tol} if args.tol else {}
    if args.method == 'series':
        res = core.lommel_series(p, args.z, **kw)
    elif args.method == 'hyp1f2':
        res = core.lommel_hyp1f2(p, args.z, **kw)
    elif args.method == 'quadrature':
        res = quadrature.lommel_quadrature(p.mu, p.nu, args.z, **kw)
    elif args.method == 'cosquad':
        res = quadrature.lommel_cos_quadrature(p.mu, p.nu, args.z, **kw)
    else:
        if p.mu != int(p.mu) or p.mu < 0:
            raise DomainError(f'the trig method needs a nonnegative integer mu, got {p.mu}')
        res = hyp_trig.lommel_trig_integral(int(p.mu), p.nu, args.z, **kw)

    return Output({
        'mu': p.mu, 'nu': p.nu, 'z': float(args.z), 'method': args.method,
        'value': res.value, 'est_error': res.est_error,
    })

def _build_triple(args, normalization=pade.PRIMITIVE) -> pade.ApproximantTriple:
    if args.family == 'even':
        return pade.triple_even_closed(args.n, normalization=normalization)
    if args.family == 'odd':
        return pade.triple_odd_derivative(args.n, normalization=normalization)
    if args.m is None:
        raise ValueError('--family general needs --m')
    return pade.triple_general(args.m, args.n, normalization=normalization)

def cmd_approximant(args) -> Output:
    t = _build_triple(args, normalization=args.normalization)
    return Output(triple_io.to_cereal(t))

def cmd_zeros(args) -> Output:
    t = _build_triple(args)
    rs = roots.all_roots(getattr(t, args.which))
    cereal = dict(m=t.m, n=t.n, polynomial=args.which, **tables_io.roots_to_cereal(rs))
    return Output(cereal, text=tables_io.roots_to_csv(rs))

def cmd_tables(args) -> Output:
    table = (roots.table1 if args.which == 1 else roots.table2)(args.kmax)
    return Output(tables_io.table_to_cereal(table), text=tables_io.table_to_csv(table), default_format='csv')

def cmd_figdata(args) -> Output:
    data = roots.fig_data(args.family, args.nmax)
    return Output(tables_io.figdata_to_cereal(data), text=tables_io.figdata_to_csv(data), default_format='csv')

def cmd_hyp2f1trig(args) -> Output:
    value = hyp_trig.hyp2f1_trig(args.n, args.nu, args.theta)
    x = math.sin(args.theta / 2) ** 2
    series = float(hyp2f1_series(0.5 + args.nu, 0.5 - args.nu, args.n + 0.5, x))
    return Output({'n': args.n, 'nu': args.nu, 'theta': args.theta, 'value': value, 'series': series})

def cmd_verify(args) -> Output:
    from lommel.internals.verify import run_checks

    results = run_checks(only=args.only, seed=args.seed)
    for r in results:
        info(r.summary_line())
    cereal = {
        'passed': all(r.passed for r in results),
        'checks': [{'name': r.name, 'passed': r.passed, 'detail': r.detail} for r in results],
    }
    text = ''.join(r.summary_line() + '\n' for r in results)
    return Output(cereal, text=text, default_format='text')

COMMANDS = {
    'eval': cmd_eval,
    'approximant': cmd_approximant,
    'zeros': cmd_zeros,
    'tables': cmd_tables,
    'figdata': cmd_figdata,
    'hyp2f1trig': cmd_hyp2f1trig,
    'verify': cmd_verify,
}

#---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--output', '-o', help='write here instead of stdout; format from the extension (.json, .yaml, .csv, optionally .gz/.xz)')
    common.add_argument('--verbose', '-v', action='store_true', help='print progress to stderr')
    common.add_argument('--format', choices=['json', 'csv', 'text'], default=None, help='stdout format; csv and text both select the plain form')

    p = argparse.ArgumentParser(prog='lommel', description='Lommel functions and trigonometric approximants.')
    sub = p.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    s = sub.add_parser('eval', parents=[common], help='evaluate s_{mu,nu}(z)')
    s.add_argument('--mu', type=parse_real, required=True)
    s.add_argument('--nu', type=parse_real, required=True)
    s.add_argument('--z', type=parse_real, required=True)
    s.add_argument('--method', choices=METHODS, default='series')
    s.add_argument('--tol', type=parse_real, default=None)

    for name, help in [('approximant', 'print an approximant triple'), ('zeros', 'roots of A, B or C')]:
        s = sub.add_parser(name, parents=[common], help=help)
        s.add_argument('--family', choices=FAMILIES, required=True)
        s.add_argument('--n', type=parse_count, required=True)
        s.add_argument('--m', type=parse_count, default=None, help='only for --family general')
        if name == 'approximant':
            s.add_argument('--normalization', choices=[pade.PRIMITIVE, pade.RAW], default=pade.PRIMITIVE)
        else:
            s.add_argument('--which', choices=['A', 'B', 'C'], required=True)

    s = sub.add_parser('tables', parents=[common], help='relative distances of polynomial zeros to trig zeros')
    s.add_argument('--which', type=int, choices=[1, 2], required=True)
    s.add_argument('--kmax', type=parse_count, default=6)

    s = sub.add_parser('figdata', parents=[common], help='root coordinates of the A polynomials')
    s.add_argument('--family', choices=['even', 'odd'], required=True)
    s.add_argument('--nmax', type=parse_count, default=10)

    s = sub.add_parser('hyp2f1trig', parents=[common], help='closed trigonometric form of a 2F1')
    s.add_argument('--n', type=parse_count, required=True)
    s.add_argument('--nu', type=parse_real, required=True)
    s.add_argument('--theta', type=parse_real, required=True)

    s = sub.add_parser('verify', parents=[common], help='run the invariant suite')
    s.add_argument('--only', action='append', default=None, metavar='NAME', help='run only this check (repeatable)')
    s.add_argument('--seed', type=int, default=0, help='seed for the random parameter grids')

    return p

def _write_output(args, out: Output, stdout):
    if args.output:
        def write_csv(file, obj, **_kw):
            if obj.text is None:
                raise ValueError(f'{args.command} has no CSV form')
            dwim.write_text(file, obj.text)
        dwim.to_path_impl(args.output, out, to_dict=lambda obj, **_kw: obj.cereal, to_ext={'.csv': write_csv})
        return

    fmt = args.format or out.default_format
    if fmt == 'json':
        stdout.write(json.dumps(out.cereal, sort_keys=True) + '\n')
    elif out.text is not None:
        stdout.write(out.text)
    else:
        raise ValueError(f'{args.command} has no {fmt} form')

def _report(e: BaseException, stderr):
    stderr.write(json.dumps({'error': type(e).__name__, 'detail': str(e)}) + '\n')
    stderr.flush()

def run(argv: tp.Sequence[str], stdout=None, stderr=None) -> int:
    """ Run the command line on ``argv`` and return the exit code. """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit as e:
        return EXIT_INVALID if e.code not in (0, None) else EXIT_OK

    set_verbose(args.verbose)
    try:
        out = COMMANDS[args.command](args)
        _write_output(args, out, stdout)
    except INVALID_PARAMETER_ERRORS as e:
        _report(e, stderr)
        return EXIT_INVALID
    except NonConvergence as e:
        _report(e, stderr)
        return EXIT_NONCONVERGENCE
    except (ValueError, TypeError) as e:
        _report(e, stderr)
        return EXIT_INVALID
    except (LommelError, OSError) as e:
        _report(e, stderr)
        return EXIT_FAILURE
    finally:
        set_verbose(False)

    if args.command == 'verify' and not out.cereal['passed']:
        return EXIT_FAILURE
    return EXIT_OK

def main_from_cli():
    """
    Entry point for the standalone CLI wrapper.
    """
    sys.exit(run(sys.argv[1:]))
