'''Build Hankel and Jacobi matrices and check their closed-form spectra.

Usage:
  %(program_name)s ctx --k <k> [--format <fmt>] [--out <path>] [-v...]
  %(program_name)s (hankel | jacobi) --tag <tag> --k <k> [--n <n>]
  %(prog_n_space)s [--format <fmt>] [--out <path>] [-v...]
  %(program_name)s poly --family <family> --k <k> [--n <n>] [--x <x>] [--m-max <m>]
  %(prog_n_space)s [--format <fmt>] [--out <path>] [-v...]
  %(program_name)s (spectrum | verify) --k <k> [--tag <tag>] [--n <n>] [--m-max <m>]
  %(prog_n_space)s [--tol <tol>] [--jobs <jobs>] [--format <fmt>] [--out <path>] [-v...]
  %(program_name)s -h | --help

Commands:

  ctx                   Print K, K', E and the nome q.
  hankel, jacobi        Write the truncated weighted Hankel or Jacobi matrix.
  poly                  Tabulate a polynomial family and its spectral points.
  spectrum              Closed-form against numerical eigenvalues.
  verify                Run every check; exit 0 only if all of them pass.

Options:

  --k <k>               Elliptic modulus in (0, 1); a comma separated list
                        runs the command once per value.
  --tag <tag>           Operator: p, q, r, s, f, g, qp, sp, fp, fpp, gp
                        (or q', s', f', f'', g'), or all. spectrum and
                        verify default to all.
  --family <family>     Polynomial family, F1 .. F6 or f, g, p, q, r, s.
  --n <n>               Truncation order (degree count for poly). Matrices
                        default to 64, spectra to max(64, log(1e-18)/log(k)).
  --x <x>               Evaluation point for poly [default: 1.0].
  --m-max <m>           Highest eigenvalue offset to report [default: 8].
  --tol <tol>           Eigenvalue tolerance [default: 1e-8].
  --jobs <jobs>         Worker threads for spectrum and verify [default: 1].
  --format <fmt>        csv or json (default json; ctx defaults to text).
  --out <path>          Write to this file instead of standard output.
  -v, --verbose         Log progress (specify twice for debug output).

Examples:
  %(program_name)s ctx --k 0.5
  %(program_name)s hankel --tag fpp --k 0.5 --n 8 --format csv
  %(program_name)s spectrum --tag p --k 0.5 --m-max 8 --n 160
  %(program_name)s verify --tag all --k 0.3,0.5,0.8 --jobs 4
'''

import csv
import io
import json
import logging
import os
import sys

import docopt
import numpy as np

from . import catalog
from .carlitz import family_spec, monic_eval, orthonormal_sequence, scaled_native, spectral_points
from .elliptic import make_context
from .operators import build_hankel, build_jacobi, resolve_tag
from .spectral import VerifyConfig, verify_many
from .utils import MODULUS, format_number

# Automatically replace %(program_name)s with the current program name in the
# documentation.
program_name = os.path.basename(sys.argv[0])
__doc__ %= {'program_name': program_name, 'prog_n_space': ' ' * len(program_name)}

DEFAULT_MATRIX_SIZE = 64
DEFAULT_DEGREES = 10
FORMATS = ('csv', 'json')


def parse_k_values(text):
    values = []
    for item in text.split(','):
        try:
            value = float(item)
        except ValueError:
            raise ValueError('--k expects numbers, got {!r}'.format(item))
        values.append(MODULUS.check(value))
    return values


def parse_int(options, name, default=None, minimum=0):
    text = options[name]
    if text is None:
        return default
    try:
        value = int(text)
    except ValueError:
        raise ValueError('{} expects an integer, got {!r}'.format(name, text))
    if value < minimum:
        raise ValueError('{} must be at least {}, got {}'.format(name, minimum, value))
    return value


def parse_tags(text):
    if text is None or text == 'all':
        return list(catalog.OPERATORS)
    return [resolve_tag(text)]


def _header(tag, k, N):
    return '# tag={} k={} N={}'.format(tag, format_number(k), N)


def _rows_csv(rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    for row in rows:
        writer.writerow([format_number(v) if isinstance(v, (float, np.floating)) else v
                         for v in row])
    return out.getvalue()


def render_ctx(ctx, fmt):
    fields = [('k', ctx.k), ('K', ctx.K), ('Kprime', ctx.Kprime), ('E', ctx.Eint), ('q', ctx.q)]
    if fmt is None:
        return ''.join('{} = {:.17g}\n'.format(name, value) for name, value in fields)
    if fmt == 'csv':
        return _rows_csv([[name for name, _ in fields], [value for _, value in fields]])
    return dict(fields)


def render_matrix(op, fmt):
    matrix = op.matrix()
    if fmt == 'csv':
        return _header(op.tag, op.k, op.N) + '\n' + _rows_csv(matrix.tolist())
    return {'tag': op.tag, 'k': op.k, 'N': op.N, 'matrix': matrix.tolist()}


def tabulate_family(spec, count, x, m_max):
    monic = []
    for n in range(count):
        try:
            monic.append(monic_eval(spec, n, x))
        except OverflowError:
            monic.append(None)
    parity = spec.entry['generating']['parity']
    points = []
    for m in range(spec.first_point, spec.first_point + m_max + 1):
        point, mass = spectral_points(spec, m)
        points.append({'m': m, 'lambda': point, 'mass': mass})
    return {
        'family': spec.family_id,
        'k': spec.k,
        'x': x,
        'monic': monic,
        'orthonormal': orthonormal_sequence(spec, x, count).tolist(),
        'scaled_native': scaled_native(spec, count, x, parity).tolist(),
        'points': points,
    }


def render_family(table, fmt):
    if fmt != 'csv':
        return table
    head = '# family={} k={} x={}\n'.format(table['family'], format_number(table['k']),
                                              format_number(table['x']))
    rows = [['n', 'monic', 'orthonormal', 'scaled_native']]
    for n, values in enumerate(zip(table['monic'], table['orthonormal'], table['scaled_native'])):
        rows.append([n] + ['' if v is None else v for v in values])
    rows.append(['m', 'lambda', 'mass'])
    rows.extend([p['m'], p['lambda'], p['mass']] for p in table['points'])
    return head + _rows_csv(rows)


def _cell(value):
    return '' if value is None else value


def render_report(report, fmt):
    if fmt != 'csv':
        return report.to_dict()
    rows = [['m', 'closed_form', 'numeric', 'rel_err', 'doubling_gap', 'eigvec_trusted',
             'eigvec_residual', 'norm_gap', 'pass']]
    for r in report.records:
        rows.append([r.m, r.closed_form, r.numeric, r.rel_err, _cell(r.doubling_gap),
                     _cell(r.eigvec_trusted), _cell(r.eigvec_residual), _cell(r.norm_gap), r.passed])
    tail = ['# commutator_residual={}'.format(
                '' if report.commutator_residual is None else format_number(report.commutator_residual)),
            '# trace_gap={}'.format('' if report.trace_gap is None else format_number(report.trace_gap)),
            '# doubling_gap={}'.format(
                '' if report.doubling_gap is None else format_number(report.doubling_gap))]
    if report.jacobi is not None:
        tail.append('# jacobi_rel_err={} jacobi_doubling_gap={}'.format(
            format_number(report.jacobi.rel_err), format_number(report.jacobi.doubling_gap)))
    tail.append('# pass={}'.format(report.passed))
    return (_header(report.tag, report.k, report.N) + '\n' + _rows_csv(rows)
            + '\n'.join(tail) + '\n')


def emit(results, fmt, path):
    """Print text/csv blocks as they are, JSON results as one object or a list."""
    if fmt == 'json':
        text = json.dumps(results[0] if len(results) == 1 else results, indent=2) + '\n'
    else:
        text = ''.join(results)
    if path:
        with open(path, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def configure_logging(verbose):
    level = logging.WARNING
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    try:
        options = docopt.docopt(__doc__, argv=argv, help=True)
    except docopt.DocoptExit as e:
        print(e, file=sys.stderr)
        return 2
    configure_logging(options['--verbose'])

    fmt = options['--format']
    try:
        if fmt is not None and fmt not in FORMATS:
            raise ValueError('--format must be csv or json, got {!r}'.format(fmt))
        k_values = parse_k_values(options['--k'])
        n = parse_int(options, '--n', minimum=2)
        m_max = parse_int(options, '--m-max', minimum=0)
        if options['ctx']:
            results = [render_ctx(make_context(k), fmt) for k in k_values]
            emit(results, fmt, options['--out'])
            return 0
        fmt = fmt or 'json'

        if options['hankel'] or options['jacobi']:
            build = build_hankel if options['hankel'] else build_jacobi
            tag = resolve_tag(options['--tag'])
            results = [render_matrix(build(tag, k, n or DEFAULT_MATRIX_SIZE), fmt)
                       for k in k_values]
            emit(results, fmt, options['--out'])
            return 0

        if options['poly']:
            x = float(options['--x'])
            results = [render_family(tabulate_family(family_spec(options['--family'], k),
                                                     n or DEFAULT_DEGREES, x, m_max), fmt)
                       for k in k_values]
            emit(results, fmt, options['--out'])
            return 0

        tol = float(options['--tol'])
        if not tol > 0.0:
            raise ValueError('--tol must be positive, got {!r}'.format(tol))
        config = VerifyConfig(n=n, m_max=m_max, tol=tol,
                              jobs=parse_int(options, '--jobs', minimum=1))
        if options['spectrum']:
            config = config._replace(eigvec_m_max=-1, jacobi_n=None)
        tags = parse_tags(options['--tag'])
    except ValueError as e:
        print('Error:', e, file=sys.stderr)
        return 2
    except (ArithmeticError, RuntimeError) as e:
        print('Error:', e, file=sys.stderr)
        return 1

    try:
        reports = verify_many(tags, k_values, config)
    except (ArithmeticError, RuntimeError) as e:
        print('Error:', e, file=sys.stderr)
        return 1
    emit([render_report(report, fmt) for report in reports], fmt, options['--out'])

    failed = [report for report in reports if not report.passed]
    for report in failed:
        for failure in report.failures:
            print('{} k={}: {}'.format(report.tag, format_number(report.k), failure),
                  file=sys.stderr)
    if options['verify'] and failed:
        return 1
    return 0


def run():
    sys.exit(main() or 0)

if __name__ == '__main__':
    run()
