"""Command line interface: ``bincumulants <command> ...``.

Every command prints one JSON document (keys sorted) and returns an exit
code: 0 on success, 2 for invalid input, 3 for unsupported sizes.
"""
import argparse
import logging
import sys

from .attributes import dumps, read_table, table_to_json
from .classify import FILTERS, classify
from .config import Settings
from .cumulant_space import CumulantPoint, knspace_membership, maximize_top_cumulant
from .exceptions import BinCumulantsError, UnsupportedSizeError, ValidationError
from .generators import fixture_names, get_fixture
from .hyperdet import hyperdet_cumulants, hyperdet_eval
from .models import (
    CSISplitModel, HiddenSubsetModel, csi_to_hsm, hsm_parametrization, hsm_to_csi,
    model_codimension, vanishing_report)
from .reports import (
    ModelReport, PolynomialReport, census_report, membership_report, optimizer_report,
    polynomial_report, to_document)
from .transforms import Coords, convert
from .utils import format_rational

__all__ = ['main', 'build_parser']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3

COORDS = [c.value for c in Coords]


def _m_range(text):
    low, _, high = text.partition('..')
    try:
        low = int(low)
        high = int(high) if high else low
    except ValueError:
        raise argparse.ArgumentTypeError('expected a..b, got {!r}'.format(text))
    return low, high


def build_parser():
    parser = argparse.ArgumentParser(prog='bincumulants', description='Exact binary cumulant computations')
    parser.add_argument('--log-level', default=None, help='logging level (default from BINCUMULANTS_LOG_LEVEL)')
    parser.add_argument('-o', '--output', default=None, help='write the JSON document here instead of stdout')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    p = commands.add_parser('transform', help='convert a table between coordinate systems')
    p.add_argument('table', help='table JSON file')
    p.add_argument('--from', dest='source', choices=COORDS, default=None,
                   help='assert the coordinate tag of the input')
    p.add_argument('--to', dest='target', choices=COORDS, required=True)

    p = commands.add_parser('hyperdet', help='hyperdeterminant in cumulants')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--eval', dest='table', default=None, help='evaluate at a table JSON file')
    p.add_argument('--format', choices=('json', 'text'), default='json')
    p.add_argument('--no-listing', action='store_true', help='omit the monomials')

    p = commands.add_parser('model', help='hidden subset and split models')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--subsets', help='hidden subsets, e.g. "{},12,34,1234"')
    source.add_argument('--csi', help='splits, e.g. "1|234;2|134;3|124;4|123"')
    p.add_argument('--n', type=int, default=None, help='number of variables for --subsets')
    p.add_argument('action', choices=('param', 'codim', 'verify'))
    p.add_argument('fixture', nargs='?', default=None,
                   help='generator fixture for verify: {}'.format(', '.join(fixture_names())))
    p.add_argument('--mode', choices=('symbolic', 'sampled'), default=None)
    p.add_argument('--trials', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)

    p = commands.add_parser('classify', help='orbit census of hidden subset models')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--filter', choices=FILTERS, default='nondeg')
    p.add_argument('--m', type=_m_range, default=None, help='hidden class range a..b')
    p.add_argument('--codim', action='store_true', help='attach codimensions')
    p.add_argument('--seed', type=int, default=None)

    p = commands.add_parser('optimize', help='maximize the top cumulant over the simplex')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--starts', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)

    p = commands.add_parser('member', help='test membership in the space of cumulants')
    p.add_argument('table', help='table JSON file, any coordinates')
    return parser


def _transform(args, settings):
    t = read_table(args.table, settings.max_denominator)
    if args.source and t.coords.value != args.source:
        raise ValidationError('input is tagged {}, not {}'.format(t.coords.value, args.source))
    return table_to_json(convert(t, args.target)), None


def _hyperdet(args, settings):
    poly = hyperdet_cumulants(args.n)
    if args.table:
        value = hyperdet_eval(read_table(args.table, settings.max_denominator), args.n)
        report = PolynomialReport({'n': args.n, 'terms': len(poly), 'value': format_rational(value)})
        return to_document(report), None

    doc = to_document(polynomial_report(poly, args.n, listing=not args.no_listing))
    if args.format == 'text':
        lines = ['terms: {}, zdeg: ({})'.format(doc['terms'], ','.join(str(d) for d in doc['zdeg']))]
        if 'polynomial' in doc:
            lines.append(doc['polynomial'])
        return None, '\n'.join(lines)
    return doc, None


def _read_model(args):
    if args.csi is not None:
        c = CSISplitModel.parse(args.csi)
        return csi_to_hsm(c), c
    h = HiddenSubsetModel.parse(args.subsets, args.n)
    return h, hsm_to_csi(h)


def _model(args, settings):
    h, c = _read_model(args)
    seed = settings.seed if args.seed is None else args.seed
    doc = {
        'n': h.n,
        'subsets': [label or '{}' for label in h.labels()],
        'csi': c.labels(),
        'action': args.action,
    }
    if args.action == 'param':
        param = hsm_parametrization(h).to_dict()
        doc.update(params=param['params'], coordinates=param['coordinates'])
    elif args.action == 'codim':
        doc['codimension'] = model_codimension(h, seed=seed, trials=settings.jacobian_trials)
    else:
        if args.fixture is None:
            raise ValidationError('verify needs a fixture: {}'.format(', '.join(fixture_names())))
        generators = get_fixture(args.fixture)
        mode = args.mode or ('sampled' if args.fixture == 'det4' else 'symbolic')
        trials = settings.sample_points if args.trials is None else args.trials
        verdicts = vanishing_report(generators, hsm_parametrization(h), mode=mode, trials=trials, seed=seed)
        doc.update(fixture=args.fixture, mode=mode, verdicts=verdicts, vanishes=all(verdicts))
    return to_document(ModelReport(doc)), None


def _classify(args, settings):
    seed = settings.seed if args.seed is None else args.seed
    census = classify(args.n, m_range=args.m, filter=args.filter, codimension=args.codim, seed=seed)
    return to_document(census_report(census)), None


def _optimize(args, settings):
    result = maximize_top_cumulant(args.n, starts=args.starts, seed=args.seed, settings=settings)
    return to_document(optimizer_report(result)), None


def _member(args, settings):
    pt = CumulantPoint.from_table(read_table(args.table, settings.max_denominator))
    return to_document(membership_report(pt, knspace_membership(pt, settings.max_denominator))), None


_COMMANDS = {
    'transform': _transform,
    'hyperdet': _hyperdet,
    'model': _model,
    'classify': _classify,
    'optimize': _optimize,
    'member': _member,
}


def _emit(args, text):
    if args.output:
        with open(args.output, 'w') as fp:
            fp.write(text + '\n')
    else:
        sys.stdout.write(text + '\n')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = Settings.from_env().set_defaults(log_level=args.log_level)
    except BinCumulantsError as e:
        sys.stdout.write(dumps({'error': e.kind, 'message': str(e)}) + '\n')
        return EXIT_INVALID
    logging.basicConfig(level=settings.level, stream=sys.stderr,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')

    try:
        doc, text = _COMMANDS[args.command](args, settings)
    except UnsupportedSizeError as e:
        logger.error('%s', e)
        _emit(args, dumps({'error': e.kind, 'message': str(e)}))
        return EXIT_UNSUPPORTED
    except BinCumulantsError as e:
        logger.error('%s', e)
        _emit(args, dumps({'error': e.kind, 'message': str(e)}))
        return EXIT_INVALID

    _emit(args, dumps(doc) if text is None else text)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
