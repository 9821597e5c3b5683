"""Command-line entry point.

    python run.py classify configs/documents/star2.json
    python run.py extend configs/documents/star2.json --alpha -1
    python run.py extend configs/documents/star2.json --beta 1
    python run.py extend base.json --params params.json -c configs/star_study.py

Reports go to stdout as JSON, human-readable tables and diagnostics to stderr.
Exit codes: 0 ok, 2 input error, 3 precondition violation, 4 internal
consistency failure.
"""
import argparse
import sys
from typing import Optional, Sequence

from prettytable import PrettyTable

from linrel.algebra.relation import LinearRelation, adjoint
from linrel.analysis.classify import classify, is_positive, is_quasi_null, is_selfadjoint
from linrel.analysis.spectrum import full_spectrum, spectral_radius
from linrel.errors import ConsistencyError, DimensionMismatchError, DocumentError, PreconditionError
from linrel.extensions.build_extension import build_extension
from linrel.extensions.deficiency import deficiency_index, deficiency_space
from linrel.extensions.extend import VON_NEUMANN, decompose_extension, verify_semibounded_extension
from linrel.graphs.stargraph import (star_adjoint, star_beta_for_alpha, star_closure_relation,
                                     star_extension_alpha)
from linrel.io.document import RelationDocument, emit_relation, load_document, load_params
from linrel.io.report import dump_report, make_report
from linrel.tolerances import DEFAULT_TOLERANCES, override_tolerances
from linrel.transforms.krein import krein, krein_components_check
from utils.config import Config
from utils.logger import create_logger

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_CONSISTENCY = 4

DEFAULT_CFG = dict(
    tolerances=dict(DEFAULT_TOLERANCES),
    seed=1234,
    samples=256,
    float_digits=12,
    log_level='INFO',
    log_dir=None,
    probes=None,
)


def parse_complex(text: str) -> complex:
    """``1``, ``-1j``, ``0.6+0.8j`` or ``re,im``."""
    text = text.strip().replace(' ', '')
    try:
        if ',' in text:
            re_part, im_part = text.split(',')
            return complex(float(re_part), float(im_part))
        return complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'not a complex number: {text!r}')


def get_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-c', '--config', type=str, default=None,
                        help='python config file (see configs/default.py)')
    common.add_argument('--tol-rank', type=float, default=None)
    common.add_argument('--tol-eq', type=float, default=None)
    common.add_argument('--tol-psd', type=float, default=None)
    common.add_argument('--seed', type=int, default=None)
    common.add_argument('--samples', type=int, default=None)
    common.add_argument('--log-dir', type=str, default=None)

    parser = argparse.ArgumentParser(
        prog='linrel', description='Linear relations in finite dimension')
    sub = parser.add_subparsers(dest='command', required=True)
    for name, text in [('classify', 'predicates, bounds and deficiency index'),
                       ('krein', 'Krein transform and its component identities'),
                       ('adjoint', 'adjoint relation'),
                       ('spectrum', 'point spectrum and the shape of the spectrum')]:
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument('file', help='RelationDocument JSON')

    extend = sub.add_parser('extend', parents=[common], help='selfadjoint or positive extensions')
    extend.add_argument('file', help='RelationDocument JSON of the base relation')
    mode = extend.add_mutually_exclusive_group(required=True)
    mode.add_argument('--alpha', type=float, help='semi-bounded extension at alpha')
    mode.add_argument('--beta', type=parse_complex, help='star family member S_beta')
    mode.add_argument('--params', type=str, help='ExtensionParams JSON')
    return parser.parse_args(argv)


def load_config(args: argparse.Namespace) -> Config:
    """Built-in defaults < config file < explicit flags."""
    cfg = Config(DEFAULT_CFG)
    if args.config:
        file_cfg = Config.fromfile(args.config)
        cfg = Config(Config._merge_a_into_b(file_cfg.to_dict(), cfg.to_dict()),
                     filename=args.config)
    flags = {
        'tolerances.tol_rank': args.tol_rank,
        'tolerances.tol_eq': args.tol_eq,
        'tolerances.tol_psd': args.tol_psd,
        'seed': args.seed,
        'samples': args.samples,
        'log_dir': args.log_dir,
    }
    cfg.merge_from_dict({k: v for k, v in flags.items() if v is not None})
    return cfg


def _probes(cfg: Config):
    if not cfg.get('probes'):
        return None
    return [complex(re, im) for re, im in cfg.probes]


def _relation_block(relation: LinearRelation, cfg: Config) -> dict:
    return emit_relation(relation, cfg.float_digits)


def _table(rows) -> PrettyTable:
    table = PrettyTable()
    table.field_names = ['item', 'value']
    table.align = 'l'
    for key, value in rows:
        table.add_row([key, value])
    return table


def cmd_classify(doc: RelationDocument, args, cfg: Config):
    report = classify(doc.relation, _probes(cfg))
    return report.as_dict(), None, report.to_table()


def cmd_krein(doc: RelationDocument, args, cfg: Config):
    check = krein_components_check(doc.relation)
    result = dict(relation=_relation_block(krein(doc.relation), cfg), components=check.as_dict())
    return result, None, check.to_table()


def cmd_adjoint(doc: RelationDocument, args, cfg: Config):
    adj = adjoint(doc.relation)
    result = dict(relation=_relation_block(adj, cfg))
    rows = [('dim T', doc.relation.dim), ('dim T*', adj.dim)]
    if doc.star is not None:
        distance = star_adjoint(doc.star, verify=False).distance(adj)
        result['closed_form_distance'] = distance
        rows.append(('closed form distance', f'{distance:.3e}'))
    return result, None, _table(rows)


def cmd_spectrum(doc: RelationDocument, args, cfg: Config):
    report = full_spectrum(doc.relation)
    result = report.as_dict()
    result['spectral_radius'] = spectral_radius(report)
    rows = [(f'{v:.10g}', m) for v, m in report.eigenvalues]
    rows.append(('spectrum', report.spectrum_kind))
    return result, None, _table(rows)


def _extend_alpha(doc: RelationDocument, alpha: float, cfg: Config):
    a = doc.relation
    s = build_extension(dict(type='SemiBounded', alpha=alpha), a)
    verification = verify_semibounded_extension(a, s, alpha)
    if doc.star is not None:
        closed_form, _ = star_extension_alpha(doc.star, alpha)
        verification['closed_form_distance'] = closed_form.distance(s)
        verification['beta'] = star_beta_for_alpha(doc.star, alpha)
    return s, verification, None


def _extend_beta(doc: RelationDocument, beta: complex, cfg: Config):
    if doc.star is None:
        raise PreconditionError('--beta needs a star document')
    a = doc.relation
    s = build_extension(dict(type='StarFamily', star=doc.star, beta=beta), a)
    verification = dict(
        selfadjoint=is_selfadjoint(s),
        positive=is_positive(s),
        quasi_null=is_quasi_null(s),
        closure_distance=s.distance(star_closure_relation(doc.star)),
    )
    return s, verification, None


def _extend_params(doc: RelationDocument, path: str, cfg: Config):
    a = doc.relation
    params = load_params(path, a)
    if params.formula == VON_NEUMANN:
        s = build_extension(dict(type='VonNeumann', params=params), a)
        quotient = s.dim - a.dim
        eta = deficiency_index(a, _probes(cfg))
        verification = dict(
            selfadjoint=is_selfadjoint(s),
            eta=eta,
            deficiency_plus=deficiency_space(s, 1j).dim,
            deficiency_minus=deficiency_space(s, -1j).dim,
            quotient_dim=quotient,
        )
        verification['index_formula'] = (
            verification['deficiency_plus'] + quotient == eta
            and verification['deficiency_minus'] + quotient == eta)
        return s, verification, None
    s = build_extension(dict(type='QuasiNullPositive', params=params), a)
    _, checks = decompose_extension(s, a, samples=cfg.samples, seed=cfg.seed)
    verification = dict(
        positive=is_positive(s),
        quasi_null=is_quasi_null(s),
        selfadjoint=is_selfadjoint(s),
        decomposition=checks.as_dict(),
    )
    return s, verification, checks.seed


def cmd_extend(doc: RelationDocument, args, cfg: Config):
    if args.alpha is not None:
        s, verification, seed = _extend_alpha(doc, args.alpha, cfg)
    elif args.beta is not None:
        s, verification, seed = _extend_beta(doc, args.beta, cfg)
    else:
        s, verification, seed = _extend_params(doc, args.params, cfg)
    spectrum = full_spectrum(s)
    result = dict(
        relation=_relation_block(s, cfg),
        verification=verification,
        spectrum=spectrum.as_dict(),
    )
    rows = list(verification.items())
    rows += [(f'eigenvalue {v:.10g}', m) for v, m in spectrum.eigenvalues]
    return result, seed, _table(rows)


COMMANDS = dict(
    classify=cmd_classify,
    krein=cmd_krein,
    adjoint=cmd_adjoint,
    spectrum=cmd_spectrum,
    extend=cmd_extend,
)


def _command_echo(args) -> dict:
    echo = dict(name=args.command)
    if args.command == 'extend':
        echo.update(alpha=args.alpha, beta=args.beta, params=args.params)
    return echo


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = get_args(argv)
    try:
        cfg = load_config(args)
    except (OSError, SyntaxError, KeyError, TypeError) as err:
        create_logger().error('config error: %s', err)
        return EXIT_INPUT
    log = create_logger('linrel', cfg.log_level, save_dir=cfg.log_dir)
    try:
        with override_tolerances(**cfg.tolerances):
            doc = load_document(args.file)
            result, seed, table = COMMANDS[args.command](doc, args, cfg)
            report = make_report(_command_echo(args), doc.raw, result, seed)
    except PreconditionError as err:
        log.error('precondition violated: %s', err)
        return EXIT_PRECONDITION
    except ConsistencyError as err:
        log.error('internal consistency failure: %s', err)
        return EXIT_CONSISTENCY
    except (DocumentError, DimensionMismatchError, KeyError, ValueError) as err:
        log.error('input error: %s', err)
        return EXIT_INPUT

    log.info('%s of %s\n%s', args.command, args.file, table)
    sys.stdout.write(dump_report(report))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
