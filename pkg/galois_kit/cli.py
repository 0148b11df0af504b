"""
Command-line interface: argument parsing, the command dispatch table and error mapping.
"""

import argparse
import json
import logging
import pathlib as pl
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .__version__ import __version__
from .cli_output import CommandResult, ResultPrinter, ResultStatus
from .errors import BudgetExceededError, FormatError, GaloisKitError, LawViolationError, \
    PreconditionError
from .fca import DerivationSide, ExportFormat, FuzzyContext, context_from_closure, derive, \
    derivation_pair, enumerate_concepts, export_lattice
from .file_formats import load_context, load_lattice, load_operator, load_relation, \
    operator_to_json, parse_vector, relation_to_json
from .lattice import LatticeSpec, check_residuation_distribution, classify_lattice, mv_extend, \
    validate_residuated_lattice
from .operator import AdjointDirection, DecompositionMode, InducedKind, OperatorTable, \
    RecoveryKind, apply_induced, boolean_criterion_check, classify_mapping, \
    closed_elements_check, closure_interior_check, compute_adjoint, conjugate_check, \
    decompose_operator, induced_table, inducing_relations, recover_relation, \
    type_transfer_check, verify_galois
from .relation import FuzzyRelation, relation_properties, transpose
from .sweep import DEFAULT_BUDGET, BUDGET_ENV_VAR, resolve_budget
from .temporal import AxiomSuite, TimeFrame, check_axioms, check_monadic, \
    frame_correspondence, monadic_from_equivalence, monadic_tense_bridge, \
    negation_swap_check, strong_adjoint_check, tense_from_frame

logger = logging.getLogger(__name__)

Outcome = Tuple[Any, bool]

OPERATOR_KINDS = ('phi', 'rho', 'delta', 'epsilon', 'rho_phi', 'epsilon_delta')
PAIR_MODES = ('covariant', 'reversed')


@dataclass(frozen=True)
class Command:
    """
    A subcommand: the handler, the library operation it exposes and its flags.
    """
    handler: Callable[[argparse.Namespace], Outcome]
    operation: str
    flags: Tuple[str, ...] = ()
    choices: Optional[Tuple[str, ...]] = None
    help: str = ''


def _require(args: argparse.Namespace, name: str) -> Any:
    value = getattr(args, name, None)
    if value is None:
        raise PreconditionError(f'--{name.replace("_", "-")} is required for this command')
    return value


def _lattice(args: argparse.Namespace) -> Optional[LatticeSpec]:
    path = getattr(args, 'lattice', None)
    return load_lattice(path) if path is not None else None


def _relation(args: argparse.Namespace) -> FuzzyRelation:
    relation = load_relation(_require(args, 'relation'), _lattice(args))
    if getattr(args, 'transpose', False):
        relation = transpose(relation)
    return relation


def _frame(args: argparse.Namespace) -> TimeFrame:
    return TimeFrame.from_relation(_relation(args))


def _context(args: argparse.Namespace) -> FuzzyContext:
    return load_context(_require(args, 'context'), _lattice(args))


def _operator_from_relation(relation: FuzzyRelation, kind: str,
                            budget: Optional[int]) -> OperatorTable:
    if kind == 'rho_phi':
        return induced_table(InducedKind.PHI, relation, budget).then(
            induced_table(InducedKind.RHO, relation, budget))
    if kind == 'epsilon_delta':
        return induced_table(InducedKind.DELTA, relation, budget).then(
            induced_table(InducedKind.EPSILON, relation, budget))
    return induced_table(InducedKind(kind), relation, budget)


def _operator(args: argparse.Namespace, default_kind: str = 'phi') -> OperatorTable:
    """
    The operator given by --operator, or the one induced by --relation and --kind.
    """
    if getattr(args, 'operator', None) is not None:
        return load_operator(args.operator, _lattice(args))
    kind = getattr(args, 'kind', None) or default_kind
    if kind not in OPERATOR_KINDS:
        raise PreconditionError(f'--kind {kind} does not name an induced operator')
    return _operator_from_relation(_relation(args), kind, args.budget)


def _pair(args: argparse.Namespace) -> Tuple[OperatorTable, OperatorTable, bool]:
    """
    (phi_R, rho_R) or (delta_R, epsilon_R) from --relation, or --operator with --partner.
    """
    reversed_pair = getattr(args, 'mode', None) == 'reversed'
    if getattr(args, 'operator', None) is not None:
        lattice = _lattice(args)
        return load_operator(args.operator, lattice), \
            load_operator(_require(args, 'partner'), lattice), reversed_pair
    relation = _relation(args)
    if reversed_pair:
        return induced_table(InducedKind.DELTA, relation, args.budget), \
            induced_table(InducedKind.EPSILON, relation, args.budget), True
    return induced_table(InducedKind.PHI, relation, args.budget), \
        induced_table(InducedKind.RHO, relation, args.budget), False


def _lattice_validate(args):
    report = validate_residuated_lattice(load_lattice(_require(args, 'lattice')))
    return report.to_json(), report.is_residuated


def _lattice_classify(args):
    return classify_lattice(load_lattice(_require(args, 'lattice'))).to_json(), True


def _lattice_mv(args):
    operations = mv_extend(load_lattice(_require(args, 'lattice')))
    return operations.to_json(), operations.all_laws_hold


def _lattice_distribution(args):
    report = check_residuation_distribution(load_lattice(_require(args, 'lattice')),
                                            args.max_subset)
    return report.to_json(), report.passed


def _relation_properties(args):
    return relation_properties(_relation(args)).to_json(), True


def _relation_transpose(args):
    return relation_to_json(transpose(_relation(args))), True


def _op_apply(args):
    kind = InducedKind(args.kind or 'phi')
    relation = _relation(args)
    if args.vector is None:
        return operator_to_json(induced_table(kind, relation, args.budget)), True
    source = relation.domain if kind in (InducedKind.PHI, InducedKind.DELTA) \
        else relation.codomain
    result = apply_induced(kind, relation, parse_vector(args.vector, relation.lattice, source))
    return {'index': list(result.index.names), 'values': result.labels()}, True


def _op_galois(args):
    f, g, reversed_pair = _pair(args)
    report = verify_galois(f, g, reversed_pair)
    return report.to_json(), report.holds


def _op_classify(args):
    return classify_mapping(_operator(args)).to_json(), True


def _op_adjoint(args):
    direction = AdjointDirection(args.direction or AdjointDirection.RIGHT_OF_MONOTONE.value)
    return operator_to_json(compute_adjoint(_operator(args), direction, args.budget)), True


def _op_recover(args):
    kind = RecoveryKind(args.kind or RecoveryKind.FROM_PHI.value)
    if args.operator is not None:
        op = load_operator(args.operator, _lattice(args))
    else:
        induced = {RecoveryKind.FROM_PHI: 'phi', RecoveryKind.FROM_DELTA: 'delta',
                   RecoveryKind.FROM_RHO: 'rho'}[kind]
        op = _operator_from_relation(_relation(args), induced, args.budget)
    return relation_to_json(recover_relation(op, kind, args.budget)), True


def _op_inducing(args):
    op = _operator(args)
    kind = InducedKind(args.kind or 'phi')
    relations = inducing_relations(op, kind, args.budget)
    return {'count': len(relations),
            'relations': [relation.to_json() for relation in relations]}, len(relations) <= 1


def _op_decompose(args):
    mode = DecompositionMode(args.mode or DecompositionMode.CLOSURE.value)
    relation, index = decompose_operator(_operator(args, 'epsilon_delta'), mode, args.budget)
    return {'index': list(index.names), 'relation': relation_to_json(relation)}, True


def _op_closure(args):
    return closure_interior_check(_operator(args, 'epsilon_delta')).to_json(), True


def _op_conjugate(args):
    report = conjugate_check(_relation(args), args.budget)
    return report.to_json(), report.holds


def _op_boolean(args):
    report = boolean_criterion_check(_relation(args), args.budget)
    return report.to_json(), report.equivalent


def _op_transfer(args):
    f, g, reversed_pair = _pair(args)
    report = type_transfer_check(f, g, reversed_pair)
    return report.to_json(), report.agrees


def _op_fixpoints(args):
    f, g, reversed_pair = _pair(args)
    report = closed_elements_check(f, g, reversed_pair)
    return report.to_json(), report.holds


def _concepts_payload(args):
    concepts = enumerate_concepts(_context(args), args.budget)
    if args.format == ExportFormat.DOT.value:
        return export_lattice(concepts, ExportFormat.DOT)
    payload = concepts.to_json()
    payload['count'] = len(concepts)
    return payload


def _fca_concepts(args):
    return _concepts_payload(args), True


def _fca_export(args):
    concepts = enumerate_concepts(_context(args), args.budget)
    return export_lattice(concepts, ExportFormat(args.format or ExportFormat.DOT.value)), True


def _fca_derive(args):
    ctx = _context(args)
    if args.vector is None:
        d, h = derivation_pair(ctx, args.budget)
        return {'d': d.to_json(), 'h': h.to_json()}, True
    side = DerivationSide(args.side or DerivationSide.OBJECTS_TO_ATTRS.value)
    source = ctx.objects if side is DerivationSide.OBJECTS_TO_ATTRS else ctx.attributes
    result = derive(ctx, side, parse_vector(args.vector, ctx.lattice, source))
    return {'index': list(result.index.names), 'values': result.labels()}, True


def _fca_from_closure(args):
    ctx = context_from_closure(_operator(args, 'epsilon_delta'), args.budget)
    return relation_to_json(ctx.incidence), True


def _tense_check(args):
    suite = AxiomSuite(args.suite or AxiomSuite.PAVELKA_PT.value)
    report = check_axioms(tense_from_frame(_frame(args), args.budget), suite)
    return report.to_json(), report.passed


def _tense_correspondence(args):
    report = frame_correspondence(_frame(args), args.budget)
    return report.to_json(), report.agree


def _tense_strong(args):
    f, g, reversed_pair = _pair(args)
    report = strong_adjoint_check(f, g, reversed_pair)
    return report.to_json(), report.equivalent


def _tense_swap(args):
    f, g, _ = _pair(args)
    report = negation_swap_check(f, g)
    return report.to_json(), report.agree


def _exists(args) -> OperatorTable:
    if args.operator is not None:
        return load_operator(args.operator, _lattice(args))
    return monadic_from_equivalence(_frame(args), args.budget)[0]


def _monadic_build(args):
    exists, forall = monadic_from_equivalence(_frame(args), args.budget)
    payload = {'exists': operator_to_json(exists)}
    if forall is not None:
        payload['forall'] = operator_to_json(forall)
    return payload, True


def _monadic_check(args):
    suite = AxiomSuite(args.suite or AxiomSuite.MONADIC_NEW.value)
    report = check_monadic(_exists(args), suite)
    return report.to_json(), report.passed


def _monadic_bridge(args):
    report = monadic_tense_bridge(_exists(args))
    return report.to_json(), report.agree


COMMANDS: Dict[Tuple[str, str], Command] = {
    ('lattice', 'validate'): Command(
        _lattice_validate, 'validate_residuated_lattice', ('lattice',),
        help='Check the residuated-lattice laws.'),
    ('lattice', 'classify'): Command(
        _lattice_classify, 'classify_lattice', ('lattice',),
        help='Classify a residuated lattice as BL and/or MV.'),
    ('lattice', 'mv'): Command(
        _lattice_mv, 'mv_extend', ('lattice',),
        help='Derive and check the MV operations.'),
    ('lattice', 'distribution'): Command(
        _lattice_distribution, 'check_residuation_distribution', ('lattice', 'max_subset'),
        help='Check the distribution laws over subsets.'),
    ('relation', 'properties'): Command(
        _relation_properties, 'relation_properties', ('lattice', 'relation'),
        help='Report crispness, reflexivity, symmetry and transitivity.'),
    ('relation', 'transpose'): Command(
        _relation_transpose, 'transpose', ('lattice', 'relation'),
        help='Print the inverse relation.'),
    ('op', 'apply'): Command(
        _op_apply, 'apply_induced', ('lattice', 'relation', 'kind', 'vector'),
        choices=('phi', 'rho', 'delta', 'epsilon'),
        help='Apply an induced operator to --vector, or print its table.'),
    ('op', 'galois'): Command(
        _op_galois, 'verify_galois', ('lattice', 'relation', 'operator', 'partner', 'mode'),
        help='Check the (reversed) Galois connection of a pair.'),
    ('op', 'classify'): Command(
        _op_classify, 'classify_mapping', ('lattice', 'relation', 'operator', 'kind'),
        choices=OPERATOR_KINDS, help='Report the mapping type of an operator.'),
    ('op', 'adjoint'): Command(
        _op_adjoint, 'compute_adjoint',
        ('lattice', 'relation', 'operator', 'kind', 'direction'),
        choices=OPERATOR_KINDS, help='Construct the Galois partner of an operator.'),
    ('op', 'recover'): Command(
        _op_recover, 'recover_relation', ('lattice', 'relation', 'operator', 'kind'),
        choices=tuple(kind.value for kind in RecoveryKind),
        help='Recover the relation inducing an operator.'),
    ('op', 'inducing'): Command(
        _op_inducing, 'inducing_relations', ('lattice', 'relation', 'operator', 'kind'),
        choices=('phi', 'rho', 'delta', 'epsilon'),
        help='List every relation inducing an operator.'),
    ('op', 'decompose'): Command(
        _op_decompose, 'decompose_operator', ('lattice', 'relation', 'operator', 'kind', 'mode'),
        choices=OPERATOR_KINDS, help='Decompose a closure or interior operator.'),
    ('op', 'closure'): Command(
        _op_closure, 'closure_interior_check', ('lattice', 'relation', 'operator', 'kind'),
        choices=OPERATOR_KINDS, help='Check closure and interior properties.'),
    ('op', 'conjugate'): Command(
        _op_conjugate, 'conjugate_check', ('lattice', 'relation'),
        help='Check the negation conjugates of phi and rho.'),
    ('op', 'boolean'): Command(
        _op_boolean, 'boolean_criterion_check', ('lattice', 'relation'),
        help='Compare submultiplicativity of phi with crispness.'),
    ('op', 'transfer'): Command(
        _op_transfer, 'type_transfer_check',
        ('lattice', 'relation', 'operator', 'partner', 'mode'),
        help='Check that a Galois pair transfers mapping types.'),
    ('op', 'fixpoints'): Command(
        _op_fixpoints, 'closed_elements_check',
        ('lattice', 'relation', 'operator', 'partner', 'mode'),
        help='Compare closed elements with the images of a Galois pair.'),
    ('fca', 'concepts'): Command(
        _fca_concepts, 'enumerate_concepts', ('lattice', 'context', 'format'),
        help='Enumerate all concepts of a context.'),
    ('fca', 'export'): Command(
        _fca_export, 'export_lattice', ('lattice', 'context', 'format'),
        help='Export the Hasse diagram of the concept lattice.'),
    ('fca', 'derive'): Command(
        _fca_derive, 'derive', ('lattice', 'context', 'side', 'vector'),
        help='Apply a derivation operator, or print both tables.'),
    ('fca', 'from-closure'): Command(
        _fca_from_closure, 'context_from_closure', ('lattice', 'relation', 'operator', 'kind'),
        choices=OPERATOR_KINDS, help='Build a context reproducing a closure operator.'),
    ('tense', 'check'): Command(
        _tense_check, 'check_axioms', ('lattice', 'relation', 'suite', 'transpose'),
        choices=('boolean_B', 'mv_T', 'pavelka_PT'),
        help='Check a tense axiom suite on the operators of a frame.'),
    ('tense', 'correspondence'): Command(
        _tense_correspondence, 'frame_correspondence', ('lattice', 'relation', 'transpose'),
        help='Compare frame properties with operator properties.'),
    ('tense', 'strong'): Command(
        _tense_strong, 'strong_adjoint_check',
        ('lattice', 'relation', 'operator', 'partner', 'mode'),
        help='Check the constant-exchange laws of a Galois pair.'),
    ('tense', 'swap'): Command(
        _tense_swap, 'negation_swap_check', ('lattice', 'relation', 'operator', 'partner'),
        help='Check that strong adjointness survives negation conjugates.'),
    ('monadic', 'build'): Command(
        _monadic_build, 'monadic_from_equivalence', ('lattice', 'relation'),
        help='Build the monadic operators of a fuzzy equivalence.'),
    ('monadic', 'check'): Command(
        _monadic_check, 'check_monadic', ('lattice', 'relation', 'operator', 'suite'),
        choices=('monadic_new', 'monadic_original'),
        help='Check a monadic axiom suite.'),
    ('monadic', 'bridge'): Command(
        _monadic_bridge, 'monadic_tense_bridge', ('lattice', 'relation', 'operator'),
        help='Compare the monadic and tense readings of an operator.'),
}


def _add_flag(parser: argparse.ArgumentParser, flag: str, command: Command) -> None:
    if flag in ('lattice', 'relation', 'context', 'operator', 'partner'):
        parser.add_argument(f'--{flag}', type=pl.Path, metavar='FILE',
                            help=f'{flag.capitalize()} file.')
    elif flag == 'vector':
        parser.add_argument('--vector', metavar='LIST',
                            help='Comma-separated carrier labels, e.g. "0,1/2".')
    elif flag in ('kind', 'suite'):
        parser.add_argument(f'--{flag}', choices=command.choices)
    elif flag == 'mode':
        modes = PAIR_MODES + tuple(mode.value for mode in DecompositionMode)
        parser.add_argument('--mode', choices=modes,
                            help='covariant/reversed for pairs, interior/closure for '
                                 'decompositions.')
    elif flag == 'direction':
        parser.add_argument('--direction', choices=[d.value for d in AdjointDirection])
    elif flag == 'side':
        parser.add_argument('--side', choices=[s.value for s in DerivationSide])
    elif flag == 'format':
        parser.add_argument('--format', choices=[f.value for f in ExportFormat],
                            default=ExportFormat.JSON.value)
    elif flag == 'max_subset':
        parser.add_argument('--max-subset', type=int, dest='max_subset',
                            help='Largest subset size checked.')
    elif flag == 'transpose':
        parser.add_argument('--transpose', action='store_true',
                            help='Use the inverse frame relation, i.e. G(x)(i) = meet over iRj '
                                 'of x(j).')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        'galois-kit',
        description='Exhaustive checks for fuzzy relations, their Galois connections, closure '
                    'operators, concept lattices and tense/monadic operators.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--budget', type=int, metavar='N',
                        help=f'Maximal number of enumerated rows (default {DEFAULT_BUDGET}, '
                             f'or ${BUDGET_ENV_VAR}).')
    parser.add_argument('--out', metavar='FILE', help='Write the output to a file.')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='Log debug information to stderr.')

    groups = parser.add_subparsers(dest='group', metavar='GROUP', required=True)
    group_parsers: Dict[str, argparse._SubParsersAction] = {}
    for (group, name), command in COMMANDS.items():
        if group not in group_parsers:
            group_parsers[group] = groups.add_parser(group).add_subparsers(
                dest='command', metavar='COMMAND', required=True)
        sub = group_parsers[group].add_parser(name, help=command.help)
        for flag in command.flags:
            _add_flag(sub, flag, command)
        sub.set_defaults(command_key=(group, name))
    return parser


def _defaults(args: argparse.Namespace) -> argparse.Namespace:
    for name in ('lattice', 'relation', 'context', 'operator', 'partner', 'vector', 'kind',
                 'suite', 'mode', 'direction', 'side', 'format', 'max_subset'):
        if not hasattr(args, name):
            setattr(args, name, None)
    return args


def _execute(args: argparse.Namespace) -> CommandResult:
    command = COMMANDS[args.command_key]
    logger.debug('Running %s (%s)', ' '.join(args.command_key), command.operation)
    try:
        args.budget = resolve_budget(args.budget)
        payload, holds = command.handler(args)
    except LawViolationError as error:
        return CommandResult(ResultStatus.LAW_VIOLATION,
                             {'law': error.law, 'witness': list(error.witness or ())},
                             [str(error)])
    except BudgetExceededError as error:
        return CommandResult(ResultStatus.BUDGET_EXCEEDED, diagnostics=[str(error)])
    except FormatError as error:
        return CommandResult(ResultStatus.IO_ERROR, diagnostics=[str(error)])
    except PreconditionError as error:
        witness = getattr(error, 'witness', None)
        payload = {'witness': list(witness)} if witness else None
        return CommandResult(ResultStatus.PRECONDITION_ERROR, payload, [str(error)])
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as error:
        return CommandResult(ResultStatus.IO_ERROR, diagnostics=[str(error)])
    except GaloisKitError as error:
        return CommandResult(ResultStatus.PRECONDITION_ERROR, diagnostics=[str(error)])

    status = ResultStatus.OK if holds else ResultStatus.LAW_VIOLATION
    return CommandResult(status, payload)


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """
    Parses the arguments and executes one command. Errors are mapped to result states instead
    of being raised.

    :param argv: Arguments without the program name; defaults to sys.argv[1:].
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as error:
        if error.code in (0, None):
            raise
        return CommandResult(ResultStatus.PRECONDITION_ERROR, diagnostics=['invalid arguments'])

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    result = _execute(_defaults(args))
    result.out_path = args.out
    return result


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs one command, prints the result and returns the exit code.
    """
    result = run(argv)
    try:
        ResultPrinter().print_result(result)
    except OSError as error:
        print(f"Could not write output: {error}", file=sys.stderr)
        return ResultStatus.IO_ERROR.exit_code
    return result.exit_code
