"""
Tests of the command-line interface: command coverage, result states and output.
"""
import io
import json
import os
import pathlib as pl
import tempfile
import unittest
from unittest import TestCase, mock

import galois_kit
from galois_kit.cli import COMMANDS, main, run
from galois_kit.cli_output import CommandResult, ResultPrinter, ResultStatus
from galois_kit.file_formats import load_relation, relation_to_json
from galois_kit.sweep import BUDGET_ENV_VAR

TEST_FILES = pl.Path(__file__).parent / 'test_files'


def path(name: str) -> str:
    return str(TEST_FILES / name)


class TestCommandTable(TestCase):
    """
    Tests that every library operation has exactly one command.
    """

    def test_operations(self):
        """
        The commands expose each operation once.
        """
        operations = [command.operation for command in COMMANDS.values()]
        self.assertEqual(len(operations), len(set(operations)))
        self.assertEqual({
            'validate_residuated_lattice', 'classify_lattice', 'mv_extend',
            'check_residuation_distribution', 'relation_properties', 'transpose',
            'apply_induced', 'verify_galois', 'classify_mapping', 'compute_adjoint',
            'recover_relation', 'inducing_relations', 'decompose_operator',
            'closure_interior_check', 'conjugate_check', 'boolean_criterion_check',
            'type_transfer_check', 'closed_elements_check', 'enumerate_concepts',
            'export_lattice', 'derive', 'context_from_closure', 'check_axioms',
            'frame_correspondence', 'strong_adjoint_check', 'negation_swap_check',
            'monadic_from_equivalence', 'check_monadic', 'monadic_tense_bridge',
        }, set(operations))


class TestCommands(TestCase):
    """
    Tests individual commands and their result states.
    """

    def test_lattice_validate(self):
        """
        The five-element Lukasiewicz chain is a residuated lattice.
        """
        result = run(['lattice', 'validate', '--lattice', path('luk5.json')])
        self.assertEqual(ResultStatus.OK, result.status)
        self.assertTrue(result.payload['is_residuated'])

    def test_broken_lattice(self):
        """
        A broken product table is a law violation with the witness in the payload.
        """
        result = run(['lattice', 'validate', '--lattice', path('custom_broken.json')])
        self.assertEqual(ResultStatus.LAW_VIOLATION, result.status)
        self.assertEqual(1, result.exit_code)
        self.assertEqual({'law': 'adjointness', 'witness': ['1/2', '1/2', '0']}, result.payload)

    def test_apply_vector(self):
        """
        phi(1,0) = (1,1/2) for the example relation.
        """
        result = run(['op', 'apply', '--relation', path('r.json'), '--kind', 'phi',
                      '--vector', '1,0'])
        self.assertEqual(ResultStatus.OK, result.status)
        self.assertEqual({'index': ['u', 'v'], 'values': ['1', '1/2']}, result.payload)

    def test_recover_round_trip(self):
        """
        Recovering from phi of a relation gives the relation back.
        """
        result = run(['op', 'recover', '--relation', path('r.json'), '--kind', 'from_phi'])
        self.assertEqual(ResultStatus.OK, result.status)
        self.assertEqual(relation_to_json(load_relation(TEST_FILES / 'r.json')), result.payload)

    def test_galois_pair(self):
        """
        The induced pairs of a relation are Galois connections.
        """
        for mode in ('covariant', 'reversed'):
            result = run(['op', 'galois', '--relation', path('r.json'), '--mode', mode])
            self.assertEqual(ResultStatus.OK, result.status)
            self.assertTrue(result.payload['holds'])

    def test_concepts_dot(self):
        """
        The full context has a single concept node.
        """
        result = run(['fca', 'concepts', '--context', path('all_ones.csv'),
                      '--lattice', path('boolean.json'), '--format', 'dot'])
        self.assertEqual(ResultStatus.OK, result.status)
        self.assertEqual('digraph concepts {\n\tnode [shape=box];\n'
                         '\tc0 [label="(1,1)|(1,1)"];\n}\n', result.render())

    def test_concepts_json(self):
        """
        The JSON payload counts the concepts.
        """
        result = run(['fca', 'concepts', '--context', path('identity.csv'),
                      '--lattice', path('boolean.json')])
        self.assertEqual(4, result.payload['count'])
        self.assertEqual([[0, 1], [0, 2], [1, 3], [2, 3]], result.payload['edges'])

    def test_tense_violation(self):
        """
        A graded frame fails the MV tense axioms.
        """
        result = run(['tense', 'check', '--relation', path('frame_point_half.json'),
                      '--suite', 'mv_T'])
        self.assertEqual(ResultStatus.LAW_VIOLATION, result.status)
        self.assertEqual(['G', '(0)', '(0)'], result.payload['witnesses']['T3'])

    def test_monadic(self):
        """
        The graded equivalence fails the original monadic axioms; the crisp preorder is no
        equivalence at all.
        """
        result = run(['monadic', 'check', '--relation', path('frame_half.json'),
                      '--suite', 'monadic_original'])
        self.assertEqual(ResultStatus.LAW_VIOLATION, result.status)
        self.assertEqual(['(0,1/2)'], result.payload['witnesses']['E5'])
        result = run(['monadic', 'build', '--relation', path('frame_crisp.json')])
        self.assertEqual(ResultStatus.PRECONDITION_ERROR, result.status)

    def test_not_decomposable(self):
        """
        The scalar-law witness is reported with a precondition error.
        """
        result = run(['op', 'decompose', '--operator', path('closure_not_decomposable.json'),
                      '--mode', 'closure'])
        self.assertEqual(ResultStatus.PRECONDITION_ERROR, result.status)
        self.assertEqual({'witness': ['1/2', '(1/2)']}, result.payload)

    def test_unsupported_structure(self):
        """
        MV operations on a Goedel chain are a precondition error.
        """
        result = run(['lattice', 'mv', '--lattice', path('goedel3.json')])
        self.assertEqual(ResultStatus.PRECONDITION_ERROR, result.status)
        self.assertEqual(2, result.exit_code)


class TestErrorStates(TestCase):
    """
    Tests the mapping of failures to result states.
    """

    def test_malformed_and_missing_files(self):
        """
        Unreadable inputs are I/O errors.
        """
        for name in ('r_malformed.json', 'r_bad_label.json', 'missing.json',
                     'r_entries_not_list.json', 'r_name_not_string.json',
                     'r_domain_not_string.json', 'r_not_utf8.json'):
            result = run(['relation', 'properties', '--relation', path(name)])
            self.assertEqual(ResultStatus.IO_ERROR, result.status, name)
            self.assertEqual(4, result.exit_code)
            self.assertTrue(result.diagnostics)
        result = run(['fca', 'concepts', '--context', path('not_utf8.csv'),
                      '--lattice', path('boolean.json')])
        self.assertEqual(ResultStatus.IO_ERROR, result.status)
        self.assertIn('not UTF-8 encoded', result.diagnostics[0])

    def test_bad_arguments(self):
        """
        Unknown choices and missing inputs are precondition errors.
        """
        self.assertEqual(ResultStatus.PRECONDITION_ERROR,
                         run(['op', 'apply', '--kind', 'bogus']).status)
        self.assertEqual(ResultStatus.PRECONDITION_ERROR,
                         run(['relation', 'properties']).status)

    def test_budget(self):
        """
        The budget flag and the environment variable limit the enumeration.
        """
        argv = ['op', 'apply', '--relation', path('r.json')]
        self.assertEqual(ResultStatus.BUDGET_EXCEEDED, run(['--budget', '5'] + argv).status)
        with mock.patch.dict(os.environ, {BUDGET_ENV_VAR: '5'}):
            self.assertEqual(3, run(argv).exit_code)
            self.assertEqual(ResultStatus.OK, run(['--budget', '9'] + argv).status)


class TestOutput(TestCase):
    """
    Tests rendering and writing of results.
    """

    def test_deterministic(self):
        """
        Repeated runs render identical output.
        """
        argv = ['op', 'classify', '--relation', path('r.json'), '--kind', 'rho_phi']
        self.assertEqual(run(argv).render(), run(argv).render())

    def test_printer(self):
        """
        Payloads go to the output stream, status and diagnostics to the error stream.
        """
        output, errors = io.StringIO(), io.StringIO()
        printer = ResultPrinter(output=output, errors=errors)
        printer.print_result(CommandResult(ResultStatus.OK, {'b': 1, 'a': [True]}))
        self.assertEqual(json.dumps({'a': [True], 'b': 1}, indent=2) + '\n', output.getvalue())
        self.assertEqual('', errors.getvalue())
        printer.print_result(CommandResult(ResultStatus.IO_ERROR, diagnostics=['broken']))
        self.assertEqual('broken\nstatus: io_error\n', errors.getvalue())

    def test_version(self):
        """
        --version prints the package version; the package metadata names the project.
        """
        with mock.patch('sys.stdout', new_callable=io.StringIO) as output, \
                self.assertRaises(SystemExit):
            run(['--version'])
        self.assertEqual(f'galois-kit {galois_kit.__version__}', output.getvalue().strip())
        self.assertIn('galois-kit', galois_kit.__copyright__)
        self.assertIn('galois-kit', galois_kit.__author__)
        self.assertIn('galois-kit', galois_kit.__url__)

    def test_main_writes_out_file(self):
        """
        main writes the payload to --out and returns the exit code of the status.
        """
        with tempfile.TemporaryDirectory() as directory:
            out = pl.Path(directory) / 'concepts.dot'
            code = main(['--out', str(out), 'fca', 'export', '--context', path('half.csv'),
                         '--lattice', path('luk3.json'), '--format', 'dot'])
            self.assertEqual(0, code)
            self.assertIn('\tc0 -> c1;\n', out.read_text(encoding='utf-8'))
            code = main(['--out', str(out), 'tense', 'check',
                         '--relation', path('frame_point_half.json'), '--suite', 'mv_T'])
            self.assertEqual(1, code)
            self.assertIn('"T3"', out.read_text(encoding='utf-8'))


if __name__ == '__main__':
    unittest.main()
