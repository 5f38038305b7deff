import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ulrich.cli import run
from ulrich.exceptions import EXIT_FALSIFIED, EXIT_OK, EXIT_USAGE

INTEGER_K = [
    'x^4+x^3*y+x^2*y*z',
    'y^4+y^3*z+y^2*z*w',
    'z^4+z^3*w+z^2*w*x',
    'w^4+w^3*x+w^2*x*y',
    'x*y*z*w+x^2*y^2+x^2*w^2+z^2*w^2+y^2*z^2+y^2*w^2+x^2*y*z',
]


def run_quietly(argv):
    """Run the command line, returning ``(exit code, stdout, stderr)``."""
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


class CommandTestCase(SimpleTestCase):
    """Shared helpers for management command tests"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def call(self, name, *args):
        out = StringIO()
        call_command(name, *args, stdout=out)
        return out.getvalue()

    def call_json(self, name, *args):
        return json.loads(self.call(name, *args, '--json'))

    def write_file(self, name, content):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(content)
        return path


class HilbCommandTest(CommandTestCase):
    """Tests for the hilb command"""

    def test_text_report(self):
        """Test x^2, y^2, z^2, w^2, xy fill degree 4"""
        args = ['--vars=x,y,z,w', '--deg=4']
        for text in ('x^2', 'y^2', 'z^2', 'w^2', 'x*y'):
            args.extend(['-e', text])
        output = self.call('hilb', *args)
        self.assertIn('command: hilb', output)
        self.assertIn('quotient_dim: 0', output)

    def test_json_envelope(self):
        """Test the envelope keys and the basis of the corank-5 example"""
        path = self.write_file('squares.txt', '# five squares\nx^2\ny^2\nz^2\nv^2\n\nw^2  # last\n')
        envelope = self.call_json('hilb', '--vars=x,y,z,v,w', f'--gens={path}', '--deg=4', '--basis')
        self.assertEqual(list(envelope), ['schema_version', 'command', 'provenance', 'result'])
        self.assertEqual(envelope['schema_version'], 1)
        self.assertEqual(envelope['command'], 'hilb')
        self.assertEqual(envelope['result']['quotient_dim'], 5)
        self.assertEqual(len(envelope['result']['basis']), 5)
        self.assertNotIn('torsion', envelope['result'])

    def test_parse_error_payload(self):
        """Test a malformed polynomial yields an error payload and exit code 2"""
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('hilb', '--vars=x,y', '-e', 'x^-1', '--deg=2', '--json', stdout=out)
        self.assertEqual(ctx.exception.returncode, EXIT_USAGE)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['error']['code'], 'parse_error')
        self.assertEqual(payload['error']['position'], 2)

    def test_integers_refused(self):
        """Test hilb points to quotient_z over Z"""
        with self.assertRaises(CommandError):
            self.call('hilb', '--field=z', '--vars=x', '-e', 'x', '--deg=1')


class QuotientZCommandTest(CommandTestCase):
    """Tests for the quotient_z command"""

    def test_torsion_and_class_orders(self):
        """Test (2x, y) leaves Z/2 and x has order 2"""
        result = self.call_json(
            'quotient_z', '--vars=x,y', '-e', '2*x', '-e', 'y', '--deg=1', '--check=x', '--check=y',
        )['result']
        self.assertEqual(result['free_rank'], 0)
        self.assertEqual(result['torsion'], [2])
        self.assertEqual(result['torsion_reps'], ['x'])
        self.assertEqual(result['class_orders'], {'x': 2, 'y': 1})
        self.assertNotIn('quotient_dim', result)


class FactorizationCommandTest(CommandTestCase):
    """Tests for factorize and verify"""

    def test_factorize_and_verify_certificate(self):
        """Test a certificate written by factorize passes verify"""
        certificate = self.call_json(
            'factorize', '--vars=x,y,z,w', '--power=x', '--product=y,z', '--product=w,x',
        )['result']
        self.assertEqual(certificate['size'], 4)
        self.assertEqual(certificate['s'], 3)
        self.assertTrue(certificate['verified'])
        self.assertTrue(certificate['determinantal'])
        path = self.write_file('certificate.json', json.dumps(certificate))
        report = self.call_json('verify', f'--matrix={path}')['result']
        self.assertTrue(report['verified'])
        self.assertEqual(report['r'], 2)

    def test_verify_reads_factorize_envelope(self):
        """Test verify accepts the JSON printed by factorize as is"""
        output = self.call('factorize', '--vars=x,y,z', '--power=x', '--product=y,z', '--json')
        path = self.write_file('envelope.json', output)
        report = self.call_json('verify', f'--matrix={path}')['result']
        self.assertTrue(report['power'])
        self.assertEqual(report['b'], 'x^2 + y*z')

    def test_cubic_defaults_to_prime_field(self):
        """Test d = 3 picks a prime with cube roots of unity"""
        result = self.call_json('factorize', '--d=3', '--vars=x,y,z,w', '--power=x', '--product=y,z,w')['result']
        self.assertEqual(result['field'], 'fp:103')
        self.assertEqual(result['size'], 3)
        self.assertTrue(result['determinantal'])

    def test_random_decomposition(self):
        """Test seeded random decompositions are reproducible"""
        args = ['--random', '--field=fp:101', '--s=3', '--m=2', '--seed=4']
        first = self.call_json('factorize', *args)['result']
        second = self.call_json('factorize', *args)['result']
        self.assertEqual(first, second)
        self.assertEqual(first['vars'], ['x0', 'x1', 'x2', 'x3'])

    def test_missing_terms(self):
        """Test factorize needs terms or --random"""
        with self.assertRaises(CommandError):
            self.call('factorize', '--vars=x,y')

    def test_verify_failure_exit_code(self):
        """Test a wrong b exits 1 after printing the report"""
        path = self.write_file('matrix.json', json.dumps([['x', 'y'], ['z', '-x']]))
        code, out, _ = run_quietly(['verify', '--vars=x,y,z', '--d=2', '-b', 'x^2', f'--matrix={path}', '--json'])
        self.assertEqual(code, EXIT_FALSIFIED)
        report = json.loads(out)['result']
        self.assertFalse(report['power'])
        self.assertEqual(report['power_mismatch']['row'], 0)

    def test_invalid_matrix_file(self):
        """Test malformed JSON is a usage error"""
        path = self.write_file('broken.json', '[["x", "y"],')
        code, _, _ = run_quietly(['verify', '--vars=x,y', '--d=2', '-b', 'x^2', f'--matrix={path}'])
        self.assertEqual(code, EXIT_USAGE)


class PfaffianCommandTest(CommandTestCase):
    """Tests for the pfaffian command"""

    def test_sign(self):
        """Test the Pfaffian equals +-(t^2 - b)"""
        args = []
        for text in ('x', 'y', 'z', 'w', 'x'):
            args.extend(['-e', text])
        result = self.call_json('pfaffian', *args)['result']
        self.assertIn(result['sign'], (1, -1))
        self.assertTrue(result['squares_to_det'])
        self.assertEqual(result['row_order'], [3, 2, 1, 0])

    def test_wrong_form_count(self):
        """Test exactly five forms are required"""
        with self.assertRaises(CommandError):
            self.call('pfaffian', '-e', 'x', '-e', 'y')


class ExtTableCommandTest(CommandTestCase):
    """Tests for the ext_table command"""

    def test_quartic_forms_from_file(self):
        """Test the m = 4 row for the integer quartic forms"""
        path = self.write_file('quartics.txt', '\n'.join(INTEGER_K) + '\n')
        result = self.call_json('ext_table', '--field=fp:101', f'--gens={path}', '--m=4')['result']
        row = [result[key] for key in ('h0N', 'h1N', 'hom', 'ext1', 'ext2', 'ext3')]
        self.assertEqual(row, [3, 3, 1, 0, 0, 1])
        self.assertTrue(result['valid'])


class NumericsCommandTest(CommandTestCase):
    """Tests for bott, ci, cover and counts"""

    def test_bott(self):
        """Test h^3(O(-5)) on P^3 and the single-degree view"""
        result = self.call_json('bott', '--n=3', '--i=-5')['result']
        self.assertEqual(result['h'], [0, 0, 0, 4])
        self.assertEqual(result['euler_characteristic'], -4)
        result = self.call_json('bott', '--n=3', '--i=2', '--j=0')['result']
        self.assertEqual(result['value'], 10)

    def test_bott_invalid_degree(self):
        """Test j outside [0, n] is refused"""
        code, _, _ = run_quietly(['bott', '--n', '3', '--i', '0', '--j', '5'])
        self.assertEqual(code, EXIT_USAGE)

    def test_ci(self):
        """Test sections of I_Z(2) for two quadrics"""
        result = self.call_json('ci', '--m=2', '--i=2')['result']
        self.assertEqual(result['h'][0], 2)
        self.assertEqual(result['arithmetic_genus'], 1)

    def test_cover(self):
        """Test the double cover branched along a quartic"""
        result = self.call_json('cover', '--m=2')['result']
        self.assertEqual(result['pushforward'], [0, -2])
        self.assertEqual(result['canonical_twist'], -2)
        self.assertEqual(result['ulrich_h0'], 2)
        self.assertEqual(result['c2_degree'], 4)

    def test_counts_text(self):
        """Test the counts for quadrics in P^3"""
        output = self.call('counts', '--m=2')
        self.assertIn('rank2_gap: -15', output)
        self.assertIn('noic_codim: 1', output)

    def test_generic_check(self):
        """Test a short seeded trial"""
        result = self.call_json('generic_check', '--m=2', '--trials=3')['result']
        self.assertEqual(result['trials'], 3)
        self.assertEqual(result['domain'], 'GF(101)')


class CommandLineTest(SimpleTestCase):
    """Tests for exit codes of the command line"""

    def test_hyphenated_name(self):
        """Test quotient-z dispatches to quotient_z"""
        code, out, _ = run_quietly(['quotient-z', '--vars=x,y', '-e', 'x', '-e', 'y', '--deg=1'])
        self.assertEqual(code, EXIT_OK)
        self.assertIn('free_rank: 0', out)

    def test_usage_errors(self):
        """Test bad flags, bad polynomials and unknown commands exit 2"""
        self.assertEqual(run_quietly(['hilb', '--nonsense'])[0], EXIT_USAGE)
        self.assertEqual(run_quietly(['hilb', '--vars=x,y', '-e', 'x^-1', '--deg=2'])[0], EXIT_USAGE)
        self.assertEqual(run_quietly(['frobnicate'])[0], EXIT_USAGE)
        self.assertEqual(run_quietly([])[0], EXIT_USAGE)
        self.assertEqual(run_quietly(['--help'])[0], EXIT_OK)
