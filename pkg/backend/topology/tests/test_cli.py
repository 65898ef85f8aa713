# topology/tests/test_cli.py

import json
import os
import subprocess
import sys
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from ..cli import run

LENS_CHAIN = json.dumps({'records': [
    {'id': 'p0', 'index': 0},
    {'id': 'p1', 'index': 1, 'incidence': {'p2': 1}},
    {'id': 'p2', 'index': 2},
    {'id': 'p3', 'index': 3},
]})

BIGON = json.dumps({'m_order': ['p', 'q'], 'mprime_order': ['p', 'q'], 'signs': {'p': 1, 'q': -1}})

BACKEND_DIR = Path(__file__).resolve().parents[2]


def invoke(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class RunTests(SimpleTestCase):
    def test_intersect(self):
        self.assertEqual(invoke('intersect', '-g', '1', 'a1', 'b1')[:2], (0, '1\n'))
        self.assertEqual(invoke('intersect', '-g', '1', 'a1', 'a1')[:2], (0, '0\n'))

    def test_degree_bound_and_express(self):
        self.assertEqual(invoke('degree-bound', '-g', '1', 'a1^2 b1^3', 'a1 b1^-1')[1], '5\n')
        self.assertEqual(invoke('express', '-g', '1', 'a1^2 b1^3')[1], '2·α₁ + 3·β₁\n')

    def test_pi1_json(self):
        code, out, _ = invoke('pi1', '-g', '1', 'a1^3 b1^5', '--json')
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload['pi1'], 'Z/5')
        self.assertEqual(payload['relators'], ['b1^5'])
        self.assertEqual(payload['presentation'], '<b1 | b1^5>')

    def test_text_and_json_agree(self):
        _, text, _ = invoke('classify', '-g', '2', 'a1 b1^2', 'a2 b2^3')
        _, out, _ = invoke('classify', '-g', '2', 'a1 b1^2', 'a2 b2^3', '--json')
        payload = json.loads(out)
        self.assertIn(f"pi1: {payload['pi1']}", text)
        self.assertIn('finite: no', text)
        self.assertEqual(payload['pi1'], 'Z/2 * Z/3')

    def test_undecided_classification(self):
        code, out, _ = invoke('classify', '-g', '2', 'b1 b2', 'b1 b2^-1')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('pi1: undecided'))

    def test_basis_check(self):
        code, out, _ = invoke(
            'basis-check', '-g', '2', '--theta', 'b1', 'b2', '--gamma', 'a1^-1', 'a2^-1', '--json',
        )
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertTrue(payload['unimodular'])
        self.assertEqual(payload['sigma'], [1, 2])
        self.assertEqual(payload['H'], [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])

    def test_diagram_reduce(self):
        code, out, _ = invoke('diagram-reduce', BIGON, '--exhaustive', '--json')
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload['final_count'], 0)
        self.assertEqual(payload['removed'], [['p', 'q']])
        self.assertEqual(payload['reachable_final_counts'], [0])

    def test_cobordism_normalize(self):
        code, out, _ = invoke('cobordism-normalize', LENS_CHAIN, '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['final_type'], [1, 0, 0, 1])
        self.assertEqual(invoke('cobordism-normalize', LENS_CHAIN)[1].splitlines()[0], 'type {1,1,1,1} -> {1,0,0,1}')

    def test_lens_table(self):
        code, out, _ = invoke('lens-table', '--min-p', '1', '--max-p', '5', '--json')
        self.assertEqual(code, 0)
        rows = json.loads(out)['rows']
        self.assertEqual(len(rows), 1 + 1 + 2 + 2 + 4)
        self.assertTrue(all(row['pi1'] == ('1' if row['p'] == 1 else f"Z/{row['p']}") for row in rows))
        self.assertEqual(len(invoke('lens-table', '--max-p', '3')[1].splitlines()), 1 + 4)

    def test_file_indirection(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'lens.hd')
            with open(path, 'w', encoding='utf-8') as f:
                f.write('# L(7, 2)\ngenus 1\na1^2 b1^7\n')
            code, out, _ = invoke('pi1', f"@{path}", '--json')
            self.assertEqual(code, 0)
            self.assertEqual(json.loads(out)['pi1'], 'Z/7')

            chain_path = os.path.join(directory, 'chain.json')
            with open(chain_path, 'w', encoding='utf-8') as f:
                f.write(LENS_CHAIN)
            self.assertEqual(invoke('cobordism-normalize', f"@{chain_path}")[0], 0)

        code, _, err = invoke('pi1', '@/nonexistent/diagram.hd')
        self.assertEqual(code, 1)
        self.assertIn('Cannot read', err)

    def test_deterministic(self):
        argv = ('diagram-reduce', json.dumps({
            'm_order': ['a', 'b', 'c', 'd'],
            'mprime_order': ['a', 'b', 'd', 'c'],
            'signs': {'a': 1, 'b': -1, 'c': 1, 'd': -1},
        }), '--json')
        self.assertEqual(invoke(*argv), invoke(*argv))


class ExitCodeTests(SimpleTestCase):
    def test_unknown_subcommand(self):
        code, _, err = invoke('homotopy')
        self.assertEqual(code, 2)
        self.assertIn('usage: curvecal', err)
        self.assertEqual(invoke()[0], 2)

    def test_usage_errors(self):
        self.assertEqual(invoke('intersect', 'a1', 'b1')[0], 2)
        self.assertEqual(invoke('lens-table', '--max-p', 'many')[0], 2)
        self.assertEqual(invoke('pi1', 'b1', 'b2')[0], 2)

    def test_domain_errors(self):
        code, _, err = invoke('intersect', '-g', '1', 'a1', 'b2')
        self.assertEqual(code, 1)
        self.assertIn('does not exist in genus 1', err)

        self.assertEqual(invoke('intersect', '-g', '1', 'a1 ^2', 'b1')[0], 1)
        self.assertEqual(invoke('pi1', '-g', '2', 'b1')[0], 1)
        self.assertEqual(invoke('diagram-reduce', '{"m_order": ["p"]}')[0], 1)
        self.assertEqual(invoke('diagram-reduce', 'not json')[0], 1)
        self.assertEqual(invoke('lens-table', '--min-p', '4', '--max-p', '2')[0], 1)

    @override_settings(CURVECAL_MAX_EXP=10)
    def test_exponent_limit(self):
        self.assertEqual(invoke('intersect', '-g', '1', 'a1^11', 'b1')[0], 1)
        self.assertEqual(invoke('intersect', '-g', '1', 'a1^10', 'b1')[1], '10\n')


class CallCommandTests(SimpleTestCase):
    def test_call_command(self):
        out = StringIO()
        call_command('intersect', '-g', '2', 'a1 a2', 'b2', stdout=out)
        self.assertEqual(out.getvalue(), '1\n')

    def test_domain_error_raises(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('express', '-g', '1', 'a1^0', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)


class EnvironmentTests(SimpleTestCase):
    """Settings taken from the environment of a fresh ``python -m topology.cli`` process."""

    def invoke_process(self, *argv, **env):
        return subprocess.run(
            [sys.executable, '-m', 'topology.cli', *argv],
            cwd=BACKEND_DIR,
            env={**os.environ, **env},
            capture_output=True,
            text=True,
            timeout=120,
        )

    def test_max_exponent_from_environment(self):
        result = self.invoke_process('intersect', '-g', '1', 'a1^11', 'b1', CURVECAL_MAX_EXP='10')
        self.assertEqual(result.returncode, 1)
        self.assertIn('exceeds the limit 10', result.stderr)

        result = self.invoke_process('intersect', '-g', '1', 'a1^11', 'b1', CURVECAL_MAX_EXP='20')
        self.assertEqual((result.returncode, result.stdout), (0, '11\n'))

    def test_lens_bound_from_environment(self):
        result = self.invoke_process('lens-table', '--json', CURVECAL_LENS_MAX_P='3')
        self.assertEqual(result.returncode, 0)
        payload = json.loads(result.stdout)
        self.assertEqual(payload['max_p'], 3)
        self.assertEqual(len(payload['rows']), 4)
