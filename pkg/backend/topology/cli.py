# topology/cli.py
"""
``curvecal`` front end: one subcommand per invocation, dispatched to the
management command of the same name (hyphens become underscores).

    python -m topology.cli intersect -g 1 "a1" "b1"
"""

import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from importlib import import_module

import django

PROG = 'curvecal'

SUBCOMMANDS = (
    'intersect',
    'degree-bound',
    'express',
    'basis-check',
    'diagram-reduce',
    'pi1',
    'classify',
    'cobordism-normalize',
    'lens-table',
)

USAGE = f"usage: {PROG} {{{','.join(SUBCOMMANDS)}}} [options]\n"


def run(argv, stdout=None, stderr=None):
    """
    Runs one subcommand.

    Parameters:
    - argv (list): Subcommand name followed by its arguments.
    - stdout, stderr (file-like, optional): Output streams; the process streams by default.

    Returns:
    - int: 0 on success, 1 on a domain error, 2 on a usage error.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        if argv:
            stderr.write(f"{PROG}: unknown subcommand {argv[0]!r}\n")
        stderr.write(USAGE)
        return 2

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'curvecal.settings')
    django.setup()

    name = argv[0]
    module = import_module(f"topology.management.commands.{name.replace('-', '_')}")
    command = module.Command(stdout=stdout, stderr=stderr)
    with redirect_stdout(stdout), redirect_stderr(stderr):
        try:
            command.run_from_argv([PROG, name, *argv[1:]])
        except SystemExit as e:
            if e.code is None:
                return 0
            return e.code if isinstance(e.code, int) else 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
