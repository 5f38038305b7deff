"""
``run(argv)``: the toolkit's command line as a function returning the exit code.

Subcommand names may be spelled with hyphens (``quotient-z``) or with the
underscores of the management command modules (``quotient_z``).
"""
import os
import sys

from ulrich.exceptions import EXIT_OK, EXIT_USAGE

COMMANDS = (
    'hilb',
    'quotient_z',
    'factorize',
    'verify',
    'pfaffian',
    'ext_table',
    'bott',
    'ci',
    'cover',
    'generic_check',
    'counts',
    'selftest',
)


def run(argv):
    """
    Dispatch ``argv`` (without the program name) to a management command.

    Returns:
        0 on success, 1 on falsification, 2 on usage or parse errors
    """
    argv = list(argv)
    if not argv or argv[0] in ('-h', '--help'):
        sys.stderr.write('usage: ulrich <command> [options]\ncommands: ' + ', '.join(COMMANDS) + '\n')
        return EXIT_USAGE if not argv else EXIT_OK
    name = argv[0].replace('-', '_')
    if name not in COMMANDS:
        sys.stderr.write(f'Unknown command {argv[0]!r}; choose from {", ".join(COMMANDS)}\n')
        return EXIT_USAGE
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ulrich_lab.settings')
    from django.core.management import execute_from_command_line

    try:
        execute_from_command_line(['manage.py', name, *argv[1:]])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
