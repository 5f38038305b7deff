"""
Common base for the report-producing management commands.
"""
from django.core.management.base import BaseCommand, CommandError

from ulrich.choices import BOTT_DUALITY, BOTT_TOP_ROW_CHOICES
from ulrich.exceptions import FalsifiedError
from ulrich.services import InputService, ReportService


class ReportCommand(BaseCommand):
    """
    A command that prints one report, as text or as the JSON envelope.

    Subclasses call ``emit`` with their result data; ``falsify`` prints the
    report and then fails with exit code 1.
    """
    requires_system_checks = []
    command_name = None

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', dest='as_json', help='Print the JSON envelope')
        parser.add_argument('--seed', type=int, default=0, help='Seed for randomized steps')

    def add_field_argument(self, parser, help_text='Coefficient field: q, z or fp:<p>'):
        parser.add_argument('--field', default=None, help=help_text)

    def add_polynomial_arguments(self, parser):
        parser.add_argument('--vars', default=None, help='Comma separated variable names')
        parser.add_argument('-e', action='append', dest='polys', default=[], help='A polynomial (repeatable)')
        parser.add_argument('--gens', default=None, help='File with one polynomial per line')

    def add_top_row_argument(self, parser):
        parser.add_argument(
            '--bott-top-row',
            dest='top_row',
            choices=[value for value, _ in BOTT_TOP_ROW_CHOICES],
            default=BOTT_DUALITY,
        )

    def get_command_name(self):
        return self.command_name or self.__module__.rsplit('.', 1)[-1]

    def read_polynomials(self, context, options):
        return InputService.polynomials(context, options.get('polys'), options.get('gens'))

    def execute(self, *args, **options):
        self.reported = False
        try:
            return super().execute(*args, **options)
        except CommandError as exc:
            payload = getattr(exc, 'payload', None)
            if options.get('as_json') and payload is not None and not self.reported:
                self.stdout.write(ReportService.render_json(payload), ending='')
            raise

    def emit(self, result, options):
        envelope = ReportService.envelope(self.get_command_name(), result)
        self.reported = True
        if options.get('as_json'):
            self.stdout.write(ReportService.render_json(envelope), ending='')
        else:
            self.stdout.write(ReportService.render_text(envelope), ending='')
        return envelope

    def falsify(self, result, options, message):
        self.emit(result, options)
        raise FalsifiedError(message)
