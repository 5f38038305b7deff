from ulrich.choices import SHEAF_CHOICES, SHEAF_IDEAL
from ulrich.exceptions import handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import NumericsService


class Command(ReportCommand):
    help = 'Cohomology of the ideal or structure sheaf of an (m, m) complete intersection in P^n'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=3)
        parser.add_argument('--m', type=int, required=True)
        parser.add_argument('--sheaf', choices=[value for value, _ in SHEAF_CHOICES], default=SHEAF_IDEAL)
        parser.add_argument('--i', type=int, default=None, help='Twist, default m')

    @handle_exceptions
    def handle(self, *args, **options):
        i = options['i'] if options['i'] is not None else options['m']
        result = NumericsService.ci(options['n'], options['m'], options['sheaf'], i)
        self.emit(result, options)
