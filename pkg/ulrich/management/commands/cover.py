from ulrich.exceptions import handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import NumericsService


class Command(ReportCommand):
    help = 'Invariants of a degree-d divisorial cover of P^n and of its rank-r Ulrich sheaves'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=3)
        parser.add_argument('--m', type=int, required=True)
        parser.add_argument('--d', type=int, default=2)
        parser.add_argument('--r', type=int, default=1, help='Rank of the Ulrich sheaf')

    @handle_exceptions
    def handle(self, *args, **options):
        result = NumericsService.cover(options['n'], options['m'], options['d'], options['r'])
        self.emit(result, options)
