from ulrich.exceptions import ValidationError, handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import NumericsService


class Command(ReportCommand):
    help = 'Parameter-count inequalities for rank-1 and rank-2 Ulrich sheaves on double covers'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=3)
        parser.add_argument('--m', type=int, required=True)

    @handle_exceptions
    def handle(self, *args, **options):
        if options['m'] < 1 or options['n'] < 1:
            raise ValidationError('n and m must be positive')
        self.emit(NumericsService.counts(options['n'], options['m']), options)
