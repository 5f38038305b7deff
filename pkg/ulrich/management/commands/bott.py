from ulrich.exceptions import ValidationError, handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import NumericsService


class Command(ReportCommand):
    help = 'Cohomology of O(i) on projective n-space'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_top_row_argument(parser)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--i', type=int, required=True)
        parser.add_argument('--j', type=int, default=None, help='Report only h^j')

    @handle_exceptions
    def handle(self, *args, **options):
        n, j = options['n'], options['j']
        if n < 1:
            raise ValidationError('n must be positive')
        result = dict(NumericsService.bott(n, options['i'], options['top_row']))
        if j is not None:
            if not 0 <= j <= n:
                raise ValidationError(f'j must lie in [0, {n}]')
            result['j'] = j
            result['value'] = result['h'][j]
        self.emit(result, options)
