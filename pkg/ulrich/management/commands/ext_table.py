from ulrich.exceptions import handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import InputService, NumericsService


class Command(ReportCommand):
    help = 'Normal bundle and ext dimensions for five forms p0..p4 of degree m in four variables'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_field_argument(parser)
        self.add_polynomial_arguments(parser)
        parser.add_argument('--m', type=int, default=None, help='Degree of the forms (2, 3 or 4)')

    @handle_exceptions
    def handle(self, *args, **options):
        domain = InputService.domain(options['field'], 'q')
        context = InputService.context(domain, options['vars'] or 'x,y,z,w')
        forms = self.read_polynomials(context, options)
        _, result = NumericsService.ext_table(forms, options['m'])
        self.emit(result, options)
