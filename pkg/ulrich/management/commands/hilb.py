from ulrich.exceptions import handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import GradedService, InputService


class Command(ReportCommand):
    help = 'Dimension of the degree-deg piece of k[x]/I over a field'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_field_argument(parser, 'Coefficient field: q or fp:<p> (default q)')
        self.add_polynomial_arguments(parser)
        parser.add_argument('--deg', type=int, required=True, help='Target degree')
        parser.add_argument('--basis', action='store_true', help='List a monomial basis of the quotient piece')

    @handle_exceptions
    def handle(self, *args, **options):
        domain = InputService.domain(options['field'], 'q')
        context = InputService.context(domain, options['vars'])
        generators = self.read_polynomials(context, options)
        result = GradedService.hilbert(context, generators, options['deg'], with_basis=options['basis'])
        self.emit(result, options)
