from ulrich.exceptions import handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.polyring import CoefficientDomain
from ulrich.services import GradedService, InputService


class Command(ReportCommand):
    help = 'Free rank and torsion of the degree-deg piece of Z[x]/I'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_polynomial_arguments(parser)
        parser.add_argument('--deg', type=int, required=True, help='Target degree')
        parser.add_argument(
            '--check',
            action='append',
            default=[],
            help='Report the additive order of this polynomial class (repeatable)',
        )

    @handle_exceptions
    def handle(self, *args, **options):
        context = InputService.context(CoefficientDomain.integers(), options['vars'])
        generators = self.read_polynomials(context, options)
        checks = [context.parse(text) for text in options['check']]
        result = GradedService.quotient_z(context, generators, options['deg'], checks)
        self.emit(result, options)
