from ulrich.exceptions import handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import FactorizationService, InputService


class Command(ReportCommand):
    help = 'Skew-symmetric form of the 4x4 doubling of p0^2 + p1*p2 + p3*p4 and its Pfaffian'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_field_argument(parser)
        self.add_polynomial_arguments(parser)

    @handle_exceptions
    def handle(self, *args, **options):
        domain = InputService.domain(options['field'], 'q')
        context = InputService.context(domain, options['vars'] or 'x,y,z,w')
        forms = self.read_polynomials(context, options)
        ok, result = FactorizationService.pfaffian(context, forms)
        if not ok:
            self.falsify(result, options, 'pf(S) is not +-(t^2 - b)')
        self.emit(result, options)
