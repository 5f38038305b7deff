from django.conf import settings

from ulrich.exceptions import handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import GradedService, InputService


class Command(ReportCommand):
    help = 'Seeded trials: is the differential of p0^2 + p1*p2 + p3*p4 onto at random forms?'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_field_argument(parser, 'Coefficient field (default fp:ULRICH_DEFAULT_PRIME)')
        parser.add_argument('--n', type=int, default=3)
        parser.add_argument('--m', type=int, required=True)
        parser.add_argument('--trials', type=int, default=20)

    @handle_exceptions
    def handle(self, *args, **options):
        default = f"fp:{getattr(settings, 'ULRICH_DEFAULT_PRIME', 101)}"
        domain = InputService.domain(options['field'], default)
        result = GradedService.generic_check(options['n'], options['m'], domain, options['trials'], options['seed'])
        self.emit(result, options)
