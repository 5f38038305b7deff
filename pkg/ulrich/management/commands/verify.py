from ulrich.exceptions import ValidationError, handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import FactorizationService, InputService


class Command(ReportCommand):
    help = 'Check A^d = b*I and det(tI - A) = (t^d - b)^r for a claimed factorization'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_field_argument(parser, 'Coefficient field; defaults to the certificate field or q')
        parser.add_argument('--vars', default=None, help='Comma separated variable names')
        parser.add_argument('--d', type=int, default=None, help='Covering degree')
        parser.add_argument('-b', dest='b', default=None, help='The branch polynomial b')
        parser.add_argument('--matrix', required=True, help='JSON file with the rows of A or a certificate')
        parser.add_argument('--r', type=int, default=None, help='Expected multiplicity, default size/d')

    @handle_exceptions
    def handle(self, *args, **options):
        payload = InputService.read_matrix(options['matrix'])
        domain = InputService.domain(options['field'] or payload.get('field'), 'q')
        context = InputService.context(domain, options['vars'] or payload.get('vars'))
        d = options['d'] or payload.get('d')
        b_text = options['b'] or payload.get('b')
        if d is None or b_text is None:
            raise ValidationError('Pass --d and -b, or a certificate carrying them')
        verified, result = FactorizationService.verify(context, d, context.parse(b_text), payload['A'], options['r'])
        if not verified:
            self.falsify(result, options, 'The matrix is not a cyclic factorization of b')
        self.emit(result, options)
