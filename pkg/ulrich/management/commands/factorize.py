from ulrich.exceptions import ValidationError, handle_exceptions
from ulrich.management.base import ReportCommand
from ulrich.services import FactorizationService, InputService


class Command(ReportCommand):
    help = 'Build a cyclic matrix factorization A^d = b*I from a sum-of-products decomposition'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_field_argument(parser, 'Coefficient field; defaults to q for d <= 2, else the first fp:<p> with d | p-1')
        parser.add_argument('--vars', default=None, help='Comma separated variable names')
        parser.add_argument('--d', type=int, default=2, help='Covering degree')
        parser.add_argument('--power', default=None, help='The form p0 of the power term p0^d')
        parser.add_argument(
            '--product',
            action='append',
            default=[],
            help='Comma separated factors p1,..,pd of one product term (repeatable)',
        )
        parser.add_argument('--zeta', type=int, default=None, help='Primitive d-th root of unity')
        parser.add_argument('--random', action='store_true', help='Draw a seeded random decomposition')
        parser.add_argument('--s', type=int, default=2, help='Number of summands for --random')
        parser.add_argument('--m', type=int, default=1, help='Degree of the forms for --random')
        parser.add_argument('--nvars', type=int, default=4, help='Variable count for --random without --vars')

    @handle_exceptions
    def handle(self, *args, **options):
        d = options['d']
        domain = FactorizationService.field_for(d, options['field'])
        if options['random']:
            context = InputService.context(domain, options['vars'], options['nvars'])
            dec = FactorizationService.decomposition(
                context, d, random_spec=(options['s'], options['m']), seed=options['seed'],
            )
        else:
            if options['power'] is None and not options['product']:
                raise ValidationError('Give --power and/or --product, or use --random')
            context = InputService.context(domain, options['vars'])
            dec = FactorizationService.decomposition(context, d, options['power'], options['product'])
        zeta = FactorizationService.zeta_for(domain, d, options['zeta'])
        _, result = FactorizationService.factorize(dec, zeta)
        if result['determinantal'] is False:
            self.falsify(result, options, 'det(tI - A) differs from (t^d - b)^r')
        self.emit(result, options)
