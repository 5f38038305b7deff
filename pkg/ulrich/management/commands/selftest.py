from ulrich.exceptions import handle_exceptions
from ulrich.golden import golden_names, run_golden_suite
from ulrich.management.base import ReportCommand
from ulrich.serializers import SelftestSerializer


class Command(ReportCommand):
    help = 'Run the golden values and property checks; exits 1 when any item fails'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_top_row_argument(parser)
        parser.add_argument(
            '--only',
            action='append',
            choices=golden_names(),
            default=[],
            help='Run only this check (repeatable)',
        )

    @handle_exceptions
    def handle(self, *args, **options):
        items = run_golden_suite(options['top_row'], options['only'])
        failed = [item.name for item in items if not item.passed]
        result = SelftestSerializer({
            'top_row': options['top_row'],
            'total': len(items),
            'passed': len(items) - len(failed),
            'failed': len(failed),
            'items': items,
        }).data
        if failed:
            self.falsify(result, options, f"Golden checks failed: {', '.join(failed)}")
        self.emit(result, options)
