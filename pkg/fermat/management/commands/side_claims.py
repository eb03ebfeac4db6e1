from fermat.exceptions import VerificationError
from fermat.management.base import FermatCommand
from fermat.search import verify_side_claims
from fermat.serializers import SearchReportSerializer


class Command(FermatCommand):
    help = 'Check (6, C) = 1, primes of C ≡ 1 (mod 4) and semistability for primitive pairs with A even'

    def add_command_arguments(self, parser):
        parser.add_argument('--max-ab', type=int, required=True, metavar='N')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes (default: FERMATCHECK_WORKERS)')
        parser.add_argument('--skip-reduction', action='store_true', help='Skip the reduction-type check')

    def run(self, *args, **options):
        workers = options['workers'] or self.workers_default
        report = verify_side_claims(
            options['max_ab'], workers=workers, check_reduction=not options['skip_reduction'],
        )
        if self.as_json:
            self.emit_json(SearchReportSerializer(report).data)
        else:
            self.stdout.write(f"{report.pairs_checked} primitive pairs with A even, A, B <= {report.bound}")
            for violation in report.side_claim_violations:
                self.stdout.write(self.style.ERROR(
                    f"({violation.A}, {violation.B}) {violation.claim}: {violation.detail}"
                ))
        if report.side_claim_violations:
            raise VerificationError(f"{len(report.side_claim_violations)} side-claim violations")
        if not self.as_json:
            self.success('All claims hold')
