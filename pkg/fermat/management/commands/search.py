from fermat.exceptions import VerificationError
from fermat.management.base import FermatCommand
from fermat.search import search_solutions
from fermat.serializers import SearchReportSerializer


def prime_list(text):
    return [int(part) for part in text.split(',') if part.strip()]


class Command(FermatCommand):
    help = 'Search for primitive solutions of A^4 + B^4 = C^p with A, B <= N'

    def add_command_arguments(self, parser):
        parser.add_argument('--max-ab', type=int, required=True, metavar='N')
        parser.add_argument('--primes', type=prime_list, default=[5, 7, 11, 13], help='Comma-separated, e.g. 5,7,11,13')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes (default: FERMATCHECK_WORKERS)')

    def run(self, *args, **options):
        workers = options['workers'] or self.workers_default
        report = search_solutions(options['max_ab'], options['primes'], workers=workers)
        if self.as_json:
            self.emit_json(SearchReportSerializer(report).data)
        else:
            self.stdout.write(
                f"{report.pairs_checked} primitive pairs with A, B <= {report.bound}, "
                f"p in {list(report.primes_tested)}"
            )
            for solution in report.solutions_found:
                self.stdout.write(self.style.ERROR(f"{solution.A}^4 + {solution.B}^4 = {solution.C}^{solution.p}"))
        if report.solutions_found:
            raise VerificationError(f"{len(report.solutions_found)} solutions found")
        if not self.as_json:
            self.success('No solutions')
