from django.conf import settings

from fermat.arith import is_prime
from fermat.exceptions import NoRepresentation
from fermat.management.base import FermatCommand
from fermat.serializers import TwoSquaresRepSerializer
from fermat.two_squares import all_representations, decompose_prime, sorted_representations


class Command(FermatCommand):
    help = 'Write N as a sum of two squares'

    def add_command_arguments(self, parser):
        parser.add_argument('N', type=int)
        parser.add_argument('--all', action='store_true', dest='all', help='Every canonical representation 0 <= R <= S')

    def run(self, *args, **options):
        n = options['N']
        if n < 1:
            self.usage_error(f'N must be positive, got {n}')
        if is_prime(n) and not options['all']:
            reps = [decompose_prime(n)]
        else:
            reps = sorted_representations(all_representations(
                n, cross_check=True, naive_limit=settings.FERMATCHECK_NAIVE_REPRESENTATION_LIMIT,
            ))
            if not reps:
                raise NoRepresentation(f"{n} is not a sum of two squares")
            if not options['all']:
                reps = reps[:1]

        if self.as_json:
            self.emit_json(TwoSquaresRepSerializer(reps, many=True).data)
            return
        for rep in reps:
            self.stdout.write(str(rep))
