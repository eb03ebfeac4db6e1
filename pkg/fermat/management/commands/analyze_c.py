from fermat.management.commands.verdict import Command as VerdictCommand
from fermat.obstruction import first_case_candidate


class Command(VerdictCommand):
    help = 'Whether C could be the C of a First Case solution for p ≡ 3 (mod 4), p > 13'
    has_actions = False

    def add_command_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--C', type=int, required=True, dest='C')

    def run(self, *args, **options):
        self.write_report(first_case_candidate(options['C'], options['p']))
