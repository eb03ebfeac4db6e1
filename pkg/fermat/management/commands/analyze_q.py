from fermat.management.base import FermatCommand
from fermat.obstruction import analyze_q
from fermat.serializers import QAnalysisSerializer


class Command(FermatCommand):
    help = 'Which First Case branch a prime q | C falls into for a given p ≡ 3 (mod 4)'

    def add_command_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--q', type=int, required=True)

    def run(self, *args, **options):
        analysis, rhs = analyze_q(options['q'], options['p'])
        if self.as_json:
            self.emit_json(dict(QAnalysisSerializer(analysis).data, level_raising_rhs=rhs))
            return
        rep = analysis.decomposition
        self.stdout.write(f"q = {analysis.q}, p = {analysis.p}")
        self.stdout.write(f"  q mod p = {analysis.q % analysis.p}, q(q+1)^2 mod p = {rhs}")
        self.stdout.write(f"  {rep} (alpha, beta) = ({rep.alpha}, {rep.beta})")
        self.stdout.write(f"  Branch: {analysis.branch.value}")
