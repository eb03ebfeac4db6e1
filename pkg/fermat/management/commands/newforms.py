from fermat.arith import primes_up_to
from fermat.management.base import FermatCommand
from fermat.newforms import TABLE_PRIMES, eigenvalue, verify_table, verify_two_squares_law
from fermat.serializers import EigenvalueField, TableRowSerializer


class Command(FermatCommand):
    help = 'Eigenvalue table of the newforms of levels 32 and 256, and the two-squares law for f1'
    has_actions = True

    def add_command_arguments(self, parser):
        add = self.add_actions(parser)

        table = add('table', help='Print the eigenvalue table')
        table.add_argument('--verify', action='store_true', help='Recompute every entry from the model curves')
        table.add_argument('--max-prime', type=int, default=TABLE_PRIMES[-1], help='Largest prime shown (default 17)')

        single = add('eigenvalue', help='a_q of one newform')
        single.add_argument('--label', required=True, choices=['f1', 'f2', 'f3', 'f4', 'f5', 'f6'])
        single.add_argument('--q', type=int, required=True)

        law = add('law', help='Check a_q(f1) = 2*alpha with alpha^2 + beta^2 = q')
        law.add_argument('--up-to', type=int, required=True, metavar='N', help='Every prime q ≡ 1 (mod 4) up to N')

    def run(self, *args, **options):
        getattr(self, f"run_{options['action']}")(options)

    def run_table(self, options):
        max_prime = options['max_prime']
        if max_prime < 2:
            self.usage_error('--max-prime must be at least 2')
        if not options['verify'] and max_prime > TABLE_PRIMES[-1]:
            self.usage_error('primes past 17 are only available with --verify')
        rows = verify_table(
            max_prime=max_prime, verify=options['verify'], cache=self.cache, max_field_size=self.max_field_size,
        )

        if self.as_json:
            self.emit_json(TableRowSerializer(rows, many=True).data)
            return
        self.stdout.write('label level ' + ' '.join(f"a_{q}" for q in rows[0].primes))
        for row in rows:
            self.stdout.write(f"{row.label} {row.level} " + ' '.join(str(v) for v in row.values))
        if options['verify']:
            self.success(f"All {len(rows)} rows recomputed and match the table")

    def run_eigenvalue(self, options):
        value = eigenvalue(options['label'], options['q'], cache=self.cache, max_field_size=self.max_field_size)
        if self.as_json:
            self.emit_json({'label': options['label'], 'q': options['q'], 'a_q': EigenvalueField().to_representation(value)})
            return
        self.stdout.write(f"a_{options['q']}({options['label']}) = {value}")

    def run_law(self, options):
        triples = [
            verify_two_squares_law(q, cache=self.cache, max_field_size=self.max_field_size)
            for q in primes_up_to(options['up_to']) if q % 4 == 1
        ]
        if self.as_json:
            self.emit_json([{'a_q': a, 'alpha': alpha, 'beta': beta, 'q': alpha * alpha + beta * beta}
                            for a, alpha, beta in triples])
            return
        for a, alpha, beta in triples:
            self.stdout.write(f"q = {alpha * alpha + beta * beta}: a_q = {a} = 2*({alpha}), {alpha}^2 + {beta}^2")
        self.success(f"Two-squares law holds for {len(triples)} primes")
