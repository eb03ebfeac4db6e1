from fermat.frey import Variant, build_frey, reduction_at, trace_inert, trace_split
from fermat.management.base import FermatCommand
from fermat.serializers import QcurveTraceSerializer, ReductionSerializer


class Command(FermatCommand):
    help = 'Traces of Frobenius and reduction types of the Frey Q-curves E_{A,B} and E_{B,A}'
    has_actions = True

    def add_command_arguments(self, parser):
        add = self.add_actions(parser)
        for name, help_text in (('trace', 'a_q at an odd prime q'), ('reduction', 'Reduction type above an odd prime q')):
            sub = add(name, help=help_text)
            sub.add_argument('--variant', choices=Variant.values, default=Variant.AB)
            sub.add_argument('--A', type=int, required=True, dest='A')
            sub.add_argument('--B', type=int, required=True, dest='B')
            sub.add_argument('--q', type=int, required=True)

    def run(self, *args, **options):
        curve = build_frey(options['A'], options['B'], options['variant'])
        q = options['q']
        if options['action'] == 'trace':
            self.run_trace(curve, q)
        else:
            self.run_reduction(curve, q)

    def run_trace(self, curve, q):
        if q % 4 == 3:
            trace = trace_inert(curve, q, cache=self.cache, max_field_size=self.max_field_size)
            value, data = str(trace), QcurveTraceSerializer(trace).data
        else:
            a_q = trace_split(curve, q, cache=self.cache, max_field_size=self.max_field_size)
            value, data = str(a_q), {'q': q, 'value': {'rat': a_q, 'irr': 0}, 'sign_determined': True}
        if self.as_json:
            self.emit_json(dict(data, variant=curve.variant.value, A=curve.A, B=curve.B))
            return
        self.stdout.write(str(curve))
        self.stdout.write(f"a_{q} = {value}")

    def run_reduction(self, curve, q):
        types = [{'prime': prime, 'reduction': kind} for prime, kind in reduction_at(curve, q)]
        if self.as_json:
            self.emit_json(ReductionSerializer(types, many=True).data)
            return
        self.stdout.write(str(curve))
        for item in types:
            self.stdout.write(f"({item['prime']}): {item['reduction'].label}")
