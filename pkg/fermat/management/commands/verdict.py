from fermat.management.base import FermatCommand
from fermat.obstruction import (
    Verdict,
    proposition_verdict,
    theorem1_range,
    theorem1_verdict,
    theorem2_verdict,
)
from fermat.serializers import VerdictReportSerializer


class Command(FermatCommand):
    help = 'Verdict reports: Theorem 1, the First Case (Theorem 2) and the f5/f6 Proposition'
    has_actions = True

    def add_command_arguments(self, parser):
        add = self.add_actions(parser)

        theorem1 = add('theorem1', help='No solutions for p > 13, p ≢ -1 (mod 8)')
        which = theorem1.add_mutually_exclusive_group(required=True)
        which.add_argument('--p', type=int)
        which.add_argument('--range', type=int, nargs=2, metavar=('LO', 'HI'))

        first_case = add('first-case', help='No First Case solutions for p != 7')
        first_case.add_argument('--p', type=int, required=True)

        proposition = add('proposition', help='f5 and f6 never match a Frey Q-curve')
        proposition.add_argument('--p', type=int, required=True)

    def run(self, *args, **options):
        action = options['action']
        if action == 'theorem1' and options['range']:
            self.run_range(*options['range'])
            return
        verdict = {
            'theorem1': theorem1_verdict,
            'first-case': theorem2_verdict,
            'proposition': proposition_verdict,
        }[action]
        self.write_report(verdict(options['p']))

    def write_report(self, report):
        if self.as_json:
            self.emit_json(VerdictReportSerializer(report).data)
            return
        self.stdout.write(f"{report.target.label} (p = {report.p})")
        for number, step in enumerate(report.steps, start=1):
            self.stdout.write(f"  {number:>2}. {step}")
        if report.note:
            self.stdout.write(f"  note: {report.note}")
        style = self.style.SUCCESS if report.verdict != Verdict.NOT_COVERED else self.style.WARNING
        self.stdout.write(style(f"Verdict: {report.verdict.value}"))

    def run_range(self, lo, hi):
        if lo > hi:
            self.usage_error(f'empty range [{lo}, {hi}]')
        reports = theorem1_range(lo, hi)
        if self.as_json:
            self.emit_json(VerdictReportSerializer(reports, many=True).data)
            return
        for report in reports:
            self.stdout.write(f"{report.p}: {report.verdict.value}")
        eliminated = sum(report.verdict == Verdict.ELIMINATED for report in reports)
        self.success(f"{eliminated} of {len(reports)} primes eliminated")
