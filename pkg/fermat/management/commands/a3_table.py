from fermat.frey import a3_table
from fermat.management.base import FermatCommand
from fermat.serializers import A3RowSerializer


class Command(FermatCommand):
    help = "a_3 of E_{A,B} and a'_3 of E_{B,A} over the primitive classes of (A, B) mod 3"

    def run(self, *args, **options):
        rows = a3_table(cache=self.cache, max_field_size=self.max_field_size)
        if self.as_json:
            self.emit_json(A3RowSerializer(rows, many=True).data)
            return
        self.stdout.write("A mod 3  B mod 3  lift      a_3      a'_3")
        for row in rows:
            a, b = row.residues
            lift = f"({row.lift[0]}, {row.lift[1]})"
            self.stdout.write(f"{a:<8} {b:<8} {lift:<9} {str(row.ab):<8} {row.ba}")
        self.success("a_3 = 0 exactly on A ≡ 0, B ≢ 0 (mod 3), with a'_3 = ±2*rt2 there")
