"""
fermatcheck Test Suite

This package contains the tests for the fermat app: the arithmetic layer,
residue fields and point counting, the Frey curves, the newform table, the
proof engine, the brute-force search, the serializers and the management
commands.

Test Structure:
- test_arith.py: Primality, factorization, Legendre symbols, Z[i] and Z[sqrt(2)]
- test_two_squares.py: Prime decompositions and all representations of n
- test_finite_field.py: F_q, F_q[i] and reduction from Z[i]
- test_elliptic.py: Discriminants, reduction types, point counts and the cache
- test_frey.py: Frey curve models, reduction and Frobenius traces
- test_newforms.py: Eigenvalue table, model curves and the two-squares law
- test_obstruction.py: Eliminations, branches, product formula and verdicts
- test_search.py: Solution search and side claims, serial and parallel
- test_serializers.py: JSON output and report reconstruction
- test_commands.py: The management commands end to end

Run all tests with: python manage.py test
Run specific test module: python manage.py test tests.test_obstruction
"""
