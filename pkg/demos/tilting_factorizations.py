"""
Which tilting modules are a product of two simples?
===================================================

T(u) ≅ L(r) ⊗ L(s) happens only when the admissible digits of u below the
top are all p-1 or p.  The digit-wise enumeration is compared with a scan
over every split u = r + s.
"""

from sl2tensor.classify import (
    enumerate_tilting_factorizations,
    factorization_count_readings,
    scan_tilting_factorizations,
)
from sl2tensor.padic import admissible_expansion

for p in (2, 3, 5):
    print(f"p = {p}")
    for u in range(0, 3 * p * p):
        pairs = enumerate_tilting_factorizations(u, p)
        assert pairs == scan_tilting_factorizations(u, p)
        if pairs:
            digits = admissible_expansion(u, p)
            print(f"  T({u}) digits {digits}: {sorted(pairs, reverse=True)}  {factorization_count_readings(u, p)}")
    print()

# T(4) at p = 3 is not a product, but it is a summand of L(2) ⊗ L(2)
from sl2tensor.classify import construct_tensor_containing

print(enumerate_tilting_factorizations(4, 3), construct_tensor_containing(4, 3))
