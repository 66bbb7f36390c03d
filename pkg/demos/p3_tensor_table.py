"""
Tensor products of simple modules at p = 3
==========================================

Every product L(r) ⊗ L(s) with r + s <= 16, split into summands.
"""

from sl2tensor import decompose
from sl2tensor.corpus import render_decomposition

p = 3

# each summand is printed as T(w) when tilting, L(w) when simple,
# and J(u0,...,um; socle=w) otherwise
for total in range(2, 17):
    for s in range(1, total // 2 + 1):
        r = total - s
        print(f"[{r}]⊗[{s}] = {render_decomposition(decompose(r, s, p))}")
    print()

# the number of summands is the product of the sizes of the digit-wise W sets
dec = decompose(8, 8, p)
print(len(dec), "summands, highest weights", dec.highest_weights)
