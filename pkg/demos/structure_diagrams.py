"""
Structure of L(r) ⊗ L(1)
========================

For r ≡ -1 (mod p) the product is uniserial (a = 1) or biserial, and is a
Frobenius shift of a tilting module.  Diagrams are written as DOT files.
"""

import sys
from pathlib import Path

from sl2tensor import decompose, shift_decomposition, summand_diagram, tensor_with_natural

out = Path(sys.argv[1] if len(sys.argv) > 1 else "diagrams")
out.mkdir(exist_ok=True)

for p in (2, 3, 5):
    for r in range(p - 1, p**3, p):
        m = tensor_with_natural(r, p)
        base, k, level = shift_decomposition(m)
        print(f"p={p} r={r:3d}  {m.render():40s} residue {m.residue}  base r={base.r}")
        (out / f"L{r}xL1_p{p}.dot").write_text(m.diagram.to_dot())

# diagrams for summands of other products come from combining the
# fundamental pieces; the T(14) cube at p = 2 is the largest example
(J,) = decompose(7, 7, 2).summands
d = summand_diagram(J)
print("T(14) socle layers:", [list(l) for l in d.layers])
(out / "T14_p2.dot").write_text(d.to_dot("T14"))
