"""Linear strand of G(1,P^4) and its hyperplane sections, then one omit-one scheme.

Run: python3 demos/grassmannian_strand.py
"""

from syzlab.catalog import get_variety
from syzlab.koszul import betti_table
from syzlab.syzscheme import omit_one_scheme

for vid in ("g14", "x5", "x4", "x3"):
    for p in (31, 101):
        table = betti_table(get_variety(vid, p))
        print(f"{vid:4s} F_{p:<3d} beta_(p,1), p=1..4: {table.linear_strand()}")

rep = omit_one_scheme("g14", 0)
print(f"\ndrop one quadric from the class-adapted basis of g14: {rep.generator_count} quadrics left")
print(f"  scheme dim {rep.dimension}, degree {rep.degree}; residual: {rep.residual_linear_forms} linear forms,"
      f" a P^{rep.residual_dimension}")
print(f"  tag: {rep.tag}")
