"""Rank <= t quadrics in the ideal of X5, the 5-dimensional linear section of G(1,P^4).

Scans every point of the projectivized pencil over F_31, reads off the span
of the low-rank points, and certifies the linear forms that cut that span out.
Run: python3 demos/rank_locus_x5.py
"""

import time

from syzlab.catalog import get_variety
from syzlab.ranklocus import delta, gram_pencil

pencil = gram_pencil(get_variety("x5"))
print(f"pencil: {pencil.m} quadrics, {pencil.size}x{pencil.size} Gram matrices, labels {pencil.labels}")

for t in (4, 5, 6):
    t0 = time.perf_counter()
    rep = delta("x5", t)
    first = rep.per_prime[0]
    print(f"\nt={t}: delta={rep.delta} agreement={rep.agreement} ({time.perf_counter() - t0:.1f}s)")
    for r in rep.per_prime:
        print(f"  F_{r.prime}: {r.points_found} rank<={t} points of {r.scanned} scanned, bounds [{r.lower}, {r.upper}]")
    if first.certified_forms:
        print(f"  vanishing on the locus: {', '.join(first.certified_forms)}")
