"""Scroll witnesses for del Pezzo surfaces: each 2-row matrix has 2-minors inside I(X).

Run: python3 demos/surface_witnesses.py
"""

from syzlab.syzscheme import verify_scroll_witnesses

for vid in ("dp5", "dp6", "dp7", "dp8", "v2q", "segre_1x1x1"):
    checks = verify_scroll_witnesses(vid)
    print(f"{vid}: {len(checks)} witnesses")
    for c in checks:
        print(f"  degree {c.degree} (want {c.target}), contained={c.contained}, distinct={c.distinct}")
        for row in c.matrix.to_text():
            print("    [" + ", ".join(f"{s:>10s}" for s in row) + "]")
