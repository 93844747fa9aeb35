"""Seepage coloring: inject colors at a code set and watch them spread.

A color injected at a node also colors every neighbor, so the color set at
node v is exactly the part of the code inside v's closed neighborhood (its
signature).  A code set identifies the graph when every node ends up with a
distinct, nonempty color combination.

The classic example injects ten colors on the two hexagon rings H2_* and
H5_*; every other node is then named uniquely by what seeps into it.
"""

from sbgkit import build_sbg, color_table, is_ics, mask_of

g = build_sbg()

ring = mask_of(
    [g.node_id(f"H2_{j}") for j in range(1, 6)]
    + [g.node_id(f"H5_{j}") for j in range(1, 6)]
)
print("injected:", ",".join(g.node_name(v) for v in sorted(
    v for v in range(g.n) if ring >> v & 1)))
print("identifying code:", is_ics(g, ring))
print()

# the star marks the color injected at the node itself
rows = color_table(g, ring)
for i in range(0, len(rows), 4):
    print("   ".join(f"{name:>5}: {cell:<6}" for name, cell in rows[i : i + 4]))

# a too-small injection fails: with only one ring, the bottom half of the
# ball receives no color at all
half = mask_of(g.node_id(f"H2_{j}") for j in range(1, 6))
print("\nsingle ring H2_* identifying code:", is_ics(g, half))
uncolored = [name for name, cell in color_table(g, half) if cell == "-"]
print(f"{len(uncolored)} nodes stay uncolored, e.g. {', '.join(uncolored[:5])}, ...")
