"""Tour of the soccer ball graph: layers, neighborhoods, distinguishing sets.

The graph has one node per patch of a truncated icosahedron (12 pentagons,
20 hexagons) and an edge wherever two patches share a boundary.  Nodes are
named by kind, layer and position: P1_1 is the top pentagon, H2_1..H2_5 the
ring below it, and so on down to P6_1.
"""

from sbgkit import bits, build_sbg, parse_edge_list, write_edge_list

g = build_sbg()
print(f"{g.n} nodes, {g.edge_count} edges")

pentagons = [v for v in range(g.n) if g.node_name(v).startswith("P")]
hexagons = [v for v in range(g.n) if g.node_name(v).startswith("H")]
print(f"{len(pentagons)} pentagons of degree {g.degree(pentagons[0])}, "
      f"{len(hexagons)} hexagons of degree {g.degree(hexagons[0])}")


def names(mask):
    return ", ".join(g.node_name(v) for v in bits(mask))


top = g.node_id("P1_1")
print(f"\nneighbors of P1_1:          {names(g.neighbors(top))}")
print(f"closed neighborhood:        {names(g.closed_neighborhood(top))}")
print(f"within two steps of P1_1:   {names(g.closed_two_neighborhood(top))}")

# the distinguishing set of two nodes: a code must pick at least one of
# these for the pair to end up with different signatures
u, v = g.node_id("H2_1"), g.node_id("H2_2")
print(f"\ndistinguishing set of H2_1 and H2_2: {names(g.distinguishing_set(u, v))}")

# the text format round-trips exactly
text = write_edge_list(g)
assert parse_edge_list(text) == g
print(f"\nedge-list serialization: {len(text.splitlines())} lines, round-trips exactly")
