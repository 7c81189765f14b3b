"""Reading and writing graphs."""

from spantree.generators import complete, random_graph
from spantree.io import parse_edge_list, parse_graph6, write_edge_list, write_graph6, VertexRangeError

# Edge lists: header "n m", then one edge per line. '#' lines are comments.
g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n0 2\n")
print(g)
print(write_edge_list(g), end="")

# graph6 packs the upper triangle into printable ASCII.
print(write_graph6(complete(2)), write_graph6(complete(5)))
print(parse_graph6("D?{").edges)   # star with hub 4

g = random_graph(30, 0.2, 5)
s = write_graph6(g)
print(s, parse_graph6(s) == g)

# Errors carry a line number.
try:
    parse_edge_list("3 1\n0 3\n")
except VertexRangeError as e:
    print("error:", e)
