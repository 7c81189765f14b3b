"""Counting spanning trees exactly, three independent ways."""

from spantree.exact import laplacian, tau_exact
from spantree.generators import complete, fan, prufer_decode
from spantree.oracle import tau_deletion_contraction, tau_subset_enumeration
from spantree.product import cartesian_product
from spantree.generators import path

# The Laplacian is the degree matrix minus the adjacency matrix.
k4 = complete(4)
for row in laplacian(k4):
    print(row)

# Any principal minor of it counts spanning trees. K4 has 4^2 = 16.
print("tau(K4) =", tau_exact(k4))

# Brute force agrees: enumerate 3-edge subsets, or recurse on one edge.
print("subsets:", tau_subset_enumeration(k4), " deletion-contraction:", tau_deletion_contraction(k4))

# Counts get large fast, and they stay exact (Python ints all the way down).
for n in (5, 10, 20):
    print(f"tau(K{n}) = {tau_exact(complete(n))}")

# The 3x3 grid.
print("tau(P3 x P3) =", tau_exact(cartesian_product(path(3), path(3))))

# Fans: a path plus a hub. With n+1 vertices the count is the Fibonacci number f(2n).
fib = [0, 1]
while len(fib) < 30:
    fib.append(fib[-1] + fib[-2])
for n in range(2, 9):
    print(f"fan with {n + 1} vertices: {tau_exact(fan(n + 1)):>6}   f({2 * n}) = {fib[2 * n]}")

# A tree has exactly one spanning tree, itself.
t = prufer_decode([3, 3, 3, 4], 6)
print("tree edges:", t.edges, " tau =", tau_exact(t))
