"""Lower and upper bounds for spanning trees of a Cartesian product."""

import math

from spantree.bounds import bounds_report, rook_tau, tree_bounds_log
from spantree.exact import tau_exact
from spantree.generators import complete, cycle, path, random_prufer_tree
from spantree.graph import disjoint_union
from spantree.product import cartesian_product


def show(name, g1, g2):
    r = bounds_report(g1, g2)
    lo = "0" if r.log_lower == -math.inf else f"{math.exp(r.log_lower):.6g}"
    hi = "0" if r.log_upper == -math.inf else f"{math.exp(r.log_upper):.6g}"
    print(f"{name:10} lower={lo:>10}  tau={r.tau_exact_product:>8}  upper={hi:>10}  "
          f"tight: lower={r.equality_lower_predicted!s:5} upper={r.equality_upper_predicted}")


# The upper bound is tight exactly when both factors are complete;
# the lower bound only when they are the same complete graph.
show("K3 x K2", complete(3), complete(2))
show("K3 x K3", complete(3), complete(3))
show("P3 x P3", path(3), path(3))
show("C5 x P4", cycle(5), path(4))
# Disconnected factors make everything zero, so both are "tight".
show("2K2 x K2", disjoint_union(complete(2), complete(2)), complete(2))

# Rook's graphs have a closed form.
for a, b in [(2, 2), (3, 2), (3, 3), (4, 5)]:
    print(f"K{a} x K{b}: formula {rook_tau(a, b)}, exact {tau_exact(cartesian_product(complete(a), complete(b)))}")

# For two trees the bounds depend only on the orders.
t1, t2 = random_prufer_tree(5, 1), random_prufer_tree(6, 2)
lo, hi = tree_bounds_log(t1.n, t2.n)
print(f"trees of order 5 and 6: {math.exp(lo):.1f} < {tau_exact(cartesian_product(t1, t2))} < {math.exp(hi):.0f}")
