"""Laplacian eigenvalues and what they say about spanning trees."""

import numpy as np

from spantree.exact import tau_exact
from spantree.generators import complete, cycle, random_graph
from spantree.graph import disjoint_union
from spantree.product import cartesian_product
from spantree.spectral import (
    laplacian_spectrum,
    product_spectrum,
    tau_product_spectral,
    tau_spectral,
)

# K_n has eigenvalue 0 once and n with multiplicity n-1.
print("K5:", np.round(laplacian_spectrum(complete(5)).as_array(), 12))

# The 4-cycle: 0, 2, 2, 4.
s = laplacian_spectrum(cycle(4))
print("C4:", s.values, " residual:", s.tol)

# Product of nonzero eigenvalues over n gives the tree count (as a float).
g = random_graph(12, 0.4, 7)
print("spectral:", tau_spectral(g), " exact:", tau_exact(g))

# A disconnected graph has 0 as a repeated eigenvalue, so the count is 0.
print("2 x K3:", laplacian_spectrum(disjoint_union(complete(3), complete(3))).values)

# Product graphs: eigenvalues are all pairwise sums of the factor eigenvalues.
g1, g2 = random_graph(5, 0.6, 1), cycle(4)
direct = laplacian_spectrum(cartesian_product(g1, g2)).as_array()
summed = product_spectrum(laplacian_spectrum(g1), laplacian_spectrum(g2)).as_array()
print("max |direct - pairwise sums| =", np.max(np.abs(direct - summed)))

# So the product's count can be assembled from the factors without ever building it.
g1, g2 = cycle(6), complete(4)
print("from factors:", tau_product_spectral(g1, g2))
print("exact:       ", tau_exact(cartesian_product(g1, g2)))
