"""Published data for the complement of K3 x P4 in dimension 5.

Vertex k of the target is the product vertex (u, v) with k = 4(u-1) + v,
so the identity ordering 1..12 walks (1,1), (1,2), ..., (3,4).
"""

from __future__ import annotations

from .graph import Graph, cartesian_product, complement, generate

DIMENSION = 5

ORDER = tuple(range(1, 13))

VECTORS = (
    (1, 0, 0, 1, 0),
    (0, 1, 0, 0, 0),
    (1, 0, 1, 0, 0),
    (1, 1, -1, 1, 0),
    (-2, 2, 1, 2, 0),
    (5, 0, 2, 4, 0),
    (8, 4, -8, -6, 0),
    (13, 56, 53, -16, 0),
    (60, 250, -260, -60, 0),
    (46, 0, 27, -71, 0),
    (-142, 511, 142, -38, 0),
    (4275, 2288, -7803, -14366, 0),
)

GRAM = (
    (2, 0, 1, 2, 0, 9, 2, -3, 0, -25, -180, -10091),
    (0, 1, 0, 1, 2, 0, 4, 56, 250, 0, 511, 2288),
    (1, 0, 2, 0, -1, 7, 0, 66, -200, 73, 0, -3528),
    (2, 1, 0, 4, 1, 7, 14, 0, 510, -52, 189, 0),
    (0, 2, -1, 1, 13, 0, -28, 107, 0, -207, 1372, -40509),
    (9, 0, 7, 7, 0, 45, 0, 107, -460, 0, -578, -51695),
    (2, 4, 0, 14, -28, 0, 180, 0, 3920, 578, 0, 191972),
    (-3, 56, 66, 0, 107, 107, 0, 6370, 1960, 3165, 34904, 0),
    (0, 250, -200, 510, 0, -460, 3920, 1960, 137300, 0, 84590, 3719240),
    (-25, 0, 73, -52, -207, 0, 578, 3165, 0, 7886, 0, 1005955),
    (-180, 511, 0, 189, 1372, -578, 0, 34904, 84590, 0, 302893, 0),
    (-10091, 2288, -3528, 0, -40509, -51695, 191972, 0, 3719240, 1005955, 0, 290779334),
)

# Four largest eigenvalues reported for GRAM (the fifth is 0).
EIGENVALUES = (2.9083e8, 3.3586e5, 6.4461e4, 3.1671e3)

# System for vertex 6 with v1..v5 as above, and its reduced form.
V6_SYSTEM = (
    (1, 0, 0, 1, 0, -1, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, -1, 0),
    (1, 1, -1, 1, 0, 0, 0, -1),
    (-2, 2, 1, 2, 0, 0, 0, 0),
)
V6_RREF_FREE_COLUMNS = (
    ("-3/7", "-2/7"),
    ("0", "0"),
    ("-4/7", "2/7"),
    ("-1/7", "-3/7"),
    ("-4/7", "-5/7"),
)

V5_SYSTEM = (
    (1, 0, 0, 1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, -1, 0, 0),
    (1, 0, 1, 0, 0, 0, -1, 0),
    (1, 1, -1, 1, 0, 0, 0, -1),
)


def product_graph() -> Graph:
    return cartesian_product(generate("complete", 3), generate("path", 4))


def target_graph() -> Graph:
    return complement(product_graph())
