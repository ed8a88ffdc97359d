"""Paraunitary matrices from monomial sums and Latin-square block grids.

Attaching unit monomials to a complete symmetric orthogonal set gives a
paraunitary matrix in one or many variables; arranging the members in a
Latin square of blocks scales the construction up.
"""

from paraunitary import (
    ArrangementPlan,
    MonomialAssignment,
    QQ,
    block_arrangement,
    compose,
    cyclic,
    diagonal_set,
    from_group,
    is_paraunitary,
    latin_square_from_group,
    monomial_sum,
    simple_monomial_sum,
)

c2 = from_group(cyclic(2), QQ)
w = simple_monomial_sum(c2, (0, 1))
print("degree-one sum over the order-2 set:")
print(w)
print(is_paraunitary(w).summary())

# several variables at once
multi = monomial_sum(
    c2, MonomialAssignment.build(QQ, [1, -1], [{"x": 1, "y": 2}, {"y": 1}])
)
print("\ntwo-variable sum:")
print(multi)

# a 4x4 block arrangement with one variable per cell
plan = ArrangementPlan.build(QQ, [[0, 1], [1, 0]], [["x", "y"], ["z", "t"]])
big = block_arrangement(c2, plan)
print("\n4x4 Latin-square arrangement:")
print(big)

# Latin squares come for free from group tables
grid = latin_square_from_group(cyclic(3))
print("\norder-3 circulant grid:", grid)

# products of paraunitary matrices stay paraunitary
chain = compose(
    [
        simple_monomial_sum(diagonal_set(QQ, 2), (0, 1)),
        simple_monomial_sum(c2, (1, 2)),
        simple_monomial_sum(diagonal_set(QQ, 2), (2, 3)),
    ],
    "product",
    expect_paraunitary=True,
)
print("\nchain product verified paraunitary,", f"{chain.rows}x{chain.cols}")
