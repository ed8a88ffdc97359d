"""Specializing variables at unit-modulus values yields Hadamard matrices.

Any paraunitary matrix specializes to an exact unitary; for the block
arrangements built from circulant idempotents, clearing the fraction gives
regular real or complex Hadamard matrices, including Butson types.
"""

from paraunitary import (
    ArrangementPlan,
    QQ,
    block_arrangement,
    cyclic,
    cyclotomic_ring,
    from_group,
    latin_square_from_group,
    root_of_unity,
    specialize,
)

# real 4x4
c2 = from_group(cyclic(2), QQ)
w4 = block_arrangement(
    c2, ArrangementPlan.build(QQ, [[0, 1], [1, 0]], [["x", "y"], ["z", "t"]])
)
report = specialize(w4, {"x": 1, "y": 1, "z": 1, "t": 1})
print(report.summary())
print(report.cleared)

# 9x9 with third roots of unity: Butson type H(3, 9)
z3 = cyclotomic_ring(3)
c3 = from_group(cyclic(3), z3)
w9 = block_arrangement(
    c3,
    ArrangementPlan.build(
        z3,
        latin_square_from_group(cyclic(3)),
        [["x", "y", "z"], ["z", "x", "y"], ["y", "z", "x"]],
    ),
)
omega = root_of_unity(z3, 3)
report9 = specialize(w9, {"x": omega, "y": 1, "z": omega * omega})
print()
print(report9.summary())
