"""Pseudo-paraunitary matrices: W W* = 1 with both z and z^-1 present.

The rows of any paraunitary matrix give rank-1 Laurent idempotents; a sum
with fresh unit-monomial weights satisfies W W* = 1 but is not polynomial.
Clearing by the minimal monomial recovers a polynomial matrix whose
product identity carries the squared clearing monomial.
"""

from paraunitary import (
    MonomialAssignment,
    QQ,
    cyclic,
    from_group,
    from_matrix_rows,
    is_pseudo_paraunitary,
    monomial_clear,
    monomial_sum,
    mul,
    PolyMatrix,
)

c2 = from_group(cyclic(2), QQ)
p = monomial_sum(c2, MonomialAssignment.build(QQ, [1, 1], [{"x": 1}, {"y": 1}]))
print("two-variable paraunitary input:")
print(p)

rows = from_matrix_rows(p)
print("\nrank-1 Laurent idempotents from its rows:")
for member in rows.members:
    print(member)

w = monomial_sum(rows, MonomialAssignment.build(QQ, [1, 1], [{"z": 1}, {"t": 1}]))
print("\npseudo-paraunitary sum:")
print(w)
print("W W* = p I with p =", is_pseudo_paraunitary(w))

cleared = monomial_clear(w)
print("\ncleared by", cleared.clearing_monomial, "-> polynomial matrix:")
print(cleared.matrix)
print("product monomial (clearing monomial treated as star-fixed):", cleared.product_monomial)
q = cleared.matrix
lhs = mul(q, q.adjoint().scale(cleared.product_monomial))
assert lhs == PolyMatrix.identity(QQ, 2).scale(cleared.product_monomial)
print("Q (p Q*) = p I verified exactly")
