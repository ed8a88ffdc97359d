"""Rank-1 projectors from orthonormal bases, over Q and over prime fields.

An orthonormal basis v_1 .. v_n of row vectors yields projectors
P_i = v_i* v_i forming a complete symmetric orthogonal set of idempotents;
merging members keeps the set complete while adding their ranks.
"""

from fractions import Fraction

from paraunitary import (
    from_orthogonal_basis_finite,
    from_orthonormal_basis,
    merge,
    prime_field,
    rank,
    verify_set,
    QQ,
)

v1 = [Fraction(2, 3), Fraction(1, 3), Fraction(2, 3)]
v2 = [Fraction(1, 3), Fraction(2, 3), Fraction(-2, 3)]
v3 = [Fraction(2, 3), Fraction(-2, 3), Fraction(-1, 3)]

s = from_orthonormal_basis(QQ, [v1, v2, v3])
print("projector set over Q:")
for label, member in zip(s.labels, s.members):
    print(f"  {label}: rank {rank(member)}")
    print(member)
print(verify_set(s).summary())

merged = merge(s, [[0], [1, 2]])
print("\nafter merging the last two members:")
for label, member in zip(merged.labels, merged.members):
    print(f"  {label}: rank {rank(member)}")
print(verify_set(merged).summary())

# over a prime field no square roots are needed: P_i = t_i^-1 v_i^T v_i
f5 = prime_field(5)
finite = from_orthogonal_basis_finite(f5, [[2, 1, 2], [1, 2, 3], [2, 3, 4]])
print("\nthe same basis reduced mod 5:")
for member in finite.members:
    print(member)
print(verify_set(finite).summary())
