"""Rank, determinant, and inverse of idempotent combinations, all exact.

For an idempotent matrix rank equals trace; for a complete symmetric set,
det(sum a_i E_i) = prod a_i^rank(E_i), and the inverse is the sum of the
reciprocal coefficients when every a_i is nonzero.
"""

from paraunitary import (
    QQ,
    determinant,
    determinant_cofactor,
    from_group,
    idempotent_inverse,
    mul,
    rank,
    symmetric_3,
    trace,
    PolyMatrix,
)

s3 = from_group(symmetric_3(), QQ)
print("member ranks via trace:")
for label, member in zip(s3.labels, s3.members):
    print(f"  {label}: trace {trace(member)}, rank {rank(member)}")

combo = s3.members[0].scale(2) + s3.members[1].scale(3) + s3.members[2].scale(5)
det = determinant(combo)
print("\ndet(2 E1 + 3 E2 + 5 E3) =", det)
print("cofactor oracle agrees:", determinant_cofactor(combo) == det)
print("product formula: 2^1 * 3^1 * 5^4 =", 2 * 3**1 * 5**4)

inverse = idempotent_inverse([2, 3, 5], s3)
assert mul(combo, inverse) == PolyMatrix.identity(QQ, 6)
print("inverse via reciprocal coefficients verified")
