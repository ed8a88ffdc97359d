"""Group rings as a source of complete symmetric orthogonal idempotent sets.

The primitive central idempotents e(chi) = (dim chi / |G|) sum chi(g^-1) g
embed into matrices via the G-matrix; for cyclic groups this gives
circulants.  Conjugate pairs merge into real sets.
"""

from paraunitary import (
    QQ,
    cyclic,
    cyclotomic_ring,
    embed_group_ring,
    from_group,
    group_ring_idempotents,
    mul,
    rank,
    realify,
    symmetric_3,
    verify_set,
)

# order 2: the classic pair
c2 = from_group(cyclic(2), QQ)
for label, member in zip(c2.labels, c2.members):
    print(f"{label}:")
    print(member)

# order 4 needs a fourth root of unity
z4 = cyclotomic_ring(4)
c4 = from_group(cyclic(4), z4)
print("\norder-4 set over Q(i):", verify_set(c4).summary())
real = realify(c4)
print("realified:", [lbl for lbl in real.labels])
print(verify_set(real).summary())

# the symmetric group on three letters has rational idempotents
s3 = from_group(symmetric_3(), QQ)
print("\nsymmetric-group ranks:", [rank(m) for m in s3.members])
print(s3.members[2])

# the embedding is a ring homomorphism
elems = group_ring_idempotents(symmetric_3(), QQ)
e1, e2 = elems[0], elems[2]
lhs = embed_group_ring(e1 * e2)
rhs = mul(embed_group_ring(e1), embed_group_ring(e2))
assert lhs == rhs
print("\nembedding respects products: OK")
