"""Complete symmetric orthogonal sets of idempotent matrices.

Constructors cover orthonormal bases, orthogonal bases over finite fields,
rows of paraunitary matrices, diagonal units, group rings, tensor products,
conjugation, merging, and conjugate-pair realification, plus the rank-1
factorization P = v v*.  Every constructor re-verifies its output.
"""

from __future__ import annotations

from .errors import (
    IncompatibleRings,
    InternalCheckError,
    IsotropicVector,
    NotCompleteSet,
    NotOrthogonal,
    NotOrthonormal,
    NotParaunitary,
)
from .groups import (
    CharacterTable,
    GroupTable,
    character_table,
    embed_group_ring,
    group_ring_idempotents,
)
from .laurent import LaurentPoly
from .polymatrix import (
    PolyMatrix,
    VerificationReport,
    is_paraunitary,
    mul,
    tensor,
)
from .scalars import (
    ExactScalar,
    RingDescriptor,
    scalar_sqrt,
    scalar_is_negative_text,
)


class IdempotentSet:
    """Ordered complete symmetric orthogonal family of idempotent matrices."""

    __slots__ = ("ring", "n", "members", "labels")

    def __init__(self, members, labels=None, check: bool = True):
        members = tuple(members)
        if not members:
            raise NotCompleteSet("empty member list")
        ring = members[0].ring
        n = members[0].rows
        for m in members:
            if m.ring != ring:
                raise IncompatibleRings("members must share one ring")
            if m.rows != n or m.cols != n:
                raise NotCompleteSet("members must be square of one size")
        if labels is None:
            labels = tuple(f"E{i + 1}" for i in range(len(members)))
        else:
            labels = tuple(labels)
            if len(labels) != len(members):
                raise ValueError("one label per member required")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "labels", labels)
        if check:
            report = verify_set(self)
            if not report.ok:
                raise NotCompleteSet(report.summary())

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("IdempotentSet is immutable")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i) -> PolyMatrix:
        return self.members[i]

    def __eq__(self, other):
        return (
            isinstance(other, IdempotentSet)
            and self.ring == other.ring
            and self.members == other.members
        )

    def relabel(self, labels) -> "IdempotentSet":
        return IdempotentSet(self.members, labels, check=False)

    def __repr__(self):
        return f"IdempotentSet({len(self.members)} members, {self.n}x{self.n} over {self.ring})"


def verify_set(s: IdempotentSet) -> VerificationReport:
    """Check all four clauses exactly: nonzero idempotents, pairwise
    orthogonality, completeness, and symmetry under the involution."""
    failures = []
    zero = PolyMatrix.zeros(s.ring, s.n, s.n)
    for i, e in enumerate(s.members):
        if e == zero:
            failures.append(f"member {i + 1} is zero")
        if mul(e, e) != e:
            failures.append(f"member {i + 1} is not idempotent")
        if e.adjoint() != e:
            failures.append(f"member {i + 1} is not symmetric")
    for i in range(len(s.members)):
        for j in range(len(s.members)):
            if i != j and mul(s.members[i], s.members[j]) != zero:
                failures.append(f"members {i + 1},{j + 1} are not orthogonal")
    total = s.members[0]
    for e in s.members[1:]:
        total = total + e
    if total != PolyMatrix.identity(s.ring, s.n):
        failures.append("members do not sum to the identity")
    return VerificationReport("idempotent-set", not failures, None, failures)


def _as_row(ring: RingDescriptor, v) -> PolyMatrix:
    if isinstance(v, PolyMatrix):
        if v.rows != 1:
            raise ValueError("row vector expected")
        return v
    return PolyMatrix.row_vector(ring, list(v))


def projection(v: PolyMatrix) -> PolyMatrix:
    """The rank-1 projector v* v of a row vector v."""
    return mul(v.adjoint(), v)


def from_orthonormal_basis(ring: RingDescriptor, vectors, grouping=None, labels=None) -> IdempotentSet:
    """Projectors v* v of orthonormal rows, optionally summed by groups.

    ``grouping`` is a partition of the 0-based vector indices; singletons by
    default.
    """
    rows = [_as_row(ring, v) for v in vectors]
    n = rows[0].cols
    for i, u in enumerate(rows):
        for j, w in enumerate(rows):
            prod = mul(u, w.adjoint()).entries[0][0]
            expected = 1 if i == j else 0
            if prod != LaurentPoly.constant(ExactScalar.from_rational(ring, expected)):
                raise NotOrthonormal(f"v_{i + 1} v_{j + 1}* = {prod}")
    projs = [projection(v) for v in rows]
    if grouping is None:
        grouping = [[i] for i in range(len(rows))]
    _check_partition(grouping, len(rows))
    members = []
    for grp in grouping:
        acc = projs[grp[0]]
        for idx in grp[1:]:
            acc = acc + projs[idx]
        members.append(acc)
    del n
    return IdempotentSet(members, labels)


def from_orthogonal_basis_finite(ring: RingDescriptor, vectors, labels=None) -> IdempotentSet:
    """Projectors t_i^-1 v_i^T v_i of a pairwise-orthogonal basis; no square
    roots are needed, but every self inner product t_i must be nonzero."""
    rows = [_as_row(ring, v) for v in vectors]
    norms = []
    for i, u in enumerate(rows):
        for j, w in enumerate(rows):
            prod = mul(u, w.transpose()).entries[0][0]
            if i == j:
                if prod.is_zero():
                    raise IsotropicVector(f"v_{i + 1} has self inner product 0")
                norms.append(prod.constant_value())
            elif not prod.is_zero():
                raise NotOrthogonal(f"v_{i + 1} v_{j + 1}^T = {prod}")
    members = [
        mul(u.transpose(), u).scale(t.inverse()) for u, t in zip(rows, norms)
    ]
    return IdempotentSet(members, labels)


def from_matrix_rows(u: PolyMatrix, labels=None) -> IdempotentSet:
    """Rank-1 Laurent idempotents v_i* v_i from the rows of a paraunitary matrix."""
    report = is_paraunitary(u)
    if not report.ok:
        raise NotParaunitary(report.summary())
    members = []
    for i in range(u.rows):
        row = PolyMatrix.row_vector(u.ring, list(u.entries[i]))
        members.append(projection(row))
    return IdempotentSet(members, labels)


def diagonal_set(ring: RingDescriptor, n: int) -> IdempotentSet:
    """The diagonal units E_11 .. E_nn."""
    members = []
    for i in range(n):
        members.append(
            PolyMatrix(
                ring,
                [[1 if (r == c == i) else 0 for c in range(n)] for r in range(n)],
            )
        )
    return IdempotentSet(members, [f"E{i + 1}{i + 1}" for i in range(n)])


def from_group(
    table: GroupTable,
    ring: RingDescriptor,
    chars: CharacterTable | None = None,
) -> IdempotentSet:
    """Embedded primitive central idempotents of the group ring FG."""
    if chars is None:
        chars = character_table(table)
    elems = group_ring_idempotents(table, ring, chars)
    members = [embed_group_ring(e) for e in elems]
    labels = [f"e({ch.name})" for ch in chars.characters]
    return IdempotentSet(members, labels)


def _check_partition(groups, count: int):
    seen = sorted(i for grp in groups for i in grp)
    if seen != list(range(count)):
        raise ValueError(f"groups must partition 0..{count - 1}")


def merge(s: IdempotentSet, groups) -> IdempotentSet:
    """Sum members by a partition of the indices; rank is additive."""
    _check_partition(groups, len(s.members))
    members, labels = [], []
    for grp in groups:
        acc = s.members[grp[0]]
        for idx in grp[1:]:
            acc = acc + s.members[idx]
        members.append(acc)
        labels.append("+".join(s.labels[i] for i in grp))
    return IdempotentSet(members, labels)


def realify(s: IdempotentSet) -> IdempotentSet:
    """Sum complex-conjugate member pairs, keeping self-conjugate members.

    Pairing is by entrywise coefficient conjugation; a member without a
    conjugate partner in the set is an error.
    """
    members = list(s.members)
    used = [False] * len(members)
    out, labels = [], []
    for i, e in enumerate(members):
        if used[i]:
            continue
        used[i] = True
        ebar = e.map_entries(
            lambda p: LaurentPoly(p.ring, p.vars, {ex: c.conj() for ex, c in p.terms.items()})
        )
        if ebar == e:
            out.append(e)
            labels.append(s.labels[i])
            continue
        partner = None
        for j in range(i + 1, len(members)):
            if not used[j] and members[j] == ebar:
                partner = j
                break
        if partner is None:
            raise NotCompleteSet(
                f"member {i + 1} has no complex-conjugate partner in the set"
            )
        used[partner] = True
        out.append(e + members[partner])
        labels.append(f"{s.labels[i]}+{s.labels[partner]}")
    return IdempotentSet(out, labels)


def tensor_sets(s: IdempotentSet, t: IdempotentSet) -> IdempotentSet:
    """All pairwise tensor products, lexicographic in (i, j)."""
    if s.ring != t.ring:
        raise IncompatibleRings(f"{s.ring} vs {t.ring}")
    members, labels = [], []
    for i, e in enumerate(s.members):
        for j, f in enumerate(t.members):
            members.append(tensor(e, f))
            labels.append(f"{s.labels[i]}x{t.labels[j]}")
    return IdempotentSet(members, labels)


def conjugate_set(s: IdempotentSet, p: PolyMatrix) -> IdempotentSet:
    """The set P* E_i P for a paraunitary P."""
    report = is_paraunitary(p)
    if not report.ok:
        raise NotParaunitary(report.summary())
    padj = p.adjoint()
    members = [mul(mul(padj, e), p) for e in s.members]
    return IdempotentSet(members, s.labels)


def factor_rank1(p: PolyMatrix) -> PolyMatrix:
    """Column vector v with v v* = P and v* v = 1 for a symmetric rank-1
    idempotent, anchored at the first row whose diagonal entry is nonzero.

    Needs a square root of the anchor diagonal entry in the ring; the sign is
    normalized so the anchor coordinate of v is not negative.
    """
    if not p.is_scalar:
        raise NotCompleteSet("rank-1 factorization applies to scalar matrices")
    if mul(p, p) != p or p.adjoint() != p:
        raise NotCompleteSet("input must be a symmetric idempotent")
    anchor = None
    for i in range(p.rows):
        if not p.entries[i][i].is_zero():
            anchor = i
            break
    if anchor is None:
        raise NotCompleteSet("zero diagonal: input has rank 0")
    b = [p.entries[anchor][j].constant_value() for j in range(p.cols)]
    root = scalar_sqrt(b[anchor])  # may raise NoSquareRoot
    inv_root = root.inverse()
    coords = [bj.conj() * inv_root for bj in b]
    if scalar_is_negative_text(coords[anchor]):
        coords = [-c for c in coords]
    elif p.ring.kind == "prime_field" and 2 * coords[anchor].value > p.ring.p:
        coords = [-c for c in coords]
    v = PolyMatrix.column_vector(p.ring, coords)
    if mul(v, v.adjoint()) != p:
        raise InternalCheckError("rank-1 factorization failed v v* = P")
    norm = mul(v.adjoint(), v).entries[0][0]
    if not norm.is_one():
        raise InternalCheckError("rank-1 factorization failed v* v = 1")
    return v
