"""Small finite groups, their character tables, and group-ring elements.

The embedding w -> W sends a group-ring element to the matrix with entry
(i, j) equal to the coefficient of g_i^-1 g_j; for a cyclic group under the
natural listing this is the circulant of the coefficient row.  Built-in
families: cyclic(n), elementary_abelian_2(k), dihedral(n) of order 2n, and
the symmetric group on three letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BadCharacteristic,
    IncompatibleRings,
    InternalCheckError,
    NoSuchRoot,
)
from .polymatrix import PolyMatrix
from .scalars import (
    QQ,
    ExactScalar,
    RingDescriptor,
    cast_scalar,
    cyclotomic,
    zeta,
    one as scalar_one,
    zero as scalar_zero,
)


class GroupTable:
    """Multiplication table of a small finite group, identity listed first."""

    __slots__ = ("name", "order", "elements", "mul", "inv", "conj_classes")

    def __init__(self, name: str, elements: list[str], mul: list[list[int]]):
        n = len(elements)
        if n == 0 or len(mul) != n or any(len(r) != n for r in mul):
            raise ValueError("malformed multiplication table")
        if any(x < 0 or x >= n for row in mul for x in row):
            raise ValueError("table entry out of range")
        if any(mul[0][j] != j or mul[j][0] != j for j in range(n)):
            raise ValueError("element 0 must be the identity")
        inv = [-1] * n
        for i in range(n):
            for j in range(n):
                if mul[i][j] == 0:
                    if mul[j][i] != 0:
                        raise ValueError("one-sided inverse")
                    inv[i] = j
        if any(v < 0 for v in inv):
            raise ValueError("missing inverse")
        if n <= 64:
            for a in range(n):
                for b in range(n):
                    ab = mul[a][b]
                    for c in range(n):
                        if mul[ab][c] != mul[a][mul[b][c]]:
                            raise ValueError("multiplication is not associative")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in mul))
        object.__setattr__(self, "inv", tuple(inv))
        object.__setattr__(self, "conj_classes", self._conjugacy_classes())

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("GroupTable is immutable")

    def _conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        n = self.order
        seen = [False] * n
        classes = []
        for g in range(n):
            if seen[g]:
                continue
            orbit = sorted({self.mul[self.mul[self.inv[h]][g]][h] for h in range(n)})
            for x in orbit:
                seen[x] = True
            classes.append(tuple(orbit))
        return tuple(classes)

    def exponent(self) -> int:
        """lcm of element orders."""
        from math import lcm

        result = 1
        for g in range(self.order):
            k, acc = 1, g
            while acc != 0:
                acc = self.mul[acc][g]
                k += 1
            result = lcm(result, k)
        return result

    def __eq__(self, other):
        return (
            isinstance(other, GroupTable)
            and self.elements == other.elements
            and self.mul == other.mul
        )

    def __repr__(self):
        return f"GroupTable({self.name}, order {self.order})"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "elements": list(self.elements),
            "mul": [list(r) for r in self.mul],
        }

    @staticmethod
    def from_json(obj: dict) -> "GroupTable":
        return GroupTable(obj.get("name", "group"), list(obj["elements"]), obj["mul"])


@dataclass(frozen=True)
class Character:
    """An irreducible character as a value per group element."""

    name: str
    dim: int
    values: tuple[ExactScalar, ...]


@dataclass(frozen=True)
class CharacterTable:
    group: GroupTable
    characters: tuple[Character, ...]


@lru_cache(maxsize=None)
def cyclic(n: int) -> GroupTable:
    elements = ["1"] + [f"a^{k}" if k > 1 else "a" for k in range(1, n)]
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable(f"C{n}", elements, mul)


@lru_cache(maxsize=None)
def elementary_abelian_2(k: int) -> GroupTable:
    """C_2^k listed in binary counting order, compatible with Kronecker products."""
    n = 1 << k
    letters = "abcdefgh"[:k]

    def label(mask: int) -> str:
        if mask == 0:
            return "1"
        return "".join(letters[i] for i in range(k) if mask & (1 << (k - 1 - i)))

    elements = [label(m) for m in range(n)]
    mul = [[i ^ j for j in range(n)] for i in range(n)]
    return GroupTable(f"C2^{k}", elements, mul)


@lru_cache(maxsize=None)
def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n: rotations r^k then reflections s r^k."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")
    elements = []
    for k in range(n):
        elements.append("1" if k == 0 else (f"r^{k}" if k > 1 else "r"))
    for k in range(n):
        elements.append("s" if k == 0 else (f"s*r^{k}" if k > 1 else "s*r"))

    def index(flip: int, rot: int) -> int:
        return flip * n + rot % n

    mul = [[0] * (2 * n) for _ in range(2 * n)]
    for f1 in range(2):
        for r1 in range(n):
            for f2 in range(2):
                for r2 in range(n):
                    # (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + r1*(-1)^f2)
                    rot = (r2 + (r1 if f2 == 0 else -r1)) % n
                    mul[index(f1, r1)][index(f2, r2)] = index((f1 + f2) % 2, rot)
    return GroupTable(f"D{2 * n}", elements, mul)


# S_3 under the listing 1, (12), (13), (23), (123), (132); composition is
# right-to-left (apply the second factor first), which pins the table below.
_S3_PERMS = [
    (0, 1, 2),
    (1, 0, 2),
    (2, 1, 0),
    (0, 2, 1),
    (1, 2, 0),
    (2, 0, 1),
]
_S3_LABELS = ["1", "(12)", "(13)", "(23)", "(123)", "(132)"]


@lru_cache(maxsize=None)
def symmetric_3() -> GroupTable:
    def compose(f, g):
        return tuple(f[g[i]] for i in range(3))

    idx = {p: i for i, p in enumerate(_S3_PERMS)}
    mul = [
        [idx[compose(_S3_PERMS[i], _S3_PERMS[j])] for j in range(6)]
        for i in range(6)
    ]
    return GroupTable("S3", _S3_LABELS, mul)


BUILTIN_FAMILIES = ("cyclic", "c2k", "dihedral", "s3")


def builtin_group(family: str, order: int | None = None) -> GroupTable:
    if family == "cyclic":
        if order is None or order < 1:
            raise ValueError("cyclic needs a positive order")
        return cyclic(order)
    if family == "c2k":
        if order is None or order < 2 or order & (order - 1):
            raise ValueError("c2k needs order a power of two >= 2")
        return elementary_abelian_2(order.bit_length() - 1)
    if family == "dihedral":
        if order is None or order < 2 or order % 2:
            raise ValueError("dihedral needs even order 2n")
        return dihedral(order // 2)
    if family == "s3":
        return symmetric_3()
    raise ValueError(f"unknown family {family!r}; pick from {BUILTIN_FAMILIES}")


def _value_ring(l: int) -> RingDescriptor:
    return QQ if l <= 2 else cyclotomic(l)


def _rou(ring: RingDescriptor, l: int, power: int) -> ExactScalar:
    """zeta_l^power inside _value_ring(l)."""
    if ring.kind == "rational":
        return ExactScalar.from_rational(ring, 1 if power % l == 0 else -1)
    return zeta(ring, (ring.conductor // l) * power)


def character_table(group: GroupTable) -> CharacterTable:
    """Hardcoded irreducible characters for the built-in families."""
    name = group.name
    n = group.order
    if name.startswith("C2^"):
        k = (n - 1).bit_length()
        chars = []
        for s in range(n):
            values = tuple(
                ExactScalar.from_rational(QQ, 1 if bin(s & t).count("1") % 2 == 0 else -1)
                for t in range(n)
            )
            chars.append(Character(f"chi{s}", 1, values))
        return CharacterTable(group, tuple(chars))
    if name.startswith("C") and name[1:].isdigit():
        ring = _value_ring(n)
        chars = []
        for j in range(n):
            values = tuple(_rou(ring, n, j * m) for m in range(n))
            chars.append(Character(f"chi{j}", 1, values))
        return CharacterTable(group, tuple(chars))
    if name == "S3":
        one_v = [1, 1, 1, 1, 1, 1]
        sign_v = [1, -1, -1, -1, 1, 1]
        std_v = [2, 0, 0, 0, -1, -1]
        chars = tuple(
            Character(nm, d, tuple(ExactScalar.from_rational(QQ, v) for v in vals))
            for nm, d, vals in (("triv", 1, one_v), ("sign", 1, sign_v), ("std", 2, std_v))
        )
        return CharacterTable(group, chars)
    if name.startswith("D"):
        m = n // 2  # rotations
        ring = _value_ring(m)
        chars = []

        def linear(rot_sign: int, ref_sign: int, label: str):
            values = []
            for idx in range(n):
                flip, rot = divmod(idx, m)
                v = (rot_sign**rot) * (ref_sign if flip else 1)
                values.append(ExactScalar.from_rational(QQ, v))
            return Character(label, 1, tuple(values))

        chars.append(linear(1, 1, "triv"))
        chars.append(linear(1, -1, "refl"))
        if m % 2 == 0:
            chars.append(linear(-1, 1, "rot-"))
            chars.append(linear(-1, -1, "rot-refl-"))
        two_dim = (m - 1) // 2 if m % 2 else (m - 2) // 2
        for j in range(1, two_dim + 1):
            values = []
            for idx in range(n):
                flip, rot = divmod(idx, m)
                if flip:
                    values.append(scalar_zero(ring) if ring.kind == "cyclotomic" else ExactScalar.from_rational(QQ, 0))
                else:
                    values.append(_rou(ring, m, j * rot) + _rou(ring, m, -j * rot))
            chars.append(Character(f"rot{j}", 2, tuple(values)))
        return CharacterTable(group, tuple(chars))
    raise ValueError(f"no built-in character table for {name}")


class GroupRingElement:
    """An element of FG: one coefficient per listed group element."""

    __slots__ = ("table", "ring", "coeffs")

    def __init__(self, table: GroupTable, ring: RingDescriptor, coeffs):
        coeffs = tuple(
            c if isinstance(c, ExactScalar) else ExactScalar.from_rational(ring, c)
            for c in coeffs
        )
        if len(coeffs) != table.order:
            raise ValueError("one coefficient per group element required")
        if any(c.ring != ring for c in coeffs):
            raise IncompatibleRings("coefficients must live in the declared ring")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("GroupRingElement is immutable")

    def _check(self, other: "GroupRingElement"):
        if self.table != other.table or self.ring != other.ring:
            raise IncompatibleRings("group ring mismatch")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(
            self.table, self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(
            self.table, self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return GroupRingElement(self.table, self.ring, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            self._check(other)
            out = [scalar_zero(self.ring) for _ in range(self.table.order)]
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    if b.is_zero():
                        continue
                    k = self.table.mul[i][j]
                    out[k] = out[k] + a * b
            return GroupRingElement(self.table, self.ring, out)
        return self.scale(other)

    def scale(self, c) -> "GroupRingElement":
        c = c if isinstance(c, ExactScalar) else ExactScalar.from_rational(self.ring, c)
        return GroupRingElement(self.table, self.ring, [a * c for a in self.coeffs])

    def transpose(self) -> "GroupRingElement":
        """w^T: coefficient of g moves to g^-1."""
        out = [None] * self.table.order
        for i, a in enumerate(self.coeffs):
            out[self.table.inv[i]] = a
        return GroupRingElement(self.table, self.ring, out)

    def star(self) -> "GroupRingElement":
        """w*: conjugate coefficients and send g to g^-1."""
        out = [None] * self.table.order
        for i, a in enumerate(self.coeffs):
            out[self.table.inv[i]] = a.conj()
        return GroupRingElement(self.table, self.ring, out)

    def conj_coeffs(self) -> "GroupRingElement":
        """Coefficient-wise conjugation only (used to pair complex conjugates)."""
        return GroupRingElement(self.table, self.ring, [a.conj() for a in self.coeffs])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.table == other.table
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        parts = [
            f"{c}*{self.table.elements[i]}"
            for i, c in enumerate(self.coeffs)
            if not c.is_zero()
        ]
        return " + ".join(parts) if parts else "0"


def group_ring_one(table: GroupTable, ring: RingDescriptor) -> GroupRingElement:
    coeffs = [scalar_one(ring)] + [scalar_zero(ring)] * (table.order - 1)
    return GroupRingElement(table, ring, coeffs)


def embed_group_ring(w: GroupRingElement) -> PolyMatrix:
    """The G-matrix of w: entry (i, j) is the coefficient of g_i^-1 g_j."""
    t = w.table
    grid = [
        [w.coeffs[t.mul[t.inv[i]][j]] for j in range(t.order)]
        for i in range(t.order)
    ]
    return PolyMatrix(w.ring, grid)


def group_ring_idempotents(
    table: GroupTable,
    ring: RingDescriptor,
    chars: CharacterTable | None = None,
) -> list[GroupRingElement]:
    """Primitive central idempotents (dim(chi)/|G|) sum chi(g^-1) g.

    The ring characteristic must not divide |G| and the ring must contain the
    character values; otherwise BadCharacteristic / NoSuchRoot is raised.
    """
    if chars is None:
        chars = character_table(table)
    n = table.order
    if ring.kind == "prime_field" and n % ring.p == 0:
        raise BadCharacteristic(f"|G| = {n} vanishes in F_{ring.p}")
    out = []
    for ch in chars.characters:
        scale = ExactScalar.from_rational(ring, Fraction(ch.dim, n))
        coeffs = []
        for g in range(n):
            try:
                val = cast_scalar(ch.values[table.inv[g]], ring)
            except IncompatibleRings as exc:
                raise NoSuchRoot(
                    f"character {ch.name} needs roots of unity missing from {ring}"
                ) from exc
            coeffs.append(scale * val)
        out.append(GroupRingElement(table, ring, coeffs))
    _check_complete_idempotents(out)
    return out


def _check_complete_idempotents(elems: list[GroupRingElement]):
    table, ring = elems[0].table, elems[0].ring
    total = elems[0]
    for e in elems[1:]:
        total = total + e
    if total != group_ring_one(table, ring):
        raise InternalCheckError("idempotents do not sum to 1")
    # Symmetry e* = e is a theorem when conj is complex conjugation; over a
    # prime field the involution fixes coefficients and primitive idempotents
    # of groups with non-real characters genuinely fail it, so skip there.
    check_symmetry = ring.kind != "prime_field"
    for i, e in enumerate(elems):
        if e.is_zero():
            raise InternalCheckError("zero idempotent")
        if e * e != e:
            raise InternalCheckError(f"member {i} is not idempotent")
        if check_symmetry and e.star() != e:
            raise InternalCheckError(f"member {i} is not symmetric")
        for j in range(i + 1, len(elems)):
            if not (e * elems[j]).is_zero():
                raise InternalCheckError(f"members {i},{j} are not orthogonal")
