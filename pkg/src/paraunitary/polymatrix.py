"""Matrices over the Laurent ring: products, adjoint, blocks, exact rank/det.

A PolyMatrix with an empty variable set is a scalar matrix; idempotent sets
and specialized Hadamard matrices live there.  Paraunitarity is decided
exactly as a polynomial identity, never by sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimensionMismatch,
    IncompatibleRings,
    InternalCheckError,
    NotScalar,
    NotSquare,
    ZeroCoefficient,
)
from .laurent import LaurentPoly, exact_div
from .scalars import ExactScalar, RingDescriptor, one as scalar_one, zero as scalar_zero


def _as_poly(ring: RingDescriptor, x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        if x.ring != ring:
            raise IncompatibleRings(f"{x.ring} vs {ring}")
        return x
    if isinstance(x, ExactScalar):
        if x.ring != ring:
            raise IncompatibleRings(f"{x.ring} vs {ring}")
        return LaurentPoly.constant(x)
    return LaurentPoly.constant(ExactScalar.from_rational(ring, x))


class PolyMatrix:
    """Immutable rectangular matrix of LaurentPoly entries over one ring."""

    __slots__ = ("ring", "vars", "rows", "cols", "entries")

    def __init__(self, ring: RingDescriptor, grid):
        grid = [[_as_poly(ring, x) for x in row] for row in grid]
        rows = len(grid)
        if rows == 0 or any(len(r) != len(grid[0]) for r in grid):
            raise DimensionMismatch("ragged or empty entry grid")
        cols = len(grid[0])
        used: set[str] = set()
        for row in grid:
            for entry in row:
                used.update(entry.used_vars())
        vars = tuple(sorted(used))
        aligned = tuple(
            tuple(entry.compact().with_vars(vars) for entry in row) for row in grid
        )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", aligned)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def _from_aligned(cls, ring, vars: tuple[str, ...], grid) -> "PolyMatrix":
        """Trusted constructor: every entry already carries exactly ``vars``.

        Recomputes the used-variable union so the stored matrix stays
        canonical when variables cancel out of every entry.
        """
        used: set[str] = set()
        nvars = len(vars)
        for row in grid:
            for entry in row:
                for exps in entry.terms:
                    for i in range(nvars):
                        if exps[i]:
                            used.add(vars[i])
        if len(used) != nvars:
            uvars = tuple(sorted(used))
            grid = [[e.with_vars(uvars) for e in row] for row in grid]
            vars = uvars
        self = object.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]))
        object.__setattr__(self, "entries", tuple(tuple(row) for row in grid))
        return self

    def _with_vars(self, vars: tuple[str, ...]) -> "PolyMatrix":
        if vars == self.vars:
            return self
        grid = [[e.with_vars(vars) for e in row] for row in self.entries]
        self2 = object.__new__(PolyMatrix)
        object.__setattr__(self2, "ring", self.ring)
        object.__setattr__(self2, "vars", vars)
        object.__setattr__(self2, "rows", self.rows)
        object.__setattr__(self2, "cols", self.cols)
        object.__setattr__(self2, "entries", tuple(tuple(row) for row in grid))
        return self2

    # -- constructors --

    @staticmethod
    def identity(ring: RingDescriptor, n: int) -> "PolyMatrix":
        return PolyMatrix(
            ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(ring: RingDescriptor, rows: int, cols: int) -> "PolyMatrix":
        return PolyMatrix(ring, [[0] * cols for _ in range(rows)])

    @staticmethod
    def diagonal(ring: RingDescriptor, entries) -> "PolyMatrix":
        n = len(entries)
        return PolyMatrix(
            ring,
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
        )

    @staticmethod
    def row_vector(ring: RingDescriptor, entries) -> "PolyMatrix":
        return PolyMatrix(ring, [list(entries)])

    @staticmethod
    def column_vector(ring: RingDescriptor, entries) -> "PolyMatrix":
        return PolyMatrix(ring, [[e] for e in entries])

    # -- basic structure --

    def __getitem__(self, key) -> LaurentPoly:
        i, j = key
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_scalar(self) -> bool:
        return not self.vars

    def scalar_entries(self) -> list[list[ExactScalar]]:
        if not self.is_scalar:
            raise NotScalar(f"matrix has variables {self.vars}")
        return [[e.constant_value() for e in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __str__(self):
        body = "\n".join(
            "  [" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )
        return f"PolyMatrix {self.rows}x{self.cols} over {self.ring}\n{body}"

    __repr__ = __str__

    # -- arithmetic --

    def _aligned_pair(self, other: "PolyMatrix"):
        if self.vars == other.vars:
            return self, other
        union = tuple(sorted(set(self.vars) | set(other.vars)))
        return self._with_vars(union), other._with_vars(union)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        a, b = self._aligned_pair(other)
        return PolyMatrix._from_aligned(
            a.ring,
            a.vars,
            [
                [a.entries[i][j] + b.entries[i][j] for j in range(a.cols)]
                for i in range(a.rows)
            ],
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        a, b = self._aligned_pair(other)
        return PolyMatrix._from_aligned(
            a.ring,
            a.vars,
            [
                [a.entries[i][j] - b.entries[i][j] for j in range(a.cols)]
                for i in range(a.rows)
            ],
        )

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix._from_aligned(
            self.ring, self.vars, [[-e for e in row] for row in self.entries]
        )

    def _check_same_shape(self, other: "PolyMatrix"):
        if self.ring != other.ring:
            raise IncompatibleRings(f"{self.ring} vs {other.ring}")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def scale(self, factor) -> "PolyMatrix":
        f = _as_poly(self.ring, factor)
        vars = tuple(sorted(set(self.vars) | set(f.used_vars())))
        f = f.with_vars(vars)
        grid = [[f * e.with_vars(vars) for e in row] for row in self.entries]
        return PolyMatrix._from_aligned(self.ring, vars, grid)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix._from_aligned(
            self.ring,
            self.vars,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[fn(e) for e in row] for row in self.entries])

    def entrywise_star_fast(self) -> "PolyMatrix":
        return PolyMatrix._from_aligned(
            self.ring, self.vars, [[e.star() for e in row] for row in self.entries]
        )

    def entrywise_star(self) -> "PolyMatrix":
        return self.map_entries(lambda e: e.star())

    def adjoint(self) -> "PolyMatrix":
        """Transpose with every entry starred: M* = (M star)^T."""
        return self.entrywise_star_fast().transpose()

    def substitute(self, assignment: dict) -> "PolyMatrix":
        return self.map_entries(lambda e: e.substitute(assignment))

    def permute_rows(self, perm) -> "PolyMatrix":
        return PolyMatrix._from_aligned(
            self.ring, self.vars, [list(self.entries[p]) for p in perm]
        )

    def permute_cols(self, perm) -> "PolyMatrix":
        return PolyMatrix._from_aligned(
            self.ring, self.vars, [[row[p] for p in perm] for row in self.entries]
        )

    def trace_poly(self) -> LaurentPoly:
        if not self.is_square:
            raise NotSquare(f"{self.rows}x{self.cols}")
        acc = LaurentPoly.zero(self.ring)
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc


def mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.ring != b.ring:
        raise IncompatibleRings(f"{a.ring} vs {b.ring}")
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.rows}x{a.cols} times {b.rows}x{b.cols}")
    a, b = a._aligned_pair(b) if a.vars != b.vars else (a, b)
    ring, vars = a.ring, a.vars
    bcols = [[b.entries[k][j] for k in range(b.rows)] for j in range(b.cols)]
    grid = []
    for i in range(a.rows):
        arow = a.entries[i]
        out_row = []
        for j in range(b.cols):
            bcol = bcols[j]
            acc: dict = {}
            for k in range(a.cols):
                fterms = arow[k].terms
                if not fterms:
                    continue
                gterms = bcol[k].terms
                if not gterms:
                    continue
                for e1, c1 in fterms.items():
                    for e2, c2 in gterms.items():
                        key = tuple(x + y for x, y in zip(e1, e2))
                        prev = acc.get(key)
                        if prev is None:
                            acc[key] = c1 * c2
                        else:
                            acc[key] = prev + c1 * c2
            clean = {k: v for k, v in acc.items() if not v.is_zero()}
            out_row.append(LaurentPoly._raw(ring, vars, clean))
        grid.append(out_row)
    return PolyMatrix._from_aligned(ring, vars, grid)


def tensor(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Kronecker product with row-major block expansion."""
    if a.ring != b.ring:
        raise IncompatibleRings(f"{a.ring} vs {b.ring}")
    a, b = a._aligned_pair(b)
    grid = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                for l in range(b.cols):
                    row.append(a.entries[i][j] * b.entries[k][l])
            grid.append(row)
    return PolyMatrix._from_aligned(a.ring, a.vars, grid)


def assemble_blocks(blocks) -> PolyMatrix:
    """Glue a grid of equal-size matrices into one matrix."""
    ring = blocks[0][0].ring
    br, bc = blocks[0][0].rows, blocks[0][0].cols
    for row in blocks:
        for blk in row:
            if blk.ring != ring:
                raise IncompatibleRings("blocks must share one ring")
            if (blk.rows, blk.cols) != (br, bc):
                raise DimensionMismatch("blocks must all have the same size")
    grid = []
    for row in blocks:
        for r in range(br):
            grid.append([entry for blk in row for entry in blk.entries[r]])
    return PolyMatrix(ring, grid)


def split_blocks(m: PolyMatrix, block_rows: int, block_cols: int):
    """Cut a matrix into a grid of block_rows x block_cols submatrices."""
    if m.rows % block_rows or m.cols % block_cols:
        raise DimensionMismatch("matrix does not split evenly")
    out = []
    for bi in range(m.rows // block_rows):
        row = []
        for bj in range(m.cols // block_cols):
            row.append(
                PolyMatrix(
                    m.ring,
                    [
                        [
                            m.entries[bi * block_rows + r][bj * block_cols + c]
                            for c in range(block_cols)
                        ]
                        for r in range(block_rows)
                    ],
                )
            )
        out.append(row)
    return out


@dataclass
class BlockGrid:
    """A grid of equal-size blocks; rows feed the block inner product."""

    blocks: list

    @property
    def block_rows(self) -> int:
        return len(self.blocks)

    @property
    def block_cols(self) -> int:
        return len(self.blocks[0])

    def row(self, i: int) -> list:
        return self.blocks[i]

    def assemble(self) -> PolyMatrix:
        return assemble_blocks(self.blocks)


def block_inner_product(k_blocks, l_blocks) -> PolyMatrix:
    """Sum of B_i C_i* over two rows of blocks."""
    if len(k_blocks) != len(l_blocks) or not k_blocks:
        raise DimensionMismatch("block rows must have equal nonzero length")
    acc = mul(k_blocks[0], l_blocks[0].adjoint())
    for b, c in zip(k_blocks[1:], l_blocks[1:]):
        acc = acc + mul(b, c.adjoint())
    return acc


# --- verification ----------------------------------------------------------

@dataclass
class VerificationReport:
    """Outcome of an exact identity check, with the full residual on failure."""

    kind: str
    ok: bool
    residual: PolyMatrix | None = None
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        head = f"{self.kind}: {'PASS' if self.ok else 'FAIL'}"
        if self.ok or not self.failures:
            return head
        return head + "\n  " + "\n  ".join(self.failures)


def is_paraunitary(m: PolyMatrix) -> VerificationReport:
    """Exact check of M M* = I, reporting the residual on failure."""
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    product = mul(m, m.adjoint())
    identity = PolyMatrix.identity(m.ring, m.rows)
    residual = product - identity
    failures = []
    for i in range(m.rows):
        for j in range(m.cols):
            if not residual.entries[i][j].is_zero():
                failures.append(
                    f"entry ({i + 1},{j + 1}): product is {product.entries[i][j]}"
                )
    ok = not failures
    return VerificationReport("paraunitary", ok, None if ok else residual, failures)


def is_pseudo_paraunitary(m: PolyMatrix):
    """The unit monomial p with M M* = p I, or None when no such p exists."""
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    product = mul(m, m.adjoint())
    p = product.entries[0][0]
    unit = p.is_unit_monomial()
    if unit is None:
        return None
    for i in range(m.rows):
        for j in range(m.cols):
            expected = p if i == j else LaurentPoly.zero(m.ring)
            if product.entries[i][j] != expected:
                return None
    return p


# --- rank / trace / determinant --------------------------------------------

def rank(m: PolyMatrix) -> int:
    """Rank of a scalar matrix by exact Gaussian elimination, first-nonzero pivot."""
    grid = [row[:] for row in m.scalar_entries()]
    rows, cols = m.rows, m.cols
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not grid[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        grid[r], grid[pivot] = grid[pivot], grid[r]
        inv = grid[r][c].inverse()
        grid[r] = [x * inv for x in grid[r]]
        for i in range(rows):
            if i != r and not grid[i][c].is_zero():
                factor = grid[i][c]
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[r])]
        r += 1
        if r == rows:
            break
    return r


def trace(m: PolyMatrix) -> ExactScalar:
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    if not m.is_scalar:
        raise NotScalar(f"matrix has variables {m.vars}")
    acc = scalar_zero(m.ring)
    for i in range(m.rows):
        acc = acc + m.entries[i][i].constant_value()
    return acc


def _clear_row_monomials(m: PolyMatrix):
    """Factor the minimal monomial out of each row; returns (rows, extracted)."""
    nvars = len(m.vars)
    extracted = LaurentPoly.constant(scalar_one(m.ring))
    cleared = []
    for row in m.entries:
        mins = None
        for entry in row:
            for exps in entry.terms:
                if mins is None:
                    mins = list(exps)
                else:
                    mins = [min(a, b) for a, b in zip(mins, exps)]
        if mins is None or all(e == 0 for e in mins):
            cleared.append(list(row))
            continue
        shift_out = LaurentPoly(
            m.ring, m.vars, {tuple(mins): scalar_one(m.ring)}
        )
        shift_in = LaurentPoly(
            m.ring, m.vars, {tuple(-e for e in mins): scalar_one(m.ring)}
        )
        extracted = extracted * shift_out
        cleared.append([entry * shift_in for entry in row])
    del nvars
    return cleared, extracted


def determinant(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant via Bareiss fraction-free elimination.

    Negative exponents are cleared per row first and the extracted monomial
    product is multiplied back in at the end.
    """
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    n = m.rows
    if n == 1:
        return m.entries[0][0]
    grid, extracted = _clear_row_monomials(m)
    sign = 1
    prev = LaurentPoly.constant(scalar_one(m.ring))
    for k in range(n - 1):
        pivot_row = k
        while grid[pivot_row][k].is_zero():
            pivot_row += 1
            if pivot_row == n:
                return LaurentPoly.zero(m.ring, m.vars)
        if pivot_row != k:
            grid[pivot_row], grid[k] = grid[k], grid[pivot_row]
            sign = -sign
        pivot = grid[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * grid[i][j] - grid[i][k] * grid[k][j]
                grid[i][j] = exact_div(num, prev)
            grid[i][k] = LaurentPoly.zero(m.ring, m.vars)
        prev = pivot
    det = grid[n - 1][n - 1] * extracted
    return det if sign > 0 else -det


def determinant_cofactor(m: PolyMatrix) -> LaurentPoly:
    """Independent oracle: Laplace expansion memoized over column subsets."""
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    n = m.rows
    entries = m.entries
    zero_poly = LaurentPoly.zero(m.ring, m.vars)
    cache: dict[tuple[int, ...], LaurentPoly] = {(): LaurentPoly.constant(scalar_one(m.ring))}

    def minor(cols: tuple[int, ...]) -> LaurentPoly:
        got = cache.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        acc = zero_poly
        for idx, c in enumerate(cols):
            entry = entries[row][c]
            if entry.is_zero():
                continue
            sub = minor(cols[:idx] + cols[idx + 1 :])
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        cache[cols] = acc
        return acc

    return minor(tuple(range(n)))


def idempotent_inverse(coeffs, iset) -> PolyMatrix:
    """Inverse of sum(a_i E_i) as sum(a_i^-1 E_i); zero coefficients are refused.

    ``iset`` may be an IdempotentSet or any sequence of matrices.
    """
    members = list(getattr(iset, "members", iset))
    if len(coeffs) != len(members):
        raise DimensionMismatch("one coefficient per idempotent required")
    ring = members[0].ring
    scalars = []
    for a in coeffs:
        a = a if isinstance(a, ExactScalar) else ExactScalar.from_rational(ring, a)
        if a.is_zero():
            raise ZeroCoefficient("zero coefficient: the combination is a zero-divisor")
        scalars.append(a)
    combo = members[0].scale(scalars[0])
    inverse = members[0].scale(scalars[0].inverse())
    for a, e in zip(scalars[1:], members[1:]):
        combo = combo + e.scale(a)
        inverse = inverse + e.scale(a.inverse())
    product = mul(combo, inverse)
    if product != PolyMatrix.identity(ring, combo.rows):
        raise InternalCheckError("idempotent inverse failed its own product check")
    return inverse
