"""Paraunitary and pseudo-paraunitary matrix constructions.

Monomial sums over idempotent sets, Belevitch building blocks, spectral
synthesis of unitaries, Latin-square block arrangements, tangles of two
paraunitary matrices, pseudo-paraunitary assembly from rank-1 Laurent
idempotents, and monomial clearing.  Every constructor asserts its own
output identity exactly; an assertion failure here is an internal bug,
distinct from the precondition errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .errors import (
    DimensionMismatch,
    IncompatibleRings,
    InternalCheckError,
    NegativeExponent,
    NotLatinSquare,
    NotOrthonormal,
    NotParaunitary,
    NotPseudoParaunitary,
    NotUnitModulus,
    NotUnitVector,
    SizeMismatch,
    VariableCollision,
)
from .groups import GroupTable
from .idempotents import IdempotentSet, from_matrix_rows, projection
from .laurent import LaurentPoly
from .polymatrix import (
    PolyMatrix,
    assemble_blocks,
    is_paraunitary,
    is_pseudo_paraunitary,
    mul,
    tensor,
)
from .scalars import ExactScalar, RingDescriptor, is_unit_modulus, sqrt2


def _assert_paraunitary(w: PolyMatrix, what: str) -> PolyMatrix:
    report = is_paraunitary(w)
    if not report.ok:
        raise InternalCheckError(f"{what} failed its paraunitarity check:\n{report.summary()}")
    return w


def unit_monomial(ring: RingDescriptor, coeff, exponents: dict[str, int]) -> LaurentPoly:
    """A coefficient of unit modulus times non-negative powers of variables."""
    c = coeff if isinstance(coeff, ExactScalar) else ExactScalar.from_rational(ring, coeff)
    if not is_unit_modulus(c):
        raise NotUnitModulus(f"|{c}|^2 != 1")
    if any(e < 0 for e in exponents.values()):
        raise NegativeExponent(f"exponents must be non-negative, got {exponents}")
    return LaurentPoly.monomial(c, exponents, ring)


@dataclass(frozen=True)
class MonomialAssignment:
    """One unit monomial per idempotent-set member."""

    monomials: tuple[LaurentPoly, ...]

    @staticmethod
    def build(ring: RingDescriptor, coeffs, exponents) -> "MonomialAssignment":
        """coeffs: one unit-modulus scalar per member; exponents: one
        {variable: power} map (or a bare power for a single variable z)."""
        monos = []
        for c, e in zip(coeffs, exponents, strict=True):
            if isinstance(e, int):
                e = {"z": e}
            monos.append(unit_monomial(ring, c, e))
        return MonomialAssignment(tuple(monos))

    def __len__(self):
        return len(self.monomials)


def monomial_sum(s: IdempotentSet, assignment: MonomialAssignment) -> PolyMatrix:
    """W = sum of alpha_i E_i z^(t_i); paraunitary by completeness."""
    if len(assignment) != len(s.members):
        raise DimensionMismatch("one monomial per member required")
    acc = s.members[0].scale(assignment.monomials[0])
    for e, m in zip(s.members[1:], assignment.monomials[1:]):
        acc = acc + e.scale(m)
    return _assert_paraunitary(acc, "monomial_sum")


def simple_monomial_sum(s: IdempotentSet, powers, var: str = "z") -> PolyMatrix:
    """Convenience: coefficients all 1, powers of a single variable."""
    assignment = MonomialAssignment.build(
        s.ring, [1] * len(s.members), [{var: p} for p in powers]
    )
    return monomial_sum(s, assignment)


def belevitch_block(v: PolyMatrix, var: str = "z") -> PolyMatrix:
    """H(z) = 1 - v v* + z v v* for a unit column vector v."""
    if v.cols != 1:
        raise NotUnitVector("column vector expected")
    norm = mul(v.adjoint(), v).entries[0][0]
    if not norm.is_one():
        raise NotUnitVector(f"v* v = {norm}")
    f1 = mul(v, v.adjoint())
    eye = PolyMatrix.identity(v.ring, v.rows)
    z = LaurentPoly.variable(var, v.ring)
    h = (eye - f1) + f1.scale(z)
    return _assert_paraunitary(h, "belevitch_block")


def spectral_unitary(ring: RingDescriptor, vectors, units) -> PolyMatrix:
    """U = sum of alpha_i v_i* v_i over an orthonormal basis of rows.

    The alpha_i are the eigenvalues of U, with U v_i* = alpha_i v_i*.
    """
    rows = [
        v if isinstance(v, PolyMatrix) else PolyMatrix.row_vector(ring, list(v))
        for v in vectors
    ]
    units = [
        u if isinstance(u, ExactScalar) else ExactScalar.from_rational(ring, u)
        for u in units
    ]
    if len(rows) != len(units):
        raise DimensionMismatch("one unit per vector required")
    for u in units:
        if not is_unit_modulus(u):
            raise NotUnitModulus(f"|{u}|^2 != 1")
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            prod = mul(a, b.adjoint()).entries[0][0]
            expected = 1 if i == j else 0
            if prod != LaurentPoly.constant(ExactScalar.from_rational(ring, expected)):
                raise NotOrthonormal(f"v_{i + 1} v_{j + 1}* = {prod}")
    acc = projection(rows[0]).scale(units[0])
    for u, v in zip(units[1:], rows[1:]):
        acc = acc + projection(v).scale(u)
    return _assert_paraunitary(acc, "spectral_unitary")


@dataclass(frozen=True)
class ArrangementPlan:
    """A Latin square of member indices with one unit monomial per cell."""

    grid: tuple[tuple[int, ...], ...]
    cells: tuple[tuple[LaurentPoly, ...], ...]

    @staticmethod
    def build(ring: RingDescriptor, grid, cell_monomials) -> "ArrangementPlan":
        """cell_monomials: per cell either a variable name, a (coeff, exps)
        pair, or a ready LaurentPoly unit monomial."""
        cells = []
        for row in cell_monomials:
            out = []
            for cell in row:
                if isinstance(cell, LaurentPoly):
                    mono = cell
                    if mono.is_unit_monomial() is None:
                        raise NotUnitModulus(f"cell {mono} is not a unit monomial")
                elif isinstance(cell, str):
                    mono = unit_monomial(ring, 1, {cell: 1})
                else:
                    coeff, exps = cell
                    mono = unit_monomial(ring, coeff, exps)
                out.append(mono)
            cells.append(tuple(out))
        return ArrangementPlan(tuple(tuple(r) for r in grid), tuple(cells))

    @property
    def k(self) -> int:
        return len(self.grid)


def latin_square_from_group(table: GroupTable) -> tuple[tuple[int, ...], ...]:
    """The index grid (i, j) -> g_i^-1 g_j; a circulant for cyclic groups."""
    n = table.order
    return tuple(
        tuple(table.mul[table.inv[i]][j] for j in range(n)) for i in range(n)
    )


def block_arrangement(s: IdempotentSet, plan: ArrangementPlan) -> PolyMatrix:
    """Arrange the members in a Latin-square block grid with monomial weights."""
    k = len(s.members)
    if plan.k != k or any(len(row) != k for row in plan.grid):
        raise NotLatinSquare(f"grid must be {k}x{k} over the member indices")
    full = set(range(k))
    for row in plan.grid:
        if set(row) != full:
            raise NotLatinSquare(f"row {row} is not a permutation of 0..{k - 1}")
    for col in zip(*plan.grid):
        if set(col) != full:
            raise NotLatinSquare(f"column {col} is not a permutation of 0..{k - 1}")
    for row in plan.cells:
        for mono in row:
            if mono.is_unit_monomial() is None:
                raise NotUnitModulus(f"cell {mono} is not a unit monomial")
            _, exps = mono.single_term()
            if any(e < 0 for e in exps.values()):
                raise NegativeExponent("cell exponents must be non-negative")
    blocks = [
        [s.members[plan.grid[i][j]].scale(plan.cells[i][j]) for j in range(k)]
        for i in range(k)
    ]
    return _assert_paraunitary(assemble_blocks(blocks), "block_arrangement")


@dataclass(frozen=True)
class TangleVariant:
    """One of the 24 tangle shapes of an ordered pair.

    order: 'AB' or 'BA'; base: 'vertical' for (X Y; X -Y) or 'horizontal' for
    (X X; Y -Y); perm: 'none', 'rows', or 'cols' (block swaps); transpose:
    transpose the assembled matrix.
    """

    order: str = "AB"
    base: str = "vertical"
    perm: str = "none"
    transpose: bool = False

    def __post_init__(self):
        if self.order not in ("AB", "BA"):
            raise ValueError("order must be 'AB' or 'BA'")
        if self.base not in ("vertical", "horizontal"):
            raise ValueError("base must be 'vertical' or 'horizontal'")
        if self.perm not in ("none", "rows", "cols"):
            raise ValueError("perm must be 'none', 'rows', or 'cols'")


def all_tangle_variants() -> list[TangleVariant]:
    return [
        TangleVariant(order, base, perm, transpose)
        for order, base, perm, transpose in iter_product(
            ("AB", "BA"), ("vertical", "horizontal"), ("none", "rows", "cols"), (False, True)
        )
    ]


def tangle(a: PolyMatrix, b: PolyMatrix, variant: TangleVariant = TangleVariant()) -> PolyMatrix:
    """The 1/sqrt2-scaled block tangle of two equal-size paraunitary matrices.

    The scale factor is always included; rings without sqrt(2) raise
    NoSquareRoot rather than silently dropping it.
    """
    if a.ring != b.ring:
        raise IncompatibleRings(f"{a.ring} vs {b.ring}")
    if not a.is_square or (a.rows, a.cols) != (b.rows, b.cols):
        raise SizeMismatch(f"{a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    factor = sqrt2(a.ring).inverse()
    x, y = (a, b) if variant.order == "AB" else (b, a)
    if variant.base == "vertical":
        blocks = [[x, y], [x, -y]]
    else:
        blocks = [[x, x], [y, -y]]
    if variant.perm == "rows":
        blocks = [blocks[1], blocks[0]]
    elif variant.perm == "cols":
        blocks = [[row[1], row[0]] for row in blocks]
    w = assemble_blocks(blocks).scale(factor)
    if variant.transpose:
        w = w.transpose()
    return _assert_paraunitary(w, "tangle")


def pseudo_from_rows(p: PolyMatrix, weights: MonomialAssignment) -> PolyMatrix:
    """W = sum of w_i P_i over the rank-1 row idempotents of a paraunitary P.

    The weight variables must be disjoint from the variables of P; the result
    satisfies W W* = 1 but involves both z and z^-1.
    """
    for mono in weights.monomials:
        used = set(mono.used_vars())
        if used & set(p.vars):
            raise VariableCollision(f"weight variables {used & set(p.vars)} already in use")
    s = from_matrix_rows(p)  # raises NotParaunitary on bad input
    if len(weights) != len(s.members):
        raise DimensionMismatch("one weight per row required")
    acc = s.members[0].scale(weights.monomials[0])
    for e, m in zip(s.members[1:], weights.monomials[1:]):
        acc = acc + e.scale(m)
    mono = is_pseudo_paraunitary(acc)
    if mono is None or not mono.is_one():
        raise InternalCheckError("pseudo_from_rows failed W W* = 1")
    return acc


@dataclass(frozen=True)
class ClearedMatrix:
    """Result of clearing a pseudo-paraunitary matrix to polynomial form.

    ``matrix`` is Q = m W for the minimal clearing monomial m.  Q satisfies
    Q Q* = (m m*) I = I exactly; ``product_monomial`` records the monomial
    p = m conj(m) (the clearing monomial treated as star-fixed), the form in
    which the product identity Q (p Q*) = p I is usually quoted.
    """

    matrix: PolyMatrix
    clearing_monomial: LaurentPoly
    product_monomial: LaurentPoly


def monomial_clear(w: PolyMatrix) -> ClearedMatrix:
    """Scale by the minimal monomial clearing all negative exponents."""
    mono = is_pseudo_paraunitary(w)
    if mono is None:
        raise NotPseudoParaunitary("input fails W W* = p I")
    mins = [0] * len(w.vars)
    for row in w.entries:
        for entry in row:
            for exps in entry.terms:
                mins = [min(m, e) for m, e in zip(mins, exps)]
    exps = {v: -m for v, m in zip(w.vars, mins) if m < 0}
    m = LaurentPoly.monomial(1, exps, w.ring)
    cleared = w.scale(m)
    coeff, emap = m.single_term()
    p = LaurentPoly.monomial(coeff * coeff.conj(), {v: 2 * e for v, e in emap.items()}, w.ring)
    check = is_pseudo_paraunitary(cleared)
    if check is None:
        raise InternalCheckError("cleared matrix lost the product identity")
    return ClearedMatrix(cleared, m, p)


def compose(parts, mode: str = "product", expect_paraunitary: bool = False) -> PolyMatrix:
    """Fold a list of matrices with the matrix or tensor product."""
    parts = list(parts)
    if not parts:
        raise DimensionMismatch("need at least one matrix")
    acc = parts[0]
    for nxt in parts[1:]:
        acc = mul(acc, nxt) if mode == "product" else tensor(acc, nxt)
    if expect_paraunitary:
        report = is_paraunitary(acc)
        if not report.ok:
            raise NotParaunitary(report.summary())
    return acc
