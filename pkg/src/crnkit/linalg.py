"""Exact dense linear algebra over the rationals.

Everything in this module computes with `fractions.Fraction`, so rank,
row-basis selection, and coordinate extraction are decided exactly: there
is no tolerance anywhere.  The matrices that show up in reaction-network
analysis are tiny (tens of rows), so dense arithmetic is entirely adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


class NotInSpanError(ValueError):
    """Raised when a vector is not a linear combination of the given basis."""


class RationalMatrix:
    """Immutable dense matrix of exact rationals (row-major)."""

    __slots__ = ("_entries", "_cols")

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        data = tuple(tuple(Fraction(v) for v in row) for row in rows)
        width = len(data[0]) if data else 0
        if any(len(r) != width for r in data):
            raise ValueError("all rows must have the same length")
        self._entries = data
        self._cols = width

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._entries)

    @property
    def cols(self) -> int:
        return self._cols

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._entries)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._entries[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._entries)) if self._entries else RationalMatrix([])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [other.column(j) for j in range(other.cols)]
        return RationalMatrix(
            [[_dot(r, c) for c in cols] for r in self._entries]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self._entries)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._entries]


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class BasisSelection:
    """Row indices forming a maximal linearly independent set, greedily chosen.

    ``basis_rows`` is strictly increasing: a row joins the basis exactly when
    it is not in the span of the rows selected before it, which makes the
    selection the lexicographically smallest basis index set.
    """

    basis_rows: tuple[int, ...]
    rank: int


def rref(matrix: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row-echelon form and the strictly increasing pivot columns."""
    m = matrix.to_lists()
    nrows, ncols = matrix.rows, matrix.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return RationalMatrix(m), tuple(pivots)


def rank(matrix: RationalMatrix) -> int:
    """Exact rank of the matrix."""
    return len(rref(matrix)[1])


def _reduce_row(
    row: list[Fraction], echelon: list[tuple[int, tuple[Fraction, ...]]]
) -> list[Fraction]:
    # echelon rows are normalized (leading 1) and sorted by pivot column.
    for pcol, erow in echelon:
        c = row[pcol]
        if c:
            row = [a - c * b for a, b in zip(row, erow)]
    return row


def _first_nonzero(row: Sequence[Fraction]) -> int | None:
    for j, v in enumerate(row):
        if v:
            return j
    return None


def _insert_into_echelon(
    echelon: list[tuple[int, tuple[Fraction, ...]]], row: Sequence[RationalLike]
) -> bool:
    """Reduce ``row`` against ``echelon``; insert if independent.

    Returns True when the row enlarged the span.  ``echelon`` is mutated.
    """
    reduced = _reduce_row([Fraction(v) for v in row], echelon)
    p = _first_nonzero(reduced)
    if p is None:
        return False
    pv = reduced[p]
    normalized = tuple(x / pv for x in reduced)
    echelon.append((p, normalized))
    echelon.sort(key=lambda t: t[0])
    return True


def rank_of_rows(rows: Iterable[Sequence[RationalLike]]) -> int:
    """Rank of the span of the given row vectors (no matrix object needed)."""
    echelon: list[tuple[int, tuple[Fraction, ...]]] = []
    for row in rows:
        _insert_into_echelon(echelon, row)
    return len(echelon)


def select_basis_rows(matrix: RationalMatrix) -> BasisSelection:
    """Greedy scan in row order: keep each row not spanned by earlier picks."""
    echelon: list[tuple[int, tuple[Fraction, ...]]] = []
    chosen: list[int] = []
    for i in range(matrix.rows):
        if _insert_into_echelon(echelon, matrix.row(i)):
            chosen.append(i)
    return BasisSelection(tuple(chosen), len(chosen))


def coordinates(
    vector: Sequence[RationalLike],
    basis: RationalMatrix | Sequence[Sequence[RationalLike]],
) -> tuple[Fraction, ...]:
    """Coefficients ``a`` with ``vector = sum(a[j] * basis_row[j])``, exact.

    The basis rows must be linearly independent (a `BasisSelection` of the
    matrix containing ``vector`` guarantees this).  Raises `NotInSpanError`
    when the vector is not in the row span.
    """
    if isinstance(basis, RationalMatrix):
        basis_rows = [basis.row(j) for j in range(basis.rows)]
    else:
        basis_rows = [tuple(Fraction(v) for v in row) for row in basis]
    p = len(basis_rows)
    v = [Fraction(x) for x in vector]
    m = len(v)
    if any(len(row) != m for row in basis_rows):
        raise ValueError("basis row length does not match vector length")

    # Solve B^T a = v on the augmented m x (p+1) system.
    aug = [[basis_rows[j][i] for j in range(p)] + [v[i]] for i in range(m)]
    pivot_row_of_col: dict[int, int] = {}
    r = 0
    for c in range(p):
        pivot_row = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot_row is None:
            raise ValueError("basis rows are linearly dependent")
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][c]
        if pv != 1:
            aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivot_row_of_col[c] = r
        r += 1
    if any(aug[i][p] != 0 for i in range(r, m)):
        raise NotInSpanError("vector is not in the span of the basis rows")
    return tuple(aug[pivot_row_of_col[c]][p] for c in range(p))
