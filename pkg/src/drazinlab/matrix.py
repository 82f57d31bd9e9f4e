"""Dense immutable matrices over an exact field, plus the elimination kernels.

Entries are held as raw field values (see :mod:`drazinlab.scalar`) in a tuple
of row tuples, so matrices are hashable and compare bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, NonSquare, Singular
from .scalar import QQ, FieldTag, Scalar


class Matrix:
    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, data: Iterable[Iterable], field: FieldTag = QQ, *, shape=None, _raw=False):
        if _raw:
            rows = data
        else:
            rows = tuple(tuple(field.coerce(_unwrap(x, field)) for x in row) for row in data)
        if shape is not None:
            nrows, ncols = shape
        else:
            nrows = len(rows)
            ncols = len(rows[0]) if nrows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged or mis-shaped matrix data")
        self.field = field
        self.rows = nrows
        self.cols = ncols
        self.data = rows
        self._hash = None

    @classmethod
    def _wrap(cls, rows, field, nrows, ncols) -> Matrix:
        return cls(rows, field, shape=(nrows, ncols), _raw=True)

    # constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, field: FieldTag = QQ) -> Matrix:
        cols = rows if cols is None else cols
        z = field.zero
        return cls._wrap(tuple((z,) * cols for _ in range(rows)), field, rows, cols)

    @classmethod
    def identity(cls, n: int, field: FieldTag = QQ) -> Matrix:
        z, o = field.zero, field.one
        return cls._wrap(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Matrix], field: FieldTag, nrows: int) -> Matrix:
        """Stack column vectors (``nrows x 1`` matrices) side by side."""
        rows = tuple(tuple(c.data[i][0] for c in columns) for i in range(nrows))
        return cls._wrap(rows, field, nrows, len(columns))

    # basic protocol -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.data[i][j])

    def entries(self) -> list[Scalar]:
        """Row-major list of entries as :class:`Scalar`."""
        return [Scalar(self.field, x) for row in self.data for x in row]

    def column(self, j: int) -> Matrix:
        return Matrix._wrap(tuple((row[j],) for row in self.data), self.field, self.rows, 1)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        return Matrix._wrap(tuple(row[c0:c1] for row in self.data[r0:r1]), self.field, r1 - r0, c1 - c0)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.field.format_value(x) for x in row) + "]" for row in self.data)
        return f"Matrix([{body}], {self.field})"

    def is_zero(self) -> bool:
        return not any(x for row in self.data for x in row)

    def tolist(self) -> list[list[str]]:
        fmt = self.field.format_value
        return [[fmt(x) for x in row] for row in self.data]

    # arithmetic ---------------------------------------------------------

    def _same(self, other: Matrix):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        red = self.field.reduce
        rows = tuple(tuple(red(x + y) for x, y in zip(r, s)) for r, s in zip(self.data, other.data))
        return Matrix._wrap(rows, self.field, self.rows, self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same(other)
        red = self.field.reduce
        rows = tuple(tuple(red(x - y) for x, y in zip(r, s)) for r, s in zip(self.data, other.data))
        return Matrix._wrap(rows, self.field, self.rows, self.cols)

    def __neg__(self) -> Matrix:
        red = self.field.reduce
        return Matrix._wrap(tuple(tuple(red(-x) for x in r) for r in self.data), self.field, self.rows, self.cols)

    def scale(self, c) -> Matrix:
        f = self.field
        c = f.coerce(_unwrap(c, f))
        return Matrix._wrap(tuple(tuple(f.reduce(c * x) for x in r) for r in self.data), f, self.rows, self.cols)

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __pow__(self, k: int) -> Matrix:
        return mat_pow(self, k)

    def transpose(self) -> Matrix:
        return Matrix._wrap(tuple(zip(*self.data)) if self.rows else (), self.field, self.cols, self.rows)


def _unwrap(x, field: FieldTag):
    if isinstance(x, Scalar):
        if x.field != field:
            raise FieldMismatch(f"{x.field} vs {field}")
        return x.value
    if isinstance(x, str):
        return field.parse_value(x)
    return x


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    red = A.field.reduce
    zero = A.field.zero
    bcols = tuple(zip(*B.data)) if B.rows else ((),) * B.cols
    rows = tuple(
        tuple(red(sum((x * y for x, y in zip(row, col)), zero)) for col in bcols)
        for row in A.data
    )
    return Matrix._wrap(rows, A.field, A.rows, B.cols)


def mat_pow(A: Matrix, k: int) -> Matrix:
    """``A**k`` by binary exponentiation, with ``A**0 = I``."""
    if not A.is_square:
        raise NonSquare(f"power of non-square {A.shape} matrix")
    if k < 0:
        raise ValueError("negative exponent")
    result = Matrix.identity(A.rows, A.field)
    base = A
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


@dataclass(frozen=True)
class RrefResult:
    rref: Matrix
    pivot_columns: tuple[int, ...]
    rank: int


def _eliminate(rows: list[list], ncols: int, field: FieldTag, stop_col: int | None = None):
    """In-place Gauss-Jordan on ``rows``; returns pivot columns.

    Pivot choice is deterministic: for each column left to right, the first
    row (top-down) at or below the current pivot row with a nonzero entry.
    Only columns ``< stop_col`` are used as pivot columns.
    """
    red, inv = field.reduce, field.inv
    stop = ncols if stop_col is None else stop_col
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(stop):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        s = inv(piv[c])
        if s != 1:
            piv = rows[r] = [red(x * s) for x in piv]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [red(x - f * y) for x, y in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return pivots


def rref(A: Matrix) -> RrefResult:
    rows = [list(r) for r in A.data]
    pivots = _eliminate(rows, A.cols, A.field)
    R = Matrix._wrap(tuple(tuple(r) for r in rows), A.field, A.rows, A.cols)
    return RrefResult(R, tuple(pivots), len(pivots))


def rank(A: Matrix) -> int:
    return rref(A).rank


def nullspace_basis(A: Matrix) -> list[Matrix]:
    """Basis of ``{x : Ax = 0}`` as column vectors, one per free column in increasing order."""
    res = rref(A)
    field = A.field
    pivots = res.pivot_columns
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * A.cols
        vec[fc] = field.one
        for row_idx, pc in enumerate(pivots):
            vec[pc] = field.reduce(-res.rref.data[row_idx][fc])
        basis.append(Matrix._wrap(tuple((x,) for x in vec), field, A.cols, 1))
    return basis


def inverse(A: Matrix) -> Matrix:
    """Gauss-Jordan on ``[A | I]``."""
    if not A.is_square:
        raise NonSquare(f"inverse of non-square {A.shape} matrix")
    n = A.rows
    f = A.field
    rows = [list(r) + [f.one if i == j else f.zero for j in range(n)] for i, r in enumerate(A.data)]
    pivots = _eliminate(rows, 2 * n, f, stop_col=n)
    if len(pivots) < n:
        raise Singular(f"matrix has rank {len(pivots)} < {n}")
    return Matrix._wrap(tuple(tuple(r[n:]) for r in rows), f, n, n)


def is_nilpotent(A: Matrix) -> bool:
    """An ``n x n`` matrix is nilpotent iff ``A**n == 0``."""
    if not A.is_square:
        raise NonSquare(f"nilpotency of non-square {A.shape} matrix")
    return mat_pow(A, A.rows).is_zero()


def block_diag(*blocks: Matrix, field: FieldTag | None = None) -> Matrix:
    """Block-diagonal matrix; empty (0x0) blocks are allowed."""
    if field is None:
        field = next(b.field for b in blocks)
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = []
    c0 = 0
    z = field.zero
    for b in blocks:
        if b.field != field:
            raise FieldMismatch(f"{b.field} vs {field}")
        for r in b.data:
            rows.append((z,) * c0 + tuple(r) + (z,) * (m - c0 - b.cols))
        c0 += b.cols
    return Matrix._wrap(tuple(rows), field, n, m)


def commutes(A: Matrix, B: Matrix) -> bool:
    return A @ B == B @ A
