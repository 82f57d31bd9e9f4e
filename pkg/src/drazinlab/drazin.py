"""Drazin inverse, index, group inverse and spectral idempotent of a square matrix.

The inverse is built from the core-nilpotent splitting ``A = S diag(C, N) S^-1``
with ``C`` invertible and ``N`` nilpotent, so that ``A^D = S diag(C^-1, 0) S^-1``.
The column space and kernel of ``A**n`` give the two invariant subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, NoGroupInverse, NonSquare
from .matrix import Matrix, block_diag, inverse, is_nilpotent, mat_pow, nullspace_basis, rank, rref


@dataclass(frozen=True)
class DrazinResult:
    dinv: Matrix
    index: int
    spectral_idempotent: Matrix


@dataclass(frozen=True)
class CoreNilpotentDecomposition:
    basis_change: Matrix
    core: Matrix
    nil: Matrix

    @property
    def core_rank(self) -> int:
        return self.core.rows


def _require_square(A: Matrix):
    if not A.is_square:
        raise NonSquare(f"expected a square matrix, got {A.shape}")


def index_of(A: Matrix) -> int:
    """Smallest ``k >= 0`` with ``rank(A^k) == rank(A^(k+1))``; 0 iff ``A`` is invertible."""
    _require_square(A)
    k = 0
    power = Matrix.identity(A.rows, A.field)
    prev = A.rows
    while True:
        power = power @ A
        r = rank(power)
        if r == prev:
            return k
        prev = r
        k += 1


def core_nilpotent(A: Matrix) -> CoreNilpotentDecomposition:
    _require_square(A)
    n = A.rows
    An = mat_pow(A, n)
    pivots = rref(An).pivot_columns
    columns = [An.column(j) for j in pivots] + nullspace_basis(An)
    S = Matrix.from_columns(columns, A.field, n)
    T = inverse(S) @ A @ S
    r = len(pivots)
    # range(A^n) and ker(A^n) are A-invariant, so the off-diagonal blocks vanish
    assert T.submatrix(0, r, r, n).is_zero() and T.submatrix(r, n, 0, r).is_zero()
    return CoreNilpotentDecomposition(S, T.submatrix(0, r, 0, r), T.submatrix(r, n, r, n))


def drazin_inverse(A: Matrix) -> Matrix:
    dec = core_nilpotent(A)
    S = dec.basis_change
    r = dec.core_rank
    zero_block = Matrix.zeros(A.rows - r, A.rows - r, A.field)
    return S @ block_diag(inverse(dec.core), zero_block, field=A.field) @ inverse(S)


def drazin(A: Matrix) -> DrazinResult:
    dinv = drazin_inverse(A)
    pi = Matrix.identity(A.rows, A.field) - A @ dinv
    return DrazinResult(dinv, index_of(A), pi)


def group_inverse(A: Matrix) -> Matrix:
    res = drazin(A)
    if res.index >= 2:
        raise NoGroupInverse(f"index {res.index} >= 2")
    return res.dinv


def spectral_idempotent(A: Matrix) -> Matrix:
    _require_square(A)
    return Matrix.identity(A.rows, A.field) - A @ drazin_inverse(A)


def is_drazin_of(A: Matrix, X: Matrix, k: int = 1) -> bool:
    """Definitional test: ``AX = XA``, ``XAX = X`` and ``A - A^2 X`` nilpotent.

    The power form ``A^k = A^(k+1) X`` is evaluated as well (with ``k``
    clamped to at least 1); the two forms must agree, which they do whenever
    ``k`` is at least the index of ``A``.
    """
    if A.field != X.field:
        raise FieldMismatch(f"{A.field} vs {X.field}")
    if not A.is_square or A.shape != X.shape:
        raise DimensionMismatch(f"{A.shape} vs {X.shape}")
    AX = A @ X
    if AX != X @ A or X @ AX != X:
        return False
    nil_form = is_nilpotent(A - A @ AX)
    Ak = mat_pow(A, max(k, 1))
    power_form = Ak == Ak @ AX
    if nil_form != power_form:
        raise ValueError(f"k={k} is below the index of A; definitional forms disagree")
    return nil_form
