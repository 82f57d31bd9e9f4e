"""Condition-pair generation and a brute-force Drazin oracle.

Sampling uses NumPy's PCG64 bit generator (``numpy.random.Generator``), a
seedable 64-bit generator whose streams can be split with ``SeedSequence``.
Exhaustive enumeration filters candidates with vectorized integer arithmetic
mod p and then re-checks every emitted pair exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import ExhaustedAttempts, NonUnique, Singular, SpaceTooLarge
from .identities import ConditionPair, check_conditions
from .matrix import Matrix, block_diag, inverse, is_nilpotent, mat_pow
from .scalar import FieldTag

EXHAUSTIVE = "exhaustive"
RANDOM = "random"
COMMUTING = "commuting"
BLOCK = "block"
MODES = (EXHAUSTIVE, RANDOM, COMMUTING, BLOCK)

EXHAUSTIVE_LIMIT = 10**7
ORACLE_LIMIT = 10**6
MAX_DRAWS = 10**6
RATIONAL_RANGE = (-3, 3)
_BATCH = 4096

# 2x2 noncommuting condition pairs used as seeds for block construction
PATTERNS = (
    (((1, 0), (0, 0)), ((0, 0), (1, 0))),
    (((1, 0), (1, 0)), ((1, 0), (0, 0))),
)


@dataclass(frozen=True)
class SearchSpec:
    field: FieldTag
    dimension: int
    mode: str = EXHAUSTIVE
    count: int = 1
    seed: int = 0
    require_noncommuting: bool = False
    conjugate: bool = True

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if self.count < 1:
            raise ValueError("count must be positive")

    def space_size(self) -> int | None:
        """Number of pairs in ``M_n(F)^2``; None for the rationals."""
        if not self.field.is_prime_field:
            return None
        return self.field.modulus ** (2 * self.dimension**2)


def _check_exhaustive(spec: SearchSpec):
    size = spec.space_size()
    if size is None:
        raise SpaceTooLarge("exhaustive search needs a finite field")
    if size > EXHAUSTIVE_LIMIT:
        raise SpaceTooLarge(f"{spec.field} n={spec.dimension}: {size} pairs exceeds {EXHAUSTIVE_LIMIT}")


def _all_matrices(p: int, n: int) -> np.ndarray:
    """Every n x n matrix over GF(p), in lexicographic order of row-major entries."""
    grid = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64)
    return grid.reshape(-1, n, n)


def _emit(a: Matrix, b: Matrix, require_noncommuting: bool) -> ConditionPair | None:
    pair = check_conditions(a, b)
    assert pair.satisfied, "candidate filter disagrees with exact check"
    if require_noncommuting and pair.commutes:
        return None
    return pair


def enumerate_pairs(spec: SearchSpec, a_range: range | None = None) -> Iterator[ConditionPair]:
    """Yield every condition pair of ``M_n(GF(p))^2`` in lexicographic order.

    ``a_range`` restricts the first matrix to a contiguous block of the
    lexicographic order, so the space can be split among workers and the
    chunks concatenated back in order.
    """
    if spec.mode != EXHAUSTIVE:
        raise ValueError("enumerate_pairs requires exhaustive mode")
    _check_exhaustive(spec)
    p, n, F = spec.field.modulus, spec.dimension, spec.field
    mats = _all_matrices(p, n)
    squares = np.matmul(mats, mats) % p
    indices = range(len(mats)) if a_range is None else a_range
    for i in indices:
        a = mats[i]
        ab = np.matmul(a, mats) % p
        ba = np.matmul(mats, a) % p
        cond_ab = np.all(np.matmul(squares[i], mats) % p == np.matmul(ab, a) % p, axis=(1, 2))
        cond_ba = np.all(np.matmul(squares, a) % p == np.matmul(ba, mats) % p, axis=(1, 2))
        hits = np.nonzero(cond_ab & cond_ba)[0]
        if not len(hits):
            continue
        A = Matrix(a.tolist(), F)
        for j in hits:
            pair = _emit(A, Matrix(mats[j].tolist(), F), spec.require_noncommuting)
            if pair is not None:
                yield pair


# -- sampling ------------------------------------------------------------------


def _entry_bounds(field: FieldTag) -> tuple[int, int]:
    if field.is_prime_field:
        return 0, field.modulus - 1
    return RATIONAL_RANGE


def _random_matrix(rng: np.random.Generator, field: FieldTag, n: int) -> Matrix:
    lo, hi = _entry_bounds(field)
    return Matrix(rng.integers(lo, hi, size=(n, n), endpoint=True).tolist(), field)


def _random_nonzero(rng: np.random.Generator, field: FieldTag) -> int:
    if field.is_prime_field:
        return int(rng.integers(1, field.modulus - 1, endpoint=True))
    value = int(rng.integers(1, RATIONAL_RANGE[1], endpoint=True))
    return value if rng.integers(0, 1, endpoint=True) else -value


def _polynomial_in(rng: np.random.Generator, a: Matrix) -> Matrix:
    """``sum_{i<n} c_i a^i`` with random coefficients."""
    lo, hi = _entry_bounds(a.field)
    coeffs = rng.integers(lo, hi, size=a.rows, endpoint=True).tolist()
    b = Matrix.zeros(a.rows, a.rows, a.field)
    for i, c in enumerate(coeffs):
        if c:
            b = b + mat_pow(a, i).scale(c)
    return b


def _random_invertible(rng: np.random.Generator, field: FieldTag, n: int) -> tuple[Matrix, Matrix]:
    while True:
        S = _random_matrix(rng, field, n)
        try:
            return S, inverse(S)
        except Singular:
            continue


def _sample_random(spec: SearchSpec, rng: np.random.Generator) -> list[ConditionPair]:
    n, F = spec.dimension, spec.field
    lo, hi = _entry_bounds(F)
    p = F.modulus if F.is_prime_field else None
    big = p is not None and p * p * n >= 2**62

    def mm(x, y):
        return x @ y if p is None else (x @ y) % p

    out: list[ConditionPair] = []
    draws = 0
    while len(out) < spec.count:
        if draws >= MAX_DRAWS:
            raise ExhaustedAttempts(f"found {len(out)} of {spec.count} pairs in {MAX_DRAWS} draws")
        batch = min(_BATCH, MAX_DRAWS - draws)
        cand = rng.integers(lo, hi, size=(batch, 2, n, n), endpoint=True)
        draws += batch
        if big:
            cand = cand.astype(object)
        A, B = cand[:, 0], cand[:, 1]

        AB, BA = mm(A, B), mm(B, A)
        lhs1, rhs1 = mm(mm(A, A), B), mm(AB, A)
        lhs2, rhs2 = mm(mm(B, B), A), mm(BA, B)
        ok = np.all(lhs1 == rhs1, axis=(1, 2)) & np.all(lhs2 == rhs2, axis=(1, 2))
        if spec.require_noncommuting:
            ok &= np.any(AB != BA, axis=(1, 2))
        for k in np.nonzero(ok)[0]:
            pair = _emit(Matrix(A[k].tolist(), F), Matrix(B[k].tolist(), F), spec.require_noncommuting)
            if pair is not None:
                out.append(pair)
                if len(out) == spec.count:
                    break
    return out


def _sample_commuting(spec: SearchSpec, rng: np.random.Generator) -> list[ConditionPair]:
    if spec.require_noncommuting:
        raise ValueError("commuting mode cannot produce noncommuting pairs")
    out = []
    for _ in range(spec.count):
        a = _random_matrix(rng, spec.field, spec.dimension)
        pair = _emit(a, _polynomial_in(rng, a), False)
        assert pair.commutes
        out.append(pair)
    return out


def _sample_block(spec: SearchSpec, rng: np.random.Generator) -> list[ConditionPair]:
    n, F = spec.dimension, spec.field
    if n < 2:
        raise ValueError("block construction needs dimension >= 2")
    out = []
    for _ in range(spec.count):
        pa, pb = PATTERNS[int(rng.integers(0, len(PATTERNS)))]
        a2 = Matrix(pa, F).scale(_random_nonzero(rng, F))
        b2 = Matrix(pb, F).scale(_random_nonzero(rng, F))
        if rng.integers(0, 1, endpoint=True):
            a2, b2 = b2, a2
        if n > 2:
            c = _random_matrix(rng, F, n - 2)
            a, b = block_diag(a2, c), block_diag(b2, _polynomial_in(rng, c))
        else:
            a, b = a2, b2
        if spec.conjugate:
            S, S_inv = _random_invertible(rng, F, n)
            a, b = S @ a @ S_inv, S @ b @ S_inv
        pair = _emit(a, b, False)
        assert not pair.commutes
        out.append(pair)
    return out


def sample_pairs(spec: SearchSpec) -> list[ConditionPair]:
    """Deterministic (given ``spec.seed``) sample of condition pairs.

    ``random`` rejection-samples uniform pairs; ``commuting`` takes a random
    ``a`` and a random polynomial in it; ``block`` places a scaled copy of a
    known noncommuting 2x2 pair next to a commuting padding block and, unless
    ``spec.conjugate`` is false, conjugates by a random invertible matrix.
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    if spec.mode == RANDOM:
        return _sample_random(spec, rng)
    if spec.mode == COMMUTING:
        return _sample_commuting(spec, rng)
    if spec.mode == BLOCK:
        return _sample_block(spec, rng)
    raise ValueError("sample_pairs requires a sampling mode")


def generate(spec: SearchSpec) -> list[ConditionPair]:
    if spec.mode == EXHAUSTIVE:
        return list(enumerate_pairs(spec))
    return sample_pairs(spec)


def random_unfiltered_pairs(field: FieldTag, n: int, count: int, seed: int) -> list[tuple[Matrix, Matrix]]:
    """Uniform pairs with no condition filtering."""
    rng = np.random.Generator(np.random.PCG64(seed))
    return [(_random_matrix(rng, field, n), _random_matrix(rng, field, n)) for _ in range(count)]


# -- oracle --------------------------------------------------------------------


def oracle_drazin_bruteforce(A: Matrix) -> Matrix:
    """Search all of ``M_n(GF(p))`` for the X with AX = XA, XAX = X, A - A^2 X nilpotent.

    Deliberately independent of the elimination-based construction.
    """
    F = A.field
    if not F.is_prime_field:
        raise SpaceTooLarge("the oracle needs a finite field")
    n = A.rows
    if F.modulus ** (n * n) > ORACLE_LIMIT:
        raise SpaceTooLarge(f"{F.modulus}^{n * n} candidates exceeds {ORACLE_LIMIT}")
    A2 = A @ A
    found = []
    for entries in itertools.product(range(F.modulus), repeat=n * n):
        X = Matrix([entries[i * n:(i + 1) * n] for i in range(n)], F)
        AX = A @ X
        if AX == X @ A and X @ AX == X and is_nilpotent(A - A2 @ X):
            found.append(X)
    if len(found) != 1:
        raise NonUnique(f"{len(found)} candidates satisfy the definition for {A!r}")
    return found[0]
