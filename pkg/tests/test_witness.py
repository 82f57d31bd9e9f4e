import itertools

import pytest

from conftest import GF2, GF3, GF5, INTRO_A, INTRO_B, REMARK_A, REMARK_B, I, M, Z
import drazinlab.witness as witness
from drazinlab.drazin import drazin_inverse
from drazinlab.errors import ExhaustedAttempts, NonUnique, SpaceTooLarge
from drazinlab.identities import check_conditions
from drazinlab.scalar import QQ, FieldTag
from drazinlab.witness import SearchSpec, enumerate_pairs, oracle_drazin_bruteforce, sample_pairs

# Frozen from a standalone double loop over all pairs (plain nested tuples,
# no library code): (condition pairs, of which noncommuting).
CONDITION_PAIR_COUNTS = {(2, 2): (106, 18), (3, 2): (1137, 192)}


def _naive_condition_pairs(p, n):
    def mm(x, y):
        return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(n)) % p for j in range(n)) for i in range(n))

    mats = [tuple(tuple(t[i * n:(i + 1) * n]) for i in range(n)) for t in itertools.product(range(p), repeat=n * n)]
    out = []
    for a in mats:
        for b in mats:
            if mm(mm(a, a), b) == mm(mm(a, b), a) and mm(mm(b, b), a) == mm(mm(b, a), b):
                out.append((a, b))
    return out


def test_exhaustive_matches_naive_loop_gf2():
    found = [(p.a.data, p.b.data) for p in enumerate_pairs(SearchSpec(GF2, 2))]
    assert found == _naive_condition_pairs(2, 2)


@pytest.mark.parametrize("p", [2, 3])
def test_exhaustive_counts(p):
    total, noncomm = CONDITION_PAIR_COUNTS[(p, 2)]
    F = FieldTag.gf(p)
    assert sum(1 for _ in enumerate_pairs(SearchSpec(F, 2))) == total
    assert sum(1 for _ in enumerate_pairs(SearchSpec(F, 2, require_noncommuting=True))) == noncomm


def test_exhaustive_contains_intro_pair():
    pairs = list(enumerate_pairs(SearchSpec(GF2, 2, require_noncommuting=True)))
    assert (M(INTRO_A, GF2), M(INTRO_B, GF2)) in [(p.a, p.b) for p in pairs]
    assert all(p.satisfied and not p.commutes for p in pairs)


def test_exhaustive_contains_identity_pair():
    pairs = list(enumerate_pairs(SearchSpec(GF2, 2)))
    assert (I(2, GF2), I(2, GF2)) in [(p.a, p.b) for p in pairs]


def test_exhaustive_order_and_partition():
    spec = SearchSpec(GF3, 2)
    pairs = list(enumerate_pairs(spec))
    keys = [(p.a.data, p.b.data) for p in pairs]
    assert keys == sorted(keys)
    chunks = [list(enumerate_pairs(spec, range(lo, min(lo + 20, 81)))) for lo in range(0, 81, 20)]
    assert [p for c in chunks for p in c] == pairs


def test_exhaustive_guards():
    with pytest.raises(SpaceTooLarge):
        list(enumerate_pairs(SearchSpec(GF5, 3)))
    with pytest.raises(SpaceTooLarge):
        list(enumerate_pairs(SearchSpec(QQ, 2)))
    assert SearchSpec(GF2, 3).space_size() == 2**18


def test_sample_commuting():
    pairs = sample_pairs(SearchSpec(GF5, 3, "commuting", 10, seed=42))
    assert len(pairs) == 10
    assert all(p.commutes and p.satisfied for p in pairs)


def test_sample_block_rational():
    (p,) = sample_pairs(SearchSpec(QQ, 4, "block", 1, seed=0))
    assert p.cond_ab and p.cond_ba and not p.commutes


@pytest.mark.parametrize("field", [GF2, GF3, GF5, QQ])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_block_never_commuting(field, n):
    pairs = sample_pairs(SearchSpec(field, n, "block", 8, seed=n))
    for p in pairs:
        again = check_conditions(p.a, p.b)
        assert again == p
        assert p.satisfied and not p.commutes


def test_block_without_conjugation_is_block_diagonal():
    for p in sample_pairs(SearchSpec(QQ, 4, "block", 5, seed=1, conjugate=False)):
        for X in (p.a, p.b):
            assert X.submatrix(0, 2, 2, 4).is_zero() and X.submatrix(2, 4, 0, 2).is_zero()
        a2, b2 = p.a.submatrix(0, 2, 0, 2), p.b.submatrix(0, 2, 0, 2)
        assert not check_conditions(a2, b2).commutes


def test_block_patterns_are_condition_pairs():
    for pa, pb in witness.PATTERNS:
        p = check_conditions(M(pa), M(pb))
        assert p.satisfied and not p.commutes
    assert {witness.PATTERNS[0], witness.PATTERNS[1]} == {(INTRO_A, INTRO_B), (REMARK_A, REMARK_B)}


def test_sample_random_gf2():
    pairs = sample_pairs(SearchSpec(GF2, 2, "random", 5, seed=7))
    assert len(pairs) == 5
    for p in pairs:
        assert check_conditions(p.a, p.b) == p and p.satisfied


def test_sample_random_noncommuting():
    pairs = sample_pairs(SearchSpec(GF3, 2, "random", 6, seed=1, require_noncommuting=True))
    assert all(p.satisfied and not p.commutes for p in pairs)


def test_sample_random_large_modulus():
    pairs = sample_pairs(SearchSpec(FieldTag.gf(2**31 - 1), 1, "random", 3, seed=2))
    assert all(p.satisfied for p in pairs)


@pytest.mark.parametrize("mode", ["random", "commuting", "block"])
def test_sampling_deterministic(mode):
    spec = SearchSpec(GF3, 2, mode, 6, seed=99)
    assert sample_pairs(spec) == sample_pairs(spec)
    assert sample_pairs(spec) != sample_pairs(SearchSpec(GF3, 2, mode, 6, seed=100))


def test_exhausted_attempts(monkeypatch):
    monkeypatch.setattr(witness, "MAX_DRAWS", 5000)
    with pytest.raises(ExhaustedAttempts):
        sample_pairs(SearchSpec(GF2, 1, "random", 1, seed=0, require_noncommuting=True))


def test_mode_validation():
    with pytest.raises(ValueError):
        SearchSpec(GF2, 2, "bogus")
    with pytest.raises(ValueError):
        sample_pairs(SearchSpec(GF2, 2, "commuting", 1, require_noncommuting=True))
    with pytest.raises(ValueError):
        sample_pairs(SearchSpec(GF2, 1, "block", 1))
    with pytest.raises(ValueError):
        sample_pairs(SearchSpec(GF2, 2, "exhaustive"))


def test_oracle_examples():
    assert oracle_drazin_bruteforce(M(INTRO_B, GF2)) == Z(2, GF2)
    assert oracle_drazin_bruteforce(M(INTRO_A, GF3)) == M(INTRO_A, GF3)


def test_oracle_matches_gf2():
    for entries in itertools.product(range(2), repeat=4):
        A = M([entries[:2], entries[2:]], GF2)
        assert oracle_drazin_bruteforce(A) == drazin_inverse(A)


def test_oracle_guards():
    with pytest.raises(SpaceTooLarge):
        oracle_drazin_bruteforce(I(2))
    with pytest.raises(SpaceTooLarge):
        oracle_drazin_bruteforce(I(3, GF5))


def test_oracle_detects_non_uniqueness(monkeypatch):
    monkeypatch.setattr(witness, "is_nilpotent", lambda A: True)
    with pytest.raises(NonUnique):
        oracle_drazin_bruteforce(I(2, GF2))
