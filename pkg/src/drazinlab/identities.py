"""Product and sum formulas for Drazin inverses of pairs with a^2 b = aba, b^2 a = bab.

Every check returns a :class:`VerificationReport` carrying both sides of the
claimed equality, so a failure is a self-contained counterexample.  Nilpotency
claims are reported as ``X**n`` against the zero matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb

from .drazin import DrazinResult, drazin, index_of
from .errors import ConditionsNotMet, DimensionMismatch, FieldMismatch, NotCommuting
from .matrix import Matrix, inverse, mat_pow

# Reports whose ``holds`` is recorded but not a theorem (see notes on each).
INFORMATIONAL = frozenset({"asym", "cor34_alt", "cor34_alt_fixed"})
DEFAULT_IDENTITIES = ("thm31", "asym", "thm33", "xirel", "cor34")


@dataclass(frozen=True)
class ConditionPair:
    a: Matrix
    b: Matrix
    cond_ab: bool
    cond_ba: bool
    commutes: bool

    @property
    def satisfied(self) -> bool:
        return self.cond_ab and self.cond_ba

    @property
    def flags(self) -> dict:
        return {"cond_ab": self.cond_ab, "cond_ba": self.cond_ba, "commutes": self.commutes}


@dataclass(frozen=True)
class XiContext:
    xi: Matrix
    xi_drazin: DrazinResult
    s: int


@dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    holds: bool
    lhs: Matrix
    rhs: Matrix
    pair: ConditionPair
    notes: str = ""

    @property
    def informational(self) -> bool:
        return self.identity_name in INFORMATIONAL


def check_conditions(a: Matrix, b: Matrix) -> ConditionPair:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if not a.is_square or a.shape != b.shape:
        raise DimensionMismatch(f"need two square matrices of one size, got {a.shape} and {b.shape}")
    ab, ba = a @ b, b @ a
    return ConditionPair(a, b, a @ ab == ab @ a, b @ ba == ba @ b, ab == ba)


def _require(pair: ConditionPair):
    if not pair.satisfied:
        raise ConditionsNotMet(f"a^2b=aba: {pair.cond_ab}, b^2a=bab: {pair.cond_ba}")


class _Terms:
    """Lazily computed quantities shared by the checks on one pair."""

    def __init__(self, pair: ConditionPair):
        self.pair = pair
        self.a, self.b = pair.a, pair.b
        self.n = pair.a.rows
        self.field = pair.a.field

    @cached_property
    def I(self):
        return Matrix.identity(self.n, self.field)

    @cached_property
    def O(self):
        return Matrix.zeros(self.n, self.n, self.field)

    @cached_property
    def da(self) -> DrazinResult:
        return drazin(self.a)

    @cached_property
    def db(self) -> DrazinResult:
        return drazin(self.b)

    @property
    def aD(self):
        return self.da.dinv

    @property
    def bD(self):
        return self.db.dinv

    @property
    def a_pi(self):
        return self.da.spectral_idempotent

    @property
    def b_pi(self):
        return self.db.spectral_idempotent

    @property
    def s(self) -> int:
        return self.da.index

    @cached_property
    def xi(self):
        return self.I + self.aD @ self.b

    @cached_property
    def dxi(self) -> DrazinResult:
        return drazin(self.xi)

    @cached_property
    def sum_dinv(self):
        return drazin(self.a + self.b).dinv

    @cached_property
    def thm33_rhs(self):
        return sum_formula_rhs(self)

    def nil_power(self, x: Matrix) -> Matrix:
        return mat_pow(x, self.n)


@lru_cache(maxsize=64)
def _terms(pair: ConditionPair) -> _Terms:
    return _Terms(pair)


def _report(name, lhs, rhs, pair, notes=""):
    return VerificationReport(name, lhs == rhs, lhs, rhs, pair, notes)


# -- main results -------------------------------------------------------------


def product_drazin_formula(pair: ConditionPair) -> VerificationReport:
    """``(ab)^D = a^D b^D``."""
    _require(pair)
    t = _terms(pair)
    return _report("thm31", drazin(t.a @ t.b).dinv, t.aD @ t.bD, pair)


def product_order_asymmetry(pair: ConditionPair) -> VerificationReport:
    """Compare ``a^D b^D`` with ``b^D a^D``; they need not coincide."""
    _require(pair)
    t = _terms(pair)
    return _report("asym", t.aD @ t.bD, t.bD @ t.aD, pair, "informational: equality is not implied by the conditions")


def build_xi(pair: ConditionPair) -> XiContext:
    _require(pair)
    t = _terms(pair)
    return XiContext(t.xi, t.dxi, index_of(t.a))


def sum_formula_terms(t: _Terms, s: int | None = None) -> list[Matrix]:
    """The four summands of the sum formula; ``s`` overrides ``ind(a)``."""
    s = t.s if s is None else s
    a, b, aD, bD, a_pi, b_pi = t.a, t.b, t.aD, t.bD, t.a_pi, t.b_pi
    core = aD @ t.dxi.dinv
    first = core
    second = a_pi @ b @ core @ core
    neg_a = -a
    third = t.O
    for i in range(s):
        third = third + mat_pow(bD, i + 1) @ mat_pow(neg_a, i) @ a_pi
    inner = t.O
    for i in range(s - 1):
        inner = inner + (mat_pow(bD, i + 2) @ mat_pow(neg_a, i) @ a_pi).scale(i + 1)
    fourth = b_pi @ a @ inner
    return [first, second, third, fourth]


def sum_formula_rhs(t: _Terms, s: int | None = None) -> Matrix:
    first, second, third, fourth = sum_formula_terms(t, s)
    return first + second + third + fourth


def sum_drazin_formula(pair: ConditionPair, s: int | None = None) -> VerificationReport:
    """``(a+b)^D`` against its expression through ``xi = 1 + a^D b``."""
    _require(pair)
    t = _terms(pair)
    rhs = t.thm33_rhs if s is None else sum_formula_rhs(t, s)
    return _report("thm33", t.sum_dinv, rhs, pair, f"s = ind(a) = {t.s}" if s is None else f"s = {s} (override)")


def xi_drazin_relation(pair: ConditionPair) -> VerificationReport:
    """``xi^D = a^pi + a^2 a^D (a+b)^D``."""
    _require(pair)
    t = _terms(pair)
    rhs = t.a_pi + t.a @ t.a @ t.aD @ t.sum_dinv
    return _report("xirel", t.dxi.dinv, rhs, pair)


def _require_commuting(pair: ConditionPair):
    if not pair.commutes:
        raise NotCommuting("ab != ba")


def commuting_inverse_series(t: _Terms) -> Matrix:
    """``(1 + a a^pi b^D)^-1`` as the finite series ``sum_{i<s} (-b^D a a^pi)^i``."""
    step = -(t.bD @ t.a @ t.a_pi)
    total = t.O
    for i in range(t.s):
        total = total + mat_pow(step, i)
    return total


def commuting_sum_rhs(t: _Terms) -> Matrix:
    return t.dxi.dinv @ t.aD + t.bD @ commuting_inverse_series(t) @ t.a_pi


def commuting_sum_formula(pair: ConditionPair) -> VerificationReport:
    """Commuting specialization of the sum formula.

    ``holds`` additionally requires agreement with the general sum formula.
    """
    _require_commuting(pair)
    t = _terms(pair)
    rhs = commuting_sum_rhs(t)
    agrees = rhs == t.thm33_rhs
    rep = _report("cor34", t.sum_dinv, rhs, pair, "agrees with thm33 rhs" if agrees else "DISAGREES with thm33 rhs")
    if not agrees:
        rep = VerificationReport(rep.identity_name, False, rep.lhs, rep.rhs, pair, rep.notes)
    return rep


def commuting_sum_alt_rhs(t: _Terms, literal: bool = True) -> Matrix:
    """Second commuting-case expression for ``(a+b)^D``.

    ``literal=True`` evaluates
    ``a^D xi^D b b^D + b^pi (1 + b b^pi a^D)^-1 + b^D (1 + a a^pi b^D)^-1 a^pi``
    as written, which is wrong in general (``a = b = 0`` gives ``1``);
    ``literal=False`` appends the ``a^D`` factor missing from the middle term.
    """
    first = t.aD @ t.dxi.dinv @ t.b @ t.bD
    middle = t.b_pi @ inverse(t.I + t.b @ t.b_pi @ t.aD)
    if not literal:
        middle = middle @ t.aD
    last = t.bD @ inverse(t.I + t.a @ t.a_pi @ t.bD) @ t.a_pi
    return first + middle + last


def commuting_sum_formula_alt(pair: ConditionPair, literal: bool = True) -> VerificationReport:
    _require_commuting(pair)
    t = _terms(pair)
    if literal:
        name, notes = "cor34_alt", "informational: literal second expression, no a^D on the b^pi term"
    else:
        name, notes = "cor34_alt_fixed", "informational: second expression with trailing a^D on the b^pi term"
    return _report(name, t.sum_dinv, commuting_sum_alt_rhs(t, literal), pair, notes)


# -- lemma suite --------------------------------------------------------------


def lemma_suite(pair: ConditionPair, max_power: int) -> list[VerificationReport]:
    _require(pair)
    t = _terms(pair)
    if max_power < t.n:
        raise ValueError(f"max_power {max_power} is below the dimension {t.n}")
    a, b, aD, bD, a_pi, b_pi = t.a, t.b, t.aD, t.bD, t.a_pi, t.b_pi
    O = t.O
    out: list[VerificationReport] = []

    def eq(name, lhs, rhs, notes=""):
        out.append(_report(name, lhs, rhs, pair, notes))

    def nilpotent(name, x, notes=""):
        eq(name, t.nil_power(x), O, notes)

    def implication(name, premise, x):
        if premise:
            nilpotent(name, x)
        else:
            eq(name, O, O, "premise false (vacuous)")

    P = lambda x, k: mat_pow(x, k)  # noqa: E731

    for i in range(1, max_power + 1):
        ai, ai1 = P(a, i), P(a, i + 1)
        eq(f"L2.1a[i={i}] a^(i+1)b = a^i b a", ai1 @ b, ai @ b @ a)
        eq(f"L2.1a[i={i}] a^(i+1)b = a b a^i", ai1 @ b, a @ b @ ai)
        eq(f"L2.1a[i={i}] a^(2i)b = a^i b a^i", P(a, 2 * i) @ b, ai @ b @ ai)
        eq(f"L2.1b[i={i}] (ab)^i = a^i b^i", P(a @ b, i), ai @ P(b, i))

    a_nil, b_nil = P(a, t.n).is_zero(), P(b, t.n).is_zero()
    implication("L2.2a a or b nilpotent => ab nilpotent", a_nil or b_nil, a @ b)
    implication("L2.2a a or b nilpotent => ba nilpotent", a_nil or b_nil, b @ a)
    implication("L2.2b a, b nilpotent => a+b nilpotent", a_nil and b_nil, a + b)
    for k in range(1, max_power + 1):
        rhs = O
        for i in range(k):
            rhs = rhs + (P(a, k - i) @ P(b, i) + P(b, k - i) @ P(a, i)).scale(comb(k - 1, i))
        eq(f"L2.2b[k={k}] (a+b)^k binomial expansion", P(a + b, k), rhs)

    eq("L2.3 (a^D)^2 b = a^D b a^D", aD @ aD @ b, aD @ b @ aD)
    eq("L2.3 b^2 a^D = b a^D b", b @ b @ aD, b @ aD @ b)

    for label, x in (("ab", a @ b), ("a^D b", aD @ b), ("a b^D", a @ bD), ("a^D b^D", aD @ bD)):
        eq(f"L2.4 {label} in comm(a)", x @ a, a @ x)
    for label, x in (("ba", b @ a), ("b^D a", bD @ a), ("b a^D", b @ aD), ("b^D a^D", bD @ aD)):
        eq(f"L2.4 {label} in comm(b)", x @ b, b @ x)

    xi = t.xi
    for label, x in (("a", a), ("a^D", aD), ("ab", a @ b), ("a^D b", aD @ b), ("a b^D", a @ bD), ("a^D b^D", aD @ bD)):
        eq(f"L2.5 {label} in comm(xi)", x @ xi, xi @ x)

    abD, bDa, aDb, baD = a @ bD, bD @ a, aD @ b, b @ aD
    eq("L2.6 (2.8) a b^D b^D a = (a b^D)^2", a @ bD @ bD @ a, abD @ abD)
    eq("L2.6 (2.8) a b^D b^D a = a^2 (b^D)^2", a @ bD @ bD @ a, a @ a @ bD @ bD)
    eq("L2.6 (2.11) b a^D a^D b = (b a^D)^2", b @ aD @ aD @ b, baD @ baD)
    eq("L2.6 (2.11) b a^D a^D b = b^2 (a^D)^2", b @ aD @ aD @ b, b @ b @ aD @ aD)
    chains = (
        ("(2.9) (a b^D)^(i+1)", abD, lambda i: abD @ P(bDa, i), lambda i: P(a, i + 1) @ P(bD, i + 1)),
        ("(2.10) (a^D b)^(i+1)", aDb, lambda i: aDb @ P(baD, i), lambda i: P(aD, i + 1) @ P(b, i + 1)),
        ("(2.12) (b a^D)^(i+1)", baD, lambda i: baD @ P(aDb, i), lambda i: P(b, i + 1) @ P(aD, i + 1)),
        ("(2.13) (b^D a)^(i+1)", bDa, lambda i: bDa @ P(abD, i), lambda i: P(bD, i + 1) @ P(a, i + 1)),
    )
    for label, base, mid, tail in chains:
        for i in range(1, max_power + 1):
            lhs = P(base, i + 1)
            eq(f"L2.6 {label} middle form [i={i}]", lhs, mid(i))
            eq(f"L2.6 {label} power form [i={i}]", lhs, tail(i))

    a1 = b_pi @ a_pi @ b
    a2 = b @ bD @ a @ a_pi
    nilpotent("L2.7 a1 = b^pi a^pi b nilpotent", a1)
    nilpotent("L2.7 a2 = b b^D a a^pi nilpotent", a2)
    nilpotent("L2.7 a1 - a2 nilpotent", a1 - a2)

    xiD, xi_pi = t.dxi.dinv, t.dxi.spectral_idempotent
    b1 = a @ xi @ xi_pi + xiD @ a @ a_pi
    b2 = a1 - a2
    nilpotent("L2.8 b1 = a xi xi^pi + xi^D a a^pi nilpotent", b1)
    nilpotent("L2.8 b1 + b2 nilpotent", b1 + b2)
    return out


# -- batch driver -------------------------------------------------------------

IDENTITY_FUNCS = {
    "thm31": product_drazin_formula,
    "asym": product_order_asymmetry,
    "thm33": sum_drazin_formula,
    "xirel": xi_drazin_relation,
}


def verify_pair(pair: ConditionPair, identities=DEFAULT_IDENTITIES, lemma_depth: int | None = None):
    """Run the selected identities (and optionally the lemma suite) on one pair.

    ``cor34`` is skipped for non-commuting pairs; on commuting pairs it brings
    along the two readings of the second commuting-case expression.
    """
    _require(pair)
    reports = []
    for name in identities:
        if name == "cor34":
            if pair.commutes:
                reports.append(commuting_sum_formula(pair))
                reports.append(commuting_sum_formula_alt(pair, literal=True))
                reports.append(commuting_sum_formula_alt(pair, literal=False))
            continue
        try:
            reports.append(IDENTITY_FUNCS[name](pair))
        except KeyError:
            raise ValueError(f"unknown identity {name!r}") from None
    if lemma_depth is not None:
        reports.extend(lemma_suite(pair, max(lemma_depth, pair.a.rows)))
    return reports


def all_hold(reports) -> bool:
    return all(r.holds for r in reports if not r.informational)
