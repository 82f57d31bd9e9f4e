"""Exact scalars over the rationals or a prime field GF(p).

Matrices store *raw* values for speed: ``fractions.Fraction`` over Q and
plain ``int`` residues in ``[0, p)`` over GF(p).  :class:`FieldTag` knows how
to canonicalize, invert, parse and format raw values; :class:`Scalar` wraps a
raw value together with its field for the public scalar API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch, ParseError, ZeroDenominator

RATIONALS = "q"
PRIME_FIELD = "gf"
MAX_MODULUS = 2**31


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic trial division; adequate below 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldTag:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == PRIME_FIELD:
            p = self.modulus
            if not isinstance(p, int) or not 2 <= p < MAX_MODULUS:
                raise ValueError(f"modulus must satisfy 2 <= p < 2^31, got {p!r}")
            if not is_prime(p):
                raise ValueError(f"modulus {p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldTag:
        return cls(RATIONALS)

    @classmethod
    def gf(cls, p: int) -> FieldTag:
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> FieldTag:
        """Parse ``"q"`` or ``"gf:<p>"``."""
        text = text.strip().lower()
        if text == "q":
            return cls.rationals()
        if text.startswith("gf:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ParseError(f"bad field tag {text!r}") from None
            try:
                return cls.gf(p)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"bad field tag {text!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    def __str__(self):
        return "q" if self.kind == RATIONALS else f"gf:{self.modulus}"

    # raw-value arithmetic ------------------------------------------------

    @property
    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def coerce(self, value):
        """Canonical raw value for an int, Fraction or raw value."""
        if self.is_prime_field:
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    return value.numerator % self.modulus
                return (value.numerator * self.inv(value.denominator % self.modulus)) % self.modulus
            return int(value) % self.modulus
        return Fraction(value)

    def reduce(self, value):
        """Canonicalize the result of ``+ - *`` on raw values."""
        return value % self.modulus if self.is_prime_field else value

    def inv(self, value):
        if not value:
            raise DivisionByZero("inverse of zero")
        if self.is_prime_field:
            return pow(value, -1, self.modulus)
        return 1 / value

    def parse_value(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return self.coerce(text)
        if not isinstance(text, str):
            raise ParseError(f"scalar must be a string or integer, got {text!r}")
        s = text.strip()
        try:
            if self.is_prime_field:
                return int(s) % self.modulus
            if "/" in s:
                num, den = s.split("/")
                return normalize_rational(int(num), int(den)).value
            return Fraction(int(s))
        except ValueError:
            raise ParseError(f"bad scalar {text!r} for field {self}") from None
        except ZeroDenominator:
            raise ParseError(f"zero denominator in {text!r}") from None

    def format_value(self, value) -> str:
        if self.is_prime_field:
            return str(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"


QQ = FieldTag.rationals()


@dataclass(frozen=True)
class Scalar:
    field: FieldTag
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _check(self, other):
        if not isinstance(other, Scalar):
            return Scalar(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value + other.value))

    def __sub__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value - other.value))

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value * other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.reduce(-self.value))

    def __truediv__(self, other):
        return self * field_inverse(self._check(other))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format_value(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def normalize_rational(numerator: int, denominator: int) -> Scalar:
    if denominator == 0:
        raise ZeroDenominator(f"{numerator}/0")
    return Scalar(QQ, Fraction(numerator, denominator))


_OPS = {"add": Scalar.__add__, "sub": Scalar.__sub__, "mul": Scalar.__mul__}


def field_arith(op: str, x: Scalar, y: Scalar) -> Scalar:
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} vs {y.field}")
    try:
        return _OPS[op](x, y)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def field_inverse(x: Scalar) -> Scalar:
    return Scalar(x.field, x.field.inv(x.value))


def parse_scalar(text: str, field: FieldTag) -> Scalar:
    return Scalar(field, field.parse_value(text))
