"""Exact coefficient fields: the rationals and prime fields.

Scalars are either `fractions.Fraction` (rationals) or `ModP` residues.
A `Field` object tags which arithmetic is in play and converts values,
so the linear algebra layer never has to branch on the field kind.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class FieldError(ValueError):
    """Raised for invalid field tokens, moduli, or mixed-field arithmetic."""


def _is_prime(n: int) -> bool:
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


class ModP:
    """An element of the prime field with `modulus` elements."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.modulus != self.modulus:
                raise FieldError("mixed moduli %d and %d" % (self.modulus, other.modulus))
            return other
        if isinstance(other, int):
            return ModP(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModP(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModP(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModP(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModP(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.modulus)
        return ModP(self.value * pow(other.value, -1, self.modulus), self.modulus)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __neg__(self):
        return ModP(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "ModP(%d, %d)" % (self.value, self.modulus)


Scalar = Union[Fraction, ModP]


class Field:
    """The rationals (modulus None) or the prime field F_p."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int | None = None):
        if modulus is not None and not _is_prime(modulus):
            raise FieldError("modulus %r is not prime" % (modulus,))
        self.modulus = modulus

    @classmethod
    def parse(cls, token: str) -> "Field":
        """Parse a field token: ``q`` for the rationals, ``p:<prime>`` for F_p."""
        token = token.strip().lower()
        if token == "q":
            return cls(None)
        if token.startswith("p:"):
            try:
                modulus = int(token[2:])
            except ValueError:
                raise FieldError("bad field token %r" % token) from None
            return cls(modulus)
        raise FieldError("bad field token %r (expected 'q' or 'p:<prime>')" % token)

    @property
    def token(self) -> str:
        return "q" if self.modulus is None else "p:%d" % self.modulus

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def of(self, value) -> Scalar:
        """Convert an int, Fraction, or same-field scalar to a field element."""
        if self.modulus is None:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise FieldError("cannot coerce %r into the rationals" % (value,))
        if isinstance(value, ModP):
            if value.modulus != self.modulus:
                raise FieldError("wrong modulus %d" % value.modulus)
            return value
        if isinstance(value, int):
            return ModP(value, self.modulus)
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise FieldError("denominator of %s vanishes mod %d" % (value, self.modulus))
            num = ModP(value.numerator, self.modulus)
            return num / ModP(value.denominator, self.modulus)
        raise FieldError("cannot coerce %r into F_%d" % (value, self.modulus))

    @property
    def zero(self) -> Scalar:
        return self.of(0)

    @property
    def one(self) -> Scalar:
        return self.of(1)

    def format_scalar(self, x: Scalar) -> str:
        """Render a scalar the way documents expect: ``num/den`` over Q, digits over F_p."""
        if self.modulus is None:
            f = Fraction(x)
            return "%d/%d" % (f.numerator, f.denominator) if f.denominator != 1 else str(f.numerator)
        return str(self.of(x).value)

    def parse_scalar(self, text: str) -> Scalar:
        text = text.strip()
        if self.modulus is None:
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise FieldError("bad rational literal %r" % text) from None
        try:
            return self.of(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise FieldError("bad F_%d literal %r" % (self.modulus, text)) from None

    def __eq__(self, other):
        return isinstance(other, Field) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("Field", self.modulus))

    def __repr__(self):
        return "Field(%r)" % (self.modulus,)


QQ = Field(None)
