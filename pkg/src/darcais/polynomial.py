"""Dense exact polynomials over the integers and over the rationals.

Coefficients are stored constant-term first, one entry per degree, with
trailing zeros stripped so that representations are canonical.  IntPoly
holds Python ints, RatPoly holds ``fractions.Fraction``; both are
immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError


def _strip(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def format_poly(coeffs: Sequence, var: str = "X") -> str:
    """Human-readable form, highest degree first, e.g. 'X^2 + 21*X + 8'."""
    if not any(coeffs):
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            term = str(abs(c) if c < 0 else c)
        else:
            mag = abs(c) if c < 0 else c
            head = "" if mag == 1 else f"{mag}*"
            term = f"{head}{var}" + (f"^{k}" if k > 1 else "")
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


class _BasePoly:
    """Shared machinery; subclasses fix the coefficient domain."""

    __slots__ = ("_coeffs",)

    _coeffs: tuple

    @staticmethod
    def _coerce(value):  # pragma: no cover - overridden
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()) -> None:
        object.__setattr__(self, "_coeffs", _strip([self._coerce(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff=1):
        if degree < 0:
            raise DomainError("monomial degree must be >= 0")
        return cls((0,) * degree + (coeff,))

    # -- structure -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self):
        if not self._coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, k: int):
        """Coefficient of X**k (0 beyond the degree)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return self._coerce(0)

    # -- arithmetic -------------------------------------------------------------

    def _same(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)((other,))
        return None

    def __add__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self._coeffs])

    def __sub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, type(self)):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return type(self).zero()
            out = [self._coerce(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
            return type(self)(out)
        try:
            scalar = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return type(self)([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial powers are not defined here")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int):
        """Multiply by X**k."""
        if k < 0:
            raise DomainError("shift must be >= 0")
        if self.is_zero:
            return self
        return type(self)((self._coerce(0),) * k + self._coeffs)

    def evaluate(self, x):
        """Exact Horner evaluation; the result type follows the inputs."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # -- comparison / hashing ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, _BasePoly):
            return type(self) is type(other) and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._coeffs))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self._coeffs)!r})"

    def __str__(self):
        return format_poly(self._coeffs)

    # -- serialization -------------------------------------------------------------

    def to_text(self) -> str:
        """Space-separated coefficients, constant term first ('0' when zero)."""
        if not self._coeffs:
            return "0"
        return " ".join(str(c) for c in self._coeffs)

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": [str(c) for c in self._coeffs],
        }


class IntPoly(_BasePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(value):
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, Fraction) and value.denominator == 1:
                return int(value)
            raise DomainError(f"integer coefficient expected, got {value!r}")
        return value

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        return cls(int(tok) for tok in text.split())

    @classmethod
    def from_json_dict(cls, doc: dict) -> "IntPoly":
        return cls(int(c) for c in doc["coeffs"])

    def to_rat(self) -> "RatPoly":
        return RatPoly(self._coeffs)

    def div_exact(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient self / divisor when the division is exact over Z."""
        if divisor.is_zero:
            raise DomainError("division by the zero polynomial")
        rem = list(self._coeffs)
        dc = divisor._coeffs
        dl = divisor.leading
        qdeg = len(rem) - len(dc)
        if qdeg < 0:
            if any(rem):
                raise DomainError("division is not exact")
            return IntPoly.zero()
        quot = [0] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            top = rem[k + len(dc) - 1]
            q, r = divmod(top, dl)
            if r:
                raise DomainError("division is not exact over the integers")
            quot[k] = q
            if q:
                for i, c in enumerate(dc):
                    rem[k + i] -= q * c
        if any(rem):
            raise DomainError("division left a nonzero remainder")
        return IntPoly(quot)

    def content_is_one(self) -> bool:
        from math import gcd

        g = 0
        for c in self._coeffs:
            g = gcd(g, c)
        return g == 1


class RatPoly(_BasePoly):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise DomainError(f"rational coefficient expected, got {value!r}")

    def _same(self, other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, IntPoly):
            return other.to_rat()
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        return None

    @classmethod
    def from_int_poly(cls, p: IntPoly) -> "RatPoly":
        return cls(p.coeffs)

    @classmethod
    def from_text(cls, text: str) -> "RatPoly":
        return cls(Fraction(tok) for tok in text.split())

    @classmethod
    def from_json_dict(cls, doc: dict) -> "RatPoly":
        return cls(Fraction(c) for c in doc["coeffs"])

    def scale(self, factor) -> "RatPoly":
        f = Fraction(factor)
        return RatPoly([c * f for c in self._coeffs])

    def __divmod__(self, other: "RatPoly"):
        if not isinstance(other, (RatPoly, IntPoly)):
            return NotImplemented
        den = other if isinstance(other, RatPoly) else other.to_rat()
        if den.is_zero:
            raise DomainError("division by the zero polynomial")
        rem = list(self._coeffs)
        dc = den._coeffs
        qdeg = len(rem) - len(dc)
        if qdeg < 0:
            return RatPoly.zero(), RatPoly(rem)
        quot = [Fraction(0)] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            q = rem[k + len(dc) - 1] / den.leading
            quot[k] = q
            if q:
                for i, c in enumerate(dc):
                    rem[k + i] -= q * c
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "RatPoly") -> bool:
        """True iff self divides other in Q[X]."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def to_int_poly(self) -> IntPoly:
        """Convert when every coefficient is an integer."""
        if any(c.denominator != 1 for c in self._coeffs):
            raise DomainError("polynomial has non-integer coefficients")
        return IntPoly(int(c) for c in self._coeffs)

    def monic(self) -> "RatPoly":
        if self.is_zero:
            raise DomainError("the zero polynomial cannot be made monic")
        lead = self.leading
        return RatPoly([c / lead for c in self._coeffs])
