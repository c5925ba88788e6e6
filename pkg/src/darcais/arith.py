"""Elementary number theory and the integer-valued arithmetic function g.

Everything here is exact: integers are Python ints, rationals are
``fractions.Fraction``.  Primality is always verified, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from pathlib import Path

from .errors import DomainError, TableExhaustedError

# Deterministic Miller-Rabin witness set for n < 3.3 * 10**24 (covers 2**64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PRIMALITY_LIMIT = 1 << 64


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 2:
        return False
    if n >= _PRIMALITY_LIMIT:
        raise DomainError(f"primality test is only deterministic below 2**64, got {n}")
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int, what: str = "p") -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"{what} must be prime, got {p!r}")


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, bound + 1) if sieve[i]]


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise DomainError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of |n|, ascending; n must be nonzero."""
    if n == 0:
        raise DomainError("prime_factors requires a nonzero argument")
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def sigma(n: int) -> int:
    """Sum of the positive divisors of n."""
    if n < 1:
        raise DomainError(f"sigma requires n >= 1, got {n}")
    return sum(divisors(n))


def mobius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)**(number of primes)."""
    if n < 1:
        raise DomainError(f"mobius requires n >= 1, got {n}")
    if n == 1:
        return 1
    count = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            count += 1
        d += 1 if d == 2 else 2
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


def euler_phi(m: int) -> int:
    """Count of 1 <= k <= m coprime to m."""
    if m < 1:
        raise DomainError(f"euler_phi requires m >= 1, got {m}")
    result = m
    for p in prime_factors(m) if m > 1 else []:
        result -= result // p
    return result


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides n; n must be nonzero."""
    if n == 0:
        raise DomainError("is_squarefree requires a nonzero argument")
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1 if d == 2 else 2
    return True


def legendre_symbol(D: int, p: int) -> int:
    """Legendre symbol (D|p) for an odd prime p, by Euler's criterion."""
    require_prime(p)
    if p == 2:
        raise DomainError("legendre_symbol requires an odd prime")
    r = pow(D % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def multiplicative_order(a: int, m: int) -> int:
    """Least f >= 1 with a**f = 1 mod m; requires gcd(a, m) = 1."""
    if m < 1:
        raise DomainError(f"multiplicative_order requires m >= 1, got {m}")
    a %= m
    if m == 1:
        return 1
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not invertible mod {m}")
    # The order divides phi(m); test divisors in increasing order.
    phi = euler_phi(m)
    for f in divisors(phi):
        if pow(a, f, m) == 1:
            return f
    raise AssertionError("unreachable: order must divide phi(m)")


def inertia_degree_cyclotomic(p: int, m: int) -> int:
    """Common residue degree of the primes above p in the m-th cyclotomic field.

    Strip the p-part of m, leaving m_p; the degree is the multiplicative
    order of p modulo m_p (1 when m_p <= 2).
    """
    require_prime(p)
    if m < 3:
        raise DomainError(f"inertia_degree_cyclotomic requires m >= 3, got {m}")
    m_p = m
    while m_p % p == 0:
        m_p //= p
    if m_p <= 2:
        return 1
    return multiplicative_order(p, m_p)


@dataclass(frozen=True)
class ArithmeticFunction:
    """Integer-valued function g on positive integers with g(1) = 1.

    Three kinds are supported: the divisor sum ("sigma"), the identity
    ("identity"), and a finite table ("table").  A table never
    extrapolates; evaluation past its last entry raises
    TableExhaustedError.
    """

    kind: str
    name: str
    table: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("sigma", "identity", "table"):
            raise DomainError(f"unknown arithmetic-function kind {self.kind!r}")
        if self.kind == "table":
            if not self.table:
                raise DomainError("table kind requires at least one value")
            if any(not isinstance(v, int) for v in self.table):
                raise DomainError("table values must be integers")
            if self.table[0] != 1:
                raise DomainError(f"g(1) must equal 1, table starts with {self.table[0]}")
        elif self.table is not None:
            raise DomainError(f"kind {self.kind!r} does not take a table")

    @classmethod
    def sigma(cls) -> "ArithmeticFunction":
        return cls(kind="sigma", name="sigma")

    @classmethod
    def identity(cls) -> "ArithmeticFunction":
        return cls(kind="identity", name="id")

    @classmethod
    def from_table(cls, values, name: str = "table") -> "ArithmeticFunction":
        return cls(kind="table", name=name, table=tuple(int(v) for v in values))

    @classmethod
    def from_file(cls, path) -> "ArithmeticFunction":
        """Load a table: one integer per line, line k holding g(k)."""
        path = Path(path)
        values = []
        for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                values.append(int(line))
            except ValueError:
                raise DomainError(f"{path}:{lineno}: not an integer: {line!r}") from None
        if not values:
            raise DomainError(f"{path}: empty g-table")
        return cls.from_table(values, name=path.stem)

    @property
    def n_max(self) -> int | None:
        """Largest argument this g can be evaluated at (None = unbounded)."""
        return len(self.table) if self.kind == "table" else None

    def require_up_to(self, n: int) -> None:
        """Fail fast if some g(k), k <= n, would be out of range."""
        if self.kind == "table" and n > len(self.table):
            raise TableExhaustedError(
                f"g={self.name!r} is tabulated up to {len(self.table)}, need {n}"
            )

    def __call__(self, n: int) -> int:
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"arithmetic functions are defined for integers n >= 1, got {n!r}")
        if self.kind == "sigma":
            return sigma(n)
        if self.kind == "identity":
            return n
        if n > len(self.table):
            raise TableExhaustedError(
                f"g={self.name!r} is tabulated up to {len(self.table)}, asked for g({n})"
            )
        return self.table[n - 1]


def f_g(g: ArithmeticFunction, n: int) -> Fraction:
    """Rescaled Moebius convolution (1/n) * sum over d|n of mu(d) g(n/d)."""
    if n < 1:
        raise DomainError(f"f_g requires n >= 1, got {n}")
    g.require_up_to(n)
    total = sum(mobius(d) * g(n // d) for d in divisors(n))
    return Fraction(total, n)
