"""D'Arcais polynomials: exact construction, oracles, and evaluation.

The n-th D'Arcais polynomial for an arithmetic function g is the
coefficient of q**n in exp(X * sum_{k>=1} g(k) q**k / k).  Scaled by n!
it has integer coefficients, is monic of degree n, and has zero constant
term for n >= 1.  Three independent routes are provided:

* ``a_poly``       - the O(n^2) convolution recursion (the workhorse),
* ``a_poly_oracle``- a sum over integer partitions, exact but exponential,
* ``series_oracle``- formal exponentiation of the power series at a fixed
  integer argument.

The oracles exist so the recursion can be cross-checked; they share no
code path with it.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial
from typing import Iterator

from . import polymod
from .arith import ArithmeticFunction, is_squarefree
from .errors import DomainError
from .polynomial import IntPoly, RatPoly

_cache_lock = threading.Lock()
_a_cache: dict[ArithmeticFunction, list[IntPoly]] = {}

DEFAULT_ORACLE_BOUND = 25


def a_poly_list(g: ArithmeticFunction, n: int) -> list[IntPoly]:
    """The integer D'Arcais polynomials of index 0..n for g."""
    if n < 0:
        raise DomainError(f"a_poly_list requires n >= 0, got {n}")
    g.require_up_to(max(n, 1))
    with _cache_lock:
        cached = _a_cache.setdefault(g, [IntPoly.one()])
        known = len(cached)
        if known > n:
            return cached[: n + 1]
        polys = list(cached)
    # Extend outside the lock; only the final publish is guarded.
    gv = [0] + [g(k) for k in range(1, n + 1)]
    for j in range(len(polys), n + 1):
        acc = [0] * j  # coefficients of sum_k c_k g(k) A_{j-k}, degree <= j-1
        c = 1  # falling product (j-1)!/(j-k)!
        for k in range(1, j + 1):
            w = c * gv[k]
            if w:
                for idx, coeff in enumerate(polys[j - k].coeffs):
                    acc[idx] += w * coeff
            c *= j - k
        polys.append(IntPoly([0] + acc))  # multiply by X
    with _cache_lock:
        if len(_a_cache[g]) < len(polys):
            _a_cache[g] = polys
    return polys[: n + 1]


def a_poly(g: ArithmeticFunction, n: int) -> IntPoly:
    """n-th integer D'Arcais polynomial, by the convolution recursion."""
    return a_poly_list(g, n)[n]


def p_poly(g: ArithmeticFunction, n: int) -> RatPoly:
    """n-th rational D'Arcais polynomial, a_poly(g, n) / n!."""
    return a_poly(g, n).to_rat().scale(Fraction(1, factorial(n)))


def h_poly(g: ArithmeticFunction, n: int) -> RatPoly:
    """p_poly with its guaranteed root at zero stripped (n >= 1)."""
    if n < 1:
        raise DomainError(f"h_poly requires n >= 1, got {n}")
    coeffs = p_poly(g, n).coeffs
    if coeffs and coeffs[0]:
        raise AssertionError("constant term of a D'Arcais polynomial must vanish")
    return RatPoly(coeffs[1:])


def _partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (m_1, ..., m_n) with sum k*m_k = n."""

    def rec(remaining: int, largest: int, mults: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(mults)
            return
        for part in range(min(largest, remaining), 0, -1):
            count = remaining // part
            for m in range(count, 0, -1):
                mults[part - 1] = m
                yield from rec(remaining - part * m, part - 1, mults)
            mults[part - 1] = 0

    if n == 0:
        yield ()
        return
    yield from rec(n, n, [0] * n)


def a_poly_oracle(
    g: ArithmeticFunction, n: int, max_n: int = DEFAULT_ORACLE_BOUND
) -> IntPoly:
    """n-th integer D'Arcais polynomial by direct summation over partitions.

    Exponential in n; guarded by ``max_n`` so it stays a test oracle.
    Each partition with m_j copies of j contributes
    n! * prod_j (g(j)/j)**m_j / m_j!  to the coefficient of X**(sum m_j).
    """
    if n < 0:
        raise DomainError(f"a_poly_oracle requires n >= 0, got {n}")
    if n > max_n:
        raise DomainError(
            f"partition oracle capped at n <= {max_n} (asked for {n}); raise max_n to override"
        )
    g.require_up_to(max(n, 1))
    fact_n = factorial(n)
    coeffs = [Fraction(0)] * (n + 1)
    gv = [Fraction(0)] + [Fraction(g(j), j) for j in range(1, n + 1)]
    for mults in _partitions(n):
        weight = Fraction(fact_n)
        size = 0
        for j, m in enumerate(mults, start=1):
            if m:
                weight *= gv[j] ** m / factorial(m)
                size += m
        coeffs[size] += weight
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError("partition oracle produced a non-integer coefficient")
    return IntPoly(int(c) for c in coeffs)


def series_oracle(g: ArithmeticFunction, x: int, N: int) -> list[Fraction]:
    """Coefficients of q**0..q**N of exp(x * sum g(k) q**k / k).

    Entry n equals the n-th rational D'Arcais polynomial evaluated at x.
    Uses the logarithmic-derivative recurrence: n*E_n = sum_{k=1}^{n}
    x*g(k)*E_{n-k}.
    """
    if N < 0:
        raise DomainError(f"series_oracle requires N >= 0, got {N}")
    g.require_up_to(max(N, 1))
    weights = [0] + [x * g(k) for k in range(1, N + 1)]
    out = [Fraction(1)]
    for n in range(1, N + 1):
        total = sum(weights[k] * out[n - k] for k in range(1, n + 1))
        out.append(Fraction(total, n))
    return out


def _sigma_sieve(N: int) -> list[int]:
    """sigma(1..N) by summing each divisor over its multiples."""
    sig = [0] * (N + 1)
    for d in range(1, N + 1):
        for multiple in range(d, N + 1, d):
            sig[multiple] += d
    return sig


def tau_list(N: int) -> list[int]:
    """Ramanujan tau(1..N), via the integer specialization x = -24.

    Same recurrence as ``series_oracle`` but with the argument substituted
    up front, so every intermediate value is an integer (the division by n
    is exact).
    """
    if N < 1:
        raise DomainError(f"tau_list requires N >= 1, got {N}")
    sig = _sigma_sieve(N)
    weights = [-24 * s for s in sig]
    values = [1]  # values[j] = (j-th rational D'Arcais polynomial at -24)
    for n in range(1, N):
        total = 0
        for k in range(1, n + 1):
            total += weights[k] * values[n - k]
        div, rem = divmod(total, n)
        if rem:
            raise AssertionError("tau recurrence produced a non-integer")
        values.append(div)
    return values


def tau(n: int) -> int:
    """Ramanujan tau(n): the (n-1)-th rational D'Arcais polynomial at -24."""
    if n < 1:
        raise DomainError(f"tau requires n >= 1, got {n}")
    return tau_list(n)[n - 1]


# ---------------------------------------------------------------------------
# Exact evaluation at quadratic and cyclotomic integers
# ---------------------------------------------------------------------------


def _check_squarefree_d(D: int) -> None:
    if D in (0, 1):
        raise DomainError(f"D must avoid 0 and 1, got {D}")
    if not is_squarefree(D):
        raise DomainError(f"D must be squarefree, got {D}")


def evaluate_at_quadratic(p, D: int, a: int, b: int):
    """Evaluate p at a*w + b, where w generates the ring of integers of Q(sqrt(D)).

    w is sqrt(D) when D != 1 mod 4 and (1 + sqrt(D))/2 when D = 1 mod 4.
    Returns the pair (u, v) meaning u + v*w; (0, 0) exactly when the
    argument is a root.  Coefficients may be ints or Fractions; the result
    follows suit.
    """
    _check_squarefree_d(D)
    u, v = 0 * p.coeff(0), 0 * p.coeff(0)  # zero of the coefficient domain
    if D % 4 == 1:
        c = (D - 1) // 4  # w*w = w + c
        for coeff in reversed(p.coeffs):
            u, v = u * b + v * a * c + coeff, u * a + v * b + v * a
    else:
        for coeff in reversed(p.coeffs):
            u, v = u * b + v * a * D + coeff, u * a + v * b
    return u, v


def evaluate_at_cyclotomic(p, m: int, a: int, b: int) -> tuple:
    """Evaluate p at a*zeta + b for a primitive m-th root of unity zeta.

    The value is returned as its coordinate vector in the power basis
    1, zeta, ..., zeta**(phi(m)-1); the zero vector means the argument is
    a root.
    """
    if m < 3:
        raise DomainError(f"evaluate_at_cyclotomic requires m >= 3, got {m}")
    phi = polymod.cyclotomic(m)
    deg = phi.degree
    reducer = [-c for c in phi.coeffs[:-1]]  # zeta**deg in the power basis
    zero = 0 * p.coeff(0)
    vec = [zero] * deg
    for coeff in reversed(p.coeffs):
        # vec <- vec * (a*zeta + b) + coeff * e0
        shifted = [zero] + [a * c for c in vec[:-1]]
        top = a * vec[-1]
        if top:
            shifted = [s + top * r for s, r in zip(shifted, reducer)]
        vec = [s + b * c for s, c in zip(shifted, vec)]
        vec[0] += coeff
    return tuple(vec)


# ---------------------------------------------------------------------------
# Hurwitz stability of H_n = P_n / X
# ---------------------------------------------------------------------------


def hurwitz_check(p: RatPoly) -> bool:
    """True iff every root of p has strictly negative real part.

    Decided by the Routh table in exact rational arithmetic.  Degenerate
    pivots (a zero leading entry, or an all-zero row) certify the presence
    of a root with nonnegative real part or a boundary configuration, so
    they report False rather than being perturbed away.
    """
    if p.is_zero:
        raise DomainError("the zero polynomial has no stability type")
    if not p.coeff(0):
        raise DomainError("polynomial has a root at the origin; strip it first")
    d = p.degree
    if d == 0:
        return True
    coeffs = list(p.coeffs)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    # All coefficients strictly positive is necessary for real polynomials.
    if any(c <= 0 for c in coeffs):
        return False
    prev = coeffs[d::-2]  # row for degree d:   c_d, c_{d-2}, ...
    cur = coeffs[d - 1 :: -2]  # row for degree d-1: c_{d-1}, c_{d-3}, ...
    for _ in range(d - 1):
        if not any(cur):
            return False  # all-zero row: roots placed symmetrically about 0
        pivot = cur[0]
        if pivot <= 0:
            return False  # zero pivot with a nonzero row, or a sign change
        nxt = [
            (prev[j] if j < len(prev) else 0)
            - prev[0] * (cur[j] if j < len(cur) else 0) / pivot
            for j in range(1, len(prev))
        ]
        prev, cur = cur, nxt
    return bool(cur) and cur[0] > 0
