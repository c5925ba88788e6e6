"""Shifted cyclotomic and quadratic generators and their prime splitting.

A candidate is an algebraic integer of the form a*zeta_m + b (cyclotomic
shift) or a*w_D + b (quadratic shift, w_D the standard generator of the
ring of integers of Q(sqrt(D))).  For such generators the index of
Z[alpha] inside the full ring of integers has a closed form, which is
what makes the Dedekind-Kummer analysis trivially applicable away from
finitely many primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import arith, polymod
from .errors import DomainError
from .polynomial import IntPoly
from .polymod import Factorization, ModPoly


def min_poly_cyclotomic_shift(m: int, a: int, b: int) -> IntPoly:
    """Monic integer minimal polynomial of a*zeta_m + b, degree phi(m).

    Obtained by clearing denominators in Phi_m((X - b) / a).
    """
    if m < 3:
        raise DomainError(f"cyclotomic shifts require m >= 3, got {m}")
    if a == 0:
        raise DomainError("a = 0 degenerates to a rational integer")
    phi_m = polymod.cyclotomic(m)
    deg = phi_m.degree
    shift = IntPoly((-b, 1))  # X - b
    result = IntPoly.zero()
    power = IntPoly.one()  # (X - b)**j, built incrementally
    for j, c in enumerate(phi_m.coeffs):
        if c:
            result = result + power * (c * a ** (deg - j))
        power = power * shift
    return result


def min_poly_quadratic_shift(D: int, a: int, b: int) -> IntPoly:
    """Monic integer minimal polynomial of a*w_D + b (degree 2)."""
    if D in (0, 1):
        raise DomainError(f"D must avoid 0 and 1, got {D}")
    if not arith.is_squarefree(D):
        raise DomainError(f"D must be squarefree, got {D}")
    if a == 0:
        raise DomainError("a = 0 degenerates to a rational integer")
    if D % 4 == 1:
        # w**2 = w + (D-1)/4, so (X-b)**2 - a(X-b) + a**2 (1-D)/4 kills a*w + b.
        c0 = b * b + a * b + a * a * (1 - D) // 4
        c1 = -2 * b - a
        return IntPoly((c0, c1, 1))
    return IntPoly((b * b - a * a * D, -2 * b, 1))


@dataclass(frozen=True)
class CyclotomicShift:
    """Candidate a*zeta_m + b with m >= 3 and a != 0."""

    m: int
    a: int
    b: int

    kind = "cyclotomic"

    def __post_init__(self) -> None:
        if self.m < 3:
            raise DomainError(f"cyclotomic shifts require m >= 3, got {self.m}")
        if self.a == 0:
            raise DomainError("a = 0 degenerates to a rational integer")

    @cached_property
    def degree(self) -> int:
        return arith.euler_phi(self.m)

    @cached_property
    def min_poly(self) -> IntPoly:
        return min_poly_cyclotomic_shift(self.m, self.a, self.b)

    @cached_property
    def index(self) -> int:
        d = self.degree
        return abs(self.a) ** (d * (d - 1) // 2)

    def describe(self) -> str:
        return f"{self.a}*zeta_{self.m} + {self.b}"

    def spec_string(self) -> str:
        return f"cyc:{self.m},{self.a},{self.b}"

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "m": self.m, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class QuadraticShift:
    """Candidate a*w_D + b for squarefree D outside {0, 1} and a != 0."""

    D: int
    a: int
    b: int

    kind = "quadratic"

    def __post_init__(self) -> None:
        if self.D in (0, 1):
            raise DomainError(f"D must avoid 0 and 1, got {self.D}")
        if not arith.is_squarefree(self.D):
            raise DomainError(f"D must be squarefree, got {self.D}")
        if self.a == 0:
            raise DomainError("a = 0 degenerates to a rational integer")

    @classmethod
    def gaussian(cls, a: int, b: int) -> "QuadraticShift":
        return cls(D=-1, a=a, b=b)

    @property
    def degree(self) -> int:
        return 2

    @cached_property
    def min_poly(self) -> IntPoly:
        return min_poly_quadratic_shift(self.D, self.a, self.b)

    @property
    def index(self) -> int:
        return abs(self.a)

    @property
    def discriminant(self) -> int:
        return self.D if self.D % 4 == 1 else 4 * self.D

    def describe(self) -> str:
        return f"{self.a}*w({self.D}) + {self.b}"

    def spec_string(self) -> str:
        if self.D == -1:
            return f"gauss:{self.a},{self.b}"
        return f"quad:{self.D},{self.a},{self.b}"

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "D": self.D, "a": self.a, "b": self.b}


AlgebraicCandidate = CyclotomicShift | QuadraticShift


def candidate_from_json(doc: dict) -> AlgebraicCandidate:
    if doc["kind"] == "cyclotomic":
        return CyclotomicShift(m=doc["m"], a=doc["a"], b=doc["b"])
    if doc["kind"] == "quadratic":
        return QuadraticShift(D=doc["D"], a=doc["a"], b=doc["b"])
    raise DomainError(f"unknown candidate kind {doc.get('kind')!r}")


def parse_candidate(text: str) -> AlgebraicCandidate:
    """Parse 'cyc:m,a,b', 'quad:D,a,b', or 'gauss:a,b'."""
    head, _, tail = text.partition(":")
    try:
        nums = [int(tok) for tok in tail.split(",")] if tail else []
    except ValueError:
        raise DomainError(f"malformed candidate {text!r}") from None
    if head == "cyc" and len(nums) == 3:
        return CyclotomicShift(m=nums[0], a=nums[1], b=nums[2])
    if head == "quad" and len(nums) == 3:
        return QuadraticShift(D=nums[0], a=nums[1], b=nums[2])
    if head == "gauss" and len(nums) == 2:
        return QuadraticShift.gaussian(a=nums[0], b=nums[1])
    raise DomainError(
        f"malformed candidate {text!r}; expected cyc:m,a,b | quad:D,a,b | gauss:a,b"
    )


def index_of(c: AlgebraicCandidate) -> int:
    """Index of Z[alpha] in the ring of integers, by the closed form."""
    return c.index


def _bareiss_det(rows: list[list[int]]) -> int:
    """Determinant by fraction-free elimination; all divisions are exact."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def index_via_determinant(m: int, a: int, b: int) -> int:
    """Index of Z[a*zeta_m + b] computed from first principles.

    Expresses the powers (a*zeta_m + b)**j, j < phi(m), in the power basis
    of zeta_m and returns |det| of the resulting change-of-basis matrix.
    """
    if m < 3:
        raise DomainError(f"index_via_determinant requires m >= 3, got {m}")
    if a == 0:
        raise DomainError("a = 0 degenerates to a rational integer")
    phi_m = polymod.cyclotomic(m)
    deg = phi_m.degree
    reducer = [-c for c in phi_m.coeffs[:-1]]
    vec = [1] + [0] * (deg - 1)
    rows = [list(vec)]
    for _ in range(deg - 1):
        shifted = [0] + [a * c for c in vec[:-1]]
        top = a * vec[-1]
        if top:
            shifted = [s + top * r for s, r in zip(shifted, reducer)]
        vec = [s + b * c for s, c in zip(shifted, vec)]
        rows.append(list(vec))
    return abs(_bareiss_det(rows))


def ramifies(c: AlgebraicCandidate, p: int) -> bool:
    """Whether p ramifies in the field generated by the candidate.

    Cyclotomic field of level m: an odd p ramifies iff p | m, and 2
    ramifies iff 4 | m (for m = 2 mod 4 the field equals the one of level
    m/2, where 2 is unramified).  Quadratic field of discriminant D or 4D:
    p ramifies iff it divides the discriminant.
    """
    arith.require_prime(p)
    if isinstance(c, CyclotomicShift):
        if p == 2:
            return c.m % 4 == 0
        return c.m % p == 0
    return c.discriminant % p == 0


@dataclass(frozen=True)
class SplittingReport:
    """Dedekind-Kummer data for a prime p and a candidate.

    When p divides the candidate's index the method does not apply and the
    report carries no factors.  Otherwise each irreducible factor of the
    minimal polynomial mod p corresponds to a prime ideal above p, with
    ramification index e = multiplicity and inertia degree f = degree.
    """

    candidate: AlgebraicCandidate
    p: int
    applicable: bool
    ramified: bool
    factorization: Factorization | None

    @property
    def entries(self) -> tuple[tuple[ModPoly, int, int], ...]:
        """(irreducible factor, e, f) triples; empty when not applicable."""
        if not self.applicable or self.factorization is None:
            return ()
        return tuple(
            (poly, mult, poly.degree) for poly, mult in self.factorization.factors
        )

    def to_json_dict(self) -> dict:
        doc = {
            "candidate": self.candidate.to_json_dict(),
            "p": self.p,
            "applicable": self.applicable,
            "ramified": self.ramified,
            "e": [e for _, e, _ in self.entries],
            "f": [f for _, _, f in self.entries],
        }
        if self.factorization is not None:
            doc["factorization"] = self.factorization.to_json_dict()
        return doc


def dedekind_kummer_split(c: AlgebraicCandidate, p: int, seed: int = 0) -> SplittingReport:
    """Split p in Q(alpha) by factoring the minimal polynomial mod p.

    Only valid for p not dividing the index; such p yield a report with
    ``applicable=False`` (this is data, not an error).
    """
    arith.require_prime(p)
    ram = ramifies(c, p)
    if c.index % p == 0:
        return SplittingReport(
            candidate=c, p=p, applicable=False, ramified=ram, factorization=None
        )
    reduced = polymod.reduce_mod(c.min_poly, p)
    fact = polymod.factor(reduced, seed=seed)
    return SplittingReport(
        candidate=c, p=p, applicable=True, ramified=ram, factorization=fact
    )
