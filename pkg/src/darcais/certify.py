"""Non-root certificates for D'Arcais polynomials at algebraic integers.

A certificate either proves that the candidate is not a root of the n-th
D'Arcais polynomial for g (possibly for a whole residue class of n, or
for every n), or reports Inconclusive.  Proofs come from a fixed strategy
chain, ordered so that cheap closed-form criteria run before
factorization-based ones:

1. the absolute-value bound |alpha| > 9.7226 * (n - 1)  (sigma only),
2. the shift criteria mod 2 and mod 3 (valid for every n),
3. the Gaussian-integer criterion mod 3/7 for sigma,
4. the unramified/inert criterion for quadratic candidates,
5. a generic local obstruction: an irreducible factor of the minimal
   polynomial mod p that fails to divide the n-th integer D'Arcais
   polynomial mod p,
6. exact evaluation in the ring of integers (bounded n).

Every proven certificate carries enough recorded inputs (including seeds)
to be re-derived bit for bit; ``verify_certificate`` does exactly that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from . import arith, polymod, series
from .arith import ArithmeticFunction
from .errors import DomainError, TableExhaustedError
from .numfield import AlgebraicCandidate, CyclotomicShift, QuadraticShift
from .polymod import factor, reduce_mod

PROVEN = "proven_nonroot"
INCONCLUSIVE = "inconclusive"

# Exact square of the literal constant 9.7226.
_HAN_C_SQ = Fraction(97226, 10000) ** 2


@dataclass(frozen=True)
class Scope:
    """The set of indices n a certificate speaks about."""

    kind: str  # "single" | "residues" | "all"
    n: int | None = None
    modulus: int | None = None
    residues: tuple[int, ...] = ()

    @classmethod
    def single(cls, n: int) -> "Scope":
        return cls(kind="single", n=n)

    @classmethod
    def residue_classes(cls, modulus: int, residues) -> "Scope":
        return cls(kind="residues", modulus=modulus, residues=tuple(sorted(residues)))

    @classmethod
    def all_n(cls) -> "Scope":
        return cls(kind="all")

    def covers(self, n: int) -> bool:
        if n < 1:
            return False
        if self.kind == "single":
            return n == self.n
        if self.kind == "residues":
            return n % self.modulus in self.residues
        return True

    def describe(self) -> str:
        if self.kind == "single":
            return f"n = {self.n}"
        if self.kind == "residues":
            keys = ",".join(str(r) for r in self.residues)
            return f"n = {keys} mod {self.modulus}"
        return "all n >= 1"

    def to_json_dict(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.kind == "single":
            doc["n"] = self.n
        elif self.kind == "residues":
            doc["modulus"] = self.modulus
            doc["residues"] = list(self.residues)
        return doc


@dataclass(frozen=True)
class Certificate:
    """Outcome of one certification attempt, with replayable evidence."""

    g_name: str
    candidate: AlgebraicCandidate
    scope: Scope
    verdict: str
    method: str
    details: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)
    witness_prime: int | None = None

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN

    def to_json_dict(self) -> dict:
        return {
            "g": self.g_name,
            "candidate": self.candidate.to_json_dict(),
            "scope": self.scope.to_json_dict(),
            "verdict": self.verdict,
            "method": self.method,
            "details": self.details,
            "evidence": self.evidence,
            "witness_prime": self.witness_prime,
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class CertifyConfig:
    primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)
    exact_eval_bound: int = 30
    not_ramified_prime_bound: int = 50
    seed: int = 0

    def __post_init__(self) -> None:
        for p in self.primes:
            arith.require_prime(p, "configured prime")

    def to_json_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "exact_eval_bound": self.exact_eval_bound,
            "not_ramified_prime_bound": self.not_ramified_prime_bound,
            "seed": self.seed,
        }


DEFAULT_CONFIG = CertifyConfig()


# ---------------------------------------------------------------------------
# Absolute-value bound
# ---------------------------------------------------------------------------


def _sqrt_bracket(D: int, scale: int = 10**8) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(D) <= hi for D > 0."""
    s = isqrt(D * scale * scale)
    return Fraction(s, scale), Fraction(s + 1, scale)


def abs_sq_lower_bound(c: AlgebraicCandidate) -> Fraction:
    """A sound rational lower bound for |alpha|**2 (exact where possible)."""
    if isinstance(c, QuadraticShift):
        D, a, b = c.D, c.a, c.b
        if D < 0:
            if D % 4 == 1:
                return (Fraction(b) + Fraction(a, 2)) ** 2 + Fraction(a * a * abs(D), 4)
            return Fraction(b * b + a * a * abs(D))
        lo, hi = _sqrt_bracket(D)
        if D % 4 == 1:
            lo, hi = (1 + lo) / 2, (1 + hi) / 2
        ends = sorted((a * lo + b, a * hi + b))
        if ends[0] <= 0 <= ends[1]:
            return Fraction(0)
        closest = min(abs(ends[0]), abs(ends[1]))
        return closest * closest
    # |a*zeta + b| >= ||b| - |a|| because |zeta| = 1.
    margin = abs(abs(c.b) - abs(c.a))
    return Fraction(margin * margin)


def certify_han_bound(c: AlgebraicCandidate, n: int) -> Certificate:
    """Non-root when |alpha| provably exceeds 9.7226 * (n - 1); sigma only.

    The comparison is done on exact squares so there is no boundary fuzz.
    """
    if n < 1:
        raise DomainError(f"certification requires n >= 1, got {n}")
    lower_sq = abs_sq_lower_bound(c)
    threshold_sq = _HAN_C_SQ * (n - 1) ** 2
    proven = lower_sq > threshold_sq
    return Certificate(
        g_name="sigma",
        candidate=c,
        scope=Scope.single(n),
        verdict=PROVEN if proven else INCONCLUSIVE,
        method="han_bound",
        details={"n": n},
        evidence={
            "abs_sq_lower_bound": str(lower_sq),
            "threshold_sq": str(threshold_sq),
        },
    )


# ---------------------------------------------------------------------------
# Closed-form shift criteria (valid for every n >= 1)
# ---------------------------------------------------------------------------


def _g3_is_0_or_1_mod_3(g: ArithmeticFunction) -> bool:
    try:
        return g(3) % 3 in (0, 1)
    except TableExhaustedError:
        return False


def certify_theorem_translated(g: ArithmeticFunction, c: AlgebraicCandidate) -> Certificate:
    """Shift criteria that hold for every n at once.

    Each item pins a prime lens ell not dividing a and shows the minimal
    polynomial keeps a non-linear irreducible factor mod ell while the
    integer D'Arcais polynomials split into linear factors mod ell:

    1. cyclotomic, m has an odd prime factor, a odd           (lens 2),
    2. cyclotomic, m divisible by a prime > 3 or by 4,
       3 does not divide a, g(3) = 0 or 1 mod 3               (lens 3),
    3. quadratic, D = 5 mod 8, a odd                          (lens 2),
    4. quadratic, D = 2 mod 3, 3 does not divide a,
       g(3) = 0 or 1 mod 3                                    (lens 3).
    """
    item = None
    facts: dict = {}
    if isinstance(c, CyclotomicShift):
        odd_primes = [p for p in arith.prime_factors(c.m) if p != 2]
        if odd_primes and c.a % 2 != 0:
            item, facts = 1, {"odd_prime_divisor": odd_primes[0]}
        elif (
            (any(p > 3 for p in odd_primes) or c.m % 4 == 0)
            and c.a % 3 != 0
            and _g3_is_0_or_1_mod_3(g)
        ):
            item, facts = 2, {"g3_mod_3": g(3) % 3}
    else:
        if c.D % 8 == 5 and c.a % 2 != 0:
            item, facts = 3, {"D_mod_8": c.D % 8}
        elif c.D % 3 == 2 and c.a % 3 != 0 and _g3_is_0_or_1_mod_3(g):
            item, facts = 4, {"D_mod_3": c.D % 3, "g3_mod_3": g(3) % 3}
    if item is None:
        return Certificate(
            g_name=g.name,
            candidate=c,
            scope=Scope.all_n(),
            verdict=INCONCLUSIVE,
            method="translated_shift",
            details={},
            evidence={"reason": "no item hypothesis satisfied"},
        )
    return Certificate(
        g_name=g.name,
        candidate=c,
        scope=Scope.all_n(),
        verdict=PROVEN,
        method="translated_shift",
        details={"item": item},
        evidence=facts,
        witness_prime=2 if item in (1, 3) else 3,
    )


# ---------------------------------------------------------------------------
# Gaussian-integer criterion for sigma
# ---------------------------------------------------------------------------

_GAUSSIAN_OK_RESIDUES = (0, 1, 2, 3, 4, 6)  # n mod 7 away from the hard class


def certify_theorem_gaussian_sigma(a: int, b: int, n: int) -> Certificate:
    """Non-root of the n-th sigma D'Arcais polynomial at a*i + b.

    Case 1: n != 5 mod 7 and 21 does not divide a.
    Case 2: n = 5 mod 7 and one of
        (i) 3 does not divide a,
        (ii) a != 0, 1, -1 mod 7,
        (iii) 7 divides neither a nor b.
    """
    if a == 0:
        raise DomainError("a = 0 is the rational-integer case; use exact evaluation")
    if n < 1:
        raise DomainError(f"certification requires n >= 1, got {n}")
    c = QuadraticShift.gaussian(a, b)
    case = None
    if n % 7 != 5:
        scope = Scope.residue_classes(7, _GAUSSIAN_OK_RESIDUES)
        if a % 21 != 0:
            case = "1"
    else:
        scope = Scope.residue_classes(7, (5,))
        if a % 3 != 0:
            case = "2i"
        elif a % 7 not in (0, 1, 6):
            case = "2ii"
        elif a % 7 != 0 and b % 7 != 0:
            case = "2iii"
    if case is None:
        return Certificate(
            g_name="sigma",
            candidate=c,
            scope=Scope.single(n),
            verdict=INCONCLUSIVE,
            method="gaussian_sigma",
            details={"n": n},
            evidence={"reason": "outside the proven cases"},
        )
    return Certificate(
        g_name="sigma",
        candidate=c,
        scope=scope,
        verdict=PROVEN,
        method="gaussian_sigma",
        details={"n": n, "case": case},
        evidence={"a_mod_21": a % 21, "a_mod_7": a % 7, "b_mod_7": b % 7},
        witness_prime=3 if case in ("1", "2i") else 7,
    )


# ---------------------------------------------------------------------------
# Unramified / inert criterion for quadratic candidates
# ---------------------------------------------------------------------------


def certify_theorem_not_ramified(
    g: ArithmeticFunction,
    c: AlgebraicCandidate,
    n: int,
    prime_bound: int = 50,
) -> Certificate:
    """Quadratic-only criterion for n in the classes 0, 1 mod p.

    Case 1: g(p) = 0 mod p and p divides none of 2, a, D (then the n-th
    integer D'Arcais polynomial is X**n mod p while p is unramified).
    Case 2: g(p) = 1 mod p, p odd, p not dividing a, and D a non-residue
    mod p (then p is inert, but the polynomial splits into linear factors
    mod p).

    The search runs over primes up to ``prime_bound`` (capped by the reach
    of a table-backed g) and keeps only primes with n = 0 or 1 mod p.
    """
    if not isinstance(c, QuadraticShift):
        raise DomainError("the unramified criterion applies to quadratic candidates only")
    if n < 1:
        raise DomainError(f"certification requires n >= 1, got {n}")
    bound = prime_bound
    if g.n_max is not None:
        bound = min(bound, g.n_max)
    for p in arith.primes_up_to(bound):
        if n % p not in (0, 1):
            continue
        gp = g(p) % p
        if gp == 0 and (2 * c.a * c.D) % p != 0:
            case = 1
        elif gp == 1 and p != 2 and c.a % p != 0 and arith.legendre_symbol(c.D, p) == -1:
            case = 2
        else:
            continue
        return Certificate(
            g_name=g.name,
            candidate=c,
            scope=Scope.residue_classes(p, (0, 1)),
            verdict=PROVEN,
            method="not_ramified",
            details={"n": n, "case": case, "p": p, "prime_bound": prime_bound},
            evidence={
                "g_p_mod_p": gp,
                "legendre_D_p": arith.legendre_symbol(c.D, p) if p != 2 else None,
            },
            witness_prime=p,
        )
    return Certificate(
        g_name=g.name,
        candidate=c,
        scope=Scope.single(n),
        verdict=INCONCLUSIVE,
        method="not_ramified",
        details={"n": n, "prime_bound": prime_bound},
        evidence={"reason": f"no qualifying prime up to {bound}"},
    )


# ---------------------------------------------------------------------------
# Generic local obstruction
# ---------------------------------------------------------------------------


def certify_generic(
    g: ArithmeticFunction,
    c: AlgebraicCandidate,
    n: int,
    primes=(2, 3, 5, 7, 11, 13),
    seed: int = 0,
) -> Certificate:
    """Search the given primes for a local divisibility obstruction.

    If the candidate were a root, its monic minimal polynomial would
    divide the n-th integer D'Arcais polynomial over Z, hence modulo every
    prime.  A prime p (not dividing the candidate's index) where some
    irreducible factor of the minimal polynomial mod p fails to divide the
    polynomial mod p therefore proves the candidate is not a root.
    """
    if n < 1:
        raise DomainError(f"certification requires n >= 1, got {n}")
    primes = tuple(primes)
    for p in primes:
        arith.require_prime(p, "obstruction prime")
    skipped = []
    kappa = c.index
    for p in primes:
        if kappa % p == 0:
            skipped.append(p)
            continue
        try:
            a_mod = polymod.a_poly_mod(g, n, p)
        except TableExhaustedError:
            skipped.append(p)
            continue
        a_fact = factor(a_mod, seed=seed)
        min_fact = factor(reduce_mod(c.min_poly, p), seed=seed)
        a_irreducibles = {poly for poly, _ in a_fact.factors}
        for q, _ in min_fact.factors:
            missing = q not in a_irreducibles
            if missing != (not q.divides(a_mod)):
                raise AssertionError("factor membership and division disagree")
            if missing:
                return Certificate(
                    g_name=g.name,
                    candidate=c,
                    scope=Scope.single(n),
                    verdict=PROVEN,
                    method="generic_obstruction",
                    details={"n": n, "p": p, "primes": list(primes), "seed": seed},
                    evidence={
                        "witness_factor": list(q.coeffs),
                        "min_poly_mod_p": min_fact.to_json_dict(),
                        "a_poly_mod_p": a_fact.to_json_dict(),
                    },
                    witness_prime=p,
                )
    return Certificate(
        g_name=g.name,
        candidate=c,
        scope=Scope.single(n),
        verdict=INCONCLUSIVE,
        method="generic_obstruction",
        details={"n": n, "primes": list(primes), "seed": seed},
        evidence={"skipped_primes": skipped},
    )


# ---------------------------------------------------------------------------
# Exact evaluation
# ---------------------------------------------------------------------------


def certify_exact(g: ArithmeticFunction, c: AlgebraicCandidate, n: int) -> Certificate:
    """Evaluate the n-th integer D'Arcais polynomial at the candidate exactly."""
    if n < 1:
        raise DomainError(f"certification requires n >= 1, got {n}")
    poly = series.a_poly(g, n)
    if isinstance(c, QuadraticShift):
        value = series.evaluate_at_quadratic(poly, c.D, c.a, c.b)
    else:
        value = series.evaluate_at_cyclotomic(poly, c.m, c.a, c.b)
    nonzero = any(value)
    return Certificate(
        g_name=g.name,
        candidate=c,
        scope=Scope.single(n),
        verdict=PROVEN if nonzero else INCONCLUSIVE,
        method="exact_evaluation",
        details={"n": n},
        evidence={
            "value_coordinates": [str(v) for v in value],
            "exact_zero": not nonzero,
        },
    )


# ---------------------------------------------------------------------------
# The strategy chain
# ---------------------------------------------------------------------------


def certify(
    g: ArithmeticFunction,
    c: AlgebraicCandidate,
    n: int,
    config: CertifyConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Try every method in order of increasing cost; first proof wins."""
    if n < 1:
        raise DomainError(f"certification requires n >= 1, got {n}")
    attempts = []

    def note(cert: Certificate) -> Certificate:
        attempts.append({"method": cert.method, "verdict": cert.verdict})
        return cert

    if g.kind == "sigma":
        cert = note(certify_han_bound(c, n))
        if cert.proven:
            return cert
    cert = note(certify_theorem_translated(g, c))
    if cert.proven:
        return cert
    if g.kind == "sigma" and isinstance(c, QuadraticShift) and c.D == -1:
        cert = note(certify_theorem_gaussian_sigma(c.a, c.b, n))
        if cert.proven:
            return cert
    if isinstance(c, QuadraticShift):
        cert = note(
            certify_theorem_not_ramified(g, c, n, prime_bound=config.not_ramified_prime_bound)
        )
        if cert.proven:
            return cert
    cert = note(certify_generic(g, c, n, primes=config.primes, seed=config.seed))
    if cert.proven:
        return cert
    if n <= config.exact_eval_bound:
        try:
            cert = note(certify_exact(g, c, n))
        except TableExhaustedError:
            attempts.append(
                {"method": "exact_evaluation", "verdict": "skipped_table_exhausted"}
            )
            cert = None
        if cert is not None and cert.proven:
            return cert
    return Certificate(
        g_name=g.name,
        candidate=c,
        scope=Scope.single(n),
        verdict=INCONCLUSIVE,
        method="none",
        details={"n": n, "config": config.to_json_dict()},
        evidence={"attempts": attempts},
    )


def certify_all_n(
    g: ArithmeticFunction,
    c: AlgebraicCandidate,
    config: CertifyConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Certification for every n >= 1 at once; only all-n criteria qualify."""
    cert = certify_theorem_translated(g, c)
    if cert.proven:
        return cert
    return Certificate(
        g_name=g.name,
        candidate=c,
        scope=Scope.all_n(),
        verdict=INCONCLUSIVE,
        method="none",
        details={"config": config.to_json_dict()},
        evidence={"attempts": [{"method": cert.method, "verdict": cert.verdict}]},
    )


def verify_certificate(
    g: ArithmeticFunction,
    cert: Certificate,
    config: CertifyConfig = DEFAULT_CONFIG,
) -> bool:
    """Re-derive the certificate from its recorded inputs and compare bytes."""
    c = cert.candidate
    method = cert.method
    if method == "han_bound":
        redo = certify_han_bound(c, cert.details["n"])
    elif method == "translated_shift":
        redo = certify_theorem_translated(g, c)
    elif method == "gaussian_sigma":
        redo = certify_theorem_gaussian_sigma(c.a, c.b, cert.details["n"])
    elif method == "not_ramified":
        redo = certify_theorem_not_ramified(
            g, c, cert.details["n"], prime_bound=cert.details["prime_bound"]
        )
    elif method == "generic_obstruction":
        redo = certify_generic(
            g,
            c,
            cert.details["n"],
            primes=tuple(cert.details["primes"]),
            seed=cert.details["seed"],
        )
    elif method == "exact_evaluation":
        redo = certify_exact(g, c, cert.details["n"])
    elif method == "zmija_cyclotomic":
        redo = certify_zmija_cyclotomic(
            g, c.m, assume_integer_valued=cert.details["assume_integer_valued"]
        )
    elif method == "none":
        recorded = cert.details.get("config")
        if recorded is not None:
            config = CertifyConfig(
                primes=tuple(recorded["primes"]),
                exact_eval_bound=recorded["exact_eval_bound"],
                not_ramified_prime_bound=recorded["not_ramified_prime_bound"],
                seed=recorded["seed"],
            )
        if "n" in cert.details:
            redo = certify(g, c, cert.details["n"], config=config)
        else:
            redo = certify_all_n(g, c, config=config)
    else:
        raise DomainError(f"unknown certificate method {method!r}")
    return redo.canonical_json() == cert.canonical_json()


# ---------------------------------------------------------------------------
# Zmija-style cyclotomic audit
# ---------------------------------------------------------------------------

_ZMIJA_EXPONENT = 11**6 - 1
_ZMIJA_OTHER_D = tuple(d for d in range(1, 11) if d != 6)


@dataclass(frozen=True)
class ZmijaReport:
    """Outcome of the three factor-degree conditions mod 5, 7, 11."""

    g_name: str
    cond_mod5: bool
    cond_mod7: bool
    cond_mod11: bool
    evidence: dict

    @property
    def passed(self) -> bool:
        return self.cond_mod5 and self.cond_mod7 and self.cond_mod11

    def to_json_dict(self) -> dict:
        return {
            "g": self.g_name,
            "cond_mod5_no_quadratic_factor": self.cond_mod5,
            "cond_mod7_no_quartic_factor": self.cond_mod7,
            "cond_mod11_no_order6_factor": self.cond_mod11,
            "passed": self.passed,
            "evidence": self.evidence,
        }


def _zmija_order_six(q: polymod.ModPoly) -> bool:
    """Raw criterion mod 11: q divides X**(11**6 - 1) - 1 but no smaller one.

    Equivalent to deg(q) = 6 (the degree is the multiplicative order of 11
    modulo the common order of the roots of q); both routes are computed
    and must agree.
    """
    x = polymod.ModPoly.x(11)
    one = polymod.ModPoly.one(11)
    divides_big = polymod.pow_mod(x, _ZMIJA_EXPONENT, q) == one % q
    divides_other = any(
        polymod.pow_mod(x, 11**d - 1, q) == one % q for d in _ZMIJA_OTHER_D
    )
    raw = divides_big and not divides_other
    if raw != (q.degree == 6):
        raise AssertionError("order criterion disagrees with the degree shortcut")
    return raw


def check_zmija_conditions(g: ArithmeticFunction, seed: int = 0) -> ZmijaReport:
    """Audit the three local splitting conditions that force non-vanishing
    at every root of unity of order >= 3.

    1. mod 5:  no irreducible quadratic factor in the integer D'Arcais
       polynomials of index 3 and 4;
    2. mod 7:  no irreducible quartic factor for indices 2..6;
    3. mod 11: no irreducible factor whose roots have multiplicative order
       dividing 11**6 - 1 but none of 11**d - 1 (d = 1..10, d != 6), which
       reduces to: no irreducible factor of degree 6, for indices 2..10.
    """
    g.require_up_to(10)
    evidence: dict = {}

    def offenders(p: int, indices, bad) -> list[dict]:
        found = []
        profiles = {}
        for r in indices:
            fact = factor(polymod.a_poly_mod(g, r, p), seed=seed)
            profiles[str(r)] = fact.degrees()
            for q, _ in fact.factors:
                if bad(q):
                    found.append({"index": r, "factor": list(q.coeffs)})
        evidence[f"mod{p}_degree_profiles"] = profiles
        return found

    bad5 = offenders(5, (3, 4), lambda q: q.degree == 2)
    bad7 = offenders(7, range(2, 7), lambda q: q.degree == 4)
    bad11 = offenders(11, range(2, 11), _zmija_order_six)
    evidence["mod5_offenders"] = bad5
    evidence["mod7_offenders"] = bad7
    evidence["mod11_offenders"] = bad11
    evidence["mod11_raw_criterion"] = (
        "factor divides X^(11^6-1)-1 and no X^(11^d-1)-1 for d=1..10, d!=6"
    )
    evidence["mod11_reduced_criterion"] = "factor degree equals 6"
    return ZmijaReport(
        g_name=g.name,
        cond_mod5=not bad5,
        cond_mod7=not bad7,
        cond_mod11=not bad11,
        evidence=evidence,
    )


def certify_zmija_cyclotomic(
    g: ArithmeticFunction,
    m: int,
    assume_integer_valued: bool | None = None,
) -> Certificate:
    """Certify non-vanishing at a primitive m-th root of unity via the
    three splitting conditions.

    The criterion additionally needs the rational D'Arcais polynomials for
    g to take integer values at integers; that holds for sigma and must be
    asserted explicitly for anything else (it is not finitely checkable).
    """
    c = CyclotomicShift(m=m, a=1, b=0)
    if assume_integer_valued is None:
        assume_integer_valued = g.kind == "sigma"
    report = check_zmija_conditions(g)
    proven = report.passed and assume_integer_valued
    reason = None
    if not assume_integer_valued:
        reason = "integer-valuedness of the rational polynomials not asserted"
    elif not report.passed:
        reason = "a splitting condition fails"
    return Certificate(
        g_name=g.name,
        candidate=c,
        scope=Scope.all_n(),
        verdict=PROVEN if proven else INCONCLUSIVE,
        method="zmija_cyclotomic",
        details={"assume_integer_valued": assume_integer_valued},
        evidence={"report": report.to_json_dict(), "reason": reason},
    )


# ---------------------------------------------------------------------------
# Grid scans
# ---------------------------------------------------------------------------

STATUS_ALL_N = "all_n"
STATUS_UP_TO_NMAX = "up_to_nmax"
STATUS_PARTIAL = "partial"
STATUS_UNKNOWN = "unknown"


@dataclass(frozen=True)
class GridPoint:
    a: int
    b: int
    status: str
    methods: tuple[str, ...]
    uncertified: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "status": self.status,
            "methods": list(self.methods),
            "uncertified": list(self.uncertified),
        }


@dataclass(frozen=True)
class GridResult:
    g_name: str
    kind: str
    a_range: tuple[int, int]
    b_range: tuple[int, int]
    n_max: int
    config: CertifyConfig
    points: tuple[GridPoint, ...]

    def to_json_dict(self) -> dict:
        return {
            "g": self.g_name,
            "kind": self.kind,
            "a_range": list(self.a_range),
            "b_range": list(self.b_range),
            "n_max": self.n_max,
            "config": self.config.to_json_dict(),
            "points": [pt.to_json_dict() for pt in self.points],
        }

    def to_csv(self) -> str:
        lines = ["a,b,status,methods"]
        for pt in self.points:
            lines.append(f"{pt.a},{pt.b},{pt.status},{';'.join(pt.methods)}")
        return "\n".join(lines) + "\n"


def _candidate_factory(kind: str):
    if kind == "gauss":
        return lambda a, b: QuadraticShift.gaussian(a, b)
    head, _, tail = kind.partition(":")
    if head == "quad" and tail:
        D = int(tail)
        return lambda a, b: QuadraticShift(D=D, a=a, b=b)
    if head == "cyc" and tail:
        m = int(tail)
        return lambda a, b: CyclotomicShift(m=m, a=a, b=b)
    raise DomainError(f"unknown grid kind {kind!r}; expected gauss | quad:D | cyc:m")


def _scan_rational_integer(
    g: ArithmeticFunction, b: int, n_max: int
) -> tuple[str, tuple[str, ...], tuple[int, ...]]:
    """Real-axis point: certify n by the absolute bound or exact evaluation."""
    methods = set()
    uncertified = []
    threshold_ok = Fraction(b * b)
    for n in range(1, n_max + 1):
        if g.kind == "sigma" and threshold_ok > _HAN_C_SQ * (n - 1) ** 2:
            methods.add("han_bound")
            continue
        if series.a_poly(g, n).evaluate(b) != 0:
            methods.add("exact_evaluation")
        else:
            uncertified.append(n)
    if not uncertified:
        status = STATUS_UP_TO_NMAX
    elif methods:
        status = STATUS_PARTIAL
    else:
        status = STATUS_UNKNOWN
    return status, tuple(sorted(methods)), tuple(uncertified)


def scan_grid(
    g: ArithmeticFunction,
    kind: str,
    a_range: tuple[int, int],
    b_range: tuple[int, int],
    n_max: int,
    config: CertifyConfig = DEFAULT_CONFIG,
) -> GridResult:
    """Certify every lattice point of the rectangle, n = 1..n_max.

    Points with a = 0 are rational integers and fall outside the candidate
    types; they are handled by the absolute bound and exact evaluation
    (genuine integer roots show up in their uncertified list).  Points are
    emitted row-major (a ascending, then b) so output files are stable.
    """
    if n_max < 1:
        raise DomainError(f"scan_grid requires n_max >= 1, got {n_max}")
    make = _candidate_factory(kind)
    points = []
    for a in range(a_range[0], a_range[1] + 1):
        for b in range(b_range[0], b_range[1] + 1):
            if a == 0:
                status, methods, uncertified = _scan_rational_integer(g, b, n_max)
                points.append(
                    GridPoint(a=a, b=b, status=status, methods=methods, uncertified=uncertified)
                )
                continue
            c = make(a, b)
            cert = certify_all_n(g, c, config)
            if cert.proven:
                points.append(
                    GridPoint(
                        a=a,
                        b=b,
                        status=STATUS_ALL_N,
                        methods=(cert.method,),
                        uncertified=(),
                    )
                )
                continue
            methods = set()
            uncertified = []
            for n in range(1, n_max + 1):
                per_n = certify(g, c, n, config)
                if per_n.proven:
                    methods.add(per_n.method)
                else:
                    uncertified.append(n)
            if not uncertified:
                status = STATUS_UP_TO_NMAX
            elif methods:
                status = STATUS_PARTIAL
            else:
                status = STATUS_UNKNOWN
            points.append(
                GridPoint(
                    a=a,
                    b=b,
                    status=status,
                    methods=tuple(sorted(methods)),
                    uncertified=tuple(uncertified),
                )
            )
    return GridResult(
        g_name=g.name,
        kind=kind,
        a_range=tuple(a_range),
        b_range=tuple(b_range),
        n_max=n_max,
        config=config,
        points=tuple(points),
    )
