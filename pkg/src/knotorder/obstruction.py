"""Concordance-order verdicts built from the abelian invariants of a knot."""

from dataclasses import dataclass, field
from itertools import combinations, islice
from math import gcd

from .arith import factorize, primes_3_mod_4
from .errors import EvenDeterminant, MalformedFamily, NotInfiniteOrderVerdict
from .homology_linking import branched_cover_homology, primary_linking_form
from .knot_algebra import (
    KnotRecord,
    SeifertMatrix,
    alexander_polynomial,
    knot_determinant,
    twisted_double_seifert,
)

INFINITE_ORDER = "InfiniteOrder"
ORDER4_CANDIDATE = "Order4AlgebraicCandidate"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    kind: str
    factorization: tuple
    prime: int = None
    certificates: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.kind == INFINITE_ORDER:
            exps = dict(self.factorization)
            if self.prime % 4 != 3 or exps.get(self.prime) != 1:
                raise ValueError(f"{self.prime} does not qualify as an infinite-order witness")

    @property
    def determinant(self):
        out = 1
        for p, e in self.factorization:
            out *= p ** e
        return out

    def __str__(self):
        return f"{self.kind}({self.prime})" if self.kind == INFINITE_ORDER else self.kind


def witness_primes(D):
    """Primes ``p = 3 mod 4`` dividing ``D`` exactly once, ascending."""
    return [p for p, e in factorize(D) if e == 1 and p % 4 == 3]


def infinite_order_verdict(D):
    if D < 1:
        raise ValueError(f"determinant must be positive, got {D}")
    if D % 2 == 0:
        raise EvenDeterminant(f"knot determinants are odd, got {D}")
    fact = tuple(factorize(D)) if D > 1 else ()
    primes = witness_primes(D) if D > 1 else []
    if primes:
        return Verdict(INFINITE_ORDER, fact, primes[0])
    return Verdict(INCONCLUSIVE, fact)


def quadratic_order4_check(a):
    """Order-4 criterion for ``a t^2 - (1 + 2a) t + a``: some ``p = 3 mod 4`` divides ``4a + 1`` to an odd power."""
    if a < 1:
        return False
    return any(p % 4 == 3 and e % 2 == 1 for p, e in factorize(4 * a + 1))


def quadratic_parameter(alexander):
    """``a`` if the polynomial is ``a t^2 - (1 + 2a) t + a`` with ``a > 0``, else None."""
    c = alexander.coeffs
    if len(c) == 3 and c[0] == c[2] and c[0] > 0 and c[1] == -(1 + 2 * c[0]):
        return c[0]
    return None


def connected_sum_obstruction(verdict, detJ):
    """True when ``dK # J`` is non-slice for every ``d != 0``."""
    if verdict.kind != INFINITE_ORDER:
        raise NotInfiniteOrderVerdict(f"need an {INFINITE_ORDER} verdict, got {verdict.kind}")
    return gcd(verdict.prime, detJ) == 1


@dataclass(frozen=True)
class FamilyMember:
    index: int
    primes: tuple
    twist: int
    seifert: SeifertMatrix

    @property
    def determinant(self):
        return self.primes[0] * self.primes[1]


def _member(index, p1, p2):
    prod = p1 * p2
    if prod % 4 != 1:
        raise MalformedFamily(f"({prod} - 1)/4 is not an integer")
    n = (prod - 1) // 4
    return FamilyMember(index, (p1, p2), n, twisted_double_seifert(n))


def independent_family(count):
    """Twisted doubles ``K_{n_i}`` with ``4 n_i + 1 = p_{2i-1} p_{2i}``."""
    if count < 1:
        raise ValueError("count must be at least 1")
    primes = list(islice(primes_3_mod_4(), 2 * count))
    return [_member(i + 1, primes[2 * i], primes[2 * i + 1]) for i in range(count)]


@dataclass(frozen=True)
class MemberCheck:
    index: int
    primes_3_mod_4: bool
    primes_exact: bool
    order4: bool
    witness: int = None


@dataclass(frozen=True)
class FamilyReport:
    members: tuple
    pairwise_coprime: bool

    @property
    def ok(self):
        return self.pairwise_coprime and all(
            m.primes_3_mod_4 and m.primes_exact and m.order4 for m in self.members
        )


def family_independence_certificate(members):
    """Determinant-level checks that make the family linearly independent.

    Any nontrivial combination is obstructed by the first prime of a member
    with nonzero coefficient, because every other determinant is prime to it.
    """
    checks = []
    dets = []
    for m in members:
        if 4 * m.twist + 1 != m.determinant:
            raise MalformedFamily(f"member {m.index}: 4n+1 != {m.determinant}")
        det = knot_determinant(m.seifert)
        if det != m.determinant:
            raise MalformedFamily(f"member {m.index}: Seifert determinant {det} != {m.determinant}")
        exps = dict(factorize(det))
        v = infinite_order_verdict(det)
        checks.append(MemberCheck(
            index=m.index,
            primes_3_mod_4=all(p % 4 == 3 for p in m.primes),
            primes_exact=m.primes[0] != m.primes[1] and all(exps.get(p) == 1 for p in m.primes),
            order4=quadratic_order4_check(m.twist),
            witness=v.prime,
        ))
        dets.append(det)
    coprime = all(gcd(a, b) == 1 for a, b in combinations(dets, 2))
    return FamilyReport(tuple(checks), coprime)


@dataclass(frozen=True)
class KnotAnalysis:
    name: str
    alexander: object
    determinant: int
    homology: object
    linking: tuple
    quadratic_order4: bool
    verdict: Verdict


def analyze(knot, name=None):
    """Full invariant report for a Seifert matrix or a table record.

    Records carry no Seifert form, so their homology and linking data are None.
    """
    if isinstance(knot, KnotRecord):
        delta, det, hom, links = knot.alexander, knot.determinant, None, None
        name = name or knot.name
    else:
        delta = alexander_polynomial(knot)
        det = knot_determinant(knot)
        hom = branched_cover_homology(knot)
        links = []
        for p, e in (factorize(det) if det > 1 else []):
            if e == 1:
                links.append(primary_linking_form(knot, p))
        links = tuple(links)
    a = quadratic_parameter(delta)
    quad = a is not None and quadratic_order4_check(a)
    verdict = infinite_order_verdict(det)
    if verdict.kind == INCONCLUSIVE and quad:
        verdict = Verdict(ORDER4_CANDIDATE, verdict.factorization)
    return KnotAnalysis(name or "", delta, det, hom, links, quad, verdict)


__all__ = [
    "FamilyMember",
    "FamilyReport",
    "INCONCLUSIVE",
    "INFINITE_ORDER",
    "KnotAnalysis",
    "ORDER4_CANDIDATE",
    "Verdict",
    "analyze",
    "connected_sum_obstruction",
    "family_independence_certificate",
    "independent_family",
    "infinite_order_verdict",
    "quadratic_order4_check",
    "quadratic_parameter",
    "witness_primes",
]
