"""Metabolizers of the diagonal linking form on (Z_p)^d and their certificates.

The engine works with the standard dot product: the self-linking unit ``c``
scales every pairing uniformly, so it never changes which subgroups are
metabolizers. ``c`` is carried along on certificates for the record.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import kernels
from .arith import is_prime
from .errors import (
    BudgetExceeded,
    DependentBasis,
    InvalidCertificate,
    NotNormalized,
    NotPrime,
    PrimeNotThreeMod4,
)
from .group_ring import (
    GroupRingElement,
    dlog_table,
    integer_in_ideal,
    is_coprime_to_cyclotomic,
    relation_from_vector,
    ring_multiply,
)

DEFAULT_BUDGET = 300_000

CERTIFIED = "certified"
NO_METABOLIZER = "no_metabolizer"


@dataclass(frozen=True)
class DiagonalLinkingSpace:
    """``d`` copies of a cyclic Z_p linking form with generator self-linking ``c/p``."""

    p: int
    d: int
    c: int = 1

    def pairing(self, x, y):
        val = Fraction(self.c * sum(a * b for a, b in zip(x, y)), self.p)
        return val - (val.numerator // val.denominator)


@dataclass(frozen=True)
class Metabolizer:
    p: int
    basis: tuple

    @property
    def order(self):
        return self.p ** len(self.basis)


@dataclass(frozen=True)
class MetabolizerCertificate:
    p: int
    d: int
    g: int
    basis: tuple
    permutation: tuple
    summed_vector: tuple
    relation: GroupRingElement
    cofactor: GroupRingElement
    n: int
    c: int = 1

    def verify(self):
        """Recheck every claim from scratch; raises InvalidCertificate on failure."""
        space = DiagonalLinkingSpace(self.p, self.d, self.c)
        table = dlog_table(self.p)
        checks = [
            (self.n > 0, "n must be positive"),
            (self.g == table.g, "generator is not the smallest primitive root"),
            (sorted(self.permutation) == list(range(self.d)), "permutation is not a permutation"),
            (len(self.basis) * 2 == self.d, "basis size is not d/2"),
            (all(len(r) == self.d for r in self.basis), "basis vectors have the wrong length"),
        ]
        for ok, why in checks:
            if not ok:
                raise InvalidCertificate(why)
        if rref_mod_p(self.basis, self.p)[1] != list(range(len(self.basis))):
            raise InvalidCertificate("basis is not pivots-first echelon form")
        if not is_self_annihilating(space, self.basis):
            raise InvalidCertificate("basis is not self-annihilating")
        if summed_vector(self.basis, self.p) != self.summed_vector:
            raise InvalidCertificate("summed vector does not match the basis")
        if relation_from_vector(self.summed_vector, table) != self.relation:
            raise InvalidCertificate("relation does not match the summed vector")
        prod = ring_multiply(self.cofactor, self.relation)
        if prod != GroupRingElement.constant(self.relation.q, self.n):
            raise InvalidCertificate("cofactor * relation != n")
        return True


@dataclass(frozen=True)
class CertificationReport:
    p: int
    d: int
    status: str
    certificates: tuple = field(default=())


def rref_mod_p(vectors, p):
    """Reduced row echelon form over Z_p; returns ``(rows, pivot_columns)``."""
    rows = [[x % p for x in v] for v in vectors]
    if not rows:
        return [], []
    d = len(rows[0])
    pivots = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def same_span(a, b, p):
    return rref_mod_p(a, p)[0] == rref_mod_p(b, p)[0]


def is_self_annihilating(space, basis):
    p = space.p
    return all(
        sum(x * y for x, y in zip(u, v)) % p == 0
        for i, u in enumerate(basis)
        for v in basis[i:]
    )


def echelon_normalize(basis, p):
    """Row-reduce and move the pivot columns to the front.

    Returns ``(rows, permutation)`` where new coordinate ``j`` is old
    coordinate ``permutation[j]``. The pivot set is the one Gauss-Jordan finds,
    which is the lexicographically smallest available.
    """
    rows, pivots = rref_mod_p(basis, p)
    if len(rows) < len(basis):
        raise DependentBasis(f"basis has rank {len(rows)} < {len(basis)}")
    if not rows:
        return (), ()
    d = len(rows[0])
    perm = tuple(pivots) + tuple(j for j in range(d) if j not in pivots)
    return tuple(tuple(r[j] for j in perm) for r in rows), perm


def summed_vector(basis, p):
    return tuple(sum(col) % p for col in zip(*basis))


def sum_basis_relation(space, basis, table):
    """Relation of the sum of a normalized basis, ``(1, ..., 1, a_1, ..., a_m)``."""
    m = len(basis)
    for i, row in enumerate(basis):
        if any(row[j] != (1 if i == j else 0) for j in range(m)):
            raise NotNormalized("basis is not in pivots-first echelon form")
    return relation_from_vector(summed_vector(basis, space.p), table)


def _search_pivot_set(args):
    p, d, pivots, groups, backend = args
    cands = []
    for i, col in enumerate(pivots):
        need = sum(1 << c for c in pivots[i + 1:])
        rows = [
            v
            for (lead, zeros), vecs in groups
            if lead == col and zeros & need == need
            for v in vecs
        ]
        if not rows:
            return []
        cands.append(rows)
    return [
        tuple(cands[i][k] for i, k in enumerate(sol))
        for sol in kernels.search_rows(p, d, cands, backend=backend)
    ]


def enumerate_metabolizers(space, budget=DEFAULT_BUDGET, workers=1, backend=None):
    """Every metabolizer of ``space``, each once, as a canonical RREF basis.

    Rows are drawn from the isotropic vectors of (Z_p)^d; the search fixes a
    pivot set, restricts each row to vectors with the matching echelon shape,
    and keeps only pairwise-orthogonal choices. Since RREF is unique, no
    subgroup is produced twice.
    """
    p, d = space.p, space.d
    if p ** d > budget:
        raise BudgetExceeded(f"{p}^{d} = {p ** d} exceeds the enumeration budget {budget}")
    if d % 2:
        return []
    m = d // 2
    # group by (leading index, bitmask of zero coordinates) so each pivot set
    # can pick out its echelon-shaped rows without rescanning every vector
    buckets = {}
    for v in kernels.isotropic_vectors(p, d, backend=backend):
        lead = next(j for j, x in enumerate(v) if x)
        zeros = sum(1 << j for j, x in enumerate(v) if not x)
        buckets.setdefault((lead, zeros), []).append(v)
    groups = sorted(buckets.items())
    jobs = [(p, d, piv, groups, backend) for piv in combinations(range(d), m)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_pivot_set, jobs))
    else:
        results = [_search_pivot_set(job) for job in jobs]
    found = sorted(basis for chunk in results for basis in chunk)
    return [Metabolizer(p, basis) for basis in found]


def certificate_for(space, metabolizer):
    p = space.p
    table = dlog_table(p)
    basis, perm = echelon_normalize(metabolizer.basis, p)
    f = sum_basis_relation(space, basis, table)
    if not is_coprime_to_cyclotomic(f):
        raise ArithmeticError(f"relation {f} is not coprime to t^{f.q} - 1")
    n, h = integer_in_ideal(f)
    return MetabolizerCertificate(
        p=p,
        d=space.d,
        g=table.g,
        basis=basis,
        permutation=perm,
        summed_vector=summed_vector(basis, p),
        relation=f,
        cofactor=h,
        n=n,
        c=space.c,
    )


def certify(p, d, c=1, budget=DEFAULT_BUDGET, workers=1, backend=None):
    """Certificates ``n tau(K, chi_1) = 0`` for every metabolizer of ``d`` copies.

    When no metabolizer exists the report status is ``NO_METABOLIZER``; for
    ``p = 3 mod 4`` that happens exactly when ``d`` is not a multiple of 4.
    """
    if not is_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    if p % 4 != 3:
        raise PrimeNotThreeMod4(f"{p} is not congruent to 3 mod 4")
    space = DiagonalLinkingSpace(p, d, c % p)
    mets = enumerate_metabolizers(space, budget=budget, workers=workers, backend=backend)
    if not mets:
        return CertificationReport(p, d, NO_METABOLIZER)
    if d % 4:
        raise ArithmeticError(f"found a metabolizer for d = {d}, not a multiple of 4")
    certs = tuple(certificate_for(space, met) for met in mets)
    return CertificationReport(p, d, CERTIFIED, certs)
