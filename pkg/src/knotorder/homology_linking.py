"""Branched-cover homology, its p-primary linking form, and the bordism class.

H_1 of the 2-fold branched cover is the cokernel of ``A = V + V^T``. The
linking form is ``beta(x, y) = -x^T A^{-1} y mod Z``; on a cyclic p-part
generated by ``x`` it is determined by the unit ``c`` with
``beta(x, x) = c / p``.
"""

from dataclasses import dataclass, field

from .arith import factorize, invert_rational, is_prime, legendre
from .errors import NoPrimaryPart, NonCyclicPrimaryPart, NotPrime, PrimeMismatch


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Return ``(U, D, W)`` with ``U A W = D``.

    ``U`` and ``W`` are unimodular, ``D`` is diagonal with nonnegative entries
    ``d_1 | d_2 | ...`` (zeros last). Works on any rectangular integer matrix,
    given as a sequence of rows.
    """
    a = [list(map(int, r)) for r in A]
    m = len(a)
    n = len(a[0]) if m else 0
    U = _identity(m)
    W = _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (a, W):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row[dst] += k * row[src]
        for M in (a, U):
            rd, rs = M[dst], M[src]
            for j in range(len(rd)):
                rd[j] += k * rs[j]

    def add_col(dst, src, k):
        for M in (a, W):
            for r in M:
                r[dst] += k * r[src]

    for t in range(min(m, n)):
        while True:
            piv = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and a[t][t] < 0:
            for r in (a[t], U[t]):
                for j in range(len(r)):
                    r[j] = -r[j]
    return U, a, W


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group in invariant-factor form ``Z_{d1} + ... + Z_{dr}``."""

    invariant_factors: tuple

    def __post_init__(self):
        f = self.invariant_factors
        if any(d < 2 for d in f) or any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"not an invariant-factor chain: {f}")

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def primary_rank(self, p):
        return sum(1 for d in self.invariant_factors if d % p == 0)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z_{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class PrimaryLinkingForm:
    """Linking form on a cyclic p-primary summand.

    ``generator`` is an integer vector whose class in coker(V + V^T) has order
    ``p``; it is the generator picked out by the Smith form.
    """

    p: int
    c: int
    rank: int = 1
    generator: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.c % self.p == 0:
            raise ValueError("self-linking must be a unit mod p")

    @property
    def square_class(self):
        """Legendre symbol of ``c``; this is independent of the generator."""
        return legendre(self.c, self.p)


@dataclass(frozen=True)
class Character:
    """The Z_p character given by linking with ``a`` times the fixed generator."""

    p: int
    a: int

    def __post_init__(self):
        if not 0 <= self.a < self.p:
            raise ValueError(f"character value {self.a} not reduced mod {self.p}")


def branched_cover_homology(V):
    _, D, _ = smith_normal_form(V.symmetrized())
    diag = [abs(D[i][i]) for i in range(len(D))]
    return FiniteAbelianGroup(tuple(d for d in diag if d != 1))


def primary_linking_form(V, p):
    if not is_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    A = V.symmetrized()
    n = len(A)
    det = 1
    U, D, _ = smith_normal_form(A)
    diag = [D[i][i] for i in range(n)]
    for d in diag:
        det *= d
    exp = dict(factorize(det)).get(p, 0) if det else 0
    if exp == 0:
        raise NoPrimaryPart(f"{p} does not divide the determinant {det}")
    if exp > 1:
        raise NonCyclicPrimaryPart(f"{p}^2 divides the determinant {det}")
    i = next(k for k, d in enumerate(diag) if d % p == 0)
    Uinv = invert_rational(U)
    col = [Uinv[r][i] for r in range(n)]
    if any(x.denominator != 1 for x in col):
        raise ArithmeticError("Smith transform is not unimodular")
    scale = diag[i] // p
    x = [int(v) * scale for v in col]
    Ainv = invert_rational(A)
    if any(det % e.denominator for row in Ainv for e in row):
        raise ArithmeticError("inverse denominators do not divide the group order")
    self_link = -sum(x[r] * Ainv[r][s] * x[s] for r in range(n) for s in range(n))
    scaled = self_link * p
    if scaled.denominator != 1:
        raise ArithmeticError("self-linking of an order-p element is not in (1/p)Z")
    return PrimaryLinkingForm(p=p, c=int(scaled) % p, generator=tuple(x))


def linking_pairing(V, x, y):
    """``-x^T (V + V^T)^{-1} y`` reduced into [0, 1), as a Fraction."""
    A = V.symmetrized()
    Ainv = invert_rational(A)
    n = len(A)
    val = -sum(x[r] * Ainv[r][s] * y[s] for r in range(n) for s in range(n))
    return val - (val.numerator // val.denominator)


def bordism_class(form, chi):
    """Class of ``(M_K, chi)`` in Z_p: the self-linking ``a^2 c`` of ``a x``."""
    if form.p != chi.p:
        raise PrimeMismatch(f"form is over Z_{form.p}, character over Z_{chi.p}")
    return chi.a * chi.a * form.c % form.p


def sigma_p_mod_p(cls, p):
    """``sigma_p`` of a bordism class, normalized by ``sigma_p(L(p,1), chi_1) = 2``."""
    return 2 * cls % p
