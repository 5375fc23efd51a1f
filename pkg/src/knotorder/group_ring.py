"""Relations among Casson-Gordon invariants as elements of Z[Z_q], q = (p-1)/2.

A vector ``x`` in (Z_p)^d gives the relation ``sum_{x_i != 0} t^{dlog x_i}``;
since characters ``chi_a`` and ``chi_{-a}`` give equal invariants and
``dlog(-1) = q``, exponents are read mod q.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import det_bareiss, factorize, is_prime, lcm
from .errors import MismatchedOrder, NotCoprimeToCyclotomic, NotPrime, ZeroScalar
from .homology_linking import smith_normal_form


@dataclass(frozen=True)
class DlogTable:
    p: int
    g: int
    table: dict

    @property
    def q(self):
        return (self.p - 1) // 2

    def __getitem__(self, a):
        return self.table[a % self.p]


def _is_primitive_root(g, p):
    return all(pow(g, (p - 1) // r, p) != 1 for r, _ in factorize(p - 1))


@lru_cache(maxsize=None)
def dlog_table(p):
    """Discrete logarithms to the smallest primitive root mod ``p``."""
    if p < 3 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    g = next(g for g in range(2, p) if _is_primitive_root(g, p))
    table = {}
    x = 1
    for k in range(p - 1):
        table[x] = k
        x = x * g % p
    return DlogTable(p, g, table)


@dataclass(frozen=True)
class GroupRingElement:
    """Element of Z[Z_q]; ``coeffs[j]`` is the coefficient of ``t^j``."""

    q: int
    coeffs: tuple

    def __post_init__(self):
        if self.q < 1 or len(self.coeffs) != self.q:
            raise ValueError(f"expected {self.q} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_dict(cls, q, terms):
        c = [0] * q
        for j, v in terms.items():
            c[j % q] += v
        return cls(q, tuple(c))

    @classmethod
    def constant(cls, q, n):
        return cls(q, (n,) + (0,) * (q - 1))

    @classmethod
    def monomial(cls, q, j):
        c = [0] * q
        c[j % q] = 1
        return cls(q, tuple(c))

    def is_zero(self):
        return not any(self.coeffs)

    def is_constant(self):
        return not any(self.coeffs[1:])

    def __mul__(self, other):
        return ring_multiply(self, other)

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if j == 0:
                body = str(abs(c))
            else:
                body = ("" if abs(c) == 1 else str(abs(c))) + mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out


def relation_from_vector(x, table):
    p, q = table.p, table.q
    c = [0] * q
    for xi in x:
        xi %= p
        if xi:
            c[table[xi] % q] += 1
    return GroupRingElement(q, tuple(c))


def ring_multiply(f, g):
    if f.q != g.q:
        raise MismatchedOrder(f"Z[Z_{f.q}] vs Z[Z_{g.q}]")
    q = f.q
    out = [0] * q
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                if b:
                    out[(i + j) % q] += a * b
    return GroupRingElement(q, tuple(out))


def scalar_action(x, a, table):
    """Relation of ``a * x``; always equals ``t^{dlog a} * relation(x)``."""
    p = table.p
    if a % p == 0:
        raise ZeroScalar("scalar must be a unit mod p")
    return relation_from_vector([a * xi % p for xi in x], table)


def _trimmed(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def resultant(f, g):
    """Resultant of two integer polynomials (ascending coefficient lists).

    Determinant of the Sylvester matrix, by fraction-free elimination.
    """
    f, g = _trimmed(f), _trimmed(g)
    if not f or not g:
        return 0
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    fd, gd = f[::-1], g[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return det_bareiss(rows)


def cyclotomic_resultant(f):
    """``Res(f, t^q - 1)`` with ``f`` read as a polynomial of degree < q."""
    return resultant(f.coeffs, [-1] + [0] * (f.q - 1) + [1])


def is_coprime_to_cyclotomic(f):
    return cyclotomic_resultant(f) != 0


def multiplication_matrix(f):
    """q x q integer matrix of ``h -> h * f``; column j is ``t^j f``."""
    q = f.q
    return [[f.coeffs[(i - j) % q] for j in range(q)] for i in range(q)]


def integer_in_ideal(f):
    """Smallest ``n > 0`` in ``(f) ∩ Z`` inside Z[Z_q], with ``h`` such that ``h f = n``.

    With ``U M W = D`` for the multiplication matrix ``M``, ``n e_0`` lies in
    the image of ``M`` iff ``d_i`` divides ``n (U e_0)_i`` for every ``i``.
    """
    if f.is_zero() or not is_coprime_to_cyclotomic(f):
        raise NotCoprimeToCyclotomic(f"{f} shares a root with t^{f.q} - 1")
    q = f.q
    M = multiplication_matrix(f)
    U, D, W = smith_normal_form(M)
    u0 = [U[i][0] for i in range(q)]
    n = 1
    for i in range(q):
        d = D[i][i]
        n = lcm(n, d // gcd(d, u0[i]))
    y = [n * u0[i] // D[i][i] for i in range(q)]
    h = tuple(sum(W[i][k] * y[k] for k in range(q)) for i in range(q))
    h = GroupRingElement(q, h)
    if ring_multiply(h, f) != GroupRingElement.constant(q, n):
        raise ArithmeticError("ideal certificate failed to verify")
    return n, h
