"""Seifert matrices and the abelian invariants read directly off them.

Everything here is exact integer arithmetic. The Alexander polynomial is taken
as ``det(V - t V^T)`` and normalized so that the lowest degree is 0 and the
leading coefficient is positive.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import det_bareiss
from .errors import InvalidTwistParameter, MalformedSeifertMatrix


@dataclass(frozen=True)
class IntLaurentPolynomial:
    """Integer polynomial modulo units ``±t^k``, stored in normalized form.

    ``coeffs[i]`` is the coefficient of ``t^i``. Construct through
    :meth:`normalized` unless the list is already normal.
    """

    coeffs: tuple

    @classmethod
    def normalized(cls, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        i = 0
        while i < len(c) and c[i] == 0:
            i += 1
        c = c[i:]
        if not c:
            return cls((0,))
        if c[-1] < 0:
            c = [-x for x in c]
        return cls(tuple(c))

    def normalize(self):
        return IntLaurentPolynomial.normalized(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __mul__(self, other):
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntLaurentPolynomial.normalized(out)

    def is_symmetric(self):
        """Palindromic up to an overall sign."""
        c = self.coeffs
        r = c[::-1]
        return c == r or c == tuple(-x for x in r)

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise MalformedSeifertMatrix("Seifert matrix must be square")
        if n % 2:
            raise MalformedSeifertMatrix(f"Seifert matrix has odd dimension {n}")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        if det_bareiss(skew) != 1:
            raise MalformedSeifertMatrix("det(V - V^T) != 1")

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(r) for r in rows))

    @property
    def dim(self):
        return len(self.entries)

    @property
    def genus(self):
        return self.dim // 2

    def transpose(self):
        n = self.dim
        return tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n))

    def symmetrized(self):
        """``V + V^T``, the presentation matrix of the branched-cover homology."""
        n = self.dim
        v = self.entries
        return tuple(tuple(v[i][j] + v[j][i] for j in range(n)) for i in range(n))


UNKNOT = SeifertMatrix(())


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossings: int
    alexander: IntLaurentPolynomial
    determinant: int

    def consistency_problems(self):
        """Human-readable reasons this record is invalid; empty when it is fine."""
        problems = []
        if self.crossings < 1:
            problems.append(f"crossing number {self.crossings} is not positive")
        if self.determinant % 2 == 0:
            problems.append(f"determinant {self.determinant} is even")
        if abs(self.alexander(-1)) != self.determinant:
            problems.append(
                f"|Delta(-1)| = {abs(self.alexander(-1))} != determinant {self.determinant}"
            )
        if abs(self.alexander(1)) != 1:
            problems.append(f"Delta(1) = {self.alexander(1)}, expected +-1")
        return problems


def _det_at(v, t):
    n = len(v)
    return det_bareiss([[v[i][j] - t * v[j][i] for j in range(n)] for i in range(n)])


def alexander_polynomial(V):
    """Normalized ``det(V - t V^T)``.

    The determinant is sampled at ``t = 0..2g`` and recovered by Newton
    interpolation over the rationals; every coefficient must come out integral.
    """
    n = V.dim
    if n == 0:
        return IntLaurentPolynomial((1,))
    xs = list(range(n + 1))
    ys = [Fraction(_det_at(V.entries, x)) for x in xs]
    # divided differences, in place
    for k in range(1, n + 1):
        for i in range(n, k - 1, -1):
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k])
    coeffs = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]
    for k in range(n + 1):
        for i, b in enumerate(basis):
            coeffs[i] += ys[k] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[k] * b
        basis = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("non-integral Alexander polynomial coefficient")
    return IntLaurentPolynomial.normalized(int(c) for c in coeffs)


def knot_determinant(V):
    """``|det(V + V^T)|``, the order of the branched-cover homology."""
    return abs(det_bareiss(V.symmetrized()))


def twisted_double_seifert(n):
    """Seifert matrix ``[[-1, 1], [0, n]]`` of the twisted double ``K_n``.

    Its Alexander polynomial is ``n t^2 - (1 + 2n) t + n`` and its determinant
    is ``4n + 1``. The handedness of the twist is not visible to either.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidTwistParameter(f"twist parameter must be a positive integer, got {n!r}")
    return SeifertMatrix(((-1, 1), (0, n)))


def connected_sum(V1, V2):
    a, b = V1.dim, V2.dim
    rows = [tuple(r) + (0,) * b for r in V1.entries]
    rows += [(0,) * a + tuple(r) for r in V2.entries]
    return SeifertMatrix(tuple(rows))
