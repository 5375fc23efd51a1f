"""Exact integer helpers shared across modules."""

from fractions import Fraction
from math import gcd

# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n):
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n):
    """Prime factorization of ``n >= 1`` as a sorted list of ``(prime, exponent)``.

    Trial division, stopping early once the remaining cofactor passes the
    primality gate.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while n > 1:
        if is_prime(n):
            out.append((n, 1))
            break
        if p * p > n:
            out.append((n, 1))
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    merged = {}
    for q, e in out:
        merged[q] = merged.get(q, 0) + e
    return sorted(merged.items())


def legendre(a, p):
    """Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def primes_3_mod_4():
    """Yield 3, 7, 11, 19, 23, ... indefinitely."""
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 4


def det_bareiss(rows):
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_rational(rows, rhs):
    """Solve a nonsingular square system over Q; returns a list of Fractions."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


def invert_rational(rows):
    n = len(rows)
    cols = [solve_rational(rows, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def lcm(a, b):
    return a // gcd(a, b) * b if a and b else 0


__all__ = [
    "det_bareiss",
    "factorize",
    "invert_rational",
    "is_prime",
    "lcm",
    "legendre",
    "primes_3_mod_4",
    "solve_rational",
]
