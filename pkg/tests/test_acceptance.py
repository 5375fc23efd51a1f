"""Exit criteria. Each test is one criterion; the terminal summary prints one line each."""

import json
import random
import time

import mpmath
import pytest

from knotorder import (
    Character,
    GroupRingElement,
    SeifertMatrix,
    bordism_class,
    dlog_table,
    enumerate_metabolizers,
    family_independence_certificate,
    independent_family,
    integer_in_ideal,
    knot_determinant,
    primary_linking_form,
    quadratic_order4_check,
    relation_from_vector,
    ring_multiply,
    scalar_action,
    sigma_p_mod_p,
    smith_normal_form,
)
from knotorder import cli, formats
from knotorder.arith import det_bareiss, factorize
from knotorder.group_ring import cyclotomic_resultant
from knotorder.metabolizer import DiagonalLinkingSpace, certify, same_span
from knotorder.obstruction import INFINITE_ORDER

pytestmark = pytest.mark.acceptance


def root_product(f):
    """prod_j |f(w^j)| over q-th roots of unity, in 50-digit floating point.

    Double precision loses the 1e-6 absolute tolerance once the product passes ~1e8.
    """
    with mpmath.workdps(50):
        total = mpmath.mpf(1)
        for j in range(f.q):
            w = mpmath.expjpi(mpmath.mpf(2 * j) / f.q)
            total *= abs(mpmath.polyval(list(reversed(f.coeffs)), w))
        return total


def G(q, terms):
    return GroupRingElement.from_dict(q, terms)


def test_criterion_1_p7_certificate(capsys):
    """1. certify --prime 7 --copies 4: basis <(1,0,2,3),(0,1,-3,2)>, f = 3 + t^2, n = 28, < 10 s"""
    start = time.perf_counter()
    code = cli.main(["certify", "--prime", "7", "--copies", "4"])
    elapsed = time.perf_counter() - start
    assert code == cli.EXIT_OK
    certs = formats.load_certificates(capsys.readouterr().out)
    hits = [c for c in certs if same_span(c.basis, [(1, 0, 2, 3), (0, 1, -3, 2)], 7)]
    assert len(hits) == 1
    assert hits[0].relation == G(3, {0: 3, 2: 1})
    assert hits[0].n == 28
    assert elapsed < 10


def test_criterion_2_p19_worked_example():
    """2. p = 19: relation(2,3,15,16) = t + t^2 + 2t^4, relation(5x) = 1 + 2t^2 + t^8 = t^7 * first, < 1 s"""
    start = time.perf_counter()
    tab = dlog_table(19)
    f = relation_from_vector((2, 3, 15, 16), tab)
    g = relation_from_vector((10, 15, 18, 4), tab)
    assert f == G(9, {1: 1, 2: 1, 4: 2})
    assert g == G(9, {0: 1, 2: 2, 8: 1})
    assert tab[5] == 16 and 16 % 9 == 7
    assert g == ring_multiply(G(9, {7: 1}), f)
    assert time.perf_counter() - start < 1


def test_criterion_3_p3_case():
    """3. p = 3, d = 4: every certificate has constant f >= 2 in Z[Z_1] and n = f > 0; exhaustive, < 5 s"""
    start = time.perf_counter()
    report = certify(3, 4)
    elapsed = time.perf_counter() - start
    # exhaustive: matches the count of maximal isotropic subspaces, (1 + 1)(3 + 1)
    assert len(report.certificates) == 8
    for c in report.certificates:
        assert c.relation.q == 1
        assert c.relation.coeffs[0] >= 2
        assert c.n == c.relation.coeffs[0] > 0
        c.verify()
    assert elapsed < 5


def test_criterion_4_d_multiple_of_4():
    """4. no metabolizer for (p, d) in {(3,2), (7,2), (11,2), (3,6)}, < 30 s"""
    start = time.perf_counter()
    for p, d in [(3, 2), (7, 2), (11, 2), (3, 6)]:
        assert enumerate_metabolizers(DiagonalLinkingSpace(p, d)) == []
    assert time.perf_counter() - start < 30


def test_criterion_5_analyze_pipeline(tmp_path, capsys):
    """5. analyze [[-1,1],[0,5]]: Delta = 5t^2 - 11t + 5, determinant 21, InfiniteOrder(3)"""
    path = tmp_path / "k.txt"
    path.write_text("2\n-1 1\n0 5\n")
    assert cli.main(["analyze", "--seifert", str(path), "--format", "json"]) == cli.EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["alexander"] == "5t^2 - 11t + 5"
    assert doc["alexander_coeffs"] == [5, -11, 5]
    assert doc["determinant"] == 21
    assert (doc["verdict"], doc["witness_prime"]) == (INFINITE_ORDER, 3)


def test_criterion_6_knot_table(capsys):
    """6. bundled 11-knot table: all InfiniteOrder, witnesses {3: 7, 7: 3, 83: 1}, det(10_86) = 83"""
    assert cli.main(["table", "--format", "json"]) == cli.EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["knots"]) == 11
    assert all(k["verdict"] == INFINITE_ORDER for k in doc["knots"])
    assert doc["witness_counts"] == {"3": 7, "7": 3, "83": 1}
    assert doc["not_obstructed"] == 0
    assert next(k for k in doc["knots"] if k["name"] == "10_86")["determinant"] == 83


def test_criterion_7_family():
    """7. first 10 family members: integral twists, det = 4n + 1 = p p', pairwise coprime, order 4"""
    fam = independent_family(10)
    assert len(fam) == 10
    for m in fam:
        p1, p2 = m.primes
        assert p1 % 4 == 3 and p2 % 4 == 3
        assert (p1 * p2 - 1) % 4 == 0 and m.twist == (p1 * p2 - 1) // 4
        assert knot_determinant(m.seifert) == 4 * m.twist + 1 == p1 * p2
        assert quadratic_order4_check(m.twist)
    report = family_independence_certificate(fam)
    assert report.pairwise_coprime and report.ok


def test_criterion_8a_equivariance():
    """8a. relation(a x) = t^(dlog a mod q) relation(x), 1000 random (p, x, a), p in {7, 11, 19, 23}"""
    rng = random.Random(8001)
    for _ in range(1000):
        p = rng.choice([7, 11, 19, 23])
        tab = dlog_table(p)
        x = [rng.randrange(p) for _ in range(rng.randint(1, 8))]
        a = rng.randrange(1, p)
        shift = GroupRingElement.monomial(tab.q, tab[a] % tab.q)
        assert scalar_action(x, a, tab) == ring_multiply(shift, relation_from_vector(x, tab))


def test_criterion_8b_ideal_oracle():
    """8b. |Res(f, t^q - 1)| = rounded root product (pre-round tol 1e-6), n | Res, h f = n; 500 random f"""
    rng = random.Random(8002)
    checked = 0
    while checked < 500:
        q = rng.choice([1, 2, 3, 4, 5, 6, 7, 8, 9, 11])
        f = GroupRingElement(q, tuple(rng.randint(-3, 3) for _ in range(q)))
        prod = root_product(f)
        res = cyclotomic_resultant(f)
        assert abs(prod - mpmath.nint(prod)) < 1e-6
        assert int(mpmath.nint(prod)) == abs(res)
        if res:
            n, h = integer_in_ideal(f)
            assert n > 0 and res % n == 0
            assert ring_multiply(h, f) == GroupRingElement.constant(q, n)
        checked += 1


def test_criterion_8c_snf_contract():
    """8c. U A W = D, |det U| = |det W| = 1, divisibility chain; 500 random matrices up to 6x6 in [-20, 20]"""
    rng = random.Random(8003)
    for _ in range(500):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        A = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        U, D, W = smith_normal_form(A)
        UA = [[sum(U[i][k] * A[k][j] for k in range(m)) for j in range(n)] for i in range(m)]
        UAW = [[sum(UA[i][k] * W[k][j] for k in range(n)) for j in range(n)] for i in range(m)]
        assert UAW == D
        assert abs(det_bareiss(U)) == 1 and abs(det_bareiss(W)) == 1
        assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
        diag = [D[i][i] for i in range(min(m, n))]
        for a, b in zip(diag, diag[1:]):
            assert a >= 0 and ((b == 0) if a == 0 else (b % a == 0))


def test_criterion_8d_nonvanishing():
    """8d. bordism class and sigma_p nonzero for every nonzero character, family members with p || det"""
    for m in independent_family(10):
        det = knot_determinant(m.seifert)
        for p, e in factorize(det):
            if e != 1:
                continue
            form = primary_linking_form(m.seifert, p)
            for a in range(1, p):
                cls = bordism_class(form, Character(p, a))
                assert cls != 0
                assert sigma_p_mod_p(cls, p) != 0
