from itertools import combinations, permutations, product

import pytest

from knotorder import (
    BudgetExceeded,
    DependentBasis,
    DiagonalLinkingSpace,
    Metabolizer,
    NotNormalized,
    PrimeNotThreeMod4,
    certify,
    dlog_table,
    echelon_normalize,
    enumerate_metabolizers,
    is_coprime_to_cyclotomic,
    is_self_annihilating,
    sum_basis_relation,
)
from knotorder.group_ring import GroupRingElement, ring_multiply
from knotorder.metabolizer import NO_METABOLIZER, CERTIFIED, certificate_for, rref_mod_p, same_span


def brute_metabolizers(p, d):
    """All totally isotropic (d/2)-dim subspaces, by spanning every tuple of isotropic vectors."""
    m = d // 2
    iso = [v for v in product(range(p), repeat=d) if any(v) and sum(x * x for x in v) % p == 0]
    found = set()
    for combo in combinations(iso, m):
        if all(sum(a * b for a, b in zip(u, v)) % p == 0 for u, v in combinations(combo, 2)):
            rows, _ = rref_mod_p(combo, p)
            if len(rows) == m:
                found.add(tuple(rows))
    return sorted(found)


def maximal_isotropic_count(p, m):
    out = 1
    for i in range(m):
        out *= p ** i + 1
    return out


def test_self_annihilating_examples():
    assert is_self_annihilating(DiagonalLinkingSpace(7, 4), [(1, 0, 2, 3), (0, 1, -3, 2)])
    assert is_self_annihilating(DiagonalLinkingSpace(3, 4), [(1, 1, 1, 0), (1, -1, 0, 1)])
    assert not is_self_annihilating(DiagonalLinkingSpace(7, 4), [(1, 0, 0, 0)])


@pytest.mark.parametrize("p,d", [(3, 2), (7, 2), (3, 4), (7, 4), (5, 4), (5, 2)])
def test_enumeration_matches_brute_force(backend, p, d):
    got = [m.basis for m in enumerate_metabolizers(DiagonalLinkingSpace(p, d), backend=backend)]
    assert got == brute_metabolizers(p, d)


def test_enumeration_examples(backend):
    assert enumerate_metabolizers(DiagonalLinkingSpace(7, 2), backend=backend) == []
    mets3 = enumerate_metabolizers(DiagonalLinkingSpace(3, 4), backend=backend)
    assert any(same_span(m.basis, [(1, 1, 1, 0), (1, -1, 0, 1)], 3) for m in mets3)
    mets7 = enumerate_metabolizers(DiagonalLinkingSpace(7, 4), backend=backend)
    assert any(same_span(m.basis, [(1, 0, 2, 3), (0, 1, -3, 2)], 7) for m in mets7)


@pytest.mark.parametrize("p,d", [(3, 4), (7, 4), (11, 4), (19, 4), (3, 8)])
def test_enumeration_counts(backend, p, d):
    mets = enumerate_metabolizers(DiagonalLinkingSpace(p, d), backend=backend)
    assert len(mets) == maximal_isotropic_count(p, d // 2)
    assert len(set(m.basis for m in mets)) == len(mets)
    space = DiagonalLinkingSpace(p, d)
    for m in mets:
        assert is_self_annihilating(space, m.basis)
        assert len(rref_mod_p(m.basis, p)[0]) == d // 2
        assert m.order ** 2 == p ** d


@pytest.mark.parametrize("p,d", [(3, 1), (3, 2), (3, 3), (3, 5), (3, 6), (7, 1), (7, 2), (7, 3), (11, 2), (7, 5), (7, 6)])
def test_no_metabolizer_unless_multiple_of_4(p, d):
    assert enumerate_metabolizers(DiagonalLinkingSpace(p, d)) == []


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_metabolizers(DiagonalLinkingSpace(7, 8))
    with pytest.raises(BudgetExceeded):
        certify(3, 4, budget=80)


def test_workers_are_deterministic():
    space = DiagonalLinkingSpace(3, 8)
    assert enumerate_metabolizers(space, workers=3) == enumerate_metabolizers(space)


def test_echelon_normalize_examples():
    b = ((1, 0, 2, 3), (0, 1, 4, 2))
    assert echelon_normalize([(1, 0, 2, 3), (0, 1, -3, 2)], 7) == (b, (0, 1, 2, 3))
    assert echelon_normalize([(1, 1, 1, 0), (1, -1, 0, 1)], 3) == (((1, 0, 2, 2), (0, 1, 2, 1)), (0, 1, 2, 3))
    assert echelon_normalize(b, 7) == (b, (0, 1, 2, 3))
    # pivots in columns 1 and 3 move to the front
    rows, perm = echelon_normalize([(0, 1, 2, 0), (0, 0, 0, 1)], 5)
    assert perm == (1, 3, 0, 2) and rows == ((1, 0, 0, 2), (0, 1, 0, 0))
    with pytest.raises(DependentBasis):
        echelon_normalize([(1, 2, 3, 4), (2, 4, 6, 8)], 7)


def test_sum_basis_relation_examples():
    f = sum_basis_relation(DiagonalLinkingSpace(7, 4), ((1, 0, 2, 3), (0, 1, 4, 2)), dlog_table(7))
    assert f == GroupRingElement.from_dict(3, {0: 3, 2: 1})
    f = sum_basis_relation(DiagonalLinkingSpace(3, 4), ((1, 0, 2, 2), (0, 1, 2, 1)), dlog_table(3))
    assert f == GroupRingElement.constant(1, 3)
    f = sum_basis_relation(DiagonalLinkingSpace(7, 4), ((1, 0, 0, 0), (0, 1, 0, 0)), dlog_table(7))
    assert f == GroupRingElement.constant(3, 2)
    with pytest.raises(NotNormalized):
        sum_basis_relation(DiagonalLinkingSpace(7, 4), ((1, 1, 2, 3), (0, 1, 4, 2)), dlog_table(7))


def test_certify_p7():
    report = certify(7, 4)
    assert report.status == CERTIFIED
    hits = [c for c in report.certificates if same_span(c.basis, [(1, 0, 2, 3), (0, 1, -3, 2)], 7)]
    assert hits and hits[0].n == 28
    assert hits[0].relation == GroupRingElement.from_dict(3, {0: 3, 2: 1})


def test_certify_p3():
    report = certify(3, 4)
    assert report.certificates
    for c in report.certificates:
        assert c.relation.q == 1 and c.relation.coeffs[0] >= 2
        assert c.n == c.relation.coeffs[0]
    assert certify(3, 2).status == NO_METABOLIZER
    assert certify(3, 2).certificates == ()


def test_certify_rejects_1_mod_4():
    with pytest.raises(PrimeNotThreeMod4):
        certify(5, 4)


@pytest.mark.parametrize("p,d", [(3, 4), (7, 4), (11, 4), (19, 4), (3, 8)])
def test_certificates_verify(p, d):
    for c in certify(p, d).certificates:
        assert c.verify()
        assert c.n > 0
        assert is_coprime_to_cyclotomic(c.relation)
        assert ring_multiply(c.cofactor, c.relation) == GroupRingElement.constant(c.relation.q, c.n)


@pytest.mark.parametrize("p", [3, 7, 11])
def test_coordinate_permutations(p):
    space = DiagonalLinkingSpace(p, 4)
    mets = enumerate_metabolizers(space)
    all_n = {certificate_for(space, m).n for m in mets}
    for m in mets:
        cert = certificate_for(space, m)
        for perm in permutations(range(4)):
            moved = tuple(tuple(v[j] for j in perm) for v in m.basis)
            assert is_self_annihilating(space, moved)
            n = certificate_for(space, Metabolizer(p, moved)).n
            assert n > 0 and n in all_n
        # reorderings inside the pivot block and inside the free block keep n
        for a in permutations(range(2)):
            for b in permutations(range(2, 4)):
                perm = a + b
                moved = tuple(tuple(v[j] for j in perm) for v in cert.basis)
                assert certificate_for(space, Metabolizer(p, moved)).n == cert.n
    if p in (3, 7):
        assert len(all_n) == 1
