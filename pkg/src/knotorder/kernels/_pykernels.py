"""Pure-Python enumeration kernels; the reference the compiled core must match."""

from itertools import product


def isotropic_vectors(p, d):
    """Vectors ``v`` in (Z_p)^d with ``v . v = 0`` whose first nonzero entry is 1.

    Returned as tuples, grouped by position of the leading 1 (ascending),
    lexicographic within each group.
    """
    sq = [x * x % p for x in range(p)]
    out = []
    for lead in range(d):
        head = (0,) * lead + (1,)
        for tail in product(range(p), repeat=d - lead - 1):
            if (1 + sum(sq[x] for x in tail)) % p == 0:
                out.append(head + tail)
    return out


def search_rows(p, d, candidates):
    """Pick one row from each ``candidates[i]`` so all picks are pairwise orthogonal.

    Returns every solution as a tuple of indices into the candidate lists.
    Candidates are assumed isotropic already.
    """
    m = len(candidates)
    solutions = []
    chosen = []

    def extend(level):
        for k, row in enumerate(candidates[level]):
            if any(sum(a * b for a, b in zip(row, prev)) % p for _, prev in chosen):
                continue
            chosen.append((k, row))
            if level + 1 == m:
                solutions.append(tuple(i for i, _ in chosen))
            else:
                extend(level + 1)
            chosen.pop()

    if m:
        extend(0)
    return solutions
