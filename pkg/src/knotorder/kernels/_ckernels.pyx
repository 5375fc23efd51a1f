# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels. Same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


def isotropic_vectors(int p, int d):
    cdef int *digits = <int *> malloc(d * sizeof(int))
    cdef int lead, k, norm, width
    cdef list out = []
    if digits == NULL:
        raise MemoryError()
    try:
        for lead in range(d):
            width = d - lead - 1
            for k in range(width):
                digits[k] = 0
            while True:
                norm = 1
                for k in range(width):
                    norm += digits[k] * digits[k]
                if norm % p == 0:
                    out.append((0,) * lead + (1,) + tuple([digits[k] for k in range(width)]))
                # odometer, last coordinate fastest
                k = width - 1
                while k >= 0:
                    digits[k] += 1
                    if digits[k] < p:
                        break
                    digits[k] = 0
                    k -= 1
                if k < 0:
                    break
    finally:
        free(digits)
    return out


def search_rows(int p, int d, list candidates):
    cdef int m = len(candidates)
    if m == 0:
        return []
    cdef int total = 0
    cdef int i, j, k, level, s
    cdef long dot
    for cands in candidates:
        total += len(cands)
    cdef int *flat = <int *> malloc((total * d + 1) * sizeof(int))
    cdef int *start = <int *> malloc((m + 1) * sizeof(int))
    cdef int *idx = <int *> malloc(m * sizeof(int))
    cdef int *row
    cdef int *prev
    cdef list solutions = []
    if flat == NULL or start == NULL or idx == NULL:
        free(flat); free(start); free(idx)
        raise MemoryError()
    try:
        s = 0
        for i in range(m):
            start[i] = s
            for vec in candidates[i]:
                for j in range(d):
                    flat[s * d + j] = vec[j]
                s += 1
        start[m] = s
        level = 0
        idx[0] = start[0] - 1
        while level >= 0:
            idx[level] += 1
            if idx[level] >= start[level + 1]:
                level -= 1
                continue
            row = flat + idx[level] * d
            for k in range(level):
                prev = flat + idx[k] * d
                dot = 0
                for j in range(d):
                    dot += row[j] * prev[j]
                if dot % p != 0:
                    break
            else:
                if level == m - 1:
                    solutions.append(tuple([idx[k] - start[k] for k in range(m)]))
                else:
                    level += 1
                    idx[level] = start[level] - 1
    finally:
        free(flat)
        free(start)
        free(idx)
    return solutions
