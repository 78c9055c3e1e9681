# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``moebius._pycore``."""
from libc.stdlib cimport malloc, free


cdef int _max_periods(unsigned long long n, unsigned long long *out):
    # n // q for each distinct prime q of n
    cdef int k = 0
    cdef unsigned long long m = n, q = 2
    while q * q <= m:
        if m % q == 0:
            out[k] = n // q
            k += 1
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out[k] = n // m
        k += 1
    return k


def count_aperiodic_words(int n, int x):
    if x <= 0:
        return 0
    cdef unsigned long long periods[64]
    cdef int np = _max_periods(n, periods)
    cdef int *w = <int *>malloc(n * sizeof(int))
    if w == NULL:
        raise MemoryError()
    cdef unsigned long long count = 0
    cdef int i, j, d, has_period
    for i in range(n):
        w[i] = 0
    try:
        while True:
            has_period = 0
            for j in range(np):
                d = <int>periods[j]
                for i in range(n - d):
                    if w[i] != w[i + d]:
                        break
                else:
                    has_period = 1
                    break
            if not has_period:
                count += 1
            # odometer, last letter fastest
            i = n - 1
            while i >= 0 and w[i] == x - 1:
                w[i] = 0
                i -= 1
            if i < 0:
                break
            w[i] += 1
    finally:
        free(w)
    return count


def count_necklaces(int n, int x):
    if x <= 0:
        return 0
    cdef int *w = <int *>malloc(n * sizeof(int))
    if w == NULL:
        raise MemoryError()
    cdef unsigned long long count = 0
    cdef int i, r, k, a, b, smallest
    for i in range(n):
        w[i] = 0
    try:
        while True:
            smallest = 1
            for r in range(1, n):
                for k in range(n):
                    a = w[(r + k) % n]
                    b = w[k]
                    if a != b:
                        break
                if a < b:
                    smallest = 0
                    break
            if smallest:
                count += 1
            i = n - 1
            while i >= 0 and w[i] == x - 1:
                w[i] = 0
                i -= 1
            if i < 0:
                break
            w[i] += 1
    finally:
        free(w)
    return count


def trial_factor(n):
    cdef unsigned long long m = n
    cdef unsigned long long p = 5, step = 2
    cdef int e
    factors = []
    for p0 in (2, 3):
        if m % p0 == 0:
            e = 0
            while m % p0 == 0:
                m //= p0
                e += 1
            factors.append((p0, e))
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return factors
