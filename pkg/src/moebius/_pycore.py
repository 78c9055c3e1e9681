"""Pure-Python kernels; reference behaviour for ``moebius._core``.

Words of length n over x letters are enumerated in lexicographic order.
Every function here must return exactly what the compiled version returns.
"""
from itertools import product


def count_aperiodic_words(n, x):
    """Number of words of length ``n`` over ``x`` letters with no proper rotational period."""
    if x <= 0:
        return 0
    # a proper period divides some n/q with q prime, so only those need checking
    periods = [n // q for q, _ in trial_factor(n)]
    count = 0
    for w in product(range(x), repeat=n):
        for d in periods:
            if w[d:] == w[:n - d]:
                break
        else:
            count += 1
    return count


def count_necklaces(n, x):
    """Number of rotation orbits among all words of length ``n`` over ``x`` letters."""
    if x <= 0:
        return 0
    count = 0
    for w in product(range(x), repeat=n):
        # count each orbit once, at its lexicographically smallest member
        for i in range(1, n):
            if w[i:] + w[:i] < w:
                break
        else:
            count += 1
    return count


def trial_factor(n):
    """Prime factorization of ``n >= 1`` by trial division, as ``[(p, e), ...]``."""
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        factors.append((n, 1))
    return factors
