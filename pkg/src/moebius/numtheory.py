"""Factorization, divisors, the Moebius function, Euler's phi and Moebius inversion."""
from dataclasses import dataclass
from itertools import product
from math import prod

from . import kernels
from .errors import DomainError, MissingDivisorError

MAX_N = 2**63


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected a positive integer, got {n!r}")
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")
    if n >= MAX_N:
        raise DomainError(f"{n} is too large to factor (limit 2**63)")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = p1**e1 * ... * pr**er`` with increasing primes."""

    n: int
    factors: tuple

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    @property
    def r(self):
        """Number of distinct prime factors."""
        return len(self.factors)

    def is_squarefree(self):
        return all(e == 1 for _, e in self.factors)

    def value(self):
        return prod(p**e for p, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n):
    _check_positive(n)
    return Factorization(n, tuple((int(p), int(e)) for p, e in kernels.trial_factor(n)))


def is_prime(n):
    if not isinstance(n, int) or n < 2:
        return False
    f = factorize(n)
    return f.factors == ((n, 1),)


def moebius(n):
    f = factorize(n)
    if not f.is_squarefree():
        return 0
    return -1 if f.r % 2 else 1


def divisors(n):
    f = factorize(n)
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n):
    f = factorize(n)
    return prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def gauss_identity_check(n):
    """True iff the phi values of the divisors of ``n`` sum to ``n``."""
    return sum(euler_phi(d) for d in divisors(n)) == n


def mobius_invert(g_values, n):
    """Recover ``f(n)`` from the divisor sums ``g(d) = sum(f(c) for c | d)``.

    ``g_values`` maps every divisor of ``n`` to ``g`` at that divisor.
    """
    total = 0
    for d in divisors(n):
        if d not in g_values:
            raise MissingDivisorError(n, d)
        mu = moebius(n // d)
        if mu:
            total += mu * g_values[d]
    return total


def squarefree_divisors(f):
    """Yield ``(q, k)`` for each squarefree divisor ``q`` of ``f.n`` built from ``k`` primes."""
    for mask in product((0, 1), repeat=f.r):
        q = prod(p for (p, _), bit in zip(f.factors, mask) if bit)
        yield q, sum(mask)
