"""The Moebius polynomial ``M_n(x) = sum over d | n of mu(n/d) x**d``.

Only the ``2**r`` nonzero terms are stored, so ``M_(2**20)`` costs two
entries rather than a million.
"""
from dataclasses import dataclass
from types import MappingProxyType

from .errors import DomainError
from .numtheory import factorize, squarefree_divisors


@dataclass(frozen=True)
class MobiusPolynomial:
    n: int
    terms: MappingProxyType  # exponent -> +1 or -1, descending exponents

    @property
    def leading_exponent(self):
        return self.n

    @property
    def lowest_exponent(self):
        return min(self.terms)

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return render(self)

    def __call__(self, x):
        return eval_int(self, x)


def build(n):
    f = factorize(n)
    terms = {}
    # mu(n/d) is nonzero exactly when n/d is squarefree
    for q, k in squarefree_divisors(f):
        terms[n // q] = -1 if k % 2 else 1
    ordered = dict(sorted(terms.items(), reverse=True))
    return MobiusPolynomial(n, MappingProxyType(ordered))


def render(P):
    """Descending text form such as ``x^12 - x^6 - x^4 + x^2``."""
    parts = []
    for d, c in P.terms.items():
        mono = "x" if d == 1 else f"x^{d}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(parts)


def eval_int(P, x):
    return sum(c * x**d for d, c in P.terms.items())


def eval_mod(P, x, m):
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    x %= m
    return sum(c * pow(x, d, m) for d, c in P.terms.items()) % m


def _cpow(z, k):
    result = complex(1.0, 0.0)
    while k:
        if k & 1:
            result *= z
        z *= z
        k >>= 1
    return result


def eval_complex(P, z):
    """Floating-point ``M_n(z)``; every power is formed by repeated squaring."""
    z = complex(z)
    return sum((c * _cpow(z, d) for d, c in P.terms.items()), complex(0.0, 0.0))


def root_multiplicity_at_zero(P):
    return P.lowest_exponent


def radical_complement(n):
    """``p1**(e1-1) * ... * pr**(er-1)`` computed straight from the factorization."""
    out = 1
    for p, e in factorize(n).factors:
        out *= p ** (e - 1)
    return out
