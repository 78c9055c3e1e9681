"""Dense polynomials over a prime field and irreducible-polynomial counts.

Irreducibility is decided by exhaustive trial division so that the
enumeration stays independent of the counting formula it is checked
against.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import mobiuspoly
from .errors import (BudgetError, ConsistencyError, DomainError,
                     ModulusMismatchError, PreconditionError)
from .numtheory import divisors, is_prime

MAX_PRIME = 97
ENUMERATION_LIMIT = 10**7

ZERO_DEGREE = -1  # degree reported for the zero polynomial


def _check_prime(p):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


@lru_cache(maxsize=None)
def _check_modulus(p):
    if not isinstance(p, int) or p > MAX_PRIME:
        raise DomainError(f"modulus {p!r} must be a prime no larger than {MAX_PRIME}")
    _check_prime(p)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p; ``coeffs[i]`` is the coefficient of ``x**i``."""

    p: int
    coeffs: tuple

    def __post_init__(self):
        _check_modulus(self.p)
        c = [a % self.p for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_descending(cls, p, coeffs):
        return cls(p, tuple(reversed(coeffs)))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lead == 1

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, FpPoly(other.p, tuple(-a for a in other.coeffs)))

    def __mul__(self, other):
        return multiply(self, other)

    def __mod__(self, other):
        return remainder(self, other)

    def __divmod__(self, other):
        return divide(self, other)

    def __str__(self):
        return render(self)


def _same_field(a, b):
    if a.p != b.p:
        raise ModulusMismatchError(f"moduli differ: {a.p} and {b.p}")


def add(a, b):
    _same_field(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return FpPoly(a.p, tuple(x + y for x, y in zip(ca, cb)))


def multiply(a, b):
    _same_field(a, b)
    if a.is_zero() or b.is_zero():
        return FpPoly(a.p, ())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return FpPoly(a.p, tuple(out))


def divide(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    _same_field(a, b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = a.p
    r = list(a.coeffs)
    db = b.degree
    q = [0] * max(len(r) - db, 0)
    inv = pow(b.lead, -1, p)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % p
        if c:
            q[k - db] = c
            for j, y in enumerate(b.coeffs):
                r[k - db + j] = (r[k - db + j] - c * y) % p
    return FpPoly(p, tuple(q)), FpPoly(p, tuple(r[:db]))


def remainder(a, b):
    return divide(a, b)[1]


def render(f):
    """Descending text form such as ``x^4 + x + 1`` or ``2x^2 + 1``."""
    if f.is_zero():
        return "0"
    parts = []
    for d in range(f.degree, -1, -1):
        c = f.coeffs[d]
        if not c:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            mono = "x" if d == 1 else f"x^{d}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts)


def monic_polys(p, degree):
    """All monic polynomials of the given degree, in coefficient order."""
    for low in product(range(p), repeat=degree):
        yield FpPoly(p, tuple(reversed(low)) + (1,))


def _has_monic_factor(f, candidates):
    return any(remainder(f, g).is_zero() for g in candidates)


def is_irreducible(f):
    if f.degree < 1 or not f.is_monic():
        raise PreconditionError(f"{render(f)} must be monic of degree >= 1")
    candidates = (g for d in range(1, f.degree // 2 + 1) for g in monic_polys(f.p, d))
    return not _has_monic_factor(f, candidates)


def enumerate_monic_irreducible(p, n):
    """All monic irreducibles of degree ``n`` over F_p, sorted by coefficient sequence."""
    _check_modulus(p)
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    if p**n > ENUMERATION_LIMIT:
        raise BudgetError(f"{p}^{n} candidates exceed the enumeration limit {ENUMERATION_LIMIT}")
    candidates = [g for d in range(1, n // 2 + 1) for g in monic_polys(p, d)]
    found = [f for f in monic_polys(p, n) if not _has_monic_factor(f, candidates)]
    found.sort(key=lambda f: tuple(reversed(f.coeffs)))
    return found


def _divide_exact(total, n):
    q, r = divmod(total, n)
    if r:
        raise ConsistencyError(f"{total} is not divisible by {n}")
    return q


def count_irreducible(p, n):
    return count_irreducible_ext(p, 1, n)


def count_irreducible_ext(p, e, n):
    """Monic irreducibles of degree ``n`` over the field with ``p**e`` elements (formula only)."""
    _check_prime(p)
    if e < 1 or n < 1:
        raise DomainError(f"degree and extension degree must be positive, got n={n}, e={e}")
    return _divide_exact(mobiuspoly.eval_int(mobiuspoly.build(n), p**e), n)


def verify_pn_identity(p, n):
    return sum(d * count_irreducible(p, d) for d in divisors(n)) == p**n
