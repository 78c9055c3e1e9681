"""Aperiodic bracelets: periods, brute-force counts and rotation classes.

A bracelet here is a cyclic word under rotation only.  Letters are the
integers ``0 .. x-1``; the X/O spelling used in examples maps ``O -> 0``
and ``X -> 1``.
"""
from dataclasses import dataclass
from itertools import product

from . import kernels, mobiuspoly
from .errors import BudgetError, ConsistencyError, DomainError
from .numtheory import divisors, euler_phi

ENUMERATION_LIMIT = 10**7

XO = "OX"


@dataclass(frozen=True)
class Word:
    alphabet_size: int
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise DomainError("a word needs at least one letter")
        if any(not 0 <= a < self.alphabet_size for a in self.letters):
            raise DomainError(f"letters {self.letters} not all below {self.alphabet_size}")

    def __len__(self):
        return len(self.letters)

    def rotate(self, k):
        """Rotate left by ``k`` letters."""
        k %= len(self.letters)
        return Word(self.alphabet_size, self.letters[k:] + self.letters[:k])

    def to_xo(self):
        return "".join(XO[a] for a in self.letters)

    @classmethod
    def from_xo(cls, text):
        try:
            return cls(2, tuple(XO.index(ch) for ch in text))
        except ValueError:
            raise DomainError(f"{text!r} is not an X/O word") from None

    def __str__(self):
        if self.alphabet_size <= 2:
            return self.to_xo()
        return "".join(map(str, self.letters)) if self.alphabet_size <= 10 else str(list(self.letters))


def _period_of(letters):
    n = len(letters)
    for d in divisors(n):
        if letters[d:] == letters[:n - d]:
            return d
    return n


def fundamental_period(w):
    return _period_of(w.letters)


def is_aperiodic(w):
    return fundamental_period(w) == len(w)


def count_aperiodic(n, x):
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    return mobiuspoly.eval_int(mobiuspoly.build(n), x)


def _guard(n, x):
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    if x < 0:
        raise DomainError(f"alphabet size must be non-negative, got {x}")
    if x**n > ENUMERATION_LIMIT:
        raise BudgetError(f"{x}^{n} words exceed the enumeration limit {ENUMERATION_LIMIT}")


def count_aperiodic_bruteforce(n, x):
    """Count aperiodic words by walking all ``x**n`` of them."""
    _guard(n, x)
    return kernels.count_aperiodic_words(n, x)


def count_necklaces_bruteforce(n, x):
    """Count rotation orbits among all ``x**n`` words."""
    _guard(n, x)
    return kernels.count_necklaces(n, x)


def canonical(w):
    """Lexicographically smallest rotation."""
    return min((w.rotate(k) for k in range(len(w))), key=lambda v: v.letters)


def rotation_classes(n, x):
    """Rotation orbits of the aperiodic words, each led by its smallest rotation.

    Members follow the representative in right-rotation order; classes are
    sorted by representative.
    """
    _guard(n, x)
    classes = []
    for letters in product(range(x), repeat=n):
        # each orbit is emitted once, from its smallest member
        if _period_of(letters) != n or min(letters[k:] + letters[:k] for k in range(n)) != letters:
            continue
        rep = Word(x, letters)
        classes.append([rep.rotate(-k) for k in range(n)])
    return classes


def count_total_necklaces(n, x):
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    total = sum(euler_phi(n // d) * x**d for d in divisors(n))
    q, r = divmod(total, n)
    if r:
        raise ConsistencyError(f"necklace sum {total} not divisible by {n}")
    return q
