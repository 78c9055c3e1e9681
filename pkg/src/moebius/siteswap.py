"""Vanilla siteswap patterns: parsing, validity, canonical form and counts."""
from dataclasses import dataclass

from . import mobiuspoly
from .errors import BudgetError, ConsistencyError, DomainError, ParseError, PreconditionError
from .numtheory import divisors

ENUMERATION_LIMIT = 10**7
SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class SiteswapPattern:
    throws: tuple

    def __post_init__(self):
        object.__setattr__(self, "throws", tuple(self.throws))
        if not self.throws:
            raise DomainError("a siteswap needs at least one throw")
        if any(a < 0 for a in self.throws):
            raise DomainError(f"negative throw in {self.throws}")

    @property
    def period(self):
        return len(self.throws)

    def rotate(self, k):
        k %= len(self.throws)
        return SiteswapPattern(self.throws[k:] + self.throws[:k])

    def __len__(self):
        return len(self.throws)

    def __str__(self):
        return format_pattern(self)


def parse(s):
    if not s:
        raise ParseError(s, 0, "")
    throws = []
    for i, ch in enumerate(s):
        height = SYMBOLS.find(ch)
        if height < 0:
            raise ParseError(s, i + 1, ch)
        throws.append(height)
    return SiteswapPattern(tuple(throws))


def format_pattern(p):
    if max(p.throws) >= len(SYMBOLS):
        raise DomainError(f"throw {max(p.throws)} has no single-character form")
    return "".join(SYMBOLS[a] for a in p.throws)


def collisions(p):
    """Pairs of 1-based throw positions ``(i, j)`` landing on the same beat mod n."""
    n = len(p.throws)
    first = {}
    clashes = []
    for i, a in enumerate(p.throws, start=1):
        beat = (i + a) % n
        if beat in first:
            clashes.append((first[beat], i))
        else:
            first[beat] = i
    return clashes


def is_valid(p):
    n = len(p.throws)
    return len({(i + a) % n for i, a in enumerate(p.throws, start=1)}) == n


def ball_count(p):
    if not is_valid(p):
        raise PreconditionError(f"{p.throws} is not a valid siteswap")
    return sum(p.throws) // len(p.throws)


def fundamental_period(p):
    t = p.throws
    n = len(t)
    for d in divisors(n):
        if t[d:] == t[:n - d]:
            return d
    return n


def canonical_rotation(p):
    """Lexicographically greatest rotation, the form jugglers write (3001, not 0013)."""
    return max((p.rotate(k) for k in range(len(p.throws))), key=lambda q: q.throws)


def _divide(total, n):
    q, r = divmod(total, n)
    if r:
        raise ConsistencyError(f"{total} is not divisible by {n}")
    return q


def _check_args(n, b):
    if n < 1:
        raise DomainError(f"period must be positive, got {n}")
    if b < 0:
        raise DomainError(f"ball count must be non-negative, got {b}")


def count_patterns_lt(n, b):
    """Rotation classes of fundamental period ``n`` using fewer than ``b`` balls."""
    _check_args(n, b)
    return _divide(mobiuspoly.eval_int(mobiuspoly.build(n), b), n)


def count_patterns_exact(n, b):
    _check_args(n, b)
    P = mobiuspoly.build(n)
    return _divide(mobiuspoly.eval_int(P, b + 1) - mobiuspoly.eval_int(P, b), n)


def _valid_sequences(n, total):
    # depth-first over throw heights, pruning on landing collisions
    throws = [0] * n
    used = [False] * n

    def extend(i, remaining):
        if i == n:
            if remaining == 0:
                yield tuple(throws)
            return
        for a in range(remaining + 1):
            beat = (i + 1 + a) % n
            if used[beat]:
                continue
            used[beat] = True
            throws[i] = a
            yield from extend(i + 1, remaining - a)
            used[beat] = False

    yield from extend(0, total)


def enumerate_patterns_exact(n, b):
    """Canonical representatives of all period-``n`` patterns with exactly ``b`` balls.

    Sorted in descending lexicographic order, so ``(3, 3)`` starts with 900.
    """
    _check_args(n, b)
    if (b * n + 1) ** n > ENUMERATION_LIMIT:
        raise BudgetError(f"({b}*{n}+1)^{n} candidates exceed the enumeration limit {ENUMERATION_LIMIT}")
    found = []
    for t in _valid_sequences(n, b * n):
        p = SiteswapPattern(t)
        if fundamental_period(p) == n and canonical_rotation(p) == p:
            found.append(p)
    found.sort(key=lambda q: q.throws, reverse=True)
    return found


def enumerate_patterns_lt(n, b):
    """Canonical patterns of fundamental period ``n`` with fewer than ``b`` balls."""
    _check_args(n, b)
    out = []
    for k in range(b):
        out.extend(enumerate_patterns_exact(n, k))
    out.sort(key=lambda q: q.throws, reverse=True)
    return out


def verify_bn_identity(n, b):
    """Check that ``d * f(d, b)`` summed over the divisors ``d`` of ``n`` is ``b**n``."""
    _check_args(n, b)
    return sum(d * count_patterns_lt(d, b) for d in divisors(n)) == b**n
