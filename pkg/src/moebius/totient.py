"""Fermat and Euler congruences derived from divisibility of ``M_n``.

:func:`verify_euler_general` returns a certificate recording every residue
along the way, so a failure points at the exact step that broke.
"""
from dataclasses import dataclass, field
from math import gcd

from .errors import CoprimalityError, DomainError
from .numtheory import euler_phi, factorize, is_prime


def _check_prime(p):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def verify_fermat(p, x):
    """``x**p == x (mod p)``."""
    _check_prime(p)
    return pow(x % p, p, p) == x % p


def special_residue(p, e, a):
    """``(a**(p**e) - a**(p**(e-1))) mod p**e``, which is ``M_(p**e)(a) mod p**e``."""
    q = p**e
    a %= q
    return (pow(a, p**e, q) - pow(a, p ** (e - 1), q)) % q


def verify_euler_special(p, e, a):
    _check_prime(p)
    if e < 1:
        raise DomainError(f"exponent must be positive, got {e}")
    return special_residue(p, e, a) == 0


@dataclass(frozen=True)
class PrimePowerStep:
    p: int
    e: int
    special: int  # a^(p^e) - a^(p^(e-1))  mod p^e
    phi_residue: int  # a^phi(p^e) - 1  mod p^e
    lifted_residue: int  # a^phi(n) - 1  mod p^e

    @property
    def modulus(self):
        return self.p**self.e

    def ok(self):
        return self.special == 0 and self.phi_residue == 0 and self.lifted_residue == 0


@dataclass(frozen=True)
class EulerCertificate:
    a: int
    n: int
    phi: int
    steps: tuple = field(default_factory=tuple)
    combined: int = 0  # CRT combination of a^phi(n) mod each p^e
    final: int = 0  # a^phi(n) mod n

    def ok(self):
        one = 1 % self.n
        return all(s.ok() for s in self.steps) and self.combined == one and self.final == one

    def first_failure(self):
        for s in self.steps:
            if not s.ok():
                return s
        return None

    def to_dict(self):
        return {
            "a": str(self.a),
            "n": str(self.n),
            "phi": str(self.phi),
            "steps": [
                {
                    "p": str(s.p),
                    "e": str(s.e),
                    "modulus": str(s.modulus),
                    "special_residue": str(s.special),
                    "phi_residue": str(s.phi_residue),
                    "lifted_residue": str(s.lifted_residue),
                }
                for s in self.steps
            ],
            "combined": str(self.combined),
            "final": str(self.final),
            "ok": self.ok(),
        }


def _crt(residues):
    x, m = 0, 1
    for r, q in residues:
        # moduli are coprime prime powers
        t = (r - x) * pow(m, -1, q) % q
        x, m = x + m * t, m * q
    return x % m


def verify_euler_general(a, n):
    """Build the per-prime-power chain ending in ``a**phi(n) == 1 (mod n)``.

    For each ``p**e`` exactly dividing ``n``: the special case
    ``p**e | a**(p**e) - a**(p**(e-1))``, the cancelled form
    ``p**e | a**phi(p**e) - 1``, then ``p**e | a**phi(n) - 1`` because
    ``phi(p**e)`` divides ``phi(n)``.  The residues are recombined by CRT.
    """
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    if gcd(a, n) != 1:
        raise CoprimalityError(f"gcd({a}, {n}) = {gcd(a, n)} != 1")
    phi_n = euler_phi(n)
    steps = []
    lifted = []
    for p, e in factorize(n).factors:
        q = p**e
        phi_q = q - q // p
        ap = pow(a, phi_n, q)
        steps.append(PrimePowerStep(
            p, e,
            special=special_residue(p, e, a),
            phi_residue=(pow(a, phi_q, q) - 1) % q,
            lifted_residue=(ap - 1) % q,
        ))
        lifted.append((ap, q))
    return EulerCertificate(
        a=a, n=n, phi=phi_n, steps=tuple(steps),
        combined=_crt(lifted) % n,
        final=pow(a, phi_n, n),
    )
