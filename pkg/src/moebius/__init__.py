"""Exact Moebius polynomials ``M_n(x) = sum over d | n of mu(n/d) x**d`` and what they count."""
from .errors import (BudgetError, ConsistencyError, CoprimalityError, DomainError, MissingDivisorError,
                     MoebiusError, ModulusMismatchError, ParseError, PreconditionError)
from .kernels import BACKEND
from .mobiuspoly import MobiusPolynomial, build, eval_complex, eval_int, eval_mod, render
from .numtheory import Factorization, divisors, euler_phi, factorize, moebius, mobius_invert

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BudgetError", "ConsistencyError", "CoprimalityError", "DomainError", "Factorization",
    "MissingDivisorError", "MobiusPolynomial", "ModulusMismatchError", "MoebiusError", "ParseError",
    "PreconditionError", "build", "divisors", "euler_phi", "eval_complex", "eval_int", "eval_mod",
    "factorize", "mobius_invert", "moebius", "render",
]
