"""Values of ``M_n`` on the unit circle: sampling, zeros, symmetries, export."""
import cmath
import csv
import math
import random
from dataclasses import dataclass
from math import gcd

from . import mobiuspoly
from .errors import DomainError

DEFAULT_TOL = 1e-9
MAX_N = 10**4
MAX_ORDER = 64
SYMMETRY_SEED = 20131211


@dataclass(frozen=True)
class CircleSample:
    theta: float
    value: complex


@dataclass(frozen=True)
class RootZero:
    """A root of unity ``exp(2*pi*i*index/order)``, in lowest terms, where ``M_n`` vanishes."""

    order: int
    index: int
    value: complex
    borderline: bool = False

    @property
    def point(self):
        return cmath.exp(2j * math.pi * self.index / self.order)


@dataclass(frozen=True)
class SymmetryReport:
    n: int
    odd_symmetry: bool
    even_symmetry: bool
    conjugate_symmetry: bool
    rotation_order: int


def _check_n(n):
    if n < 1 or n > MAX_N:
        raise DomainError(f"n must lie in [1, {MAX_N}], got {n}")


def sample_circle(n, samples):
    """``M_n(exp(i*theta))`` at ``samples`` equally spaced angles plus the closing angle ``2*pi``."""
    _check_n(n)
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    P = mobiuspoly.build(n)
    out = []
    for k in range(samples + 1):
        theta = 2 * math.pi * k / samples
        out.append(CircleSample(theta, mobiuspoly.eval_complex(P, cmath.exp(1j * theta))))
    return out


def unit_root_zeros(n, max_order, tol=DEFAULT_TOL):
    """Roots of unity of order at most ``max_order`` where ``|M_n| < tol``, sorted by angle.

    Each point appears once, keyed by its reduced fraction ``index/order``.
    Zeros with ``|M_n| >= tol/10`` are kept but flagged ``borderline``.
    """
    _check_n(n)
    if not 1 <= max_order <= MAX_ORDER:
        raise DomainError(f"max_order must lie in [1, {MAX_ORDER}], got {max_order}")
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    P = mobiuspoly.build(n)
    seen = set()
    zeros = []
    for k in range(1, max_order + 1):
        for j in range(k):
            g = gcd(j, k)
            key = (k // g, j // g)
            if key in seen:
                continue
            seen.add(key)
            value = mobiuspoly.eval_complex(P, cmath.exp(2j * math.pi * key[1] / key[0]))
            if abs(value) < tol:
                zeros.append(RootZero(key[0], key[1], value, abs(value) >= tol / 10))
    zeros.sort(key=lambda z: z.index / z.order)
    return zeros


def check_symmetries(n, trials=64, tol=DEFAULT_TOL, seed=SYMMETRY_SEED):
    _check_n(n)
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")
    P = mobiuspoly.build(n)
    rng = random.Random(seed)
    zs = [cmath.exp(1j * rng.uniform(0.0, 2 * math.pi)) for _ in range(trials)]
    vals = [mobiuspoly.eval_complex(P, z) for z in zs]

    def holds(check):
        return all(abs(check(z, v)) < tol for z, v in zip(zs, vals))

    odd = holds(lambda z, v: mobiuspoly.eval_complex(P, -z) + v)
    even = holds(lambda z, v: mobiuspoly.eval_complex(P, -z) - v)
    conj = holds(lambda z, v: mobiuspoly.eval_complex(P, z.conjugate()) - v.conjugate())
    order = 1
    for k in range(MAX_ORDER, 1, -1):
        w = cmath.exp(2j * math.pi / k)
        if holds(lambda z, v: mobiuspoly.eval_complex(P, w * z) - w * v):
            order = k
            break
    return SymmetryReport(n, odd, even, conj, order)


def _num(x):
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def export_csv(samples, destination):
    """Write ``theta,re,im`` rows with round-trip float precision.

    ``destination`` is a path or an open text stream.
    """
    if not samples:
        raise DomainError("nothing to export")
    if hasattr(destination, "write"):
        _write_csv(samples, destination)
        return
    with open(destination, "w", newline="") as fh:
        _write_csv(samples, fh)


def _write_csv(samples, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["theta", "re", "im"])
    for s in samples:
        writer.writerow([_num(s.theta), _num(s.value.real), _num(s.value.imag)])


def read_csv(source):
    """Inverse of :func:`export_csv`."""
    with open(source, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != ["theta", "re", "im"]:
        raise DomainError(f"{source}: missing theta,re,im header")
    return [CircleSample(float(t), complex(float(re), float(im))) for t, re, im in rows[1:]]


def _expand(lo, hi):
    if hi - lo == 0:
        return lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def export_svg(samples, destination, size=600):
    """Render the sampled curve as one polyline with axes through the origin."""
    if not samples:
        raise DomainError("nothing to export")
    xs = [s.value.real for s in samples]
    ys = [-s.value.imag for s in samples]  # SVG y grows downward
    x0, x1 = _expand(min(xs + [0.0]), max(xs + [0.0]))
    y0, y1 = _expand(min(ys + [0.0]), max(ys + [0.0]))
    w, h = x1 - x0, y1 - y0
    points = " ".join(f"{_num(x)},{_num(y)}" for x, y in zip(xs, ys))
    doc = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}" preserveAspectRatio="xMidYMid meet">\n'
        f'  <line class="axis" x1="{_num(x0)}" y1="0" x2="{_num(x1)}" y2="0" '
        f'stroke="#999" stroke-width="1" vector-effect="non-scaling-stroke"/>\n'
        f'  <line class="axis" x1="0" y1="{_num(y0)}" x2="0" y2="{_num(y1)}" '
        f'stroke="#999" stroke-width="1" vector-effect="non-scaling-stroke"/>\n'
        f'  <polyline fill="none" stroke="#1f4e9c" stroke-width="1.5" '
        f'vector-effect="non-scaling-stroke" points="{points}"/>\n'
        "</svg>\n"
    )
    if hasattr(destination, "write"):
        destination.write(doc)
        return
    with open(destination, "w") as fh:
        fh.write(doc)
