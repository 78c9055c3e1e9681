"""Replays the documented identities and brute-force oracles as named suites.

Each suite raises ``AssertionError`` naming its first counterexample.  With a
small budget the oracle suites shrink their ranges; suites marked ``core``
always run, so every worked example from the source material is covered
even at ``budget=1``.
"""
import cmath
import io
import time
from dataclasses import dataclass
from math import gcd

from . import bracelet, circle, ffpoly, mobiuspoly, numtheory, siteswap, totient

DEFAULT_BUDGET = 120.0
REDUCED_BELOW = 30.0


@dataclass
class SuiteResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    seconds: float = 0.0
    detail: str = ""


def _expect(cond, msg):
    if not cond:
        raise AssertionError(msg)


def _render_m12(reduced):
    got = mobiuspoly.render(mobiuspoly.build(12))
    _expect(got == "x^12 - x^6 - x^4 + x^2", f"M_12 renders as {got!r}")


def _divisibility(reduced):
    for n in range(1, 101):
        P = mobiuspoly.build(n)
        for x in range(-50, 51):
            r = mobiuspoly.eval_mod(P, x, n)
            _expect(r == 0, f"M_{n}({x}) mod {n} = {r}")


def _minus_one(reduced):
    _expect(mobiuspoly.eval_int(mobiuspoly.build(1), -1) == -1, "M_1(-1) != -1")
    _expect(mobiuspoly.eval_int(mobiuspoly.build(2), -1) == 2, "M_2(-1) != 2")
    for n in range(3, 301):
        v = mobiuspoly.eval_int(mobiuspoly.build(n), -1)
        _expect(v == 0, f"M_{n}(-1) = {v}")
    for n in range(2, 301):
        v = mobiuspoly.eval_int(mobiuspoly.build(n), 1)
        _expect(v == 0, f"M_{n}(1) = {v}")


def _bracelet_oracle(reduced):
    max_n = 8 if reduced else 12
    for x in range(0, 5):
        for n in range(1, max_n + 1):
            if x**n > bracelet.ENUMERATION_LIMIT:
                continue
            a, b = bracelet.count_aperiodic(n, x), bracelet.count_aperiodic_bruteforce(n, x)
            _expect(a == b, f"aperiodic words n={n}, x={x}: formula {a}, enumeration {b}")


def _rotation_class(reduced):
    classes = bracelet.rotation_classes(6, 2)
    _expect(len(classes) == 9, f"{len(classes)} classes for (6, 2), expected 9")
    want = ["XOXOOO", "OXOXOO", "OOXOXO", "OOOXOX", "XOOOXO", "OXOOOX"]
    hit = [c for c in classes if "XOXOOO" in {w.to_xo() for w in c}]
    _expect(len(hit) == 1 and sorted(w.to_xo() for w in hit[0]) == sorted(want),
            "class of XOXOOO does not match the six listed rotations")
    _expect(all(len(c) == 6 for c in classes), "a class of (6, 2) does not have 6 members")


def _siteswap_counts(reduced):
    _expect(siteswap.count_patterns_lt(4, 2) == 3, "f(4, 2) != 3")
    got = [str(p) for p in siteswap.enumerate_patterns_lt(4, 2)]
    _expect(set(got) == {"4000", "3001", "2011"}, f"period-4 patterns below 2 balls: {got}")
    _expect(siteswap.count_patterns_exact(3, 3) == 12, "exactly-3-ball period-3 count != 12")
    got = [str(p) for p in siteswap.enumerate_patterns_exact(3, 3)]
    # listed by juggler name; 450 is the same cyclic pattern as its greatest rotation 504
    want = {str(siteswap.canonical_rotation(siteswap.parse(s)))
            for s in "423 441 450 522 531 603 612 630 711 720 801 900".split()}
    _expect(set(got) == want and len(got) == 12, f"3-ball period-3 list: {got}")


def _bn_identity(reduced):
    for n in range(1, 11):
        for b in range(0, 6):
            _expect(siteswap.verify_bn_identity(n, b), f"sum d*f(d,{b}) != {b}^{n}")


def _irreducible_oracle(reduced):
    ranges = {2: 7, 3: 4, 5: 3, 7: 2} if reduced else {2: 10, 3: 6, 5: 4, 7: 3}
    for p, top in ranges.items():
        for n in range(1, top + 1):
            a = ffpoly.count_irreducible(p, n)
            b = len(ffpoly.enumerate_monic_irreducible(p, n))
            _expect(a == b, f"irreducibles over F_{p} of degree {n}: formula {a}, enumeration {b}")


def _pn_identity(reduced):
    for p in (2, 3, 5, 7, 11):
        for n in range(1, 9):
            _expect(ffpoly.verify_pn_identity(p, n), f"sum d*f(d) != {p}^{n}")


def _circle_zeros(reduced):
    z17 = circle.unit_root_zeros(17, 16, 1e-9)
    got = {(z.order, z.index) for z in z17}
    want = {(16 // gcd(j, 16), j // gcd(j, 16)) for j in range(16)}
    _expect(got == want, f"zeros of M_17 up to order 16: {sorted(got)}")
    z15 = {(z.order, z.index) for z in circle.unit_root_zeros(15, 4, 1e-9)}
    _expect({(1, 0), (2, 1), (4, 1), (4, 3)} <= z15, f"zeros of M_15 up to order 4: {sorted(z15)}")


def _symmetries(reduced):
    r15 = circle.check_symmetries(15, 64, 1e-9)
    _expect(r15.odd_symmetry and r15.conjugate_symmetry, f"M_15 symmetries: {r15}")
    r12 = circle.check_symmetries(12, 64, 1e-9)
    _expect(r12.even_symmetry, f"M_12 symmetries: {r12}")
    r17 = circle.check_symmetries(17, 64, 1e-9)
    _expect(r17.rotation_order >= 16, f"M_17 rotation order {r17.rotation_order}")


def _euler_special(reduced):
    for p in (2, 3, 5, 7):
        for e in range(1, 5):
            P = mobiuspoly.build(p**e)
            for a in range(-20, 21):
                ok = totient.verify_euler_special(p, e, a)
                _expect(ok, f"a^(p^e) != a^(p^(e-1)) mod p^e for p={p}, e={e}, a={a}")
                _expect(mobiuspoly.eval_mod(P, a, p**e) == 0, f"M_{p**e}({a}) mod {p**e} != 0")


def _euler_general(reduced):
    for n in range(2, 201):
        for a in range(1, n):
            if gcd(a, n) != 1:
                continue
            cert = totient.verify_euler_general(a, n)
            _expect(cert.ok(), f"Euler certificate failed for a={a}, n={n}: {cert.first_failure()}")


def _paper_examples(reduced):
    nt = numtheory
    _expect(nt.moebius(1) == 1 and nt.moebius(4) == 0, "mu(1), mu(4)")
    _expect(nt.euler_phi(9) == 6, "phi(9)")
    _expect(nt.mobius_invert({1: 2, 2: 4, 4: 16}, 4) == 12, "inverting 2^d at n=4")
    for n, text in ((1, "x"), (2, "x^2 - x"), (6, "x^6 - x^3 - x^2 + x"), (15, "x^15 - x^5 - x^3 + x"),
                    (17, "x^17 - x")):
        got = mobiuspoly.render(mobiuspoly.build(n))
        _expect(got == text, f"M_{n} renders as {got!r}")
    _expect(mobiuspoly.eval_int(mobiuspoly.build(4), 2) == 12, "M_4(2)")
    _expect(mobiuspoly.root_multiplicity_at_zero(mobiuspoly.build(12)) == 2, "root multiplicity of M_12")
    _expect(abs(mobiuspoly.eval_complex(mobiuspoly.build(17), 1)) < 1e-9, "M_17(1)")
    for z in (1, -1, 1j, -1j):
        _expect(abs(mobiuspoly.eval_complex(mobiuspoly.build(15), z)) < 1e-9, f"M_15({z})")
    for text, period in (("XOXOXO", 2), ("OXOOXO", 3), ("XOXOOO", 6)):
        got = bracelet.fundamental_period(bracelet.Word.from_xo(text))
        _expect(got == period, f"period of {text} is {got}")
    _expect(bracelet.count_aperiodic(4, 2) == 12, "aperiodic binary words of length 4")
    for text, throws in (("441", (4, 4, 1)), ("7441", (7, 4, 4, 1))):
        _expect(siteswap.parse(text).throws == throws, f"parse {text}")
    _expect(siteswap.is_valid(siteswap.parse("441")), "441 valid")
    for text, balls in (("441", 3), ("0000", 0), ("900", 3)):
        _expect(siteswap.ball_count(siteswap.parse(text)) == balls, f"balls in {text}")
    _expect(siteswap.fundamental_period(siteswap.parse("2020")) == 2, "period of 2020")
    _expect(siteswap.fundamental_period(siteswap.parse("3001")) == 4, "period of 3001")
    _expect(str(siteswap.canonical_rotation(siteswap.parse("0130"))) == "3001", "canonical 0130")
    _expect(str(siteswap.canonical_rotation(siteswap.parse("4000"))) == "4000", "canonical 4000")
    got = [str(p) for p in siteswap.enumerate_patterns_exact(4, 1)]
    _expect(got == ["4000", "3001", "2011"], f"period-4 one-ball list {got}")
    _expect(siteswap.verify_bn_identity(4, 2), "16 period-4 patterns below 2 balls")
    samples = circle.sample_circle(17, 4)
    _expect(all(abs(s.value) < 1e-9 for s in samples), "M_17 at 4th roots of unity")
    z2 = circle.unit_root_zeros(2, 8, 1e-9)
    _expect([(z.order, z.index) for z in z2] == [(1, 0)], f"zeros of M_2: {z2}")
    _expect(abs(mobiuspoly.eval_complex(mobiuspoly.build(2), cmath.exp(1j * cmath.pi)) - 2) < 1e-9, "M_2(-1)")
    _expect(bracelet.is_aperiodic(bracelet.Word.from_xo("XOXOOO")), "XOXOOO aperiodic")
    _expect(not bracelet.is_aperiodic(bracelet.Word.from_xo("XOXOXO")), "XOXOXO periodic")
    buf = io.StringIO()
    circle.export_csv(circle.sample_circle(17, 160), buf)
    rows = buf.getvalue().splitlines()[1:]
    crossings = [complex(float(r.split(",")[1]), float(r.split(",")[2])) for r in rows[:-1:10]]
    _expect(len(crossings) == 16 and all(abs(v) < 1e-9 for v in crossings), "M_17 CSV origin crossings")

    from . import cli  # cli imports this module

    for argv, want in ((["poly", "print", "--n", "12"], "x^12 - x^6 - x^4 + x^2\n"),
                       (["siteswap", "count", "--period", "4", "--fewer-than", "2"], "3\n")):
        out = cli.run(argv)
        _expect((out.exit_code, out.payload) == (0, want), f"moebius {' '.join(argv)} gave {out}")


def _invariants(reduced):
    top = 500 if reduced else 2000
    for n in range(1, top + 1):
        f = numtheory.factorize(n)
        _expect(f.value() == n, f"factorization of {n}")
        _expect(numtheory.gauss_identity_check(n), f"sum of phi over divisors of {n}")
        s = sum(numtheory.moebius(d) for d in numtheory.divisors(n))
        _expect(s == (1 if n == 1 else 0), f"sum of mu over divisors of {n} is {s}")
        phi = 1
        for p, e in f.factors:
            phi *= numtheory.euler_phi(p**e)
        _expect(phi == numtheory.euler_phi(n), f"phi not multiplicative at {n}")
    for n in range(1, 301):
        P = mobiuspoly.build(n)
        r = numtheory.factorize(n).r
        coeffs = list(P.terms.values())
        _expect(len(coeffs) == 2**r and P.terms[n] == 1, f"term structure of M_{n}")
        if n > 1:
            _expect(coeffs.count(-1) == 2 ** (r - 1), f"unbalanced signs in M_{n}")
        _expect(P.lowest_exponent == mobiuspoly.radical_complement(n), f"lowest exponent of M_{n}")


def _fermat(reduced):
    for p in (2, 3, 5, 7, 11, 13):
        for x in range(-100, 101):
            _expect(totient.verify_fermat(p, x), f"{x}^{p} != {x} mod {p}")


# (name, callable, core) in execution order; criteria first
SUITES = [
    ("M_12 rendering", _render_m12, True),
    ("M_n(x) = 0 mod n, n <= 100, |x| <= 50", _divisibility, True),
    ("M_n(-1) = 0 for 3 <= n <= 300", _minus_one, True),
    ("aperiodic bracelets: formula vs enumeration", _bracelet_oracle, False),
    ("rotation class of XOXOOO", _rotation_class, True),
    ("siteswap counts and lists", _siteswap_counts, True),
    ("sum d*f(d,b) = b^n", _bn_identity, True),
    ("irreducibles: formula vs enumeration", _irreducible_oracle, False),
    ("sum d*f(d) = p^n", _pn_identity, True),
    ("roots of unity on the circle", _circle_zeros, True),
    ("circle symmetries", _symmetries, True),
    ("Euler special case", _euler_special, True),
    ("Euler general certificates", _euler_general, True),
    ("worked examples", _paper_examples, True),
    ("arithmetic invariants", _invariants, False),
    ("Fermat", _fermat, False),
]


def run_selftest(budget=DEFAULT_BUDGET, suites=None):
    """Run the suites within ``budget`` seconds and return their results."""
    reduced = budget < REDUCED_BELOW
    start = time.perf_counter()
    results = []
    for name, fn, core in suites or SUITES:
        if not core and time.perf_counter() - start > budget:
            results.append(SuiteResult(name, "skip", detail="time budget exhausted"))
            continue
        t0 = time.perf_counter()
        try:
            fn(reduced)
        except AssertionError as exc:
            results.append(SuiteResult(name, "fail", time.perf_counter() - t0, str(exc)))
        except Exception as exc:  # a crash is also a failed suite
            results.append(SuiteResult(name, "fail", time.perf_counter() - t0, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(SuiteResult(name, "pass", time.perf_counter() - t0))
    return results
