"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from moebius import _pycore

try:
    from moebius import _core
except ImportError:
    _core = None

CASES = [
    ("count_aperiodic_words(11, 4)", "count_aperiodic_words", (11, 4)),
    ("count_aperiodic_words(20, 2)", "count_aperiodic_words", (20, 2)),
    ("count_necklaces(12, 3)", "count_necklaces", (12, 3)),
    ("trial_factor(999983 * 1000003)", "trial_factor", (999983 * 1000003,)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _core is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'case':34} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, name, fargs in CASES:
        t_py, r_py = best_of(getattr(_pycore, name), fargs, args.repeat)
        if _core is None:
            print(f"{label:34} {t_py:10.4f} {'-':>10} {'-':>8}")
            continue
        t_c, r_c = best_of(getattr(_core, name), fargs, args.repeat)
        assert r_py == r_c, (label, r_py, r_c)
        print(f"{label:34} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
