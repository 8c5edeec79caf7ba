"""Time the compiled and pure-Python backtracking kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from exseq import _kernels_py, kernels
from exseq.chords import _kernel_tables
from exseq.sequences import follow_masks

CASES = [
    ("count_sequences", 6),
    ("count_sequences", 7),
    ("count_trees", 8),
    ("count_trees", 9),
]


def _job(name: str, n: int):
    if name == "count_sequences":
        masks = follow_masks(n)
        return lambda mod: mod.count_sequences(masks, n, ())
    _, ends, cross = _kernel_tables(n)
    return lambda mod: mod.count_trees(n + 1, ends, cross, n, ())


def _best(fn, mod, repeat: int) -> tuple[float, int]:
    best, value = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best, value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled kernels not built; timing the Python backend only")

    print(f"{'kernel':<16}{'n':>3}{'result':>10}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for name, n in CASES:
        fn = _job(name, n)
        times, values = [], set()
        for _, mod in backends:
            t, v = _best(fn, mod, args.repeat)
            times.append(t)
            values.add(v)
        assert len(values) == 1, f"backends disagree on {name} n={n}: {values}"
        speed = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
        print(f"{name:<16}{n:>3}{values.pop():>10}" + "".join(f"{t:>11.3f}s" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
