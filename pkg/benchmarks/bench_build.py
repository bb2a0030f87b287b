"""Time the compiled and pure-Python build kernels on the same inputs.

    python3 benchmarks/bench_build.py [--repeat 3]
"""
import argparse
import time

from supertoken import kernels
from supertoken.builder import build
from supertoken.graph import make_complete, make_cycle, make_path, make_star
from supertoken.tokens import TokenSpec

CASES = [
    (make_cycle(8), TokenSpec(4, 2)),
    (make_complete(8), TokenSpec(4, 1)),
    (make_star(6), TokenSpec(4, 2, "dist")),
    (make_path(10), TokenSpec(4, 4, "dist")),
    (make_cycle(12), TokenSpec(5, 3)),
    (make_complete(6), TokenSpec(6, 3, "dist")),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = kernels.available()
    print(f"{'graph':<12} {'spec':<26} {'order':>8} {'size':>9}  " +
          "  ".join(f"{n:>9}" for n in names) + ("  speedup" if len(names) == 2 else ""))
    for g, spec in CASES:
        times, graphs = [], []
        for name in names:
            t, st = best_of(lambda: build(g, spec, kernel=name), args.repeat)
            times.append(t)
            graphs.append(st)
        if len(graphs) == 2:
            a, b = graphs
            assert a.vertices == b.vertices and (a.indices == b.indices).all(), "kernels disagree"
        row = f"{str(g):<12} {str(spec):<26} {graphs[0].order:>8} {graphs[0].size:>9}  "
        row += "  ".join(f"{t * 1e3:>7.1f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[1] / times[0]:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
