"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends must return identical results; the script checks that before
reporting times.
"""

import argparse
import random
import time

from aracert import _kernels
from aracert.complexes import cycle_graph, facet_ideal, multiwhisker_cycle, partition_whisker, sunlet
from aracert.covers import minimal_vertex_covers
from aracert.resolutions import given_ordering, max_admissible_length, whisker_ordering


def cover_cases(quick):
    sizes = (10, 14) if quick else (10, 14, 18, 20)
    cases = [(f"covers sunlet({n})", sunlet(n)) for n in sizes]
    cases += [(f"covers multiwhisker-cycle({n},{k})", multiwhisker_cycle(n, k))
              for n, k in ((6, 3), (9, 3))]
    return [(name, lambda backend, d=d: minimal_vertex_covers(d, backend=backend)) for name, d in cases]


def search_cases(quick):
    rng = random.Random(7)
    cases = [(f"max-admissible sunlet({n}) whisker", whisker_ordering(sunlet(n)))
             for n in ((6, 8) if quick else (6, 8, 10, 12))]
    for n in ((10,) if quick else (10, 14, 18)):
        names = list(cycle_graph(n).vertices.names)
        rng.shuffle(names)
        blocks = [names[i:i + 2] for i in range(0, n, 2)]
        cases.append((f"max-admissible C{n} paired whiskers", whisker_ordering(partition_whisker(cycle_graph(n), blocks))))
    cases.append(("max-admissible C9 given", given_ordering(facet_ideal(cycle_graph(9)))))
    return [(name, lambda backend, o=o: max_admissible_length(o, backend=backend)[:2]) for name, o in cases]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small instances only")
    args = ap.parse_args(argv)
    if "cython" not in _kernels.BACKENDS:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'case':45} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, run in cover_cases(args.quick) + search_cases(args.quick):
        t_py, out_py = best_time(lambda: run("python"), args.repeat)
        if "cython" in _kernels.BACKENDS:
            t_c, out_c = best_time(lambda: run("cython"), args.repeat)
            if out_c != out_py:
                raise SystemExit(f"{name}: backends disagree")
            print(f"{name:45} {t_py:10.4f} {t_c:10.4f} {t_py / max(t_c, 1e-9):7.1f}x")
        else:
            print(f"{name:45} {t_py:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
