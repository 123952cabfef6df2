"""Compare the compiled and pure-Python kernels on the sweeps they serve.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from singlink import _kernels
from singlink.plumbing import adjugate, determinant, e8_graph, intersection_matrix, path_graph
from singlink.brieskorn import coprime_triples


def offdiag(g):
    m = intersection_matrix(g).tolist()
    for i in range(g.r):
        m[i][i] = 0
    return m


def workloads():
    star = offdiag(e8_graph().with_weights([-2] * 8))
    p5 = offdiag(path_graph([-1] * 5))
    a4 = intersection_matrix(path_graph([-2, -3, -2, -5]))
    adj, det = adjugate(a4), determinant(a4)
    triples = [tuple(t) for t in coprime_triples(2, 40)]
    return {
        "lattice counts, coprime triples <= 40": lambda k: [k.lattice_counts(*t) for t in triples],
        "weight sweep, path r=5, N=12 (248832 forms)": lambda k: k.sweep_exhaustive(p5, 12),
        "weight sweep, E8 shape, N=5 (390625 forms)": lambda k: k.sweep_exhaustive(star, 5),
        "genus box, r=4 chain, gmax=30": lambda k: k.genus_box(adj, det, [-2, -3, -2, -5], 30),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels are not built; only the Python timings are shown")
    print(f"{'workload':48s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, run in workloads().items():
        timings, results = [], []
        for b in backends:
            t, res = best_of(lambda: run(_kernels.get_backend(b)), args.repeat)
            timings.append(t)
            results.append(res)
        if len(set(map(repr, results))) != 1:
            raise SystemExit(f"backends disagree on {name!r}")
        row = f"{name:48s}" + "".join(f"{t:11.4f}s" for t in timings)
        if len(timings) > 1:
            row += f"{timings[0] / timings[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
