#!/usr/bin/env python3
"""Compare the pure-Python and compiled partition kernels.

Runs the same exhaustive edge-partition enumerations through both kernels
and prints per-case timings; disagreement in partition or node counts is a
hard error.  Usage:

    python3 benchmarks/bench_partitions.py [--repeat N] [--heavy]
"""

import argparse
import sys
import time

from setrep import complete_graph, cycle_graph, line_graph
from setrep._partition_py import enumerate_edge_partitions as pure_kernel
from setrep.oracle import _masks

try:
    from setrep._partition_c import enumerate_edge_partitions as compiled_kernel
except ImportError:
    compiled_kernel = None


def friendship3():
    from setrep import Graph
    labels = ("a1", "a2", "b1", "b2", "c1", "c2", "z")
    edges = [(0, 1), (2, 3), (4, 5), (6, 0), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]
    return Graph(labels, tuple(edges))


def cases(heavy):
    yield "K5 edges into <=5 cliques", complete_graph(5), 5
    yield "K6 edges into <=6 cliques", complete_graph(6), 6
    yield "L(K4) into <=4 cliques", line_graph(complete_graph(4))[0], 4
    yield "C9 into <=9 cliques", cycle_graph(9), 9
    yield "L(3K2+K1) into <=7 cliques", line_graph(friendship3())[0], 7
    if heavy:
        yield "K7 edges into <=7 cliques", complete_graph(7), 7


def run(kernel, g, q, repeat):
    adj = _masks(g)
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = kernel(g.n, tuple(adj), q)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    parts, nodes, complete = out
    assert complete
    return len(parts), nodes, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="take the best of N runs (default 3)")
    ap.add_argument("--heavy", action="store_true",
                    help="include the K7 case (~seconds in pure Python)")
    args = ap.parse_args(argv)

    if compiled_kernel is None:
        print("compiled kernel unavailable; timing pure Python only",
              file=sys.stderr)

    header = f"{'case':34s} {'parts':>7s} {'nodes':>9s} {'pure':>9s}"
    if compiled_kernel:
        header += f" {'compiled':>9s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    total_pure = total_comp = 0.0
    for name, g, q in cases(args.heavy):
        parts, nodes, t_pure = run(pure_kernel, g, q, args.repeat)
        total_pure += t_pure
        line = f"{name:34s} {parts:7d} {nodes:9d} {t_pure:8.4f}s"
        if compiled_kernel:
            parts_c, nodes_c, t_comp = run(compiled_kernel, g, q, args.repeat)
            if (parts_c, nodes_c) != (parts, nodes):
                print(f"MISMATCH on {name}: pure ({parts}, {nodes}) "
                      f"vs compiled ({parts_c}, {nodes_c})", file=sys.stderr)
                return 1
            total_comp += t_comp
            line += f" {t_comp:8.4f}s {t_pure / t_comp:7.1f}x"
        print(line)
    if compiled_kernel:
        print("-" * len(header))
        print(f"{'total':34s} {'':7s} {'':9s} {total_pure:8.4f}s "
              f"{total_comp:8.4f}s {total_pure / total_comp:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
