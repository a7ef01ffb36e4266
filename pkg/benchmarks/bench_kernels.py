"""Compare the numba and numpy kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs once to warm up (numba compiles on first call), then the
best of N timings is reported per backend.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from varlat import _kernels
from varlat import latcheck as LC
from varlat import varieties as V
from varlat.commwords import CommWord
from varlat.models import quotient_to_table
from varlat.nilcalc import NilBasis, _carrier_edges, free_quotient


def workloads():
    i_table = quotient_to_table(free_quotient(V.catalog_basis(V.I_TOP), 3)).table
    lhs = CommWord.of({0: 2, 1: 1, 2: 1}).vector(3)
    basis = NilBasis.of(5, V.XXY_XYY)
    src, dst = _carrier_edges(basis, 4)
    size = 5**4
    rng = np.random.default_rng(0)
    lats = [LC.random_lattice(rng, max_n=8, min_n=6) for _ in range(20)]
    big = LC.product(LC.product(LC.pentagon(), LC.diamond()), LC.chain(2))

    def assoc(k):
        return k.first_nonassociative(i_table)

    def identity(k):
        return k.zero_counterexample(i_table, lhs, 0)

    def union_find(k):
        return k.components(size, src, dst)

    def join_meet(k):
        return k.join_meet_tables(big.leq)

    def detectors(k):
        for lat in lats:
            for x in range(lat.n):
                for code in range(7):
                    k.element_violation(lat.join, lat.meet, lat.leq, x, code)
                k.neutral_violation(lat.join, lat.meet, x)

    return {
        f"associativity ({i_table.shape[0]}^3 triples)": assoc,
        f"x^2yz=0 in free I on 3 letters ({i_table.shape[0]}^3)": identity,
        f"union-find over {size} words, {src.size} edges": union_find,
        f"join/meet tables, {big.n} elements": join_meet,
        "all detectors on 20 random lattices": detectors,
    }


def best_of(fn, kernel, repeat):
    fn(kernel)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(kernel)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernels = _kernels.backends()
    if "numba" not in kernels:
        print("numba is not importable; only the numpy backend is available")
    names = sorted(kernels)
    print(f"{'workload':<52}" + "".join(f"{n:>12}" for n in names) + ("    speedup" if len(names) == 2 else ""))
    for label, fn in workloads().items():
        t = {n: best_of(fn, kernels[n], args.repeat) for n in names}
        row = f"{label:<52}" + "".join(f"{t[n] * 1e3:>10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"{t['numpy'] / t['numba']:>10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
