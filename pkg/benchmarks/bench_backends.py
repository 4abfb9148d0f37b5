"""Timing comparison of the pure-python and compiled kernel backends.

Runs each hot kernel on realistic workloads (H2 molecular grids at the
default quality) and a full end-to-end analysis, printing both backends
side by side. Usage: python3 benchmarks/bench_backends.py [--quick]
"""

import argparse
import sys
import time

import numpy as np

from entropart.backends import reference, set_backend
from entropart.analysis import analyze_model
from entropart.models import build_model
from entropart.quadrature import build_molecular_grid

try:
    from entropart.backends import _fastkern
except ImportError:
    _fastkern = None


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true",
                    help="smaller grid, fewer repeats")
    args = ap.parse_args()
    repeat = 2 if args.quick else 5

    if _fastkern is None:
        print("compiled backend not built; showing python timings only")
    backends = [("python", reference)] + (
        [("compiled", _fastkern)] if _fastkern else [])

    model = build_model("fci", 1.4)
    mol = model.molecule()
    grid = build_molecular_grid(mol)
    field = model.field()
    pts = grid.points if not args.quick else grid.points[:40000]
    print(f"workload: H2 fci R=1.4, {len(pts)} grid points, "
          f"{len(field.basis)} primitives")

    centers = mol.positions
    radii = mol.bragg_radii()
    basis = field.basis
    G = basis.evaluate(pts[:32768])
    D = field.dm.coefficients
    rows0 = basis.atom_rows(0)
    rows1 = basis.atom_rows(1)

    cases = {
        "becke_weights_kernel": lambda b: b.becke_weights_kernel(
            pts, centers, radii, 3, True),
        "eval_primitives": lambda b: b.eval_primitives(
            pts[:32768], basis.prim_centers, basis.exponents,
            basis.norms, basis.ang_pows),
        "quad_form": lambda b: b.quad_form(D, G),
        "quad_form_block": lambda b: b.quad_form_block(D, G, rows0, rows1),
    }

    header = f"{'kernel':24s}" + "".join(f"{n:>14s}" for n, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for name, call in cases.items():
        times = [timeit(lambda b=mod: call(b), repeat) for _, mod in backends]
        line = f"{name:24s}" + "".join(f"{t * 1e3:12.2f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:9.1f}x"
        print(line)
        if len(backends) == 2:
            a = call(backends[0][1])
            b = call(backends[1][1])
            worst = max(np.max(np.abs(np.asarray(x) - np.asarray(y)))
                        for x, y in [(a, b)])
            if worst > 1e-10:
                print(f"  WARNING: backends disagree by {worst:.2e}")

    print()
    results = {}
    times = {}
    for name, _ in backends:
        set_backend(name)
        t = timeit(lambda: analyze_model("fci", 1.4, alphas=(2.0,)),
                   max(2, repeat // 2))
        times[name] = t
        results[name] = analyze_model(
            "fci", 1.4, alphas=(2.0,)).analysis.shannon.density.total
    set_backend("auto")
    line = f"{'full analysis':24s}" + "".join(
        f"{times[n] * 1e3:12.2f}ms" for n, _ in backends)
    if len(backends) == 2:
        line += f"{times['python'] / times['compiled']:9.1f}x"
    print(line)
    vals = list(results.values())
    if len(vals) == 2 and abs(vals[0] - vals[1]) > 1e-10:
        print(f"  WARNING: entropies disagree: {vals[0]!r} vs {vals[1]!r}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
