"""Compare the compiled and pure-Python kernels on RREF and the GHW oracle.

usage: python benchmarks/bench_kernels.py [--repeat N] [--json PATH]
"""
import argparse
import json
import time

import numpy as np

from wprm import kernels
from wprm.codes import weight_hierarchy
from wprm.construct import build_wprm
from wprm.field import field


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def cases():
    rng = np.random.default_rng(0)
    for q, k, n in [(2, 40, 200), (3, 40, 200), (4, 30, 150), (7, 30, 150)]:
        M = rng.integers(0, q, size=(k, n)).astype(np.uint8)
        yield f"rref q={q} {k}x{n}", "rref", q, M
    for q, w, d in [(3, (3, 1, 1), 3), (3, (2, 3, 5), 20), (4, (2, 3, 5), 30)]:
        yield f"hierarchy q={q} w={w} d={d}", "ghw", q, build_wprm(q, w, d).code


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    impls = kernels.backends()
    rows = []
    for label, kind, q, obj in cases():
        F = field(q)
        res = {}
        for name, mod in impls.items():
            if kind == "rref":
                fn = lambda mod=mod: kernels.rref(obj, F, impl=mod)[0]
            else:
                fn = lambda mod=mod: weight_hierarchy(obj, impl=mod)
            res[name] = _time(fn, args.repeat)
        outs = [r[1] for r in res.values()]
        agree = all(np.array_equal(np.asarray(outs[0]), np.asarray(o)) for o in outs[1:])
        row = {"case": label, "agree": agree, **{k: round(v[0], 6) for k, v in res.items()}}
        if "cython" in res:
            row["speedup"] = round(res["python"][0] / max(res["cython"][0], 1e-9), 1)
        rows.append(row)
        print(f"{label:36s} " + "  ".join(f"{k}={v[0] * 1e3:9.2f} ms" for k, v in res.items())
              + (f"  x{row['speedup']}" if "speedup" in row else "") + ("" if agree else "  MISMATCH"))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
