"""Time the numba kernels against the numpy fallback and check they agree.

    python3 benchmarks/bench_kernels.py [--rows 600] [--length 512] [--word-length 64]

Run with SYMSAX_DISABLE_NUMBA=1 to confirm the library then routes to numpy.
"""

import argparse
import json
import time

import numpy as np

from symsax import _accel, _kernels
from symsax.alphabet import breakpoint_table


def _best(fn, *args, repeat=5):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=600)
    ap.add_argument("--length", type=int, default=512)
    ap.add_argument("--word-length", type=int, default=64)
    ap.add_argument("--alphabet-size", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    table = breakpoint_table(args.alphabet_size)
    A = rng.integers(0, args.alphabet_size, (args.rows, args.word_length))
    B = rng.integers(0, args.alphabet_size, (args.rows, args.word_length))
    X = rng.normal(size=(args.rows, args.length))
    Y = rng.normal(size=(args.rows, args.length))

    result = {"backend": _accel.BACKEND, "disabled_by_env": _accel.DISABLED_BY_ENV,
              "rows": args.rows, "length": args.length, "word_length": args.word_length}
    cases = [
        ("symbolic", _kernels.symbolic_cross_numpy, "_symbolic_cross_jit", (A, B, table.lookup_fixed)),
        ("euclidean", _kernels.euclidean_cross_numpy, "_euclidean_cross_jit", (X, Y)),
    ]
    for name, np_fn, jit_name, call_args in cases:
        t_np, ref = _best(np_fn, *call_args, repeat=args.repeat)
        entry = {"numpy_s": round(t_np, 6)}
        if _accel.HAVE_NUMBA:
            jit_fn = getattr(_kernels, jit_name)
            t0 = time.perf_counter()
            jit_fn(*call_args)  # compile or load from cache
            entry["numba_first_call_s"] = round(time.perf_counter() - t0, 6)
            t_jit, out = _best(jit_fn, *call_args, repeat=args.repeat)
            entry["numba_s"] = round(t_jit, 6)
            entry["speedup"] = round(t_np / t_jit, 2) if t_jit else None
            if name == "symbolic":
                entry["identical"] = bool(np.array_equal(out, ref))
            else:
                entry["max_abs_diff"] = float(np.max(np.abs(out - ref)))
        result[name] = entry
    print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
