"""Time the numpy and numba kernel backends on the same inputs.

    python3 benchmarks/bench_kernels.py [--sizes 16 64 256] [--repeat 5]

Each kernel is warmed up once (so numba compile time is excluded), then the
best of ``--repeat`` runs is reported. Outputs of the two backends are
compared so a speedup never hides a wrong answer.
"""
import argparse
import timeit

import numpy as np

from kaczframe import _kernels


def inputs(n, rng):
    d = max(n // 2, 1)
    v = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    strict = np.ascontiguousarray(np.tril(v @ v.conj().T, -1))
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rhs = a @ (rng.standard_normal(n) + 0j)
    return {
        "unit_lower_inverse": (strict,),
        "aux_recursion": (v, strict),
        "single_pass": (v, v[0] + v[-1]),
        "sweep": lambda: (a, rhs, np.sum(np.abs(a) ** 2, axis=1), np.zeros(n, complex),
                          np.empty((n, n), complex)),
    }


def run(fn, args):
    return fn(*(args() if callable(args) else args))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 256])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    backends = {name: _kernels.get_backend(name) for name in _kernels.available_backends()}
    if "numba" not in backends:
        print("numba is not installed; timing the numpy backend only")
    print(f"{'kernel':<20}{'n':>6}" + "".join(f"{b + ' [ms]':>14}" for b in backends)
          + f"{'speedup':>10}{'max diff':>12}")
    for n in args.sizes:
        data = inputs(n, np.random.default_rng(n))
        for kernel in _kernels.KERNELS:
            times, outs = {}, {}
            for name, mod in backends.items():
                fn = getattr(mod, kernel)
                outs[name] = run(fn, data[kernel])
                times[name] = min(timeit.repeat(lambda: run(fn, data[kernel]),
                                                number=1, repeat=args.repeat))
            diff = max(float(np.max(np.abs(outs[b] - outs["numpy"]))) for b in outs)
            speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
            print(f"{kernel:<20}{n:>6}" + "".join(f"{times[b] * 1e3:>14.3f}" for b in backends)
                  + f"{speed:>10.1f}{diff:>12.2e}")


if __name__ == "__main__":
    main()
