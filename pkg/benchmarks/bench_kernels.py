"""Compare the compiled and numpy backends of the log-normal oscillatory kernel.

Run with ``python benchmarks/bench_kernels.py``. Cases mirror the Fig. 2
overlap sweep and the Fig. 3 position amplitudes.
"""
import argparse
import timeit

from wavecs import kernels

CASES = {
    "overlap k=1": (0.0, 1.0, 0.0, 0.0, 1.0),
    "overlap k=10": (0.0, 1.0, 2.5, 0.0, 10.0),
    "position gamma=-4 x=9": (0.5, 4.0, 0.0, -4.0, 9.0),
    "position gamma=0 x=30": (0.5, 4.0, 0.0, 0.0, 30.0),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = {"python": kernels.osc_lognormal_python}
    if kernels.osc_lognormal_compiled is not None:
        backends["cython"] = kernels.osc_lognormal_compiled
    print(f"{'case':<24}" + "".join(f"{b:>14}" for b in backends) + f"{'speedup':>10}  max|diff|")
    for name, params in CASES.items():
        times, vals = {}, {}
        for b, fn in backends.items():
            number = 20
            times[b] = min(timeit.repeat(lambda: fn(*params), number=number, repeat=args.repeat)) / number
            vals[b] = fn(*params)[0]
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        diff = abs(vals["python"] - vals.get("cython", vals["python"]))
        print(f"{name:<24}" + "".join(f"{times[b] * 1e3:>11.3f} ms" for b in backends)
              + f"{speed:>9.1f}x  {diff:.1e}")


if __name__ == "__main__":
    main()
