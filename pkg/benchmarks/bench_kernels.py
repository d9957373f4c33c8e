"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--epochs 5] [--batch 1 4 32] [--difficulty 16]

Reports seconds per local-training epoch on a 512-sample shard with the
default 256-unit model, and hash rate of the proof-of-work search.
"""

import argparse
import time

import numpy as np

from chainfl import _backend, chain, model


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_sgd(kern, batch, epochs, repeat):
    rng = np.random.default_rng(0)
    x = rng.uniform(0, 1, size=(512, 784))
    y = rng.integers(0, 10, size=512)
    w0 = model.init_model(256, 0)
    orders = [rng.permutation(512).astype(np.int64) for _ in range(epochs)]

    def run():
        w = w0.copy()
        for order in orders:
            kern.sgd_epoch(w, x, y, order, batch, 0.01, 256)

    return best_of(run, repeat) / epochs


def bench_mine(kern, difficulty, repeat):
    prefix = chain.header_prefix(1, bytes(32), bytes(32), 0)
    attempts = []

    def run():
        attempts.append(kern.mine(prefix, difficulty, 0, chain.MAX_NONCE)[2])

    t = best_of(run, repeat)
    return attempts[0] / t


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--batch", type=int, nargs="+", default=[1, 4, 32])
    p.add_argument("--difficulty", type=int, default=16)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    names = _backend.available()
    kerns = {n: _backend.load(n) for n in names}
    print(f"backends: {', '.join(names)}")
    print(f"{'kernel':<24}" + "".join(f"{n:>14}" for n in names) + ("      speedup" if len(names) > 1 else ""))
    for b in args.batch:
        secs = [bench_sgd(kerns[n], b, args.epochs, args.repeat) for n in names]
        row = f"{f'sgd epoch, batch {b} (s)':<24}" + "".join(f"{s:>14.4f}" for s in secs)
        print(row + (f"{secs[1] / secs[0]:>12.1f}x" if len(secs) > 1 else ""))
    rates = [bench_mine(kerns[n], args.difficulty, args.repeat) for n in names]
    row = f"{f'mining, d={args.difficulty} (H/s)':<24}" + "".join(f"{r:>14.0f}" for r in rates)
    print(row + (f"{rates[0] / rates[1]:>12.1f}x" if len(rates) > 1 else ""))


if __name__ == "__main__":
    main()
