"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each workload is run on every available backend; results must agree
before timings are reported.
"""
from __future__ import annotations

import argparse
import random
import timeit

from skewtca import kernels
from skewtca.partition import partitions, partitions_in_box


def lr_workload(k):
    box = (4, 4, 4, 4)
    shapes = list(partitions_in_box(4, 4))
    return sum(k.lr_count(box, lam, mu) for lam in shapes for mu in shapes
               if sum(lam) + sum(mu) == 16)


def kostka_workload(k):
    return sum(k.kostka(lam, mu) for lam in partitions(9) for mu in partitions(9))


def ssyt_workload(k):
    return sum(k.ssyt_count(lam, 6) for m in range(13) for lam in partitions(m, max_length=6))


def _mono_inputs():
    rng = random.Random(1)
    size = 24
    mask = tuple(i % 3 != 0 for i in range(size))
    pairs = []
    for _ in range(20000):
        a = tuple(rng.randint(0, 1) if mask[i] else rng.randint(0, 3) for i in range(size))
        b = tuple(rng.randint(0, 1) if mask[i] else rng.randint(0, 3) for i in range(size))
        pairs.append((a, b))
    return mask, pairs


MONO_MASK, MONO_PAIRS = _mono_inputs()


def mono_workload(k):
    return sum(k.mono_mul(a, b, MONO_MASK)[0] for a, b in MONO_PAIRS)


WORKLOADS = {"lr_count": lr_workload, "kostka": kostka_workload,
             "ssyt_count": ssyt_workload, "mono_mul": mono_workload}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'kernel':12} " + " ".join(f"{name:>12}" for name in backends) + "     speedup")
    for name, work in WORKLOADS.items():
        answers = {b: work(mod) for b, mod in backends.items()}
        if len(set(answers.values())) != 1:
            raise SystemExit(f"{name}: backends disagree {answers}")
        times = {b: min(timeit.repeat(lambda m=mod: work(m), number=1, repeat=args.repeat))
                 for b, mod in backends.items()}
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
        print(f"{name:12} " + " ".join(f"{t * 1000:10.1f}ms" for t in times.values()) + "  " + speed)


if __name__ == "__main__":
    main()
