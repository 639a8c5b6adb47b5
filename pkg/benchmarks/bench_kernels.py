"""Time the compiled kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from twistbialg import _kernels_py

try:
    from twistbialg import _kernels
except ImportError:
    _kernels = None

PETERSENISH = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)]
CHAIN = [(i, i + 1) for i in range(5)]

CASES = {
    "qsh(5, 5)": lambda m: m.qsh(5, 5),
    "set_partitions(9)": lambda m: m.set_partitions(9),
    "packed_words(6)": lambda m: m.packed_words(6),
    "acyclic orientations, 6 vertices / 9 edges": lambda m: m.count_acyclic_orientations(6, PETERSENISH),
    "proper 4-colourings, 6 vertices / 9 edges": lambda m: m.count_proper_colorings(6, PETERSENISH, 4),
    "weak monotone maps, 6-chain into 6": lambda m: m.count_monotone_maps(6, CHAIN, 6, False),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':48} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in CASES.items():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{name:48} {t_py:10.2f} {'n/a':>10} {'':>8}")
            continue
        assert fn(_kernels) == fn(_kernels_py)
        t_cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:48} {t_py:10.2f} {t_cy:10.2f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
