#!/usr/bin/env python3
"""Compare the numba and pure-numpy kernel backends on the hot workloads.

The two batch kernels dominate the exhaustive operations: profile-code
computation (uniqueness grouping) and profile matching (oracle enumeration).
Numba is warmed up before timing so compilation is excluded; pass --runs to
average over more repetitions.

The library picks the backend automatically; set MINMAXPERM_DISABLE_NUMBA=1
to force the numpy fallback at import time.
"""

import argparse
import time

import numpy as np

from minmaxperm import Permutation, compute_profile
from minmaxperm._kernels import (
    NUMBA_ENABLED,
    batch_profile_codes_numpy,
    iter_perm_arrays,
    match_profile_numpy,
)

if NUMBA_ENABLED:
    from minmaxperm._kernels import batch_profile_codes_numba, match_profile_numba


def timeit(fn, runs):
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=8, help="permutation size (default 8)")
    parser.add_argument("--k", type=int, default=4, help="profile span for the code kernel")
    parser.add_argument("--runs", type=int, default=5)
    args = parser.parse_args()

    rows = np.concatenate(list(iter_perm_arrays(args.n)))
    print(f"workload: {rows.shape[0]} permutations of n={args.n}")

    target = compute_profile(
        Permutation(n=args.n, elems=tuple(range(args.n + 2))), 1, True)
    m, M, d = target.to_arrays()

    results = []

    t_np_codes = timeit(lambda: batch_profile_codes_numpy(rows, args.k, True), args.runs)
    results.append((f"profile codes k={args.k}", "numpy", t_np_codes))
    t_np_match = timeit(lambda: match_profile_numpy(rows, 1, m, M, d), args.runs)
    results.append(("profile match k=1", "numpy", t_np_match))

    if NUMBA_ENABLED:
        batch_profile_codes_numba(rows[:2], args.k, True)  # warm-up compile
        match_profile_numba(rows[:2], 1, m, M, d)
        t_nb_codes = timeit(lambda: batch_profile_codes_numba(rows, args.k, True), args.runs)
        results.append((f"profile codes k={args.k}", "numba", t_nb_codes))
        t_nb_match = timeit(lambda: match_profile_numba(rows, 1, m, M, d), args.runs)
        results.append(("profile match k=1", "numba", t_nb_match))

        ref = batch_profile_codes_numpy(rows, args.k, True)
        assert np.array_equal(batch_profile_codes_numba(rows, args.k, True), ref)
        assert np.array_equal(match_profile_numba(rows, 1, m, M, d),
                              match_profile_numpy(rows, 1, m, M, d))
    else:
        print("numba unavailable or disabled; timing the numpy fallback only")

    print(f"\n{'kernel':<24} {'backend':<8} {'best time':>12} {'rows/s':>14}")
    for name, backend_name, t in results:
        print(f"{name:<24} {backend_name:<8} {t*1e3:>10.1f}ms {rows.shape[0]/t:>14,.0f}")

    if NUMBA_ENABLED:
        print(f"\nspeedup codes: {t_np_codes / t_nb_codes:.1f}x   "
              f"speedup match: {t_np_match / t_nb_match:.1f}x")


if __name__ == "__main__":
    main()
