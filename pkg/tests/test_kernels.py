import math
import random

import numpy as np
import pytest

from minmaxperm import Permutation, compute_profile
from minmaxperm._kernels import (
    NUMBA_ENABLED,
    backend,
    batch_profile_codes,
    batch_profile_codes_numpy,
    iter_perm_arrays,
    match_profile,
    match_profile_numpy,
    pair_count,
)

from helpers import golden_profile, random_perm


def reference_codes(rows, k, directed):
    """Per-row profile codes computed through the scalar path."""
    out = []
    for row in rows:
        P = Permutation(n=len(row) - 2, elems=tuple(int(v) for v in row))
        m, M, d = compute_profile(P, k, directed).to_arrays()
        out.append(np.concatenate([m, M, d]))
    return np.array(out, np.int8)


def random_rows(rng, n, count):
    return np.array([random_perm(rng, n).elems for _ in range(count)], np.int8)


class TestPairCount:
    def test_values(self):
        assert pair_count(9, 1) == 10
        assert pair_count(9, 2) == 19
        assert pair_count(3, 4) == 4 + 3 + 2 + 1


class TestEnumeration:
    def test_counts_and_shape(self):
        for n in (1, 2, 4):
            rows = np.concatenate(list(iter_perm_arrays(n)))
            assert rows.shape == (math.factorial(n), n + 2)
            assert (rows[:, 0] == 0).all() and (rows[:, -1] == n + 1).all()

    def test_lexicographic_order(self):
        rows = np.concatenate(list(iter_perm_arrays(4)))
        as_tuples = [tuple(r) for r in rows]
        assert as_tuples == sorted(as_tuples)

    def test_chunking(self):
        chunks = list(iter_perm_arrays(5, chunk=17))
        assert sum(c.shape[0] for c in chunks) == 120
        assert all(c.shape[0] <= 17 for c in chunks)
        joined = [tuple(r) for c in chunks for r in c]
        assert joined == [tuple(r) for r in np.concatenate(list(iter_perm_arrays(5)))]


class TestBackendsAgree:
    def test_codes_match_reference(self):
        rng = random.Random(7)
        for n, k, directed in ((3, 1, True), (5, 2, False), (7, 3, True), (8, 9, False)):
            rows = random_rows(rng, n, 40)
            ref = reference_codes(rows, k, directed)
            assert np.array_equal(batch_profile_codes(rows, k, directed), ref)
            assert np.array_equal(batch_profile_codes_numpy(rows, k, directed), ref)

    @pytest.mark.skipif(not NUMBA_ENABLED, reason="numba backend inactive")
    def test_numba_matches_numpy(self):
        from minmaxperm._kernels import batch_profile_codes_numba, match_profile_numba
        rng = random.Random(11)
        rows = random_rows(rng, 6, 300)
        for k, directed in ((1, True), (2, False), (4, True)):
            a = batch_profile_codes_numba(rows, k, directed)
            b = batch_profile_codes_numpy(rows, k, directed)
            assert np.array_equal(a, b)
        m, M, d = golden_profile().to_arrays()
        rows9 = np.concatenate(list(iter_perm_arrays(5)))
        mm, MM, dd = compute_profile(
            Permutation(n=5, elems=(0, 2, 1, 3, 5, 4, 6)), 1, True).to_arrays()
        assert np.array_equal(match_profile_numba(rows9, 1, mm, MM, dd),
                              match_profile_numpy(rows9, 1, mm, MM, dd))

    def test_match_agrees_with_verify(self):
        F = golden_profile()
        m, M, d = F.to_arrays()
        rows = []
        base = list(range(1, 10))
        rng = random.Random(3)
        for _ in range(200):
            rng.shuffle(base)
            rows.append((0, *base, 10))
        rows = np.array(rows, np.int8)
        from minmaxperm import verify
        expected = np.array([
            verify(Permutation(n=9, elems=tuple(int(v) for v in r)), F) for r in rows])
        assert np.array_equal(match_profile(rows, 1, m, M, d), expected)
        assert np.array_equal(match_profile_numpy(rows, 1, m, M, d), expected)

    def test_undirected_match_ignores_direction(self):
        P = Permutation(n=4, elems=(0, 2, 1, 4, 3, 5))
        F = compute_profile(P, 1, False)
        m, M, d = F.to_arrays()
        rows = np.concatenate(list(iter_perm_arrays(4)))
        hits = match_profile(rows, 1, m, M, d)
        matched = {tuple(int(v) for v in r) for r in rows[hits]}
        assert P.elems in matched

    def test_backend_name(self):
        assert backend() in ("numba", "numpy")
        assert (backend() == "numba") == NUMBA_ENABLED

    def test_env_flag_forces_numpy_backend(self):
        import os
        import subprocess
        import sys
        proc = subprocess.run(
            [sys.executable, "-c", "from minmaxperm import backend; print(backend())"],
            env={**os.environ, "MINMAXPERM_DISABLE_NUMBA": "1"},
            capture_output=True, text=True, check=True)
        assert proc.stdout.strip() == "numpy"


class TestExhaustiveAgreement:
    def test_all_n5_profiles(self):
        rows = np.concatenate(list(iter_perm_arrays(5)))
        for k in (1, 3):
            for directed in (True, False):
                ref = reference_codes(rows, k, directed)
                assert np.array_equal(batch_profile_codes(rows, k, directed), ref)
