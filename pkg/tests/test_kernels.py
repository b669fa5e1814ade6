"""The numba and numpy kernel implementations must agree exactly."""

import numpy as np
import pytest

from cyclic_sieve import _kernels
from cyclic_sieve.gf import field_from_q
from cyclic_sieve.polyring import divisors

pytestmark = pytest.mark.skipif(_kernels.NUMBA_IMPL is None, reason="numba not installed")

QS = (2, 3, 4, 5, 7, 8, 9)


def both(name, *args):
    a = _kernels.NUMPY_IMPL[name](*args)
    b = _kernels.NUMBA_IMPL[name](*args)
    return a, b


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


@pytest.mark.parametrize("q", QS)
def test_span_words(q):
    F = field_from_q(q)
    rng = np.random.default_rng(q)
    for k, n in ((1, 4), (2, 5), (3, 6)):
        rows = rng.integers(0, q, size=(k, n)).astype(np.uint8)
        a, b = both("span_words", rows, F.add_table, F.mul_table)
        assert a.shape == (q**k, n) and same(a, b)


@pytest.mark.parametrize("q", QS)
def test_word_stats(q):
    rng = np.random.default_rng(100 + q)
    for n in (1, 2, 7, 20):
        words = rng.integers(0, q, size=(300, n)).astype(np.uint8)
        rank = rng.permutation(q).astype(np.int64)
        a, b = both("word_stats", words, rank)
        assert same(a, b)


@pytest.mark.parametrize("n", [1, 4, 6, 12, 30])
def test_word_periods(n):
    rng = np.random.default_rng(n)
    base = rng.integers(0, 3, size=(200, n)).astype(np.uint8)
    # plant periodic words
    for i in range(0, 200, 4):
        d = divisors(n)[i % len(divisors(n))]
        base[i] = np.tile(base[i, :d], n // d)
    divs = np.asarray(divisors(n), dtype=np.int64)
    a, b = both("word_periods", base, divs)
    assert same(a, b)
    for w, p in zip(base, a):
        assert np.array_equal(w, np.roll(w, p))


@pytest.mark.parametrize("q", QS)
def test_poly_divmod(q):
    F = field_from_q(q)
    rng = np.random.default_rng(7 * q)
    for _ in range(30):
        num = rng.integers(0, q, size=rng.integers(1, 90)).astype(np.int64)
        den = rng.integers(0, q, size=rng.integers(1, 8)).astype(np.int64)
        den[-1] = rng.integers(1, q)
        args = (num, den, F.add_table, F.mul_table, F.neg_table, F.inv_table)
        a, b = both("poly_divmod", *args)
        assert same(a, b)


@pytest.mark.parametrize("q", QS)
def test_lfsr_kernels(q):
    F = field_from_q(q)
    rng = np.random.default_rng(11 * q)
    tables = (F.add_table, F.mul_table, F.neg_table)
    for k in (1, 2, 3):
        coeffs = rng.integers(0, q, size=k).astype(np.int64)
        coeffs[0] = rng.integers(1, q)  # invertible state map
        seed = rng.integers(0, q, size=k).astype(np.int64)
        a, b = both("lfsr_run", coeffs, seed, 50, *tables)
        assert same(a, b)
        a, b = both("lfsr_period", coeffs, seed, q**k, *tables)
        assert a == b and a >= 1


def test_backend_flag():
    assert _kernels.BACKEND in ("numba", "numpy")
    assert _kernels.IMPL is (_kernels.NUMBA_IMPL if _kernels.USE_NUMBA else _kernels.NUMPY_IMPL)


def test_numpy_backend_subprocess():
    import subprocess
    import sys

    code = "from cyclic_sieve import _kernels; print(_kernels.BACKEND)"
    env = {"CYCLIC_SIEVE_NUMBA": "0", "PATH": "/usr/bin:/bin"}
    import os

    env = dict(os.environ, CYCLIC_SIEVE_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    assert out.stdout.strip() == "numpy"
