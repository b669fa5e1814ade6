"""Hot loops over word matrices, with a numba path and a pure-numpy path.

Words are rows of a 2-D ``uint8`` array holding field-element indices.
Every public function here has two implementations with identical output;
which one is used is fixed at import time:

* ``CYCLIC_SIEVE_NUMBA=0`` (or numba missing) -> numpy implementations,
* anything else -> numba ``@njit`` implementations.

Both are importable directly as ``NUMBA_IMPL`` / ``NUMPY_IMPL`` so tests and
the benchmark can compare them.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

_flag = os.environ.get("CYCLIC_SIEVE_NUMBA", "1").strip().lower()
USE_NUMBA = numba is not None and _flag not in ("0", "false", "no", "off")


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _span_words_np(rows, add, mul):
    """All F_q-combinations sum_i h_i * rows[i], row index sum_i h_i q^i."""
    q = add.shape[0]
    k, n = rows.shape
    add8 = add.astype(np.uint8)
    mul8 = mul.astype(np.uint8)
    out = np.zeros((1, n), dtype=np.uint8)
    for i in range(k):
        blocks = [add8[out, mul8[c, rows[i]][None, :]] for c in range(q)]
        out = np.concatenate(blocks, axis=0)
    return out


def _word_stats_np(words, rank):
    """(maj, inv, cdes, wt) per row, as int64 arrays."""
    m, n = words.shape
    r = rank[words]
    desc = r[:, :-1] > r[:, 1:]
    maj = desc.astype(np.int64) @ np.arange(1, n, dtype=np.int64)
    cdes = desc.sum(axis=1, dtype=np.int64) + (r[:, -1] > r[:, 0])
    wt = np.count_nonzero(words, axis=1).astype(np.int64)
    inv = np.zeros(m, dtype=np.int64)
    for v in range(len(rank) - 1):
        greater_before = np.cumsum(r > v, axis=1, dtype=np.int64)
        inv += np.where(r == v, greater_before, 0).sum(axis=1)
    return maj, inv, cdes, wt


def _word_periods_np(words, divisors):
    """Least d in ``divisors`` (ascending, ending with n) with c^d(w) = w."""
    m, n = words.shape
    period = np.full(m, n, dtype=np.int64)
    pending = np.arange(m)
    for d in divisors:
        if d >= n or pending.size == 0:
            break
        sub = words[pending]
        quick = sub[:, 0] == sub[:, d % n]
        cand = pending[quick]
        if cand.size:
            full = np.all(words[cand] == np.roll(words[cand], -d, axis=1), axis=1)
            hit = cand[full]
            period[hit] = d
            pending = np.setdiff1d(pending, hit, assume_unique=True)
    return period


def _poly_divmod_np(num, den, add, mul, neg, inv):
    """Long division of coefficient arrays (ascending, den monic-or-not)."""
    rem = num.astype(np.int64).copy()
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return np.zeros(0, dtype=np.int64), rem
    quo = np.zeros(len(rem) - dd, dtype=np.int64)
    lead_inv = inv[den[-1]]
    den = den.astype(np.int64)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = mul[rem[i], lead_inv]
        if c:
            quo[i - dd] = c
            rem[i - dd:i + 1] = add[rem[i - dd:i + 1], mul[neg[c], den]]
    return quo, rem[:dd]


def _lfsr_run_np(coeffs, seed, length, add, mul, neg):
    """s_0..s_(length-1) with s_(j+k) = -sum_i a_i s_(j+i)."""
    k = len(seed)
    a = coeffs.tolist()
    add_l, mul_l, neg_l = add.tolist(), mul.tolist(), neg.tolist()
    out = seed.tolist()[:length]
    while len(out) < length:
        j = len(out) - k
        acc = 0
        for i in range(k):
            acc = add_l[acc][mul_l[a[i]][out[j + i]]]
        out.append(neg_l[acc])
    return np.asarray(out, dtype=np.int64)


def _lfsr_period_np(coeffs, seed, limit, add, mul, neg):
    """Least r >= 1 with T^r(seed) = seed, or -1 if none within ``limit`` steps."""
    k = len(seed)
    a = coeffs.tolist()
    add_l, mul_l, neg_l = add.tolist(), mul.tolist(), neg.tolist()
    start = seed.tolist()
    state = list(start)
    for r in range(1, limit + 1):
        acc = 0
        for i in range(k):
            acc = add_l[acc][mul_l[a[i]][state[i]]]
        state = state[1:] + [neg_l[acc]]
        if state == start:
            return r
    return -1


NUMPY_IMPL = {
    "span_words": _span_words_np,
    "word_stats": _word_stats_np,
    "word_periods": _word_periods_np,
    "poly_divmod": _poly_divmod_np,
    "lfsr_run": _lfsr_run_np,
    "lfsr_period": _lfsr_period_np,
}


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

NUMBA_IMPL = None

if numba is not None:
    njit = numba.njit(cache=True, nogil=True)

    @njit
    def _span_words_nb(rows, add, mul):
        q = add.shape[0]
        k, n = rows.shape
        total = q**k
        out = np.zeros((total, n), dtype=np.uint8)
        size = 1
        for i in range(k):
            for c in range(1, q):
                base = c * size
                for s in range(size):
                    for j in range(n):
                        out[base + s, j] = add[out[s, j], mul[c, rows[i, j]]]
            size *= q
        return out

    @njit
    def _word_stats_nb(words, rank):
        m, n = words.shape
        q = rank.shape[0]
        maj = np.zeros(m, dtype=np.int64)
        inv = np.zeros(m, dtype=np.int64)
        cdes = np.zeros(m, dtype=np.int64)
        wt = np.zeros(m, dtype=np.int64)
        # greater[v]: letters seen so far with rank > v
        greater = np.zeros(q, dtype=np.int64)
        rr = np.empty(n, dtype=np.int64)
        for row in range(m):
            w = words[row]
            for j in range(n):
                rr[j] = rank[w[j]]
            greater[:] = 0
            b = 0
            for j in range(n):
                r = rr[j]
                b += greater[r]
                for v in range(r):
                    greater[v] += 1
            a = 0
            c = 0
            for j in range(n - 1):
                d = np.int64(rr[j] > rr[j + 1])
                a += (j + 1) * d
                c += d
            c += np.int64(rr[n - 1] > rr[0])
            nz = 0
            for j in range(n):
                nz += np.int64(w[j] != 0)
            maj[row] = a
            inv[row] = b
            cdes[row] = c
            wt[row] = nz
        return maj, inv, cdes, wt

    @njit
    def _word_periods_nb(words, divisors):
        m, n = words.shape
        period = np.empty(m, dtype=np.int64)
        for row in range(m):
            period[row] = n
            for d in divisors:
                if d >= n:
                    break
                ok = True
                for j in range(n):
                    jj = j + d
                    if jj >= n:
                        jj -= n
                    if words[row, j] != words[row, jj]:
                        ok = False
                        break
                if ok:
                    period[row] = d
                    break
        return period

    @njit
    def _poly_divmod_nb(num, den, add, mul, neg, inv):
        rem = num.astype(np.int64).copy()
        dd = den.shape[0] - 1
        if rem.shape[0] - 1 < dd:
            return np.zeros(0, dtype=np.int64), rem
        quo = np.zeros(rem.shape[0] - dd, dtype=np.int64)
        lead_inv = inv[den[-1]]
        for i in range(rem.shape[0] - 1, dd - 1, -1):
            c = mul[rem[i], lead_inv]
            if c != 0:
                quo[i - dd] = c
                nc = neg[c]
                for j in range(dd + 1):
                    rem[i - dd + j] = add[rem[i - dd + j], mul[nc, den[j]]]
        return quo, rem[:dd].copy()

    @njit
    def _lfsr_run_nb(coeffs, seed, length, add, mul, neg):
        k = seed.shape[0]
        out = np.zeros(length, dtype=np.int64)
        for j in range(min(k, length)):
            out[j] = seed[j]
        for j in range(k, length):
            acc = 0
            for i in range(k):
                acc = add[acc, mul[coeffs[i], out[j - k + i]]]
            out[j] = neg[acc]
        return out

    @njit
    def _lfsr_period_nb(coeffs, seed, limit, add, mul, neg):
        k = seed.shape[0]
        state = seed.copy()
        for r in range(1, limit + 1):
            acc = 0
            for i in range(k):
                acc = add[acc, mul[coeffs[i], state[i]]]
            for i in range(k - 1):
                state[i] = state[i + 1]
            state[k - 1] = neg[acc]
            same = True
            for i in range(k):
                if state[i] != seed[i]:
                    same = False
                    break
            if same:
                return r
        return -1

    NUMBA_IMPL = {
        "span_words": _span_words_nb,
        "word_stats": _word_stats_nb,
        "word_periods": _word_periods_nb,
        "poly_divmod": _poly_divmod_nb,
        "lfsr_run": _lfsr_run_nb,
        "lfsr_period": _lfsr_period_nb,
    }


IMPL = NUMBA_IMPL if USE_NUMBA else NUMPY_IMPL
BACKEND = "numba" if USE_NUMBA else "numpy"


def span_words(rows: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows, dtype=np.uint8)
    return IMPL["span_words"](rows, np.ascontiguousarray(add), np.ascontiguousarray(mul))


def word_stats(words: np.ndarray, rank: np.ndarray):
    words = np.ascontiguousarray(words, dtype=np.uint8)
    return IMPL["word_stats"](words, np.ascontiguousarray(rank, dtype=np.int64))


def word_periods(words: np.ndarray, divisors) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype=np.uint8)
    divs = np.asarray(sorted(divisors), dtype=np.int64)
    return IMPL["word_periods"](words, divs)


def poly_divmod(num, den, add, mul, neg, inv):
    return IMPL["poly_divmod"](
        np.asarray(num, dtype=np.int64), np.asarray(den, dtype=np.int64), add, mul, neg, inv
    )


def _lfsr_args(coeffs, seed):
    return np.asarray(coeffs, dtype=np.int64), np.asarray(seed, dtype=np.int64)


def lfsr_run(coeffs, seed, length: int, add, mul, neg) -> np.ndarray:
    """Output sequence of the register with feedback coefficients a_0..a_(k-1)."""
    a, s = _lfsr_args(coeffs, seed)
    return IMPL["lfsr_run"](a, s, int(length), add, mul, neg)


def lfsr_period(coeffs, seed, limit: int, add, mul, neg) -> int:
    a, s = _lfsr_args(coeffs, seed)
    return int(IMPL["lfsr_period"](a, s, int(limit), add, mul, neg))
