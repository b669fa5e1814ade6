import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_sieve.codes import Word, full_code, repetition_code, rotate
from cyclic_sieve.gf import AlphabetOrder, all_orders, field_from_q, make_field
from cyclic_sieve.wordstats import (
    IntPoly,
    int_divmod,
    orbit_stat_poly,
    q_int,
    reduce_mod,
    stat,
    stat_gen_poly,
    stat_matrix,
)

F2, F3 = make_field(2), make_field(3)


def naive(w, order):
    """Statistics straight from their definitions, on ranks."""
    r = [order.rank[a] for a in w]
    n = len(r)
    maj = sum(i + 1 for i in range(n - 1) if r[i] > r[i + 1])
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if r[i] > r[j])
    cdes = sum(1 for i in range(n) if r[i] > r[(i + 1) % n])
    wt = sum(1 for a in w if a)
    return {"maj": maj, "inv": inv, "cdes": cdes, "wt": wt}


def test_orbit_sums_101100():
    w = Word(F2, (1, 0, 1, 1, 0, 0))
    assert [stat(w, k) for k in ("maj", "inv", "cdes", "wt")] == [5, 7, 2, 3]


def test_constant_words():
    for a in range(3):
        w = Word(F3, (a,) * 5)
        assert stat(w, "maj") == stat(w, "inv") == stat(w, "cdes") == 0


def test_ternary_cdes():
    assert stat(Word(F3, (1, 1, 2, 0, 2, 2, 1, 0)), "cdes") == 3


def test_unknown_stat():
    with pytest.raises(ValueError):
        stat(Word(F2, (0, 1)), "des")


@pytest.mark.parametrize("q,nmax", [(2, 8), (3, 5), (4, 4)])
def test_kernel_stats_match_definitions(q, nmax):
    F = field_from_q(q)
    for n in range(1, nmax + 1):
        words = np.array(list(itertools.product(range(q), repeat=n)), dtype=np.uint8)
        for order in all_orders(F):
            got = stat_matrix(words, order)
            for i, w in enumerate(words.tolist()):
                exp = naive(w, order)
                assert {k: int(v[i]) for k, v in got.items()} == exp


def test_gen_poly_examples():
    assert stat_gen_poly(full_code(F2, 2), "maj").coeffs == (3, 1)
    for kind in ("maj", "inv", "cdes"):
        assert stat_gen_poly(repetition_code(F3, 2), kind).coeffs == (3,)
    assert stat_gen_poly(full_code(F3, 2), "maj").coeffs == (6, 3)
    # at t = 1 the generating polynomial counts the set
    assert stat_gen_poly(full_code(F3, 4), "inv")(1) == 81


def test_gen_poly_needs_order_for_bare_matrix():
    with pytest.raises(ValueError):
        stat_gen_poly(np.zeros((1, 3), dtype=np.uint8), "maj")


def test_orbit_stat_poly_examples():
    w = Word(F2, (1, 0, 1, 1, 0, 0))
    maj = reduce_mod(orbit_stat_poly(w, "maj"), 6)
    inv = reduce_mod(orbit_stat_poly(w, "inv"), 6)
    assert maj == reduce_mod(q_int(6, 2).shift(5), 6)
    assert inv == reduce_mod(q_int(6, 3).shift(7), 6)
    assert maj != inv
    assert orbit_stat_poly(Word(F3, (2, 2, 2)), "maj").coeffs == (3,)


def test_q_int_and_reduce():
    assert q_int(6, 2).coeffs == (1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1)
    assert reduce_mod(q_int(6, 2), 6).coeffs == (2, 0, 2, 0, 2)
    assert reduce_mod(q_int(5, 10), 5).coeffs == (5,)
    for n in range(1, 10):
        for k in range(1, 2 * n):
            if np.gcd(k, n) == 1:
                for ell in range(n):
                    assert reduce_mod(q_int(n, k).shift(ell), n) == reduce_mod(q_int(n), n)
    with pytest.raises(ValueError):
        q_int(0)


def test_q_int_complement_identity():
    # [n]_{t^s} and [n]_{t^(n-s)} have the same exponents mod n
    for n in range(1, 13):
        for s in range(n + 1):
            assert reduce_mod(q_int(n, s), n) == reduce_mod(q_int(n, n - s), n)


def test_intpoly_basics():
    p = IntPoly((1, 2, 3))
    assert str(p) == "1 + 2t + 3t^2"
    assert str(IntPoly((0, -1))) == "-1t"
    assert p(2) == 17
    assert (p - p).coeffs == ()
    assert (p * 2).coeffs == (2, 4, 6)
    assert IntPoly((1, 2, 3), 2).coeffs == (4, 2)
    assert IntPoly.from_json(p.to_json()) == p
    assert IntPoly.from_json(IntPoly((1, 1), 3).to_json()).mod_n == 3
    with pytest.raises(ValueError):
        IntPoly((1,), 2) + IntPoly((1,), 3)
    with pytest.raises(ValueError):
        reduce_mod(IntPoly((1,), 4), 3)
    with pytest.raises(ValueError):
        IntPoly.monomial(-1)
    assert IntPoly.monomial(-1, 1, 4).coeffs == (0, 0, 0, 1)


def test_int_divmod():
    num = IntPoly((-1, 0, 0, 1))  # t^3 - 1
    quo, rem = int_divmod(num, IntPoly((-1, 1)))
    assert quo.coeffs == (1, 1, 1) and rem.coeffs == ()
    with pytest.raises(ValueError):
        int_divmod(num, IntPoly((1, 2)))


coeff_lists = st.lists(st.integers(-50, 50), max_size=12)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(1, 9))
def test_reduce_is_idempotent_ring_homomorphism(a, b, n):
    A, B = IntPoly(tuple(a)), IntPoly(tuple(b))
    assert reduce_mod(reduce_mod(A, n), n) == reduce_mod(A, n)
    assert reduce_mod(A + B, n) == reduce_mod(A, n) + reduce_mod(B, n)
    assert reduce_mod(A * B, n) == reduce_mod(A, n) * reduce_mod(B, n)
    if reduce_mod(A, n).coeffs:
        assert reduce_mod(A, n).degree < n


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=10), st.permutations([0, 1, 2]))
def test_cdes_and_wt_constant_on_orbits(entries, perm):
    order = AlphabetOrder.from_sequence(perm)
    w = Word(F3, entries)
    for s in range(w.n):
        u = rotate(w, s)
        assert stat(u, "cdes", order) == stat(w, "cdes", order)
        assert stat(u, "wt", order) == stat(w, "wt", order)


@pytest.mark.parametrize("n", range(1, 11))
def test_free_orbit_congruences_binary(n):
    """For free orbits: orbit sum of t^maj = t^maj(w) [n]_{t^cdes(w)} and the
    inversion analogue with wt(w), modulo t^n - 1."""
    for entries in itertools.product((0, 1), repeat=n):
        w = Word(F2, entries)
        if len({rotate(w, s) for s in range(n)}) != n:
            continue
        maj = reduce_mod(orbit_stat_poly(w, "maj"), n)
        assert maj == reduce_mod(q_int(n, stat(w, "cdes")).shift(stat(w, "maj")), n)
        inv = reduce_mod(orbit_stat_poly(w, "inv"), n)
        assert inv == reduce_mod(q_int(n, stat(w, "wt")).shift(stat(w, "inv")), n)
