import itertools

import numpy as np
import pytest

from cyclic_sieve.codes import (
    CyclicCode,
    Word,
    as_word_matrix,
    code_from_generator,
    code_from_parity_check,
    codeword_matrix,
    enumerate_codewords,
    fixed_point_profile,
    full_code,
    is_free_on_nonzero,
    is_free_on_nonzero_direct,
    is_rotation_stable,
    make_named,
    orbit_decomposition,
    orbit_size_counts,
    parity_check_code,
    poly_of_word,
    repetition_code,
    rotate,
    word_of_poly,
)
from cyclic_sieve.gf import field_from_q, make_field
from cyclic_sieve.polyring import (
    EnumerationCapError,
    Poly,
    enumerate_monic_irreducibles,
    is_primitive,
    monic_divisors_xn,
    parse_poly,
)

F2, F3 = make_field(2), make_field(3)


def words_of(code):
    return sorted(w.entries for w in enumerate_codewords(code))


def brute_force_code(code):
    """All words whose polynomial is divisible by g, by scanning F_q^n."""
    F = code.spec
    out = []
    for entries in itertools.product(range(F.q), repeat=code.n):
        if (Poly(F, entries) % code.g).is_zero():
            out.append(entries)
    return sorted(out)


def brute_force_orbits(words):
    words = set(words)
    sizes = []
    while words:
        w = min(words)
        orbit = {w[len(w) - s:] + w[:len(w) - s] for s in range(len(w))}
        sizes.append(len(orbit))
        words -= orbit
    return sorted(sizes)


def test_generator_examples():
    code = code_from_generator(parse_poly(F3, "x^6+2x^5+2x^4+2x^2+x+1"), 8)
    assert code.k == 2 and code.gperp == parse_poly(F3, "x^2+x+2")
    assert repetition_code(F3, 5).k == 1
    assert full_code(F3, 4).k == 4


def test_parity_check_examples():
    code = code_from_parity_check(parse_poly(F3, "x^2+x+2"), 8)
    assert code.k == 2 and code.g == parse_poly(F3, "x^6+2x^5+2x^4+2x^2+x+1")
    assert code_from_parity_check(Poly.xn_minus_1(F3, 4), 4).k == 4
    with pytest.raises(ValueError):
        code_from_generator(parse_poly(F3, "x^2+1"), 5)


def test_ternary_length_two_codes():
    # 1 + x generates the repetition code; as a parity check it gives the
    # parity-check code generated by (x^2 - 1)/(1 + x) = 1 + 2x
    rep = code_from_generator(parse_poly(F3, "1+x"), 2)
    assert words_of(rep) == [(0, 0), (1, 1), (2, 2)]
    par = code_from_parity_check(parse_poly(F3, "1+x"), 2)
    assert par.g == parse_poly(F3, "1+2x").monic()  # generators are stored monic
    assert words_of(par) == [(0, 0), (1, 2), (2, 1)]
    assert words_of(parity_check_code(F3, 2)) == [(0, 0), (1, 2), (2, 1)]


def test_dual_hamming_binary_k3_words():
    code = code_from_parity_check(parse_poly(F2, "x^3+x+1"), 7)
    assert code.g == parse_poly(F2, "1+x+x^2+x^4")
    w = (1, 1, 1, 0, 1, 0, 0)
    expected = sorted({(0,) * 7} | {w[7 - s:] + w[:7 - s] for s in range(7)})
    assert words_of(code) == expected


def test_word_poly_dictionary():
    assert word_of_poly(parse_poly(F3, "x^6+2x^4+x^2+2"), 8).entries == (2, 0, 1, 0, 2, 0, 1, 0)
    assert word_of_poly(parse_poly(F3, "x^6+x^5+2x^4+2x^2+2x+1"), 8).entries == (1, 2, 2, 0, 2, 1, 1, 0)
    assert word_of_poly(Poly.zero(F3), 5).entries == (0,) * 5
    for entries in itertools.product(range(3), repeat=4):
        w = Word(F3, entries)
        assert word_of_poly(poly_of_word(w), 4) == w
    with pytest.raises(ValueError):
        word_of_poly(parse_poly(F3, "x^5"), 5)


def test_word_formats():
    w = Word.parse(F3, "1,1,2,0,2,2,1,0")
    assert str(w) == "1,1,2,0,2,2,1,0"
    assert w.to_json() == {"n": 8, "entries": [1, 1, 2, 0, 2, 2, 1, 0]}
    assert Word.from_json(F3, w.to_json()) == w
    with pytest.raises(ValueError):
        Word(F3, [0, 3])
    with pytest.raises(ValueError):
        Word(F3, [])


def test_rotate():
    w = Word(F2, (1, 0, 1, 1, 0, 0))
    assert rotate(w, 1).entries == (0, 1, 0, 1, 1, 0)
    assert rotate(w, 1, "left").entries == (0, 1, 1, 0, 0, 1)
    assert rotate(w, 6) == w
    assert rotate(rotate(w, 1), 1, "left") == w
    with pytest.raises(ValueError):
        rotate(w, 1, "up")


@pytest.mark.parametrize("q,nmax", [(2, 9), (3, 5), (4, 4), (5, 3)])
def test_codes_match_brute_force(q, nmax):
    F = field_from_q(q)
    for n in range(1, nmax + 1):
        for g in monic_divisors_xn(F, n):
            code = code_from_generator(g, n)
            assert code.g * code.gperp == Poly.xn_minus_1(F, n)
            assert code.k == n - g.degree == code.gperp.degree
            words = codeword_matrix(code)
            assert len(words) == q**code.k
            assert sorted(map(tuple, words.tolist())) == brute_force_code(code)
            assert is_rotation_stable(words)
            assert is_rotation_stable(words[:, ::-1])  # reversal keeps stability
            sizes = orbit_size_counts(words)
            expanded = sorted(s for s, c in sizes.items() for _ in range(c))
            assert expanded == brute_force_orbits(map(tuple, words.tolist()))


def test_rotation_stability_detects_non_stable_sets():
    words = np.array([[0, 1, 1], [1, 1, 0]], dtype=np.uint8)
    assert not is_rotation_stable(words)
    with pytest.raises(ValueError):
        orbit_size_counts(words)


def test_orbit_decomposition_examples():
    assert orbit_decomposition(full_code(F2, 2)).sizes == [1, 1, 2]
    dh = code_from_parity_check(parse_poly(F3, "x^2+x+2"), 8)
    assert orbit_decomposition(dh).sizes == [1, 8]
    assert orbit_decomposition(repetition_code(F3, 2)).sizes == [1, 1, 1]
    decomp = orbit_decomposition(full_code(F2, 3))
    for orbit in decomp.orbits:
        assert orbit[0] == min(orbit, key=lambda w: w.entries)
        for a, b in zip(orbit, orbit[1:]):
            assert rotate(a, 1) == b
    # the two directions give the same partition
    left = orbit_decomposition(enumerate_codewords(full_code(F3, 3)), "left")
    right = orbit_decomposition(full_code(F3, 3))
    assert {frozenset(o) for o in left.orbits} == {frozenset(o) for o in right.orbits}


def test_fixed_point_profiles():
    dh = code_from_parity_check(parse_poly(F2, "x^3+x+1"), 7)
    assert fixed_point_profile(dh).counts == {1: 1, 7: 8}
    assert fixed_point_profile(full_code(F2, 2)).counts == {1: 2, 2: 4}
    prof = fixed_point_profile(repetition_code(F3, 2))
    assert prof.counts == {1: 3, 2: 3}
    assert prof[4] == prof[2] and prof[3] == prof[1]


@pytest.mark.parametrize("q,nmax", [(2, 10), (3, 6)])
def test_fixed_points_are_powers_of_q(q, nmax):
    F = field_from_q(q)
    for n in range(1, nmax + 1):
        for g in monic_divisors_xn(F, n):
            code = code_from_generator(g, n)
            words = codeword_matrix(code)
            prof = fixed_point_profile(words)
            assert prof.counts[n] == code.size
            for d, a in prof.counts.items():
                direct = int(np.all(words == np.roll(words, d, axis=1), axis=1).sum())
                assert a == direct
                assert q ** round(np.log(a) / np.log(q)) == a


def test_free_examples():
    assert is_free_on_nonzero(code_from_parity_check(parse_poly(F3, "x^2+x+2"), 8))
    assert not is_free_on_nonzero(code_from_parity_check(parse_poly(F3, "x^2+1"), 8))
    rep = code_from_generator(parse_poly(F3, "1+x"), 2)
    assert rep.gperp == parse_poly(F3, "x+2")
    assert not is_free_on_nonzero(rep)


@pytest.mark.parametrize("q", [2, 3])
def test_free_gcd_matches_direct(q):
    F = field_from_q(q)
    n = 1
    checked = 0
    while n <= 16:
        for g in monic_divisors_xn(F, n):
            code = code_from_generator(g, n)
            if code.size > 1 << 12:
                continue
            assert is_free_on_nonzero(code) == is_free_on_nonzero_direct(code), (n, g)
            checked += 1
        n += 1
    assert checked > 50


@pytest.mark.parametrize("q,kmax", [(2, 10), (3, 5)])
def test_dual_hamming_simply_transitive(q, kmax):
    F = field_from_q(q)
    for k in range(1, kmax + 1):
        for gperp in enumerate_monic_irreducibles(F, k):
            if not is_primitive(gperp):
                continue
            code = code_from_parity_check(gperp, q**k - 1)
            assert orbit_size_counts(codeword_matrix(code)) == ({1: 1, code.n: 1} if code.n > 1
                                                                 else {1: q})


def test_named_codes():
    f = parse_poly(F3, "x^2+x+2")
    dh = make_named("dual_hamming", F3, poly=f, k=2)
    assert (dh.n, dh.k) == (8, 2)
    ham = make_named("hamming", F3, poly=f)
    assert (ham.n, ham.k) == (8, 6)
    with pytest.raises(ValueError):
        make_named("dual_hamming", F3, poly=parse_poly(F3, "x^2+1"))
    with pytest.raises(ValueError):
        make_named("hamming", F3, n=7, poly=f)
    assert make_named("repetition", F3, n=4).k == 1
    assert make_named("parity_check", F3, n=4).k == 3
    assert make_named("full", F3, n=4).k == 4
    with pytest.raises(ValueError):
        make_named("golay", F3, n=4)


def test_enumeration_cap():
    code = full_code(F2, 12)
    with pytest.raises(EnumerationCapError):
        codeword_matrix(code, cap=1000)
    assert len(codeword_matrix(code, cap=4096)) == 4096


def test_code_json():
    code = code_from_parity_check(parse_poly(F3, "x^2+x+2"), 8)
    data = code.to_json()
    assert data["n"] == 8 and data["k"] == 2
    assert data["gperp"]["coeffs"] == [2, 1, 1]
    assert isinstance(code, CyclicCode)


def test_as_word_matrix():
    spec, m = as_word_matrix([Word(F2, (0, 1)), Word(F2, (1, 0))])
    assert spec == F2 and m.tolist() == [[0, 1], [1, 0]]
    with pytest.raises(ValueError):
        as_word_matrix([Word(F2, (0, 1)), Word(F2, (1,))])
    with pytest.raises(ValueError):
        as_word_matrix([])
