import itertools

import numpy as np
import pytest

from cyclic_sieve.codes import code_from_parity_check, word_of_poly
from cyclic_sieve.gf import field_from_q, make_field
from cyclic_sieve.lfsr import (
    EquivalenceRecord,
    Lfsr,
    equivalence_suite,
    format_sequence,
    period,
    sequence,
    step,
    window_property,
)
from cyclic_sieve.polyring import (
    EnumerationCapError,
    Poly,
    enumerate_monic_irreducibles,
    order_of_x,
    parse_poly,
)

F2, F3 = make_field(2), make_field(3)


def reg(F, text):
    return Lfsr.of(parse_poly(F, text))


def companion_power_order(f):
    """Least r with C^r = I for the companion matrix of f, by matrix powers."""
    F = f.spec
    k = f.degree
    C = np.zeros((k, k), dtype=np.int64)
    for i in range(k - 1):
        C[i, i + 1] = 1
    for j in range(k):
        C[k - 1, j] = F.neg(f.coeffs[j])
    mul, add = F.mul_table, F.add_table

    def matmul(A, B):
        out = np.zeros_like(A)
        for i in range(k):
            for j in range(k):
                acc = 0
                for t in range(k):
                    acc = add[acc, mul[A[i, t], B[t, j]]]
                out[i, j] = acc
        return out

    eye = np.eye(k, dtype=np.int64)
    M, r = C.copy(), 1
    while not np.array_equal(M, eye):
        M = matmul(M, C)
        r += 1
    return r


def test_step_examples():
    assert step(reg(F3, "x^2+x+2"), (0, 1)) == (1, 2)
    assert step(reg(F3, "x^2+1"), (0, 1)) == (1, 0)
    assert step(reg(F3, "x^2+x+2"), (0, 0)) == (0, 0)
    with pytest.raises(ValueError):
        step(reg(F3, "x^2+1"), (0, 1, 2))


def test_sequence_and_period_examples():
    r = reg(F3, "x^2+x+2")
    assert sequence(r, (0, 1), 16) == [0, 1, 2, 2, 0, 2, 1, 1] * 2
    assert period(r, (0, 1)) == 8
    r = reg(F3, "x^2+1")
    assert sequence(r, (0, 1), 8) == [0, 1, 0, 2] * 2
    assert period(r, (0, 1)) == 4
    assert sequence(r, (0, 0), 5) == [0] * 5
    assert period(r, (0, 0)) == 1
    assert sequence(r, (0, 1), 1) == [0]


def test_sequence_windows_are_iterates():
    r = reg(field_from_q(4), "x^3+x+2")
    seq = r.sequence((1, 0, 3), 40)
    state = (1, 0, 3)
    for i in range(38):
        assert tuple(seq[i:i + 3]) == state
        state = r.step(state)


def test_singular_register():
    r = reg(F3, "x^2+x")  # f(0) = 0, T is not invertible
    with pytest.raises(ValueError):
        r.period((1, 1))


def test_lfsr_validation():
    with pytest.raises(ValueError):
        Lfsr.of(parse_poly(F3, "2x^2+1"))
    with pytest.raises(ValueError):
        Lfsr.of(Poly.one(F3))
    with pytest.raises(ValueError):
        reg(F3, "x^2+1").sequence((0, 3), 4)


def test_window_property_examples():
    assert window_property(reg(F3, "x^2+x+2"))
    assert not window_property(reg(F3, "x^2+1"))
    assert window_property(reg(F2, "x^3+x+1"))
    with pytest.raises(EnumerationCapError):
        reg(F2, "x^3+x+1").window_property(cap=4)


def test_window_property_brute_force():
    # windows of one period of the x^3+x+1 sequence, computed by hand-rolled recurrence
    s = [0, 0, 1]
    while len(s) < 7 + 2:
        s.append((s[-3] + s[-2]) % 2)  # s_(j+3) = -(s_j + s_(j+1)) over F_2
    ext = s[:7] + s[:2]
    windows = {tuple(ext[i:i + 3]) for i in range(7)}
    assert windows == set(itertools.product((0, 1), repeat=3)) - {(0, 0, 0)}
    assert reg(F2, "x^3+x+1").sequence((0, 0, 1), 9) == s


def test_equivalence_examples():
    rec = equivalence_suite(parse_poly(F3, "x^2+x+2"))
    assert rec.values == (True,) * 7 and rec.reverse_check
    w = word_of_poly(code_from_parity_check(parse_poly(F3, "x^2+x+2"), 8).g, 8).entries
    assert w == (1, 1, 2, 0, 2, 2, 1, 0)
    assert list(reversed(w)) == [0, 1, 2, 2, 0, 2, 1, 1]
    rec = equivalence_suite(parse_poly(F3, "x^2+1"))
    assert rec.values == (False,) * 7 and rec.reverse_check
    rec = equivalence_suite(parse_poly(F2, "x^3+x+1"))
    assert rec.all_agree and rec.primitive
    assert isinstance(rec, EquivalenceRecord)


def test_equivalence_errors():
    with pytest.raises(ValueError):
        equivalence_suite(parse_poly(F2, "x^2+1"))
    with pytest.raises(ValueError):
        equivalence_suite(parse_poly(F2, "x"))


@pytest.mark.parametrize("q,kmax", [(2, 4), (3, 4), (4, 3), (5, 3)])
def test_state_map_order_equals_order_of_x(q, kmax):
    F = field_from_q(q)
    for k in range(1, kmax + 1):
        for f in enumerate_monic_irreducibles(F, k):
            if f.coeffs == (0, 1):
                continue
            r = Lfsr.of(f).order()
            assert r == order_of_x(f)
            if q ** k <= 64:
                assert r == companion_power_order(f)


@pytest.mark.parametrize("q,kmax", [(2, 8), (3, 5), (4, 3), (5, 3)])
def test_recurrence_identity(q, kmax):
    """Coefficient of x^m in g * gperp vanishes for 1 <= m <= n-1, read as a
    recurrence on the codeword w of g."""
    F = field_from_q(q)
    for k in range(1, kmax + 1):
        n = q**k - 1
        for gperp in enumerate_monic_irreducibles(F, k):
            if gperp.coeffs == (0, 1):
                continue
            a = gperp.coeffs
            w = word_of_poly(code_from_parity_check(gperp, n).g, n).entries

            def W(j):  # 1-indexed, zero outside 1..n
                return w[j - 1] if 1 <= j <= n else 0

            for m in range(1, n):
                acc = 0
                for i in range(k):  # a_i pairs with w_(m-i+1)
                    acc = F.add(acc, F.mul(a[i], W(m - i + 1)))
                assert W(m - k + 1) == F.neg(acc), (gperp, m)


def test_format_sequence():
    assert format_sequence([0, 1, 0, 2, 0, 1, 0, 2], 4) == "0,1,0,2\n0,1,0,2"
    assert format_sequence([0, 1, 2]) == "0,1,2"
    assert format_sequence([0, 1, 2, 0, 1], 3) == "0,1,2\n0,1"
