"""Linear feedback shift registers over F_q.

For monic f = a_0 + a_1 x + ... + a_(k-1) x^(k-1) + x^k the register maps
(x_0, ..., x_(k-1)) to (x_1, ..., x_(k-1), x_new) with

    x_new = -(a_0 x_0 + a_1 x_1 + ... + a_(k-1) x_(k-1)),

the companion-matrix recurrence. With f = x^2 + x + 2 over F_3 and seed
(0, 1) this produces 0, 1, 2, 2, 0, 2, 1, 1, 0, 1, ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .codes import code_from_parity_check, codeword_matrix, is_free_on_nonzero, word_of_poly
from .gf import FieldSpec
from .polyring import Poly, check_cap, divisors, is_irreducible, is_primitive


@dataclass(frozen=True)
class Lfsr:
    spec: FieldSpec
    f: Poly

    def __post_init__(self):
        if self.f.degree < 1 or not self.f.is_monic():
            raise ValueError("an LFSR needs a monic polynomial of degree >= 1")

    @classmethod
    def of(cls, f: Poly) -> "Lfsr":
        return cls(f.spec, f)

    @property
    def k(self) -> int:
        return self.f.degree

    @property
    def unit_seed(self) -> tuple[int, ...]:
        return (0,) * (self.k - 1) + (1,)

    def feedback(self, state) -> int:
        F = self.spec
        acc = 0
        for a, x in zip(self.f.coeffs, state):
            acc = F.add(acc, F.mul(a, x))
        return F.neg(acc)

    def step(self, state) -> tuple[int, ...]:
        state = self._check_state(state)
        return state[1:] + (self.feedback(state),)

    def iterates(self, seed):
        state = tuple(seed)
        while True:
            yield state
            state = self.step(state)

    def _check_state(self, state, what="state") -> tuple[int, ...]:
        state = tuple(int(a) for a in state)
        if len(state) != self.k:
            raise ValueError(f"{what} has length {len(state)}, expected {self.k}")
        for a in state:
            self.spec.check(a)
        return state

    def _tables(self):
        F = self.spec
        return F.add_table, F.mul_table, F.neg_table

    def sequence(self, seed, length: int) -> list[int]:
        """s_0, s_1, ... whose length-k windows are the iterates of the seed."""
        seed = self._check_state(seed, "seed")
        if length < 0:
            raise ValueError("length must be non-negative")
        out = _kernels.lfsr_run(self.f.coeffs[:self.k], seed, length, *self._tables())
        return out.tolist()

    def period(self, seed) -> int:
        """Least r >= 1 with T^r(seed) = seed."""
        seed = self._check_state(seed, "seed")
        r = _kernels.lfsr_period(self.f.coeffs[:self.k], seed, self.spec.q**self.k,
                                 *self._tables())
        if r < 0:
            # f(0) = 0 makes T singular; the seed may never come back
            raise ValueError("seed is not on a cycle of the register")
        return r

    def order(self) -> int:
        """Least r with T^r = identity: lcm of the periods of the basis vectors."""
        r = 1
        for i in range(self.k):
            e = tuple(1 if j == i else 0 for j in range(self.k))
            r = math.lcm(r, self.period(e))
        return r

    def window_property(self, cap: int | None = None) -> bool:
        """Seed (0,...,0,1) gives a (q^k - 1)-periodic sequence whose cyclic
        length-k windows in one period are exactly the nonzero vectors."""
        n = self.spec.q**self.k - 1
        check_cap(n + 1, "LFSR window check", cap)
        seed = self.unit_seed
        seq = self.sequence(seed, n + self.k)
        if tuple(seq[n:n + self.k]) != seed:
            return False
        return _windows_are_nonzero_vectors(seq[:n], self.k, self.spec.q)


def _windows_are_nonzero_vectors(period, k: int, q: int) -> bool:
    """Do the cyclic length-k windows of ``period`` hit every nonzero vector once?"""
    n = len(period)
    if n != q**k - 1:
        return False
    ext = list(period) + list(period[:k - 1])
    seen = set()
    for r in range(n):
        win = tuple(ext[r:r + k])
        if not any(win) or win in seen:
            return False
        seen.add(win)
    return True


def step(lfsr: Lfsr, state) -> tuple[int, ...]:
    return lfsr.step(state)


def sequence(lfsr: Lfsr, seed, length: int) -> list[int]:
    return lfsr.sequence(seed, length)


def period(lfsr: Lfsr, seed) -> int:
    return lfsr.period(seed)


def window_property(lfsr: Lfsr) -> bool:
    return lfsr.window_property()


@dataclass
class EquivalenceRecord:
    """The seven conditions characterizing primitive parity check polynomials,
    each computed on its own, plus the reversed-codeword check."""

    gperp: list[int]
    simply_transitive: bool
    gcd_condition: bool
    primitive: bool
    lfsr_order_n: bool
    iterates_exhaust: bool
    window_property: bool
    codeword_windows: bool
    reverse_check: bool

    CONDITIONS = ("simply_transitive", "gcd_condition", "primitive", "lfsr_order_n",
                  "iterates_exhaust", "window_property", "codeword_windows")

    @property
    def values(self) -> tuple[bool, ...]:
        return tuple(getattr(self, c) for c in self.CONDITIONS)

    @property
    def all_agree(self) -> bool:
        return len(set(self.values)) == 1


def equivalence_suite(gperp: Poly, cap: int | None = None) -> EquivalenceRecord:
    F = gperp.spec
    k = gperp.degree
    n = F.q**k - 1
    check_cap(F.q**k, "equivalence suite", cap)
    if not gperp.is_monic() or not is_irreducible(gperp):
        raise ValueError(f"{gperp} is not monic irreducible")
    if gperp.coeffs == (0, 1):
        raise ValueError("x does not divide x^n - 1")
    # raises if gperp does not divide x^n - 1
    code = code_from_parity_check(gperp, n)
    reg = Lfsr.of(gperp)

    # (i) orbit sizes of the nonzero codewords
    words = codeword_matrix(code, cap)
    nonzero = words[np.any(words != 0, axis=1)]
    periods = _kernels.word_periods(nonzero, divisors(n))
    simply_transitive = len(nonzero) == n and bool(np.all(periods == n))

    # (v) iterates of the unit seed, read off as the length-k windows
    seq = reg.sequence(reg.unit_seed, n + k - 1)
    iterates = {tuple(seq[r:r + k]) for r in range(n)}
    iterates_exhaust = len(iterates) == n and (0,) * k not in iterates

    # (vii) cyclic windows of the generator's codeword
    w = word_of_poly(code.g, n).entries
    codeword_windows = _windows_are_nonzero_vectors(w, k, F.q)

    return EquivalenceRecord(
        gperp=list(gperp.coeffs),
        simply_transitive=simply_transitive,
        gcd_condition=is_free_on_nonzero(code),
        primitive=is_primitive(gperp),
        lfsr_order_n=reg.order() == n,
        iterates_exhaust=iterates_exhaust,
        window_property=reg.window_property(cap),
        codeword_windows=codeword_windows,
        reverse_check=list(reversed(w)) == seq[:n],
    )


def format_sequence(seq, period_len: int | None = None) -> str:
    """Comma-separated indices, one period per line when ``period_len`` is given."""
    seq = list(seq)
    if not period_len:
        return ",".join(map(str, seq))
    return "\n".join(",".join(map(str, seq[i:i + period_len]))
                     for i in range(0, len(seq), period_len))
