"""Word statistics and their generating functions in Z[t] and Z[t]/(t^n - 1).

Statistics compare letters through an :class:`~cyclic_sieve.gf.AlphabetOrder`:

* ``maj``  -- sum of descent positions i (1-indexed) with w_i > w_(i+1)
* ``inv``  -- number of pairs i < j with w_i > w_j
* ``cdes`` -- descents counted cyclically, w_(n+1) := w_1
* ``wt``   -- number of nonzero letters (the number of ones for binary words)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .codes import Word, as_word_matrix, rotate
from .gf import AlphabetOrder, default_order

STATS = ("maj", "inv", "cdes", "wt")


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in t, optionally living in Z[t]/(t^n - 1).

    With ``mod_n`` set the exponents are always reduced below n.
    """

    coeffs: tuple[int, ...] = ()
    mod_n: int | None = None

    def __post_init__(self):
        coeffs = list(self.coeffs)
        if self.mod_n is not None:
            if self.mod_n < 1:
                raise ValueError("modulus exponent must be positive")
            folded = [0] * self.mod_n
            for e, c in enumerate(coeffs):
                folded[e % self.mod_n] += int(c)
            coeffs = folded
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, e: int, c: int = 1, mod_n: int | None = None) -> "IntPoly":
        if e < 0:
            if mod_n is None:
                raise ValueError("negative exponent outside Z[t]/(t^n-1)")
            e %= mod_n
        return cls((0,) * e + (c,), mod_n)

    @classmethod
    def from_exponents(cls, exps: Iterable[int], mod_n: int | None = None) -> "IntPoly":
        """sum over e in exps of t^e."""
        exps = np.asarray(list(exps) if not isinstance(exps, np.ndarray) else exps, dtype=np.int64)
        if exps.size == 0:
            return cls((), mod_n)
        if mod_n is not None:
            exps = exps % mod_n
        if exps.min() < 0:
            raise ValueError("negative exponent outside Z[t]/(t^n-1)")
        return cls(tuple(np.bincount(exps).tolist()), mod_n)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def padded(self, length: int | None = None) -> list[int]:
        length = length or self.mod_n or len(self.coeffs)
        return list(self.coeffs[:length]) + [0] * (length - len(self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if self.mod_n is not None and other.mod_n is not None and self.mod_n != other.mod_n:
            raise ValueError("polynomials reduced modulo different t^n - 1")
        n = self.mod_n if self.mod_n is not None else other.mod_n
        summed = [a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)]
        return IntPoly(tuple(summed), n)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs), self.mod_n)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs), self.mod_n)
        if self.mod_n is not None and other.mod_n is not None and self.mod_n != other.mod_n:
            raise ValueError("polynomials reduced modulo different t^n - 1")
        n = self.mod_n if self.mod_n is not None else other.mod_n
        if not self.coeffs or not other.coeffs:
            return IntPoly((), n)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out), n)

    __rmul__ = __mul__

    def shift(self, e: int) -> "IntPoly":
        """Multiply by t^e."""
        return IntPoly.monomial(e, 1, self.mod_n) * self

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mon:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            else:
                terms.append(f"{c}{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"mod_n": self.mod_n, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "IntPoly":
        return cls(tuple(int(c) for c in data["coeffs"]), data.get("mod_n"))


def reduce_mod(p: IntPoly, n: int) -> IntPoly:
    """Image of p in Z[t]/(t^n - 1): fold exponents mod n."""
    if p.mod_n is not None and p.mod_n != n:
        if p.mod_n % n:
            raise ValueError(f"cannot reduce mod t^{p.mod_n}-1 down to t^{n}-1")
    return IntPoly(p.coeffs, n)


def q_int(n: int, k: int = 1) -> IntPoly:
    """[n]_{t^k} = 1 + t^k + t^(2k) + ... + t^((n-1)k)."""
    if n < 1 or k < 0:
        raise ValueError("q_int needs n >= 1, k >= 0")
    return IntPoly.from_exponents([k * j for j in range(n)])


def int_divmod(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division in Z[t] by a monic divisor."""
    if not den.coeffs or den.coeffs[-1] != 1:
        raise ValueError("integer polynomial division needs a monic divisor")
    rem = list(num.coeffs)
    dd = den.degree
    if len(rem) - 1 < dd:
        return IntPoly(()), IntPoly(tuple(rem))
    quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quo[i - dd] = c
            for j, b in enumerate(den.coeffs):
                rem[i - dd + j] -= c * b
    return IntPoly(tuple(quo)), IntPoly(tuple(rem[:dd]))


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------


def _ranks(w: Word, order: AlphabetOrder | None):
    order = order or default_order(w.spec)
    return [order.rank[a] for a in w.entries]


def maj(w: Word, order: AlphabetOrder | None = None) -> int:
    r = _ranks(w, order)
    return sum(i + 1 for i in range(len(r) - 1) if r[i] > r[i + 1])


def inv(w: Word, order: AlphabetOrder | None = None) -> int:
    r = _ranks(w, order)
    n = len(r)
    return sum(1 for i in range(n) for j in range(i + 1, n) if r[i] > r[j])


def cdes(w: Word, order: AlphabetOrder | None = None) -> int:
    r = _ranks(w, order)
    n = len(r)
    return sum(1 for i in range(n) if r[i] > r[(i + 1) % n])


def wt(w: Word, order: AlphabetOrder | None = None) -> int:
    return sum(1 for a in w.entries if a != 0)


_STAT_FUNCS = {"maj": maj, "inv": inv, "cdes": cdes, "wt": wt}


def stat(w: Word, kind: str, order: AlphabetOrder | None = None) -> int:
    try:
        func = _STAT_FUNCS[kind]
    except KeyError:
        raise ValueError(f"unknown statistic {kind!r}; expected one of {STATS}") from None
    return func(w, order)


def stat_matrix(words: np.ndarray, order: AlphabetOrder) -> dict[str, np.ndarray]:
    """All four statistics for every row of a word matrix, via the kernels."""
    maj_, inv_, cdes_, wt_ = _kernels.word_stats(words, order.as_array())
    return {"maj": maj_, "inv": inv_, "cdes": cdes_, "wt": wt_}


def stat_values(words: np.ndarray, kind: str, order: AlphabetOrder) -> np.ndarray:
    if kind not in STATS:
        raise ValueError(f"unknown statistic {kind!r}; expected one of {STATS}")
    return stat_matrix(words, order)[kind]


def stat_gen_poly(words, kind: str, order: AlphabetOrder | None = None) -> IntPoly:
    """X^stat(t) = sum over the words of t^stat(w), exactly in Z[t]."""
    spec, matrix = as_word_matrix(words)
    if order is None:
        if spec is None:
            raise ValueError("an explicit order is needed for a bare word matrix")
        order = default_order(spec)
    return IntPoly.from_exponents(stat_values(matrix, kind, order))


def orbit_stat_poly(w: Word, kind: str, order: AlphabetOrder | None = None,
                    direction: str = "right") -> IntPoly:
    """sum_{j<n} t^stat(c^j(w)) over the full rotation sequence (in Z[t])."""
    exps = []
    u = w
    for _ in range(w.n):
        exps.append(stat(u, kind, order))
        u = rotate(u, 1, direction)
    return IntPoly.from_exponents(exps)
