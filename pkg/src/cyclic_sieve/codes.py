"""Cyclic codes as ideals of F_q[x]/(x^n - 1).

A word (w_1, ..., w_n) corresponds to the polynomial w_1 + w_2 x + ... + w_n x^(n-1).
The canonical rotation is the right shift c(w) = (w_n, w_1, ..., w_(n-1)),
which is multiplication by x in the quotient ring.

Large word sets are handled as ``uint8`` matrices (one word per row); the
:class:`Word` type is for single words and small listings.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .gf import FieldSpec
from .polyring import (
    Poly,
    check_cap,
    divisors,
    gcd,
    is_primitive,
    quotient_xn,
)


@dataclass(frozen=True)
class Word:
    spec: FieldSpec
    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("words have length >= 1")
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        for a in self.entries:
            self.spec.check(a)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return ",".join(map(str, self.entries))

    def to_json(self) -> dict:
        return {"n": self.n, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, spec: FieldSpec, data: dict) -> "Word":
        w = cls(spec, data["entries"])
        if w.n != data["n"]:
            raise ValueError("word JSON length mismatch")
        return w

    @classmethod
    def parse(cls, spec: FieldSpec, text: str) -> "Word":
        return cls(spec, [int(a) for a in text.split(",")])


@dataclass(frozen=True)
class CyclicCode:
    """The code generated by ``g`` inside F_q[x]/(x^n - 1).

    ``gperp`` is the parity check polynomial (x^n - 1)/g and ``k`` the
    dimension n - deg g.
    """

    spec: FieldSpec
    n: int
    g: Poly
    gperp: Poly
    k: int

    @property
    def size(self) -> int:
        return self.spec.q**self.k

    def __str__(self):
        return f"cyclic code over {self.spec}, n={self.n}, k={self.k}, g={self.g}, gperp={self.gperp}"

    def to_json(self) -> dict:
        return {
            "q": self.spec.q,
            "n": self.n,
            "k": self.k,
            "g": self.g.to_json(),
            "gperp": self.gperp.to_json(),
        }


def code_from_generator(g: Poly, n: int) -> CyclicCode:
    if n < 1:
        raise ValueError("code length must be positive")
    g = g.monic()
    gperp = quotient_xn(g, n)
    return CyclicCode(g.spec, n, g, gperp, n - g.degree)


def code_from_parity_check(gperp: Poly, n: int) -> CyclicCode:
    if n < 1:
        raise ValueError("code length must be positive")
    gperp = gperp.monic()
    g = quotient_xn(gperp, n).monic()
    return CyclicCode(g.spec, n, g, gperp, gperp.degree)


def word_of_poly(f: Poly, n: int) -> Word:
    if f.degree >= n:
        raise ValueError(f"degree {f.degree} does not fit in length {n}")
    return Word(f.spec, [f[i] for i in range(n)])


def poly_of_word(w: Word) -> Poly:
    return Poly(w.spec, w.entries)


def generator_rows(code: CyclicCode) -> np.ndarray:
    """k x n matrix whose rows are the words of x^i g(x), i < k."""
    rows = np.zeros((code.k, code.n), dtype=np.uint8)
    gc = np.asarray(code.g.coeffs, dtype=np.uint8)
    for i in range(code.k):
        rows[i, i:i + len(gc)] = gc
    return rows


def codeword_matrix(code: CyclicCode, cap: int | None = None) -> np.ndarray:
    """All q^k codewords h*g (deg h < k) as rows; row index = sum h_i q^i."""
    check_cap(code.size, f"codewords of {code}", cap)
    F = code.spec
    return _kernels.span_words(generator_rows(code), F.add_table, F.mul_table)


def enumerate_codewords(code: CyclicCode, cap: int | None = None) -> list[Word]:
    words = codeword_matrix(code, cap)
    out = [Word(code.spec, row.tolist()) for row in words]
    if len(set(out)) != code.size:
        raise AssertionError("codeword enumeration produced duplicates")
    return out


def rotate(w: Word, steps: int = 1, direction: str = "right") -> Word:
    """c^steps(w); right: (w_n, w_1, ...), left: (w_2, ..., w_n, w_1)."""
    if direction not in ("right", "left"):
        raise ValueError("direction must be 'right' or 'left'")
    s = steps % w.n
    if direction == "left":
        s = (-s) % w.n
    e = w.entries
    return Word(w.spec, e[w.n - s:] + e[:w.n - s])


def rotate_rows(words: np.ndarray, steps: int = 1, direction: str = "right") -> np.ndarray:
    return np.roll(words, steps if direction == "right" else -steps, axis=1)


# ---------------------------------------------------------------------------
# word collections
# ---------------------------------------------------------------------------


def as_word_matrix(X, cap: int | None = None) -> tuple[FieldSpec | None, np.ndarray]:
    """Normalize a code, a word matrix or an iterable of Words to a matrix."""
    if isinstance(X, CyclicCode):
        return X.spec, codeword_matrix(X, cap)
    if isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise ValueError("word matrix must be 2-D")
        return None, np.ascontiguousarray(X, dtype=np.uint8)
    words = list(X)
    if not words:
        raise ValueError("empty word set")
    n = words[0].n
    if any(w.n != n for w in words):
        raise ValueError("words of different lengths")
    return words[0].spec, np.array([w.entries for w in words], dtype=np.uint8)


def is_rotation_stable(words: np.ndarray) -> bool:
    present = {row.tobytes() for row in words}
    return all(row.tobytes() in present for row in rotate_rows(words, 1))


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[tuple[Word, ...], ...]

    @property
    def sizes(self) -> list[int]:
        return sorted(len(o) for o in self.orbits)

    def size_counts(self) -> Counter:
        return Counter(len(o) for o in self.orbits)


def orbit_decomposition(X, direction: str = "right") -> OrbitDecomposition:
    """Rotation orbits, each starting at its smallest word (entry-index order)."""
    if isinstance(X, CyclicCode):
        X = enumerate_codewords(X)
    elif isinstance(X, np.ndarray):
        raise TypeError("pass Words (with their field), not a bare matrix")
    remaining = set(X)
    orbits = []
    for w in sorted(remaining, key=lambda w: w.entries):
        if w not in remaining:
            continue
        orbit = [w]
        nxt = rotate(w, 1, direction)
        while nxt != w:
            if nxt not in remaining:
                raise ValueError("word set is not stable under rotation")
            orbit.append(nxt)
            nxt = rotate(nxt, 1, direction)
        remaining.difference_update(orbit)
        orbits.append(tuple(orbit))
    return OrbitDecomposition(tuple(orbits))


def orbit_size_counts(words: np.ndarray) -> dict[int, int]:
    """{orbit size: number of orbits} for a rotation-stable word matrix.

    Orbit size equals the least period of any member, so no explicit orbits
    are built.
    """
    n = words.shape[1]
    periods = _kernels.word_periods(words, divisors(n))
    per_size = Counter(periods.tolist())
    out = {}
    for s, count in sorted(per_size.items()):
        if count % s:
            raise ValueError("word set is not stable under rotation")
        out[int(s)] = count // s
    return out


@dataclass(frozen=True)
class FixedPointProfile:
    n: int
    counts: dict[int, int]

    def __getitem__(self, d: int) -> int:
        return self.counts[math.gcd(d, self.n)]


def fixed_points_from_sizes(n: int, size_counts: dict[int, int]) -> FixedPointProfile:
    counts = {
        d: sum(s * c for s, c in size_counts.items() if d % s == 0) for d in divisors(n)
    }
    return FixedPointProfile(n, counts)


def fixed_point_profile(X) -> FixedPointProfile:
    """a(d) = #{w : c^d(w) = w} for each divisor d of n."""
    _, words = as_word_matrix(X)
    return fixed_points_from_sizes(words.shape[1], orbit_size_counts(words))


def is_free_on_nonzero(code: CyclicCode) -> bool:
    """gcd(gperp, x^d - 1) = 1 for every proper divisor d of n."""
    F = code.spec
    return all(
        gcd(code.gperp, Poly.xn_minus_1(F, d)).degree == 0
        for d in divisors(code.n)
        if d < code.n
    )


def is_free_on_nonzero_direct(code: CyclicCode) -> bool:
    words = codeword_matrix(code)
    nonzero = words[np.any(words != 0, axis=1)]
    if not len(nonzero):
        return True
    return bool(np.all(_kernels.word_periods(nonzero, divisors(code.n)) == code.n))


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def repetition_code(spec: FieldSpec, n: int) -> CyclicCode:
    return code_from_generator(Poly(spec, [1] * n), n)


def parity_check_code(spec: FieldSpec, n: int) -> CyclicCode:
    return code_from_parity_check(Poly(spec, [1] * n), n)


def full_code(spec: FieldSpec, n: int) -> CyclicCode:
    return code_from_generator(Poly.one(spec), n)


def hamming_code(g: Poly) -> CyclicCode:
    if not is_primitive(g):
        raise ValueError(f"{g} is not primitive")
    return code_from_generator(g, g.spec.q**g.degree - 1)


def dual_hamming_code(gperp: Poly) -> CyclicCode:
    if not is_primitive(gperp):
        raise ValueError(f"{gperp} is not primitive")
    return code_from_parity_check(gperp, gperp.spec.q**gperp.degree - 1)


def make_named(kind: str, spec: FieldSpec, n: int | None = None, poly: Poly | None = None,
               k: int | None = None) -> CyclicCode:
    """``repetition``/``parity_check``/``full`` need n; ``hamming`` and
    ``dual_hamming`` need a primitive polynomial (and then n = q^k - 1)."""
    if kind in ("repetition", "parity_check", "full"):
        if n is None:
            raise ValueError(f"{kind} code needs a length")
        return {"repetition": repetition_code, "parity_check": parity_check_code,
                "full": full_code}[kind](spec, n)
    if kind in ("hamming", "dual_hamming"):
        if poly is None:
            raise ValueError(f"{kind} code needs a primitive polynomial")
        if poly.spec != spec:
            raise ValueError("polynomial over the wrong field")
        if k is not None and poly.degree != k:
            raise ValueError(f"polynomial has degree {poly.degree}, expected {k}")
        expected_n = spec.q**poly.degree - 1
        if n is not None and n != expected_n:
            raise ValueError(f"{kind} codes have length q^k-1 = {expected_n}")
        return hamming_code(poly) if kind == "hamming" else dual_hamming_code(poly)
    raise ValueError(f"unknown code family {kind!r}")


def words_from_rows(spec: FieldSpec, rows: Sequence[Sequence[int]] | np.ndarray) -> list[Word]:
    return [Word(spec, list(r)) for r in rows]


def constant_words(spec: FieldSpec, n: int) -> Iterable[Word]:
    for a in spec.elements():
        yield Word(spec, [a] * n)
