"""Finite fields F_q, q = p^m, with elements encoded as integers in [0, q).

An element index is read as the base-p digit vector (little-endian) of a
residue polynomial modulo the field modulus. Index 0 is zero and index 1 is
one. Elements are plain ints so that words can live in numpy arrays; any
comparison between elements must go through an :class:`AlphabetOrder`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "AlphabetOrder",
    "FieldSpec",
    "arith",
    "default_order",
    "is_prime",
    "make_field",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _digits(index: int, p: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        index, r = divmod(index, p)
        out.append(r)
    return tuple(out)


def _undigits(digits, p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _fp_polymulmod(a, b, mod, p):
    """Multiply digit vectors a, b over F_p and reduce by monic ``mod``."""
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, m - 1, -1):
        c = prod[i]
        if c:
            for j in range(m + 1):
                prod[i - m + j] = (prod[i - m + j] - c * mod[j]) % p
    return (prod + [0] * m)[:m]


def _fp_irreducible(mod, p: int) -> bool:
    """Irreducibility over F_p by trial division with every monic of degree <= m/2.

    Only used on moduli of degree <= 4 or so; the polynomial ring module has
    the proper Rabin test for general use.
    """
    m = len(mod) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = list(low) + [1]
            rem = list(mod)
            for i in range(m, d - 1, -1):
                c = rem[i]
                if c:
                    for j in range(d + 1):
                        rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
            if not any(rem[:d]):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p**m.

    ``modulus`` is the ascending coefficient tuple of a monic irreducible
    polynomial of degree m over F_p, or ``None`` for prime fields.
    """

    p: int
    m: int = 1
    modulus: tuple[int, ...] | None = None
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.m)

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def elements(self) -> range:
        return range(self.q)

    def digits(self, a: int) -> tuple[int, ...]:
        return _digits(a, self.p, self.m)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of F_{self.q}")
        return a

    @property
    def add_table(self) -> np.ndarray:
        return _tables(self)[0]

    @property
    def mul_table(self) -> np.ndarray:
        return _tables(self)[1]

    @property
    def neg_table(self) -> np.ndarray:
        return _tables(self)[2]

    @property
    def inv_table(self) -> np.ndarray:
        return _tables(self)[3]

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            return pow(a, -1, self.p)
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def format(self, a: int) -> str:
        return str(a)

    def legend(self) -> str:
        """Index -> coefficient vector legend, for extension fields."""
        if self.m == 1:
            return ""
        return ", ".join(f"{a}={list(self.digits(a))}" for a in self.elements())

    def __str__(self):
        return f"F_{self.q}"


@functools.lru_cache(maxsize=None)
def _tables(spec: FieldSpec):
    q, p, m = spec.q, spec.p, spec.m
    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    if m == 1:
        r = np.arange(q)
        add[:] = (r[:, None] + r[None, :]) % p
        mul[:] = (r[:, None] * r[None, :]) % p
    else:
        digs = [_digits(a, p, m) for a in range(q)]
        for a in range(q):
            for b in range(q):
                add[a, b] = _undigits([(x + y) % p for x, y in zip(digs[a], digs[b])], p)
                mul[a, b] = _undigits(_fp_polymulmod(digs[a], digs[b], spec.modulus, p), p)
    neg = np.argmin(add, axis=1).astype(np.int64)  # add[a, neg[a]] == 0
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    for t in (add, mul, neg, inv):
        t.setflags(write=False)
    return add, mul, neg, inv


def make_field(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Build F_{p^m}.

    Without ``modulus`` the monic irreducible whose ascending coefficient
    vector is lexicographically smallest is used, so construction is
    deterministic.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be positive")
    if m == 1:
        if modulus is not None and len(modulus) != 2:
            raise ValueError("a prime field takes no modulus (or a degree-1 one)")
        return FieldSpec(p, 1, None)
    if modulus is not None:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not _fp_irreducible(mod, p):
            raise ValueError(f"modulus {list(mod)} is reducible over F_{p}")
        return FieldSpec(p, m, mod)
    for low in _lex_vectors(p, m):
        mod = tuple(low) + (1,)
        if _fp_irreducible(mod, p):
            return FieldSpec(p, m, mod)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _lex_vectors(p: int, m: int):
    # lexicographic on the ascending vector (a_0, a_1, ...): a_0 most significant
    for v in itertools.product(range(p), repeat=m):
        yield v


def field_from_q(q: int, modulus=None) -> FieldSpec:
    """Field of order q, for a prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise ValueError(f"{q} is not a prime power")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return make_field(p, m, modulus)


_OPS = {
    "add": FieldSpec.add,
    "sub": FieldSpec.sub,
    "mul": FieldSpec.mul,
    "div": FieldSpec.div,
    "pow": FieldSpec.pow,
}


def arith(spec: FieldSpec, kind: str, a: int, b: int | None = None) -> int:
    """Dispatch a named field operation (``add``, ``sub``, ``mul``, ``div``,
    ``neg``, ``inv``, ``pow``)."""
    spec.check(a)
    if kind == "neg":
        return spec.neg(a)
    if kind == "inv":
        return spec.inv(a)
    if kind not in _OPS:
        raise ValueError(f"unknown field operation {kind!r}")
    if kind != "pow":
        spec.check(b)
    return _OPS[kind](spec, a, b)


@dataclass(frozen=True)
class AlphabetOrder:
    """A linear order on the field elements.

    ``rank[a]`` is the position of element ``a``; smaller rank means smaller.
    """

    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(len(self.rank))):
            raise ValueError(f"rank {self.rank} is not a permutation")

    @classmethod
    def from_sequence(cls, increasing) -> "AlphabetOrder":
        """``from_sequence([0, 2, 1])`` means 0 < 2 < 1."""
        seq = [int(a) for a in increasing]
        rank = [0] * len(seq)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError(f"{seq} is not a permutation of the alphabet")
        for r, a in enumerate(seq):
            rank[a] = r
        return cls(tuple(rank))

    @property
    def increasing(self) -> tuple[int, ...]:
        seq = [0] * len(self.rank)
        for a, r in enumerate(self.rank):
            seq[r] = a
        return tuple(seq)

    def less(self, a: int, b: int) -> bool:
        return self.rank[a] < self.rank[b]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.rank, dtype=np.int64)

    def __str__(self):
        return "<".join(map(str, self.increasing))


def default_order(spec: FieldSpec) -> AlphabetOrder:
    """Index order: 0 < 1 < ... < q-1."""
    return AlphabetOrder(tuple(range(spec.q)))


def all_orders(spec: FieldSpec):
    for perm in itertools.permutations(range(spec.q)):
        yield AlphabetOrder.from_sequence(perm)
