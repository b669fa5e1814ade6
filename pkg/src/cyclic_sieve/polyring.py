"""Dense polynomials over F_q and the number theory around x^n - 1.

Coefficients are stored ascending (``coeffs[i]`` multiplies x^i) with no
trailing zeros; the zero polynomial has ``coeffs == ()`` and degree -1.
"""

from __future__ import annotations

import functools
import itertools
import os
import re
from dataclasses import dataclass

from . import _kernels
from .gf import FieldSpec, field_from_q

DEFAULT_MAX_ENUM = 1 << 20
FACTOR_LIMIT = 1 << 40
# long divisions above this length go through the compiled kernel
_KERNEL_DIV_MIN = 64


def max_enum() -> int:
    """Enumeration cap; ``CYCLIC_SIEVE_MAX_ENUM`` overrides the default 2^20."""
    raw = os.environ.get("CYCLIC_SIEVE_MAX_ENUM")
    if raw is None:
        return DEFAULT_MAX_ENUM
    value = int(raw)
    if value <= 0:
        raise ValueError("CYCLIC_SIEVE_MAX_ENUM must be positive")
    return value


class EnumerationCapError(ValueError):
    pass


def check_cap(count: int, what: str, cap: int | None = None) -> None:
    cap = max_enum() if cap is None else cap
    if count > cap:
        raise EnumerationCapError(f"{what}: {count} exceeds the enumeration cap {cap}")


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class Poly:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __init__(self, spec: FieldSpec, coeffs=()):
        coeffs = _trim(coeffs)
        for c in coeffs:
            spec.check(c)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)

    # construction helpers
    @classmethod
    def zero(cls, spec):
        return cls(spec, ())

    @classmethod
    def one(cls, spec):
        return cls(spec, (1,))

    @classmethod
    def x(cls, spec):
        return cls(spec, (0, 1))

    @classmethod
    def monomial(cls, spec, e: int, c: int = 1):
        return cls(spec, (0,) * e + (c,))

    @classmethod
    def xn_minus_1(cls, spec, n: int):
        return cls(spec, (spec.neg(1),) + (0,) * (n - 1) + (1,))

    @classmethod
    def parse(cls, spec, text: str) -> "Poly":
        return parse_poly(spec, text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def _same(self, other):
        if isinstance(other, int):
            return Poly(self.spec, (other % self.spec.q,) if self.spec.m == 1 else (other,))
        if not isinstance(other, Poly):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError(f"mixed fields {self.spec} and {other.spec}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        F = self.spec
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self[i], other[i]) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.spec, [self.spec.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.spec)
        F = self.spec
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        return Poly(self.spec, [self.spec.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.spec
        if len(self.coeffs) >= _KERNEL_DIV_MIN:
            quo, rem = _kernels.poly_divmod(
                self.coeffs, other.coeffs, F.add_table, F.mul_table, F.neg_table, F.inv_table
            )
            return Poly(F, quo.tolist()), Poly(F, rem.tolist())
        rem = list(self.coeffs)
        dd = other.degree
        if len(rem) - 1 < dd:
            return Poly.zero(F), self
        lead_inv = F.inv(other.lead)
        quo = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = F.mul(rem[i], lead_inv)
            if c:
                quo[i - dd] = c
                nc = F.neg(c)
                for j, b in enumerate(other.coeffs):
                    if b:
                        rem[i - dd + j] = F.add(rem[i - dd + j], F.mul(nc, b))
        return Poly(F, quo), Poly(F, rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.spec.inv(self.lead))

    def __call__(self, a: int) -> int:
        return evaluate(self, a)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.spec}, {format_poly(self)!r})"

    def to_json(self) -> dict:
        F = self.spec
        return {"q": F.q, "p": F.p, "m": F.m, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict, spec: FieldSpec | None = None) -> "Poly":
        if spec is None:
            spec = field_from_q(int(data["q"]))
        if (spec.q, spec.p, spec.m) != (data["q"], data["p"], data["m"]):
            raise ValueError("polynomial JSON does not match the field")
        return cls(spec, data["coeffs"])


def poly_arith(kind: str, f: Poly, g: Poly):
    """Named ring operation: ``add``, ``sub``, ``mul``, ``divmod`` or ``gcd``."""
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    if kind == "divmod":
        return divmod(f, g)
    if kind == "gcd":
        return gcd(f, g)
    raise ValueError(f"unknown polynomial operation {kind!r}")


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while g:
        f, g = g, f % g
    return f.monic()


def evaluate(f: Poly, a: int) -> int:
    F = f.spec
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, a), c)
    return acc


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.spec) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def mod_pow_x(e: int, f: Poly) -> Poly:
    """x^e reduced modulo f."""
    if f.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    return powmod(Poly.x(f.spec), e, f)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; refuses n > 2^40."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    if n > FACTOR_LIMIT:
        raise ValueError(f"{n} is above the trial-division limit 2^40")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _has_root(f: Poly) -> bool:
    return any(evaluate(f, a) == 0 for a in f.spec.elements())


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: x^(q^k) = x mod f and gcd(x^(q^(k/r)) - x, f) = 1 for primes r | k."""
    k = f.degree
    if k < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if k == 1:
        return True
    f = f.monic()
    if _has_root(f):
        return False
    q = f.spec.q
    x = Poly.x(f.spec)
    # frob[j] = x^(q^j) mod f
    frob = [x % f]
    for _ in range(k):
        frob.append(powmod(frob[-1], q, f))
    if frob[k] != frob[0]:
        return False
    for r in factorize(k):
        if gcd(frob[k // r] - x, f).degree != 0:
            return False
    return True


def is_irreducible_naive(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    k = f.degree
    F = f.spec
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(F.q), repeat=d):
            if not (f % Poly(F, low + (1,))):
                return False
    return True


def order_of_x(f: Poly) -> int:
    """Multiplicative order of x in F_q[x]/(f) for monic irreducible f != x."""
    if not f.is_monic():
        raise ValueError("order_of_x needs a monic polynomial")
    if f.coeffs == (0, 1):
        raise ValueError("x is not invertible modulo x")
    if not is_irreducible(f):
        raise ValueError(f"{f} is reducible")
    n = f.spec.q ** f.degree - 1
    d = n
    for r in factorize(n):
        while d % r == 0 and mod_pow_x(d // r, f) == Poly.one(f.spec):
            d //= r
    return d


def is_primitive(f: Poly) -> bool:
    k = f.degree
    if k < 1 or not f.is_monic() or f.coeffs == (0, 1):
        return False
    if not is_irreducible(f):
        return False
    return order_of_x(f) == f.spec.q**k - 1


def is_primitive_by_definition(f: Poly) -> bool:
    """Irreducible, divides x^n - 1 and no x^d - 1 for proper divisors d of n = q^k - 1."""
    k = f.degree
    if k < 1 or not f.is_monic() or f.coeffs == (0, 1):
        return False
    if not is_irreducible_naive(f):
        return False
    F = f.spec
    n = F.q**k - 1
    if Poly.xn_minus_1(F, n) % f:
        return False
    return all(Poly.xn_minus_1(F, d) % f for d in divisors(n) if d < n)


def quotient_xn(g: Poly, n: int) -> Poly:
    """(x^n - 1) / g, which must be exact."""
    quo, rem = divmod(Poly.xn_minus_1(g.spec, n), g)
    if rem:
        raise ValueError(f"{g} does not divide x^{n}-1")
    return quo


def monic_polys(spec: FieldSpec, k: int):
    """All monic degree-k polynomials, lexicographic by ascending coefficients."""
    for low in itertools.product(range(spec.q), repeat=k):
        yield Poly(spec, low + (1,))


@functools.lru_cache(maxsize=256)
def _irreducibles(spec: FieldSpec, k: int) -> tuple[Poly, ...]:
    return tuple(f for f in monic_polys(spec, k) if is_irreducible(f))


def enumerate_monic_irreducibles(spec: FieldSpec, k: int, cap: int | None = None) -> list[Poly]:
    if k < 1:
        raise ValueError("degree must be positive")
    check_cap(spec.q**k, f"monic degree-{k} polynomials over {spec}", cap)
    return list(_irreducibles(spec, k))


def factor_xn_minus_1(spec: FieldSpec, n: int) -> list[tuple[Poly, int]]:
    """Irreducible factorization of x^n - 1 as (monic factor, multiplicity) pairs."""
    rem = Poly.xn_minus_1(spec, n)
    factors: list[tuple[Poly, int]] = []
    d = 1
    while 2 * d <= rem.degree:
        for f in enumerate_monic_irreducibles(spec, d):
            mult = 0
            while True:
                quo, r = divmod(rem, f)
                if r:
                    break
                rem, mult = quo, mult + 1
            if mult:
                factors.append((f, mult))
        d += 1
    if rem.degree >= 1:
        rem = rem.monic()
        for i, (f, mult) in enumerate(factors):
            if f == rem:
                factors[i] = (f, mult + 1)
                break
        else:
            factors.append((rem, 1))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return factors


def monic_divisors_xn(spec: FieldSpec, n: int) -> list[Poly]:
    """Every monic divisor of x^n - 1, ordered by degree then coefficients."""
    factors = factor_xn_minus_1(spec, n)
    out = []
    for exps in itertools.product(*(range(m + 1) for _, m in factors)):
        g = Poly.one(spec)
        for (f, _), e in zip(factors, exps):
            for _ in range(e):
                g = g * f
        out.append(g)
    out.sort(key=lambda g: (g.degree, g.coeffs))
    return out


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

_TERM = re.compile(r"^(?P<coef>\d+)?\*?(?P<x>x(\^(?P<exp>\d+))?)?$")


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse ``"x^2+2x+1"``, ``"1+x+x^3"``, ``"x-1"`` or ``"[1,2,1]"`` (ascending)."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"malformed coefficient list {text!r}")
        body = s[1:-1]
        return Poly(spec, [int(c) for c in body.split(",")] if body else [])
    coeffs: dict[int, int] = {}
    for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM.match(term)
        if not m or (m.group("coef") is None and m.group("x") is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        c = int(m.group("coef")) if m.group("coef") is not None else 1
        if spec.m == 1:
            c %= spec.p
        else:
            spec.check(c)
        if sign == "-":
            c = spec.neg(c)
        e = 0
        if m.group("x"):
            e = int(m.group("exp")) if m.group("exp") else 1
        coeffs[e] = spec.add(coeffs.get(e, 0), c)
    if "".join(sign + term for sign, term in re.findall(r"([+-]?)([^+-]+)", s)) != s:
        raise ValueError(f"cannot parse {text!r}")
    top = max(coeffs) if coeffs else -1
    return Poly(spec, [coeffs.get(i, 0) for i in range(top + 1)])


def parse_coeffs(spec: FieldSpec, text: str) -> Poly:
    return Poly(spec, [int(c) for c in text.split(",") if c.strip()])


def format_poly(f: Poly) -> str:
    if not f.coeffs:
        return "0"
    terms = []
    for e in range(f.degree, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mon = "x" if e == 1 else f"x^{e}"
            terms.append(mon if c == 1 else f"{c}{mon}")
    return "+".join(terms)

