"""Exact cyclic sieving checks.

A triple (X, X(t), C) with C = <c> the n-fold rotation group exhibits the
cyclic sieving phenomenon when X(zeta^d) counts the words fixed by c^d for
every d, zeta a primitive n-th root of unity.

No complex numbers are used. Let F(t) = sum over rotation orbits O of
[|O|]_{t^(n/|O|)}. Evaluating a summand at zeta^d gives |O| when |O| divides
d and 0 otherwise, so F(zeta^d) is exactly the fixed-point count a(d). Both
X(t) mod t^n - 1 and F(t) have degree < n, and two such integer polynomials
agree at all n-th roots of unity iff they are equal. Hence

    CSP  <=>  X(t) mod (t^n - 1) == F(t)   (coefficient by coefficient).

When the check fails, the divisors d of n where X(zeta^d) != a(d) are
exactly those for which the cyclotomic polynomial Phi_(n/d) does not divide
X(t) - F(t); reports carry that residue as evidence.
"""

from __future__ import annotations

import csv
import functools
import io
import itertools
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .codes import (
    CyclicCode,
    as_word_matrix,
    code_from_generator,
    code_from_parity_check,
    codeword_matrix,
    fixed_points_from_sizes,
    is_free_on_nonzero,
    is_rotation_stable,
    orbit_size_counts,
    word_of_poly,
)
from .gf import AlphabetOrder, FieldSpec, all_orders, default_order
from .polyring import (
    Poly,
    check_cap,
    divisors,
    enumerate_monic_irreducibles,
    is_primitive,
    monic_divisors_xn,
    order_of_x,
)
from .wordstats import STATS, IntPoly, int_divmod, stat, stat_matrix


def orbit_polynomial(sizes, n: int) -> IntPoly:
    """sum over orbits O of [|O|]_{t^(n/|O|)} in Z[t]/(t^n - 1).

    ``sizes`` is an :class:`OrbitDecomposition`, a ``{size: count}`` map or
    an iterable of orbit sizes.
    """
    if hasattr(sizes, "sizes"):
        sizes = sizes.sizes
    if isinstance(sizes, dict):
        items = sizes.items()
    else:
        items = ((s, 1) for s in sizes)
    coeffs = np.zeros(n, dtype=object)
    for s, count in items:
        if n % s:
            raise ValueError(f"orbit size {s} does not divide {n}")
        coeffs[:: n // s] += count
    return IntPoly(tuple(coeffs.tolist()), n)


@functools.lru_cache(maxsize=512)
def cyclotomic(e: int) -> IntPoly:
    """Phi_e(t) = prod over f | e of (t^f - 1)^mu(e/f)."""
    num = [1]
    den = []
    for f in divisors(e):
        mu = _mobius(e // f)
        if mu == 1:
            num = _mul_binomial(num, f)
        elif mu == -1:
            den.append(f)
    for f in den:
        num = _div_binomial(num, f)
    return IntPoly(tuple(num))


def _mobius(m: int) -> int:
    out, p = 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def _mul_binomial(c: list[int], f: int) -> list[int]:
    # c * (t^f - 1)
    out = [0] * (len(c) + f)
    for i, a in enumerate(c):
        out[i + f] += a
        out[i] -= a
    return out


def _div_binomial(c: list[int], f: int) -> list[int]:
    # exact c / (t^f - 1), via q_i = q_{i-f} - c_i from the low end
    deg = len(c) - 1 - f
    quo = [0] * (deg + 1)
    for i in range(deg + 1):
        quo[i] = (quo[i - f] if i >= f else 0) - c[i]
    return quo


@dataclass
class DivisorRow:
    d: int
    fixed_points: int
    ok: bool
    residue: list[int] = field(default_factory=list)


@dataclass
class CspReport:
    n: int
    stat: str
    order: str
    size: int
    holds: bool
    gen_poly: list[int]
    orbit_poly: list[int]
    rows: list[DivisorRow]
    failing_divisors: list[int]
    label: str = ""

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "CspReport":
        data = dict(data)
        data["rows"] = [DivisorRow(**r) for r in data["rows"]]
        return cls(**data)

    CSV_COLUMNS = ("label", "n", "stat", "order", "size", "holds", "failing_divisors")

    def csv_row(self) -> list:
        return [self.label, self.n, self.stat, self.order, self.size, self.holds,
                " ".join(map(str, self.failing_divisors))]

    def summary(self) -> str:
        verdict = "holds" if self.holds else "FAILS"
        extra = "" if self.holds else f" (failing d: {self.failing_divisors})"
        return f"{self.label or 'X'}: n={self.n} |X|={self.size} stat={self.stat} order={self.order}: CSP {verdict}{extra}"


def _order_for(spec: FieldSpec | None, order: AlphabetOrder | None, q_hint: int) -> AlphabetOrder:
    if order is not None:
        return order
    if spec is not None:
        return default_order(spec)
    return AlphabetOrder(tuple(range(q_hint)))


def check_csp(X, kind: str, order: AlphabetOrder | None = None, *, label: str = "",
              validate: bool = True, cap: int | None = None) -> CspReport:
    """Decide whether (X, X^kind(t), C) exhibits the CSP, exactly.

    ``X`` is a :class:`CyclicCode`, an iterable of words or a word matrix.
    Word sets other than codes are checked for rotation stability first;
    codes are ideals and stable by construction.
    """
    return check_csp_many(X, (kind,), order, label=label, validate=validate, cap=cap)[kind]


def check_csp_many(X, kinds=("maj", "inv"), order: AlphabetOrder | None = None, *,
                   label: str = "", validate: bool = True,
                   cap: int | None = None) -> dict[str, CspReport]:
    """:func:`check_csp` for several statistics sharing one enumeration."""
    for kind in kinds:
        if kind not in STATS:
            raise ValueError(f"unknown statistic {kind!r}")
    spec, words = as_word_matrix(X, cap)
    check_cap(words.shape[0], "word set", cap)
    n = words.shape[1]
    if validate and not isinstance(X, CyclicCode) and not is_rotation_stable(words):
        raise ValueError("word set is not stable under rotation")
    q_hint = spec.q if spec is not None else int(words.max()) + 1
    order = _order_for(spec, order, q_hint)
    values = stat_matrix(words, order)
    size_counts = orbit_size_counts(words)
    return {kind: _report(n, kind, order, values[kind], size_counts, label) for kind in kinds}


def _report(n, kind, order, values, size_counts, label) -> CspReport:
    gen = IntPoly.from_exponents(values, mod_n=n)
    orb = orbit_polynomial(size_counts, n)
    profile = fixed_points_from_sizes(n, size_counts)
    holds = gen == orb
    rows = []
    failing = []
    diff = gen - orb
    for d in divisors(n):
        if holds:
            rows.append(DivisorRow(d, profile.counts[d], True))
            continue
        e = n // d
        folded = IntPoly(diff.coeffs, e) if e > 0 else diff
        _, r = int_divmod(IntPoly(folded.coeffs), cyclotomic(e))
        ok = not r.coeffs
        rows.append(DivisorRow(d, profile.counts[d], ok, list(r.coeffs)))
        if not ok:
            failing.append(d)
    return CspReport(
        n=n,
        stat=kind,
        order=str(order),
        size=int(len(values)),
        holds=holds,
        gen_poly=gen.padded(n),
        orbit_poly=orb.padded(n),
        rows=rows,
        failing_divisors=failing,
        label=label,
    )


def check_all_cyclic_codes(spec: FieldSpec, n: int, kind: str,
                           order: AlphabetOrder | None = None) -> list[CspReport]:
    """One report per monic divisor g of x^n - 1, i.e. per cyclic code of length n."""
    reports = []
    for g in monic_divisors_xn(spec, n):
        code = code_from_generator(g, n)
        check_cap(code.size, f"code g={g}")
        reports.append(check_csp(code, kind, order, label=f"g={g}"))
    return reports


def single_orbit_criterion(code: CyclicCode, kind: str, order: AlphabetOrder | None = None) -> bool:
    """gcd(n, cdes(w)) = 1 for maj, gcd(n, wt(w)) = 1 for binary inv.

    Valid when the nonzero codewords form a single free rotation orbit,
    i.e. the action on them is free and q^k = n + 1.
    """
    if code.size != code.n + 1 or not is_free_on_nonzero(code):
        raise ValueError("nonzero codewords do not form a single free orbit")
    w = word_of_poly(code.g, code.n)
    if kind == "maj":
        return math.gcd(code.n, stat(w, "cdes", order)) == 1
    if kind == "inv":
        if code.spec.q != 2:
            raise ValueError("the inversion criterion is for binary codes")
        return math.gcd(code.n, stat(w, "wt", order)) == 1
    raise ValueError(f"no single-orbit criterion for {kind!r}")


def ordering_independence(code: CyclicCode, kind: str) -> bool:
    """True iff the CSP verdict is the same under all q! alphabet orders."""
    if code.spec.q > 4:
        raise ValueError("ordering independence is checked exhaustively only for q <= 4")
    words = codeword_matrix(code)
    size_counts = orbit_size_counts(words)
    verdicts = set()
    for order in all_orders(code.spec):
        values = stat_matrix(words, order)[kind]
        verdicts.add(IntPoly.from_exponents(values, mod_n=code.n) == orbit_polynomial(size_counts, code.n))
    return len(verdicts) == 1


def verdicts_by_order(code: CyclicCode, kind: str) -> dict[str, bool]:
    words = codeword_matrix(code)
    size_counts = orbit_size_counts(words)
    orb = orbit_polynomial(size_counts, code.n)
    out = {}
    for order in all_orders(code.spec):
        values = stat_matrix(words, order)[kind]
        out[str(order)] = IntPoly.from_exponents(values, mod_n=code.n) == orb
    return out


# ---------------------------------------------------------------------------
# primitivity vs cyclic descents
# ---------------------------------------------------------------------------


@dataclass
class ScanRow:
    gperp: list[int]
    irreducible: bool
    primitive: bool
    order_x: int
    cdes: int
    wt: int
    formula_match: bool
    maj_csp: bool | None
    inv_csp: bool | None

    CSV_COLUMNS = ("gperp", "irreducible", "primitive", "order_x", "cdes", "wt",
                   "formula_match", "maj_csp", "inv_csp")

    def csv_row(self) -> list:
        def fmt(v):
            return "" if v is None else v

        return [" ".join(map(str, self.gperp)), self.irreducible, self.primitive, self.order_x,
                self.cdes, self.wt, self.formula_match, fmt(self.maj_csp), fmt(self.inv_csp)]

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "ScanRow":
        return cls(**data)


def cdes_formula(q: int, k: int) -> Fraction:
    """(q - 1)/2 * q^(k-1)."""
    return Fraction(q - 1, 2) * q ** (k - 1)


def scan_row(gperp: Poly, csp: bool = True, order: AlphabetOrder | None = None) -> ScanRow:
    F = gperp.spec
    k = gperp.degree
    n = F.q**k - 1
    code = code_from_parity_check(gperp, n)
    w = word_of_poly(code.g, n)
    c = stat(w, "cdes", order)
    maj_csp = inv_csp = None
    if csp:
        words = codeword_matrix(code)
        order_ = order or default_order(F)
        stats = stat_matrix(words, order_)
        size_counts = orbit_size_counts(words)
        orb = orbit_polynomial(size_counts, n)
        maj_csp = IntPoly.from_exponents(stats["maj"], mod_n=n) == orb
        if F.q == 2:
            inv_csp = IntPoly.from_exponents(stats["inv"], mod_n=n) == orb
    return ScanRow(
        gperp=list(gperp.coeffs),
        irreducible=True,
        primitive=is_primitive(gperp),
        order_x=order_of_x(gperp),
        cdes=c,
        wt=stat(w, "wt"),
        formula_match=c == cdes_formula(F.q, k),
        maj_csp=maj_csp,
        inv_csp=inv_csp,
    )


def scan_characterization(spec: FieldSpec, k: int, csp: bool = True,
                          order: AlphabetOrder | None = None):
    """Yield one :class:`ScanRow` per monic irreducible degree-k gperp != x."""
    if k < 2:
        raise ValueError("the cyclic-descent formula scan needs k >= 2")
    check_cap(spec.q**k, f"scan over {spec}, k={k}")
    for gperp in enumerate_monic_irreducibles(spec, k):
        if gperp.coeffs == (0, 1):
            continue
        yield scan_row(gperp, csp=csp, order=order)


def rows_to_csv(rows, columns) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def dual_hamming_codes(spec: FieldSpec, k: int):
    for gperp in enumerate_monic_irreducibles(spec, k):
        if is_primitive(gperp):
            yield code_from_parity_check(gperp, spec.q**k - 1)


def fixed_content_words(spec: FieldSpec, content: dict[int, int]) -> np.ndarray:
    """All distinct rearrangements of a multiset of letters (an S_n-stable set)."""
    letters = [a for a, m in sorted(content.items()) for _ in range(m)]
    rows = sorted(set(itertools.permutations(letters)))
    return np.array(rows, dtype=np.uint8)
