"""The ten reproduction checks run by `cyclic-sieve verify-paper`.

Each check is registered with a number and a section tag and returns a
short detail string, raising :class:`Mismatch` when something disagrees.
:func:`run_checks` runs a selection and collects :class:`CheckResult` rows;
the ``verify-paper`` command and ``tests/test_acceptance.py`` both use it.
"""

from __future__ import annotations

import cmath
import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .codes import (
    Word,
    code_from_generator,
    code_from_parity_check,
    codeword_matrix,
    full_code,
    parity_check_code,
    word_of_poly,
)
from .csp import (
    cdes_formula,
    check_csp_many,
    fixed_content_words,
    scan_characterization,
    verdicts_by_order,
)
from .gf import all_orders, default_order, field_from_q, make_field
from .lfsr import Lfsr, equivalence_suite
from .polyring import (
    enumerate_monic_irreducibles,
    format_poly,
    is_primitive,
    monic_divisors_xn,
    parse_poly,
    quotient_xn,
)
from .wordstats import IntPoly, int_divmod, orbit_stat_poly, q_int, reduce_mod, stat_matrix


class Mismatch(AssertionError):
    pass


def expect(cond: bool, msg: str) -> None:
    if not cond:
        raise Mismatch(msg)


@dataclass
class CheckResult:
    number: int
    section: str
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.title} ({self.seconds:.1f}s): {self.detail}"


@dataclass(frozen=True)
class Check:
    number: int
    section: str
    title: str
    func: Callable[[], str]


CHECKS: dict[int, Check] = {}


def _register(number: int, section: str, title: str):
    def wrap(func):
        CHECKS[number] = Check(number, section, title, func)
        return func

    return wrap


def run_check(number: int) -> CheckResult:
    chk = CHECKS[number]
    start = time.perf_counter()
    try:
        detail = chk.func()
        passed = True
    except Mismatch as exc:
        detail, passed = str(exc), False
    except Exception as exc:  # report, don't crash the table
        detail, passed = f"{type(exc).__name__}: {exc}", False
    return CheckResult(number, chk.section, chk.title, passed, detail,
                       time.perf_counter() - start)


def run_checks(section: str = "all", on_result: Callable[[CheckResult], None] | None = None):
    if section not in ("all", "3", "4"):
        raise ValueError("section must be 3, 4 or all")
    results = []
    for number in sorted(CHECKS):
        if section != "all" and CHECKS[number].section != section:
            continue
        res = run_check(number)
        results.append(res)
        if on_result:
            on_result(res)
    return results


# ---------------------------------------------------------------------------
# printed data
# ---------------------------------------------------------------------------

F3_QUADRATICS = (
    ("x^2+1", "x^6+2x^4+x^2+2", (2, 0, 1, 0, 2, 0, 1, 0)),
    ("x^2+x+2", "x^6+2x^5+2x^4+2x^2+x+1", (1, 1, 2, 0, 2, 2, 1, 0)),
    ("x^2+2x+2", "x^6+x^5+2x^4+2x^2+2x+1", (1, 2, 2, 0, 2, 1, 1, 0)),
)

LFSR_RUNS = (
    # poly, iterates of (0,1) over one period, printed sequence prefix
    ("x^2+1", [(0, 1), (1, 0), (0, 2), (2, 0)], (0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1)),
    ("x^2+x+2", [(0, 1), (1, 2), (2, 2), (2, 0), (0, 2), (2, 1), (1, 1), (1, 0)],
     (0, 1, 2, 2, 0, 2, 1, 1, 0, 1, 2, 2, 0, 2, 1, 1)),
)


@_register(1, "4", "F_3 quadratic parity checks: g(x) and w")
def check_quadratic_table() -> str:
    F = make_field(3)
    for gp_text, g_text, w in F3_QUADRATICS:
        gperp = parse_poly(F, gp_text)
        g = quotient_xn(gperp, 8)
        expect(format_poly(g) == g_text, f"{gp_text}: g = {format_poly(g)}, expected {g_text}")
        got = word_of_poly(g, 8).entries
        expect(got == w, f"{gp_text}: w = {got}, expected {w}")
    return "3 rows, g and w as printed"


@_register(2, "4", "F_3 LFSR iterates, sequences and periods")
def check_lfsr_runs() -> str:
    F = make_field(3)
    periods = []
    for text, iterates, prefix in LFSR_RUNS:
        reg = Lfsr.of(parse_poly(F, text))
        state, seen = (0, 1), []
        for _ in range(2 * len(iterates)):
            seen.append(state)
            state = reg.step(state)
        expect(seen == iterates * 2, f"{text}: iterates {seen}")
        seq = tuple(reg.sequence((0, 1), len(prefix)))
        expect(seq == prefix, f"{text}: sequence {seq}")
        p = reg.period((0, 1))
        expect(p == len(iterates), f"{text}: period {p}, expected {len(iterates)}")
        periods.append(p)
    return f"periods {periods[0]} and {periods[1]}"


@_register(3, "3", "maj and inv orbit sums of 101100 differ")
def check_orbit_sums() -> str:
    F = make_field(2)
    w = Word(F, (1, 0, 1, 1, 0, 0))
    maj_orbit = reduce_mod(orbit_stat_poly(w, "maj"), 6)
    inv_orbit = reduce_mod(orbit_stat_poly(w, "inv"), 6)
    maj_closed = reduce_mod(q_int(6, 2).shift(5), 6)
    inv_closed = reduce_mod(q_int(6, 3).shift(7), 6)
    expect(maj_orbit == maj_closed, f"maj orbit sum {maj_orbit} vs {maj_closed}")
    expect(inv_orbit == inv_closed, f"inv orbit sum {inv_orbit} vs {inv_closed}")
    expect(maj_orbit != inv_orbit, "maj and inv orbit sums coincide")
    return f"maj: {maj_orbit}; inv: {inv_orbit}"


@_register(4, "3", "all 8 binary cyclic codes of length 7, maj and inv")
def check_length_seven() -> str:
    F = make_field(2)
    divisors_ = monic_divisors_xn(F, 7)
    expect(len(divisors_) == 8, f"{len(divisors_)} divisors of x^7-1")
    for g in divisors_:
        reports = check_csp_many(code_from_generator(g, 7), ("maj", "inv"))
        for kind, rep in reports.items():
            expect(rep.holds, f"g={g}: {kind} fails at d={rep.failing_divisors}")
    return "8 codes x 2 statistics hold"


@_register(5, "3", "full and parity-check codes (symmetric-group stable)")
def check_symmetric_stable() -> str:
    count = 0
    for q, nmax in ((2, 8), (3, 5)):
        F = make_field(q)
        for n in range(1, nmax + 1):
            for code in (full_code(F, n), parity_check_code(F, n)):
                kinds = ("maj", "inv") if q == 2 else ("maj",)
                for kind, rep in check_csp_many(code, kinds).items():
                    expect(rep.holds, f"q={q} n={n} {code.g}: {kind} fails")
                    count += 1
    return f"{count} (code, statistic) pairs hold"


CDES_RANGE = ((2, range(2, 13)), (3, range(2, 7)), (4, range(2, 5)), (5, range(2, 5)), (7, range(2, 4)))


@_register(6, "4", "primitive gperp gives cdes = (q-1)/2 q^(k-1)")
def check_cdes_formula() -> str:
    count = 0
    for q, ks in CDES_RANGE:
        F = field_from_q(q)
        order = default_order(F)
        for k in ks:
            n = q**k - 1
            target = cdes_formula(q, k)
            for gperp in enumerate_monic_irreducibles(F, k):
                if not is_primitive(gperp):
                    continue
                w = np.array([word_of_poly(quotient_xn(gperp, n), n).entries], dtype=np.uint8)
                stats = stat_matrix(w, order)
                c, wt = int(stats["cdes"][0]), int(stats["wt"][0])
                expect(c == target, f"q={q} {gperp}: cdes {c} != {target}")
                if q == 2:
                    expect(wt == 2 ** (k - 1), f"{gperp}: wt {wt} != {2 ** (k - 1)}")
                count += 1
    return f"{count} primitive polynomials"


@_register(7, "4", "formula match vs primitivity, and the q=5,7 exceptions")
def check_characterization() -> str:
    rows = 0
    for q, kmax in ((2, 12), (3, 6)):
        F = make_field(q)
        for k in range(2, kmax + 1):
            for row in scan_characterization(F, k, csp=False):
                expect(row.formula_match == row.primitive,
                       f"q={q} gperp={row.gperp}: formula_match={row.formula_match}, "
                       f"primitive={row.primitive}")
                rows += 1
    for q, k, coeffs, order_x, cdes in ((5, 3, [1, 1, 0, 1], 62, 50), (7, 2, [6, 1, 1], 16, 21)):
        match = [r for r in scan_characterization(make_field(q), k, csp=False) if r.gperp == coeffs]
        expect(len(match) == 1, f"q={q}: row {coeffs} missing")
        r = match[0]
        got = (r.primitive, r.order_x, r.cdes, r.formula_match)
        expect(got == (False, order_x, cdes, True), f"q={q} {coeffs}: {got}")
    return f"{rows} rows agree; x^3+x+1 (q=5) and x^2+x+6 (q=7) match without primitivity"


@_register(8, "4", "dual Hamming maj/inv CSP and the ternary inv counterexample")
def check_dual_hamming_csp() -> str:
    count = 0
    for q, kmax, kinds in ((2, 12, ("maj", "inv")), (3, 6, ("maj",))):
        F = make_field(q)
        for k in range(1, kmax + 1):
            for gperp in enumerate_monic_irreducibles(F, k):
                if not is_primitive(gperp):
                    continue
                code = code_from_parity_check(gperp, q**k - 1)
                for kind, rep in check_csp_many(code, kinds).items():
                    expect(rep.holds, f"q={q} {gperp}: {kind} fails at {rep.failing_divisors}")
                count += 1
    F3 = make_field(3)
    code = code_from_parity_check(parse_poly(F3, "x^2+x+2"), 8)
    verdicts = verdicts_by_order(code, "inv")
    expect(len(verdicts) == 6 and not any(verdicts.values()),
           f"inv verdicts for x^2+x+2: {verdicts}")
    return f"{count} dual Hamming codes hold; x^2+x+2 inv fails under all 6 orders"


EQUIV_RANGE = ((2, 10), (3, 6), (4, 5), (5, 4))


@_register(9, "4", "seven equivalent conditions and the reversed codeword")
def check_equivalences() -> str:
    count = primitive = 0
    for q, kmax in EQUIV_RANGE:
        F = field_from_q(q)
        for k in range(1, kmax + 1):
            for gperp in enumerate_monic_irreducibles(F, k):
                if gperp.coeffs == (0, 1):
                    continue
                rec = equivalence_suite(gperp)
                expect(rec.all_agree, f"q={q} {gperp}: {dict(zip(rec.CONDITIONS, rec.values))}")
                expect(rec.reverse_check, f"q={q} {gperp}: reverse check fails")
                count += 1
                primitive += rec.primitive
    return f"{count} polynomials ({primitive} primitive), all agree"


# ---------------------------------------------------------------------------
# oracle cross-checks
# ---------------------------------------------------------------------------


def fixed_point_counts(words: np.ndarray) -> list[int]:
    """a(d) for d = 0..n-1 by comparing every word with its rotation."""
    n = words.shape[1]
    return [int(np.all(words == np.roll(words, d, axis=1), axis=1).sum()) for d in range(n)]


def root_of_unity_errors(words: np.ndarray, values: np.ndarray) -> list[float]:
    """|X(zeta^d) - a(d)| for d = 0..n-1, X(t) = sum t^values, in floating point."""
    n = words.shape[1]
    a = fixed_point_counts(words)
    out = []
    for d in range(n):
        z = np.exp(2j * np.pi * d * values.astype(np.float64) / n).sum()
        out.append(abs(z - a[d]))
    return out


def oracle_instances():
    """(label, spec, words, orders): every word set used by the float cross-check.

    All have at most 2^10 words and length at most 64.
    """
    for q, nmax in ((2, 15), (3, 8), (4, 6), (5, 5)):
        F = field_from_q(q)
        orders = list(all_orders(F)) if q <= 3 else [default_order(F)]
        for n in range(1, nmax + 1):
            for g in monic_divisors_xn(F, n):
                code = code_from_generator(g, n)
                if code.size <= 1 << 10:
                    yield f"q={q} n={n} g={g}", F, codeword_matrix(code), orders
    for q in (2, 3, 4, 5, 7, 8):
        F = field_from_q(q)
        k = 1
        while q**k - 1 <= 64:
            for gperp in enumerate_monic_irreducibles(F, k):
                if gperp.coeffs != (0, 1):
                    code = code_from_parity_check(gperp, q**k - 1)
                    yield f"q={q} gperp={gperp}", F, codeword_matrix(code), [default_order(F)]
            k += 1
    for q, content in ((2, {0: 3, 1: 3}), (2, {0: 5, 1: 4}), (3, {0: 2, 1: 2, 2: 2}),
                       (3, {0: 3, 1: 2, 2: 1}), (4, {0: 2, 1: 1, 2: 1, 3: 1})):
        F = field_from_q(q)
        words = fixed_content_words(F, content)
        yield f"q={q} content={content}", F, words, list(all_orders(F))


def check_float_oracle(tol: float = 1e-6) -> int:
    count = 0
    for label, F, words, orders in oracle_instances():
        for order in orders:
            reports = check_csp_many(words, ("maj", "inv"), order, validate=False)
            stats = stat_matrix(words, order)
            for kind, rep in reports.items():
                errs = root_of_unity_errors(words, stats[kind])
                float_holds = max(errs) < tol
                expect(rep.holds == float_holds,
                       f"{label} {kind} {order}: exact {rep.holds}, float max err {max(errs):.3g}")
                for row in rep.rows:
                    expect(row.ok == (errs[row.d % rep.n] < tol),
                           f"{label} {kind} {order}: divisor {row.d} disagrees")
                count += 1
    return count


def _all_words(q: int, n: int) -> np.ndarray:
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.uint8)


def check_shift_laws() -> int:
    """Mod-n and exact shift laws on every binary word n <= 12 and ternary n <= 7."""
    count = 0
    for q, nmax in ((2, 12), (3, 7)):
        orders = list(all_orders(field_from_q(q)))
        for n in range(1, nmax + 1):
            words = _all_words(q, n)
            right = np.roll(words, 1, axis=1)
            left = np.roll(words, -1, axis=1)
            for order in orders:
                s, sr, sl = (stat_matrix(x, order) for x in (words, right, left))
                r = order.as_array()[words]
                guard = (r[:, -2] > r[:, -1]) if n >= 2 else np.zeros(len(words), bool)
                expect(np.all((sr["maj"] - s["maj"] - s["cdes"]) % n == 0), f"maj mod {n}, {order}")
                expect(np.array_equal(sr["maj"], s["maj"] + s["cdes"] - n * guard),
                       f"exact maj law n={n} {order}")
                expect(np.array_equal(sr["cdes"], s["cdes"]), f"cdes not rotation invariant n={n}")
                if q == 2 and order.rank == (0, 1):
                    # the weight laws are stated for 0 < 1
                    last = words[:, -1] != 0
                    expect(np.all((sr["inv"] - s["inv"] + s["wt"]) % n == 0), f"inv right mod {n}")
                    expect(np.all((sl["inv"] - s["inv"] - s["wt"]) % n == 0), f"inv left mod {n}")
                    exact = s["inv"] + np.where(last, n - s["wt"], -s["wt"])
                    expect(np.array_equal(sr["inv"], exact), f"exact inv law n={n} {order}")
                count += len(words)
    return count


def check_gcd_equivalence(nmax: int = 12) -> int:
    """gcd(k,n)=1  <=>  t^l [n]_{t^k} = [n]_t mod t^n-1  <=>  the difference
    vanishes mod (t^n-1)/(t-1), for all 1 <= k, l <= n <= nmax."""
    count = 0
    for n in range(1, nmax + 1):
        full = reduce_mod(q_int(n, 1), n)
        phi_bar = IntPoly((1,) * n)  # (t^n - 1)/(t - 1)
        for k in range(1, n + 1):
            for ell in range(1, n + 1):
                lhs = reduce_mod(q_int(n, k).shift(ell), n)
                a = math.gcd(k, n) == 1
                b = lhs == full
                diff = IntPoly((lhs - full).coeffs)
                _, rem = int_divmod(diff, phi_bar)
                c = not rem.coeffs
                # same question through floats: does diff vanish at every zeta^d != 1?
                zs = (cmath.exp(2j * cmath.pi * d / n) for d in range(1, n))
                e = all(abs(diff(z)) < 1e-9 for z in zs)
                expect(a == b == c == e, f"n={n} k={k} l={ell}: {a} {b} {c} {e}")
                count += 1
    return count


@_register(10, "3", "oracle cross-checks: float roots of unity, shift laws, gcd criterion")
def check_oracles() -> str:
    a = check_float_oracle()
    b = check_shift_laws()
    c = check_gcd_equivalence()
    return f"{a} CSP verdicts match floats; {b} word/order pairs obey shift laws; {c} gcd triples"


__all__ = [
    "CHECKS",
    "CheckResult",
    "Mismatch",
    "run_check",
    "run_checks",
    "check_float_oracle",
    "check_shift_laws",
    "check_gcd_equivalence",
    "fixed_point_counts",
    "root_of_unity_errors",
    "oracle_instances",
]
