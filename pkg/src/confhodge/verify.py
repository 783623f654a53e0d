"""
Cross-validation suites.

Every suite returns a `CheckReport`.  A failing report carries the first
counterexample in canonical order as its witness, with the grading, the
expected value and the actual value.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb, factorial
from typing import Any, Callable

from . import dgcomplex as dg
from .algebra import XYUT, Poly, Ring
from .genfun import (
    I_EQ_N,
    I_EQ_N_MINUS_1,
    PHI,
    apply_shift,
    base_coefficient,
    base_polynomial,
    expand_strand,
    expand_surface,
    hodge_table,
    specialize,
)
from .surface import SurfaceAlgebraModel

XY = Ring(("x", "y"), order=(0, 1))


@dataclass
class CheckReport:
    suite: str
    params: dict[str, Any]
    passed: bool
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  witness={self.witness}"
        return f"[{status}] {self.suite} {self.params}{extra}"


def _report(suite, params, witness=None, **details):
    return CheckReport(suite, params, witness is None, witness, details)


def _first_mismatch(expected: dict, actual: dict, order=None):
    keys = sorted(set(expected) | set(actual), key=order)
    for k in keys:
        e, a = expected.get(k, 0), actual.get(k, 0)
        if e != a:
            return k, e, a
    return None


def _nwif(k):
    # (w1, w2, i, n) keys sorted by (n, i, w1, w2)
    w1, w2, i, n = k
    return (n, i, w1, w2)


# ---------------------------------------------------------------------------


def check_oracle_equivalence(g_max: int, n_max: int) -> CheckReport:
    """Generating-function coefficients against dg-complex cohomology, r = 1."""
    params = {"g_max": g_max, "n_max": n_max}
    compared = 0
    for g in range(g_max + 1):
        series = expand_surface(g, 1, n_max)
        oracle = dg.cohomology_hilbert_range(g, n_max).hodge_view()
        expected = {k: (-1) ** k[2] * v for k, v in oracle.items()}
        bad = _first_mismatch(expected, dict(series.terms), order=_nwif)
        compared += len(set(expected) | set(series.terms))
        if bad:
            (w1, w2, i, n), e, a = bad
            return _report("oracle", params, {"g": g, "w1": w1, "w2": w2, "i": i, "n": n,
                                              "expected": e, "actual": a})
    return _report("oracle", params, gradings_compared=compared)


def p_polynomial(g: int) -> Poly:
    """sum over sigma + tau >= g - 1 of (C(g,s)C(g,t) - C(g,s+1)C(g,t+1)) x^s y^t."""
    b = lambda k: comb(g, k) if 0 <= k <= g else 0
    terms = {}
    for s in range(g + 1):
        for t in range(g + 1):
            if s + t >= g - 1:
                terms[(s, t)] = b(s) * b(t) - b(s + 1) * b(t + 1)
    return Poly(terms, XY)


def q_polynomial(g: int) -> Poly:
    """sum over sigma + tau <= g of (C(g,s)C(g,t) - C(g,s-1)C(g,t-1)) x^s y^t."""
    b = lambda k: comb(g, k) if 0 <= k <= g else 0
    terms = {}
    for s in range(g + 1):
        for t in range(g + 1):
            if s + t <= g:
                terms[(s, t)] = b(s) * b(t) - b(s - 1) * b(t - 1)
    return Poly(terms, XY)


def block_sum_numerator(g: int) -> Poly:
    """-x y u t^2 P(-xut, -yut) + Q(-xut, -yut) in Z[x, y, u, t]."""
    sub = {"x": XYUT.monomial(-1, x=1, u=1, t=1), "y": XYUT.monomial(-1, y=1, u=1, t=1)}
    P = p_polynomial(g).substitute(sub, XYUT)
    Q = q_polynomial(g).substitute(sub, XYUT)
    return -XYUT.monomial(x=1, y=1, u=1, t=2) * P + Q


def check_truncation_identity(g_max: int) -> CheckReport:
    params = {"g_max": g_max}
    for g in range(g_max + 1):
        lhs = block_sum_numerator(g)
        rhs = apply_shift(PHI, g, base_polynomial(g))
        if lhs != rhs:
            e, expected, actual = _first_mismatch(dict(rhs.terms), dict(lhs.terms), order=XYUT.sort_key)
            return _report("identity", params, {"g": g, "monomial": list(e),
                                                "expected": expected, "actual": actual})
    return _report("identity", params)


def check_lefschetz(g_max: int) -> CheckReport:
    """rank(omega ^ - on degree i) = min(C(2g,i), C(2g,i+2)), bidegree (1,1) only."""
    params = {"g_max": g_max}
    for g in range(g_max + 1):
        for i in range(2 * g + 1):
            m = dg.iota_matrix(g, i)
            expected = min(comb(2 * g, i), comb(2 * g, i + 2))
            rank = m.rank()
            if rank != expected:
                return _report("lefschetz", params, {"g": g, "i": i, "expected": expected, "actual": rank})
            src = dg.exterior_basis(g, i)
            dst = dg.exterior_basis(g, i + 2)
            for r, c, _ in m.nonzeros():
                (S, T), (S2, T2) = src[c], dst[r]
                if (len(S2), len(T2)) != (len(S) + 1, len(T) + 1):
                    return _report("lefschetz", params, {"g": g, "i": i, "source": [S, T],
                                                         "target": [S2, T2], "expected": 0, "actual": m[r, c]})
    return _report("lefschetz", params)


def check_block_dims(g_max: int) -> CheckReport:
    """Rank-derived block dimensions against the binomial formulas.

    Also checks that -d/2 equals omega ^ - entrywise on every block, that
    d o d = 0, and that d shifts the grading by (2, -1, 0, 0).  For
    comparison, the details record whether the alternative sign exponent
    |S| (instead of |S_{>a}|) keeps the same ranks.
    """
    params = {"g_max": g_max}
    literal_rank_failures = []
    literal_not_conjugate = []
    for g in range(g_max + 1):
        for s in range(g + 1):
            for t in range(g + 1):
                got = dg.block_cohomology_dims(g, s, t)
                want = dg.closed_form_block_dims(g, s, t)
                if got != want:
                    return _report("blocks", params, {"g": g, "sigma": s, "tau": t,
                                                      "expected": list(want), "actual": list(got)})
                D = dg.differential_block(g, s, t)
                if D != dg.iota_block(g, s, t):
                    return _report("blocks", params, {"g": g, "sigma": s, "tau": t,
                                                      "expected": "-d/2 == iota", "actual": "differs"})
                src = dg._block_basis(g, s, t)
                for S, T in src:
                    first = dg.differential(dg.GammaTuple(1, S, T, (0,) * g, (0,) * g))
                    if any(dg.differential(tgt) for tgt in first):
                        return _report("blocks", params, {"g": g, "source": [S, T],
                                                          "expected": "d^2 = 0", "actual": "nonzero"})
                dst = dg._block_basis(g, s + 1, t + 1)
                for r, c, _ in D.nonzeros():
                    S, T = src[c]
                    S2, T2 = dst[r]
                    a = dg.GammaTuple(1, S, T, (0,) * g, (0,) * g).grading
                    b = dg.GammaTuple(0, S2, T2, (0,) * g, (0,) * g).grading
                    if tuple(y - x for x, y in zip(a, b)) != (2, -1, 0, 0):
                        return _report("blocks", params, {"g": g, "source": [S, T], "target": [S2, T2],
                                                          "expected": [2, -1, 0, 0], "actual": [y - x for x, y in zip(a, b)]})
                if dg.block_cohomology_dims(g, s, t, "literal") != want:
                    literal_rank_failures.append([g, s, t])
                if dg.sign_conjugacy(dg.differential_block(g, s, t, "literal"), dg.iota_block(g, s, t)) is None:
                    literal_not_conjugate.append([g, s, t])
    return _report("blocks", params,
                   koszul_signs="-d/2 equals iota entrywise",
                   literal_sign_rank_failures=literal_rank_failures,
                   literal_sign_nonconjugate_blocks=literal_not_conjugate)


def check_stability(g_max: int, r_max: int, n_max: int) -> CheckReport:
    params = {"g_max": g_max, "r_max": r_max, "n_max": n_max}
    for g in range(g_max + 1):
        for r in range(1, r_max + 1):
            tab = hodge_table(g, r, n_max)
            for (w1, w2, i, n), h in sorted(tab.entries.items(), key=lambda kv: _nwif(kv[0])):
                if n < i:
                    return _report("stability", params, {"g": g, "r": r, "w1": w1, "w2": w2, "i": i, "n": n,
                                                         "expected": 0, "actual": h})
            types = sorted({(w1, w2, i) for (w1, w2, i, n) in tab.entries}, key=lambda k: (k[2], k[0], k[1]))
            for w1, w2, i in types:
                for n in range(i + 1, n_max):
                    a, b = tab.get(w1, w2, i, n), tab.get(w1, w2, i, n + 1)
                    if a != b:
                        return _report("stability", params, {"g": g, "r": r, "w1": w1, "w2": w2, "i": i,
                                                             "n": n + 1, "expected": a, "actual": b})
    return _report("stability", params)


def _xy_part(series, fixed: dict[int, int]) -> dict:
    """(ex, ey) -> coefficient of the terms whose other exponents match ``fixed``."""
    out = {}
    for e, c in series.terms.items():
        if all(e[k] == v for k, v in fixed.items()):
            out[(e[0], e[1])] = c
    return out


def check_strands(g_max: int, r_max: int, i_max: int = 10) -> CheckReport:
    params = {"g_max": g_max, "r_max": r_max, "i_max": i_max}
    for g in range(g_max + 1):
        for r in range(1, r_max + 1):
            full = expand_surface(g, r, i_max + 1)
            for which, shift in ((I_EQ_N, 0), (I_EQ_N_MINUS_1, 1)):
                zs = expand_strand(which, g, r, i_max)
                for i in range(i_max + 1):
                    want = _xy_part(full, {2: i, 3: i + shift})
                    got = _xy_part(zs, {2: i})
                    bad = _first_mismatch(want, got)
                    if bad:
                        (ex, ey), e, a = bad
                        return _report("strands", params, {"g": g, "r": r, "strand": which, "i": i,
                                                           "w1": ex, "w2": ey, "expected": e, "actual": a})
    return _report("strands", params)


def impure_entries(g: int, r: int, n_max: int):
    """(i, n, sorted weights) for every H^i(Conf_n) carrying two or more weights."""
    tab = hodge_table(g, r, n_max)
    weights: dict = {}
    for (w1, w2, i, n) in tab.entries:
        weights.setdefault((i, n), set()).add(w1 + w2)
    return [(i, n, sorted(ws)) for (i, n), ws in sorted(weights.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            if len(ws) > 1]


def check_purity_g1(n_max: int, impure_g: int = 2, impure_r: int = 2, impure_n: int = 8) -> CheckReport:
    """g = r = 1 is pure of weight floor(3i/2); (impure_g, impure_r) is not."""
    params = {"n_max": n_max, "impure_case": [impure_g, impure_r, impure_n]}
    tab = hodge_table(1, 1, n_max)
    for (w1, w2, i, n), h in sorted(tab.entries.items(), key=lambda kv: _nwif(kv[0])):
        if w1 + w2 != 3 * i // 2:
            return _report("purity", params, {"g": 1, "r": 1, "w1": w1, "w2": w2, "i": i, "n": n,
                                              "expected": f"weight {3 * i // 2}", "actual": f"weight {w1 + w2}"})
    impure = impure_entries(impure_g, impure_r, impure_n)
    g2r1 = impure_entries(2, 1, impure_n)
    details = {"impure_witness": list(impure[0]) if impure else None,
               "g2_r1_impure_count": len(g2r1),
               "g2_r1_first_impure": list(g2r1[0]) if g2r1 else None}
    if not impure:
        return _report("purity", params, {"g": impure_g, "r": impure_r,
                                          "expected": "some impure H^i(Conf_n)", "actual": "all pure"}, **details)
    return _report("purity", params, **details)


def generalized_binomial(a: int, k: int) -> int:
    """C(a, k) for any integer a, k >= 0."""
    num = 1
    for j in range(k):
        num *= a - j
    return num // factorial(k)


def check_euler_gal(g_max: int, r_max: int, tmax: int) -> CheckReport:
    """Euler characteristic series against (1 + t)^chi, chi = 2 - 2g - r."""
    params = {"g_max": g_max, "r_max": r_max, "tmax": tmax}
    for g in range(g_max + 1):
        for r in range(1, r_max + 1):
            chi = 2 - 2 * g - r
            got = specialize(expand_surface(g, r, tmax), "euler")
            for n in range(tmax + 1):
                want = generalized_binomial(chi, n)
                have = got.coeff((0, 0, 0, n))
                if want != have:
                    return _report("euler", params, {"g": g, "r": r, "n": n, "expected": want, "actual": have})
    return _report("euler", params)


def check_positivity(g_max: int) -> CheckReport:
    params = {"g_max": g_max}
    for g in range(g_max + 1):
        num = apply_shift(PHI, g, base_polynomial(g))
        for e, c in num.items():
            if (-1) ** e[2] * c < 0:
                return _report("positivity", params, {"g": g, "monomial": list(e),
                                                      "expected": ">= 0 after u -> -u", "actual": (-1) ** e[2] * c})
        base = base_polynomial(g)
        for (p, q, n), c in base.items():
            if n != p + q:
                return _report("positivity", params, {"g": g, "monomial": [p, q, n],
                                                      "expected": "z-degree p+q", "actual": n})
        for p in range(g + 2):
            for q in range(g + 2):
                want = base_coefficient(g, p, q)
                have = base.coeff((p, q, p + q))
                if want != have:
                    return _report("positivity", params, {"g": g, "p": p, "q": q, "expected": want, "actual": have})
                v = (-1) ** (p + q) * want
                d = p + q
                sign = (v > 0) - (v < 0)
                expected_sign = 1 if d <= g else (0 if d == g + 1 else -1)
                if sign != expected_sign:
                    return _report("positivity", params, {"g": g, "p": p, "q": q,
                                                          "expected": expected_sign, "actual": sign})
    return _report("positivity", params)


def check_diagonal_class(g_max: int) -> CheckReport:
    params = {"g_max": g_max}
    cases = 0
    for g in range(g_max + 1):
        model = SurfaceAlgebraModel(g)
        if model.integrate_top(model.mul(model.first(("w", 0)), model.second(("w", 0)))) != 1:
            return _report("diagonal", params, {"g": g, "expected": "int w1 w2 = 1", "actual": "other"})
        for al, be, lhs, rhs in model.pairing_cases():
            cases += 1
            if any(v != lhs for v in rhs):
                return _report("diagonal", params, {"g": g, "alpha": list(al), "beta": list(be),
                                                    "expected": lhs, "actual": rhs})
        if model.solve_diagonal_class() != model.diagonal_class():
            return _report("diagonal", params, {"g": g, "expected": "solved class equals formula",
                                                "actual": "differs"})
    return _report("diagonal", params, cases=cases)


def check_puncture_recursion(g_max: int, r_max: int, tmax: int) -> CheckReport:
    params = {"g_max": g_max, "r_max": r_max, "tmax": tmax}
    factor = XYUT.one() + XYUT.monomial(x=1, y=1, u=1, t=1)
    for g in range(g_max + 1):
        for r in range(1, r_max + 1):
            lhs = expand_surface(g, r + 1, tmax) * factor
            rhs = expand_surface(g, r, tmax)
            if lhs != rhs:
                e, expected, actual = _first_mismatch(dict(rhs.terms), dict(lhs.terms), order=XYUT.sort_key)
                return _report("recursion", params, {"g": g, "r": r, "monomial": list(e),
                                                     "expected": expected, "actual": actual})
    return _report("recursion", params)


# ---------------------------------------------------------------------------
# suite registry


@dataclass
class Bounds:
    max_genus: int = 3
    max_punctures: int = 3
    max_n: int = 8
    tmax: int = 12
    i_max: int = 10


SUITES: dict[str, Callable[[Bounds], list[CheckReport]]] = {
    "oracle": lambda b: [check_oracle_equivalence(b.max_genus, b.max_n)],
    "identity": lambda b: [check_truncation_identity(b.max_genus)],
    "lefschetz": lambda b: [check_lefschetz(b.max_genus), check_block_dims(b.max_genus)],
    "purity": lambda b: [check_purity_g1(b.tmax)],
    "euler": lambda b: [check_euler_gal(b.max_genus, b.max_punctures, b.tmax)],
    "stability": lambda b: [check_stability(b.max_genus, b.max_punctures, b.max_n)],
    "positivity": lambda b: [check_positivity(b.max_genus)],
    "diagonal": lambda b: [check_diagonal_class(b.max_genus)],
    "recursion": lambda b: [check_puncture_recursion(b.max_genus, b.max_punctures, b.max_n)],
    "strands": lambda b: [check_strands(b.max_genus, b.max_punctures, b.i_max)],
}


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("CONFHODGE_THREADS", "1")))
    except ValueError:
        return 1


def run_suites(names: list[str], bounds: Bounds, threads: int | None = None) -> list[CheckReport]:
    """Run the named suites, concurrently if allowed; results keep the order of ``names``."""
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    threads = threads or thread_count()
    if threads == 1:
        results = [SUITES[n](bounds) for n in names]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda n: SUITES[n](bounds), names))
    return [r for rs in results for r in rs]
