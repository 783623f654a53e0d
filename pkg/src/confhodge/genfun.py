"""
The rational generating function for mixed Hodge numbers of Conf_n(Sigma_{g,r}).

For r >= 1 the signed series

    f(x, y, u, t) = sum (-1)^i h^{p,q;i}(Conf_n) x^p y^q u^i t^n

equals

    Phi_g[(1 - x y z^2)(1 - x z)^g (1 - y z)^g]
    -------------------------------------------------------------------
    (1 + x y u t)^(r-1) (1 - t) (1 - x^2 y u^2 t^2)^g (1 - x y^2 u^2 t^2)^g

where Phi_g sends z^j to u^j t^j for j <= g and to u^(j-1) t^j for
g + 2 <= j <= 2g + 2.  The z^(g+1) coefficient of the bracket is zero, and
we insist on that rather than giving Phi_g a value there.

The two strand series (i = n and n = i + 1) are rational in a single
variable z with the same denominator after ut -> z, minus the (1 - t).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .algebra import (
    XYUT,
    XYZ,
    DenominatorFactor,
    Poly,
    RationalGF,
    Ring,
    TruncatedSeries,
    expand_rational,
    truncate,
)

PHI = "Phi"
PSI = "Psi"

I_EQ_N = "i_eq_n"
I_EQ_N_MINUS_1 = "i_eq_n_minus_1"  # n = i + 1
STRANDS = (I_EQ_N, I_EQ_N_MINUS_1)

SPECIALIZATIONS = ("betti", "euler", "epoly")


class ShiftError(ValueError):
    pass


class PositivityError(RuntimeError):
    """A sign-corrected coefficient came out negative."""


def _check_surface(g, r):
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if r == 0:
        raise ValueError("closed-surface case out of scope (Pagaria): need punctures >= 1")
    if r < 0:
        raise ValueError("punctures must be positive")


def base_polynomial(g: int) -> Poly:
    """(1 - x y z^2) (1 - x z)^g (1 - y z)^g in Z[x, y, z]."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    one = XYZ.one()
    x, y, z = XYZ.gen("x"), XYZ.gen("y"), XYZ.gen("z")
    return (one - x * y * z * z) * (one - x * z) ** g * (one - y * z) ** g


def base_coefficient(g: int, p: int, q: int) -> int:
    """Closed form for the x^p y^q z^(p+q) coefficient of `base_polynomial`."""
    def b(k):
        return comb(g, k) if 0 <= k <= g else 0

    return (-1) ** (p + q) * (b(p) * b(q) - b(p - 1) * b(q - 1))


def apply_shift(kind: str, g: int, p: Poly) -> Poly:
    """Phi_g (into x, y, u, t) or Psi_g (into x, y, z), applied termwise."""
    if p.ring != XYZ:
        raise ValueError("shift operators act on polynomials in x, y, z")
    if kind not in (PHI, PSI):
        raise ValueError(f"unknown shift {kind!r}")
    for (ex, ey, j), c in p.terms.items():
        if j == g + 1:
            raise ShiftError(
                f"shift undefined at j=g+1: coefficient {c} of x^{ex} y^{ey} z^{j}"
            )
        if j > 2 * g + 2:
            raise ShiftError(f"shift undefined for z-degree {j} > 2g+2")

    def low(j):
        return j if j <= g else j - 1

    if kind == PHI:
        return p.map_exponents(lambda e: (e[0], e[1], low(e[2]), e[2]), XYUT)
    return p.map_exponents(lambda e: (e[0], e[1], low(e[2])), XYZ)


def truncate_z(p: Poly, g: int) -> Poly:
    """T_{<=g}: keep the terms of z-degree at most g."""
    if p.ring != XYZ:
        raise ValueError("truncation acts on polynomials in x, y, z")
    return truncate(p, g)


def _ut(ring: Ring, k: int, **extra) -> Poly:
    # (ut)^k in XYUT, z^k in XYZ
    if ring == XYUT:
        return ring.monomial(u=k, t=k, **extra)
    return ring.monomial(z=k, **extra)


def _denominator(g: int, r: int, ring: Ring) -> tuple[DenominatorFactor, ...]:
    one = ring.one()
    factors = []
    if r > 1:
        factors.append(DenominatorFactor(one + _ut(ring, 1, x=1, y=1), r - 1))
    if ring == XYUT:
        factors.append(DenominatorFactor(one - ring.gen("t"), 1))
    if g > 0:
        factors.append(DenominatorFactor(one - _ut(ring, 2, x=2, y=1), g))
        factors.append(DenominatorFactor(one - _ut(ring, 2, x=1, y=2), g))
    return tuple(factors)


def theorem_a_gf(g: int, r: int) -> RationalGF:
    _check_surface(g, r)
    return RationalGF(apply_shift(PHI, g, base_polynomial(g)), _denominator(g, r, XYUT))


@lru_cache(maxsize=256)
def expand_surface(g: int, r: int, tmax: int) -> TruncatedSeries:
    """Signed series f for Sigma_{g,r} up to t^tmax."""
    return expand_rational(theorem_a_gf(g, r), tmax)


@dataclass
class HodgeTable:
    genus: int
    punctures: int
    tmax: int
    entries: dict[tuple[int, int, int, int], int] = field(default_factory=dict)  # (w1, w2, i, n) -> h

    def __post_init__(self):
        for (w1, w2, i, n), h in self.entries.items():
            if h < 0:
                raise PositivityError(f"negative Hodge number {h} at {(w1, w2, i, n)}")
            if n < i:
                raise PositivityError(f"nonzero entry above the line i = n at {(w1, w2, i, n)}")

    def get(self, w1, w2, i, n) -> int:
        return self.entries.get((w1, w2, i, n), 0)

    def at(self, n: int) -> dict[tuple[int, int, int], int]:
        return {(w1, w2, i): h for (w1, w2, i, m), h in self.entries.items() if m == n}

    def betti(self, i: int, n: int) -> int:
        return sum(h for (w1, w2, j, m), h in self.entries.items() if j == i and m == n)

    def sorted_entries(self):
        """(n, i, w1, w2, h) rows in canonical order."""
        return sorted((n, i, w1, w2, h) for (w1, w2, i, n), h in self.entries.items())


def hodge_table_from_series(s: TruncatedSeries, g: int, r: int) -> HodgeTable:
    entries = {}
    for (w1, w2, i, n), c in s.terms.items():
        h = (-1) ** i * c
        if h < 0:
            raise PositivityError(
                f"coefficient {c} of x^{w1} y^{w2} u^{i} t^{n} has the wrong sign"
            )
        entries[(w1, w2, i, n)] = h
    return HodgeTable(g, r, s.tmax, entries)


def hodge_table(g: int, r: int, tmax: int) -> HodgeTable:
    _check_surface(g, r)
    return hodge_table_from_series(expand_surface(g, r, tmax), g, r)


def strand_gf(which: str, g: int, r: int) -> RationalGF:
    """Generating function in z for the strand i = n or n = i + 1."""
    _check_surface(g, r)
    base = base_polynomial(g)
    if which == I_EQ_N:
        num = truncate_z(base, g)
    elif which == I_EQ_N_MINUS_1:
        num = apply_shift(PSI, g, base)
    else:
        raise ValueError(f"unknown strand {which!r}; expected one of {STRANDS}")
    return RationalGF(num, _denominator(g, r, XYZ))


def expand_strand(which: str, g: int, r: int, imax: int) -> TruncatedSeries:
    return expand_rational(strand_gf(which, g, r), imax)


def specialize(s: TruncatedSeries, mode: str) -> TruncatedSeries:
    """betti: x = y = 1; euler: x = y = u = 1; epoly: u = 1.

    Specialized variables are set to exponent 0, so the result lives in the
    same ring as ``s``.
    """
    if s.ring != XYUT:
        raise ValueError("specialize expects a series in x, y, u, t")
    if mode == "betti":
        fn = lambda e: (0, 0, e[2], e[3])
    elif mode == "euler":
        fn = lambda e: (0, 0, 0, e[3])
    elif mode == "epoly":
        fn = lambda e: (e[0], e[1], 0, e[3])
    else:
        raise ValueError(f"unknown specialization {mode!r}; expected one of {SPECIALIZATIONS}")
    return TruncatedSeries(s.poly.map_exponents(fn), s.tmax)
