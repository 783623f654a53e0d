"""
Exact sparse multivariate polynomials and truncated power series.

Polynomials are dictionaries from exponent tuples to nonzero Python ints, so
there is no overflow anywhere.  A `Ring` fixes the variable names and the
canonical term order used for printing and serialization.  The last variable
of a ring is the truncation variable of `TruncatedSeries` (t for the
x,y,u,t ring, z for the x,y,z ring).

Rational generating functions are kept with a factored denominator; each
factor is inverted on its own as a formal power series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping


@dataclass(frozen=True)
class Ring:
    names: tuple[str, ...]
    order: tuple[int, ...]  # variable indices, most significant first

    @property
    def nvars(self) -> int:
        return len(self.names)

    def sort_key(self, e):
        return tuple(e[k] for k in self.order)

    def gen(self, name: str) -> "Poly":
        e = [0] * self.nvars
        e[self.names.index(name)] = 1
        return Poly({tuple(e): 1}, self)

    def monomial(self, coeff=1, **exps) -> "Poly":
        e = [0] * self.nvars
        for name, k in exps.items():
            e[self.names.index(name)] = k
        return Poly({tuple(e): coeff}, self)

    def one(self) -> "Poly":
        return Poly({(0,) * self.nvars: 1}, self)

    def zero(self) -> "Poly":
        return Poly({}, self)


# Deterministic iteration is lexicographic on (et, eu, ex, ey).
XYUT = Ring(("x", "y", "u", "t"), order=(3, 2, 0, 1))
# Auxiliary ring for the base polynomial and the strand series.
XYZ = Ring(("x", "y", "z"), order=(2, 0, 1))


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


class Poly:
    """Sparse polynomial with integer coefficients in a fixed `Ring`.

    Treat instances as immutable; every operation returns a new object.
    """

    __slots__ = ("terms", "ring")

    def __init__(self, terms: Mapping[tuple, int] | None = None, ring: Ring = XYUT):
        self.ring = ring
        self.terms = _clean(dict(terms or {}))
        for e in self.terms:
            if len(e) != ring.nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for ring {ring.names}")

    @classmethod
    def _raw(cls, terms, ring):
        p = object.__new__(cls)
        p.terms = terms
        p.ring = ring
        return p

    # -- basic protocol ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly({(0,) * self.ring.nvars: other}, self.ring)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        """Terms in canonical order."""
        key = self.ring.sort_key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def coeff(self, e) -> int:
        return self.terms.get(tuple(e), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def degree(self, var: int | str = -1) -> int:
        if isinstance(var, str):
            var = self.ring.names.index(var)
        return max((e[var] for e in self.terms), default=-1)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return Poly({(0,) * self.ring.nvars: other}, self.ring)
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly._raw(_clean(out), self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(_mul_terms(self.terms, other.terms, None), self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- transformations --------------------------------------------------

    def map_exponents(self, fn, ring: Ring | None = None) -> "Poly":
        """Apply ``fn`` to every exponent vector, summing colliding terms."""
        ring = ring or self.ring
        out: dict = {}
        for e, c in self.terms.items():
            e2 = tuple(fn(e))
            out[e2] = out.get(e2, 0) + c
        return Poly(out, ring)

    def substitute(self, values: Mapping[str, "Poly | int"], ring: Ring | None = None) -> "Poly":
        """Substitute polynomials (in ``ring``) for variables of this polynomial.

        Variables not listed must exist in ``ring`` under the same name and are
        carried over.
        """
        ring = ring or self.ring
        images = []
        for name in self.ring.names:
            v = values.get(name)
            if v is None:
                v = ring.gen(name)
            elif isinstance(v, int):
                v = Poly({(0,) * ring.nvars: v}, ring)
            images.append(v)
        powers: list[dict[int, Poly]] = [{0: ring.one()} for _ in images]

        def power(k, j):
            cache = powers[k]
            if j not in cache:
                cache[j] = power(k, j - 1) * images[k]
            return cache[j]

        out = ring.zero()
        for e, c in self.terms.items():
            term = Poly({(0,) * ring.nvars: c}, ring)
            for k, j in enumerate(e):
                if j:
                    term = term * power(k, j)
            out = out + term
        return out

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def _mul_terms(a, b, tmax, tvar=-1):
    out: dict = {}
    get = out.get
    for ea, ca in a.items():
        ta = ea[tvar]
        for eb, cb in b.items():
            if tmax is not None and ta + eb[tvar] > tmax:
                continue
            e = tuple(i + j for i, j in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    return _clean(out)


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.items():
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(p.ring.names, e) if k
        )
        if not mono:
            s = str(abs(c))
        elif abs(c) == 1:
            s = mono
        else:
            s = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, s))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return " ".join([head] + [f"{sg} {s}" for sg, s in parts[1:]])


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


# ---------------------------------------------------------------------------
# truncated series


class TruncatedSeries:
    """Power series known exactly up to degree ``tmax`` in the ring's last variable."""

    __slots__ = ("poly", "tmax")

    def __init__(self, poly: Poly, tmax: int):
        if tmax < 0:
            raise ValueError("tmax must be nonnegative")
        self.tmax = tmax
        self.poly = truncate(poly, tmax)

    @property
    def ring(self) -> Ring:
        return self.poly.ring

    @property
    def terms(self):
        return self.poly.terms

    def items(self):
        return self.poly.items()

    def coeff(self, e) -> int:
        return self.poly.coeff(e)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.tmax == other.tmax and self.poly == other.poly

    def _align(self, other):
        if isinstance(other, TruncatedSeries):
            return min(self.tmax, other.tmax), other.poly
        if isinstance(other, (Poly, int)):
            return self.tmax, other
        return None, NotImplemented

    def __add__(self, other):
        m, q = self._align(other)
        if q is NotImplemented:
            return q
        return TruncatedSeries(truncate(self.poly, m) + q, m)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.tmax)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        m, q = self._align(other)
        if q is NotImplemented:
            return q
        if isinstance(q, int):
            return TruncatedSeries(self.poly * q, m)
        if q.ring != self.ring:
            raise ValueError("ring mismatch")
        return TruncatedSeries(Poly._raw(_mul_terms(self.poly.terms, q.terms, m), self.ring), m)

    __rmul__ = __mul__

    def truncate(self, m: int) -> "TruncatedSeries":
        if m > self.tmax:
            raise ValueError(f"cannot extend a series known to degree {self.tmax} to {m}")
        return TruncatedSeries(self.poly, m)

    def __repr__(self):
        return f"TruncatedSeries({format_poly(self.poly)} + O({self.ring.names[-1]}^{self.tmax + 1}))"


def truncate(p: Poly, tmax: int) -> Poly:
    return Poly._raw({e: c for e, c in p.terms.items() if e[-1] <= tmax}, p.ring)


# ---------------------------------------------------------------------------
# rational generating functions


@dataclass(frozen=True)
class DenominatorFactor:
    base: Poly
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.base.constant_term() != 1:
            raise ValueError(f"denominator factor {self.base} must have constant term 1")
        if any(e[-1] == 0 for e in self.base.terms if any(e)):
            raise ValueError(f"denominator factor {self.base} is not invertible degree by degree")


@dataclass(frozen=True)
class RationalGF:
    numerator: Poly
    denominator: tuple[DenominatorFactor, ...] = field(default=())

    @property
    def ring(self) -> Ring:
        return self.numerator.ring

    def denominator_poly(self) -> Poly:
        out = self.ring.one()
        for f in self.denominator:
            out = out * f.base**f.multiplicity
        return out

    def denominator_str(self) -> str:
        den = " * ".join(
            f"({f.base})" + (f"^{f.multiplicity}" if f.multiplicity > 1 else "")
            for f in self.denominator
        )
        return den or "1"

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator_str()})"


def expand_factor_inverse(f: DenominatorFactor, tmax: int) -> TruncatedSeries:
    """Expansion of ``1 / f.base**f.multiplicity`` up to degree ``tmax``."""
    if f.base.constant_term() != 1:
        raise ValueError("factor base must have constant term 1")
    ring = f.base.ring
    rest = f.base - 1
    if len(rest) == 1:
        # 1 + c*m: negative binomial series
        (e, c), = rest.terms.items()
        k = f.multiplicity
        out = {}
        j = 0
        while j * e[-1] <= tmax:
            out[tuple(j * i for i in e)] = comb(k + j - 1, j) * (-c) ** j
            j += 1
        return TruncatedSeries(Poly(out, ring), tmax)
    # general case: 1/(1 + rest) = sum_j (-rest)^j, then raise to the multiplicity
    inv = TruncatedSeries(ring.one(), tmax)
    step = TruncatedSeries(ring.one(), tmax)
    neg = TruncatedSeries(-rest, tmax)
    mindeg = min(e[-1] for e in rest.terms)
    for _ in range(tmax // mindeg):
        step = step * neg
        inv = inv + step
    out = TruncatedSeries(ring.one(), tmax)
    for _ in range(f.multiplicity):
        out = out * inv
    return out


def expand_rational(gf: RationalGF, tmax: int) -> TruncatedSeries:
    out = TruncatedSeries(gf.numerator, tmax)
    for f in gf.denominator:
        if out.poly.is_zero():
            break
        out = out * expand_factor_inverse(f, tmax)
    return out

