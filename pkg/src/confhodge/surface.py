"""
Finite model of H*(Sigma_g x Sigma_g) for checking the diagonal class.

H*(Sigma_g) has basis 1, x^(a), y^(a) (degree 1) and w (degree 2) with
x^(a) y^(a) = w = -y^(a) x^(a) and every other degree-2 product zero.  The
square is the graded tensor product with the Koszul rule
(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.

Compactly supported classes of the once-punctured surface X are the span of
alpha_1 beta_2 in degree 2 and w_1 w_2 in degree 4; ordinary classes of X^2
are a quotient of H*(Sigma^2), so they get an arbitrary lift before pairing.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

ONE = ("1", 0)
VOL = ("w", 0)


def x(a):
    return ("x", a)


def y(a):
    return ("y", a)


def degree(b) -> int:
    return {"1": 0, "x": 1, "y": 1, "w": 2}[b[0]]


class SurfaceAlgebraModel:
    def __init__(self, g: int):
        self.g = g
        self.h1 = [x(a) for a in range(1, g + 1)] + [y(a) for a in range(1, g + 1)]
        self.basis = [ONE] + self.h1 + [VOL]

    # -- H*(Sigma) --------------------------------------------------------

    def mul1(self, b1, b2):
        """Product of two basis classes of H*(Sigma) as (coeff, basis) or None."""
        if b1 == ONE:
            return 1, b2
        if b2 == ONE:
            return 1, b1
        if degree(b1) + degree(b2) > 2:
            return None
        (k1, a1), (k2, a2) = b1, b2
        if a1 != a2 or k1 == k2:
            return None
        return (1 if k1 == "x" else -1), VOL

    # -- H*(Sigma^2) ------------------------------------------------------

    def el(self, *terms):
        """Element of H*(Sigma^2) from (coeff, b1, b2) triples meaning coeff * b1 (x) b2."""
        out = {}
        for c, b1, b2 in terms:
            out[(b1, b2)] = out.get((b1, b2), 0) + c
        return {k: v for k, v in out.items() if v}

    def first(self, b):
        return self.el((1, b, ONE))

    def second(self, b):
        return self.el((1, ONE, b))

    def mul(self, A, B):
        out = {}
        for (a1, a2), ca in A.items():
            for (b1, b2), cb in B.items():
                left = self.mul1(a1, b1)
                right = self.mul1(a2, b2)
                if left is None or right is None:
                    continue
                sign = -1 if degree(a2) * degree(b1) % 2 else 1
                key = (left[1], right[1])
                out[key] = out.get(key, 0) + sign * ca * cb * left[0] * right[0]
        return {k: v for k, v in out.items() if v}

    def add(self, A, B, scale=1):
        out = dict(A)
        for k, v in B.items():
            out[k] = out.get(k, 0) + scale * v
        return {k: v for k, v in out.items() if v}

    def integrate_top(self, A):
        """int over X^2: reads off the w_1 w_2 coefficient."""
        return A.get((VOL, VOL), 0)

    def integrate_surface(self, e: dict):
        return e.get(VOL, 0)

    def diagonal_pullback(self, A) -> dict:
        """delta^*: a (x) b -> a b."""
        out = {}
        for (b1, b2), c in A.items():
            m = self.mul1(b1, b2)
            if m is not None:
                out[m[1]] = out.get(m[1], 0) + c * m[0]
        return {k: v for k, v in out.items() if v}

    # -- the diagonal class -----------------------------------------------

    def diagonal_class(self):
        """-sum_a (x_1^(a) y_2^(a) + x_2^(a) y_1^(a)), built through `mul`."""
        out = {}
        for a in range(1, self.g + 1):
            out = self.add(out, self.mul(self.first(x(a)), self.second(y(a))), -1)
            out = self.add(out, self.mul(self.second(x(a)), self.first(y(a))), -1)
        return out

    def compact_h2_basis(self):
        """alpha_1 beta_2 for alpha, beta in H^1: the 4 g^2 classes spanning H^2_c(X^2)."""
        return [(al, be, self.mul(self.first(al), self.second(be)))
                for al, be in product(self.h1, self.h1)]

    def lifts(self, D):
        """A few lifts of the image of D in H^2(X^2): add multiples of w_1 and w_2."""
        w1, w2 = self.first(VOL), self.second(VOL)
        return [D] + [self.add(self.add(D, w1, c1), w2, c2) for c1, c2 in ((1, 0), (0, -3), (7, 5))]

    def pairing_cases(self, D=None):
        """(alpha, beta, lhs, [rhs for each lift]) for every compactly supported gamma."""
        D = self.diagonal_class() if D is None else D
        out = []
        for al, be, gamma in self.compact_h2_basis():
            lhs = self.integrate_surface(self.diagonal_pullback(gamma))
            rhs = [self.integrate_top(self.mul(L, gamma)) for L in self.lifts(D)]
            out.append((al, be, lhs, rhs))
        return out

    def solve_diagonal_class(self):
        """The unique D in span{alpha_1 beta_2} solving the defining pairing identity."""
        unknowns = [(al, be) for al, be in product(self.h1, self.h1)]
        cases = self.compact_h2_basis()
        n = len(unknowns)
        # row k: int (sum_j c_j e_j) * gamma_k = int delta^* gamma_k
        mat = []
        for _, _, gamma in cases:
            row = [Fraction(self.integrate_top(self.mul(self.el((1, al, be)), gamma)))
                   for al, be in unknowns]
            row.append(Fraction(self.integrate_surface(self.diagonal_pullback(gamma))))
            mat.append(row)
        sol = _solve(mat, n)
        D = {}
        for (al, be), c in zip(unknowns, sol):
            if c:
                assert c.denominator == 1
                D[(al, be)] = int(c)
        return D


def _solve(mat, n):
    """Gauss-Jordan over Q for a square nonsingular augmented system."""
    m = [list(r) for r in mat]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [v / p for v in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]
