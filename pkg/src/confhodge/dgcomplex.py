"""
Combinatorial dg-model for the S_n-invariant E_2 page, used as an oracle.

Basis elements are indexed by tuples (rho, S, T, u, v) with rho in {0, 1},
S, T subsets of {1..g} and u, v in Z_{>=0}^g.  The length

    l = 2 rho + |S| + |T| + 2|u| + 2|v|

filters the basis, and level n keeps the tuples with l <= n.  The differential
kills rho = 0 and sends

    f(1, S, T, u, v) -> -2 sum_{a not in S u T} (-1)^(|S_{>a}| + |T_{<a}|) f(0, S+a, T+a, u, v).

The sign is the Koszul sign of moving the two factors x_a y_a of the diagonal
class into the canonical (x's ascending, then y's ascending) position, which
makes -d/2 coincide entrywise with omega ^ -.  The exponent |S| in place of
|S_{>a}| (``signs="literal"``) is not equivalent: it loses rank from g = 3 on.

It only touches (rho, S, T), so cohomology splits into (sigma, tau) = (|S|, |T|)
blocks times a count of the (u, v) vectors.  Block ranks are computed by exact
fraction-free elimination; the exterior-algebra operator omega ^ - is built
independently from a generic wedge product for the hard Lefschetz checks.

Subsets of {1..g} are always enumerated in binary-counter order (bit a-1 of
the counter stands for a), which fixes the row/column order of every matrix.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb


# ---------------------------------------------------------------------------
# integer matrices


@dataclass
class IntMatrix:
    rows: int
    cols: int
    entries: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.entries:
            self.entries = [[0] * self.cols for _ in range(self.rows)]
        assert len(self.entries) == self.rows
        assert all(len(row) == self.cols for row in self.entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.entries):
            for k, a in enumerate(row):
                if a:
                    brow = other.entries[k]
                    orow = out[i]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return IntMatrix(self.rows, other.cols, out)

    def transpose(self) -> "IntMatrix":
        if not self.rows:
            return IntMatrix(self.cols, 0, [[] for _ in range(self.cols)])
        return IntMatrix(self.cols, self.rows, [list(c) for c in zip(*self.entries)])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def nonzeros(self):
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if a:
                    yield i, j, a

    def rank(self) -> int:
        return bareiss_rank(self.entries)

    def nullity(self) -> int:
        return self.cols - self.rank()


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[c]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                row[j] = (p * row[j] - a * prow[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def sign_conjugacy(a: IntMatrix, b: IntMatrix):
    """Find +-1 vectors (r, c) with a[i][j] == r[i] * b[i][j] * c[j].

    Returns None when no such signs exist.  Propagates signs along the
    bipartite graph of nonzero entries and checks every entry.
    """
    if a.shape != b.shape:
        return None
    for i in range(a.rows):
        for j in range(a.cols):
            if abs(a.entries[i][j]) != abs(b.entries[i][j]):
                return None
    rs: list[int | None] = [None] * a.rows
    cs: list[int | None] = [None] * a.cols
    adj_r = defaultdict(list)
    adj_c = defaultdict(list)
    for i, j, x in a.nonzeros():
        s = 1 if x == b.entries[i][j] else -1
        adj_r[i].append((j, s))
        adj_c[j].append((i, s))
    for start in range(a.rows):
        if rs[start] is not None:
            continue
        rs[start] = 1
        stack = [("r", start)]
        while stack:
            kind, k = stack.pop()
            if kind == "r":
                for j, s in adj_r[k]:
                    want = s * rs[k]
                    if cs[j] is None:
                        cs[j] = want
                        stack.append(("c", j))
                    elif cs[j] != want:
                        return None
            else:
                for i, s in adj_c[k]:
                    want = s * cs[k]
                    if rs[i] is None:
                        rs[i] = want
                        stack.append(("r", i))
                    elif rs[i] != want:
                        return None
    return [1 if s is None else s for s in rs], [1 if s is None else s for s in cs]


# ---------------------------------------------------------------------------
# subsets and tuples


@lru_cache(maxsize=None)
def subsets(g: int, k: int | None = None) -> tuple[tuple[int, ...], ...]:
    out = []
    for mask in range(1 << g):
        s = tuple(a + 1 for a in range(g) if mask >> a & 1)
        if k is None or len(s) == k:
            out.append(s)
    return tuple(out)


def compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` nonnegative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def count_compositions(total: int, parts: int) -> int:
    if parts == 0:
        return 1 if total == 0 else 0
    return comb(total + parts - 1, parts - 1)


@dataclass(frozen=True, order=True)
class GammaTuple:
    rho: int
    S: tuple[int, ...]
    T: tuple[int, ...]
    u_vec: tuple[int, ...]
    v_vec: tuple[int, ...]

    def __post_init__(self):
        assert self.rho in (0, 1)
        assert len(self.u_vec) == len(self.v_vec)
        g = len(self.u_vec)
        assert all(1 <= a <= g for a in self.S + self.T)
        assert list(self.S) == sorted(set(self.S)) and list(self.T) == sorted(set(self.T))
        assert min(self.u_vec + self.v_vec, default=0) >= 0

    @property
    def g(self) -> int:
        return len(self.u_vec)

    @property
    def length(self) -> int:
        return 2 * self.rho + len(self.S) + len(self.T) + 2 * sum(self.u_vec) + 2 * sum(self.v_vec)

    @property
    def grading(self) -> tuple[int, int, int, int]:
        """(p, q, w1, w2): spectral-sequence bidegree and Hodge type."""
        s, t = len(self.S), len(self.T)
        a, b = sum(self.u_vec), sum(self.v_vec)
        return (s + t + a + b, self.rho + a + b, self.rho + s + 2 * a + b, self.rho + t + a + 2 * b)


def enumerate_gamma(g: int, n: int) -> list[GammaTuple]:
    """All tuples of length at most n, each once."""
    out = []
    for rho in (0, 1):
        for S in subsets(g):
            for T in subsets(g):
                base = 2 * rho + len(S) + len(T)
                if base > n:
                    continue
                budget = (n - base) // 2
                for a in range(budget + 1):
                    for b in range(budget - a + 1):
                        for u in compositions(a, g):
                            for v in compositions(b, g):
                                out.append(GammaTuple(rho, S, T, u, v))
    return out


SIGN_CONVENTIONS = ("koszul", "literal")


def diagonal_sign(S, T, a, signs="koszul") -> int:
    below_t = sum(1 for b in T if b < a)
    if signs == "koszul":
        return (-1) ** (sum(1 for b in S if b > a) + below_t)
    if signs == "literal":
        return (-1) ** (len(S) + below_t)
    raise ValueError(f"unknown sign convention {signs!r}")


def differential(t: GammaTuple, signs: str = "koszul") -> dict[GammaTuple, int]:
    """d f_t as a dict of coefficients (the -2 scalar included)."""
    if t.rho == 0:
        return {}
    out = {}
    for a in range(1, t.g + 1):
        if a in t.S or a in t.T:
            continue
        sign = diagonal_sign(t.S, t.T, a, signs)
        target = GammaTuple(0, tuple(sorted(t.S + (a,))), tuple(sorted(t.T + (a,))), t.u_vec, t.v_vec)
        out[target] = -2 * sign
    return out


# ---------------------------------------------------------------------------
# exterior algebra on x_1..x_g, y_1..y_g


def _generator_index(g, kind, a):
    # x_a before every y_b; each family ascending
    return a - 1 if kind == "x" else g + a - 1


def wedge_sign(word: list[int]) -> int:
    """Sign that sorts a word of distinct generator indices; 0 on a repeat."""
    if len(set(word)) != len(word):
        return 0
    inversions = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return -1 if inversions % 2 else 1


def exterior_basis(g: int, i: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Basis alpha_(S, T) of Omega^i, S outer and T inner in binary-counter order."""
    return [(S, T) for S in subsets(g) for T in subsets(g) if len(S) + len(T) == i]


def _word(g, S, T):
    return [_generator_index(g, "x", a) for a in S] + [_generator_index(g, "y", b) for b in T]


def omega_wedge(g: int, S, T) -> dict[tuple, int]:
    """omega ^ alpha_(S, T) expanded in the alpha basis."""
    out = {}
    for a in range(1, g + 1):
        word = [_generator_index(g, "x", a), _generator_index(g, "y", a)] + _word(g, S, T)
        s = wedge_sign(word)
        if s:
            key = (tuple(sorted(S + (a,))), tuple(sorted(T + (a,))))
            out[key] = out.get(key, 0) + s
    return out


def iota_matrix(g: int, i: int) -> IntMatrix:
    """Matrix of omega ^ - : Omega^i -> Omega^(i+2)."""
    if not 0 <= i <= 2 * g:
        raise ValueError(f"degree {i} outside 0..{2 * g}")
    src = exterior_basis(g, i)
    dst = exterior_basis(g, i + 2)
    index = {b: k for k, b in enumerate(dst)}
    m = IntMatrix.zeros(len(dst), len(src))
    for j, (S, T) in enumerate(src):
        for key, c in omega_wedge(g, S, T).items():
            m.entries[index[key]][j] += c
    return m


def _block_basis(g, sigma, tau):
    if not (0 <= sigma <= g and 0 <= tau <= g):
        return []
    return [(S, T) for S in subsets(g, sigma) for T in subsets(g, tau)]


def iota_block(g: int, sigma: int, tau: int) -> IntMatrix:
    """omega ^ - restricted to bidegree (sigma, tau) -> (sigma+1, tau+1)."""
    src = _block_basis(g, sigma, tau)
    dst = _block_basis(g, sigma + 1, tau + 1)
    index = {b: k for k, b in enumerate(dst)}
    m = IntMatrix.zeros(len(dst), len(src))
    for j, (S, T) in enumerate(src):
        for key, c in omega_wedge(g, S, T).items():
            m.entries[index[key]][j] += c
    return m


@lru_cache(maxsize=None)
def _differential_block(g, sigma, tau, signs="koszul"):
    src = _block_basis(g, sigma, tau)
    dst = _block_basis(g, sigma + 1, tau + 1)
    index = {b: k for k, b in enumerate(dst)}
    m = IntMatrix.zeros(len(dst), len(src))
    for j, (S, T) in enumerate(src):
        for a in range(1, g + 1):
            if a in S or a in T:
                continue
            key = (tuple(sorted(S + (a,))), tuple(sorted(T + (a,))))
            m.entries[index[key]][j] += diagonal_sign(S, T, a, signs)
    return m


def differential_block(g: int, sigma: int, tau: int, signs: str = "koszul") -> IntMatrix:
    """Matrix of -d/2 from the rho=1 (sigma, tau) block to the rho=0 (sigma+1, tau+1) block.

    Columns are f(1, S, T) with |S| = sigma, |T| = tau; rows are
    f(0, S', T') with |S'| = sigma + 1, |T'| = tau + 1.
    """
    if not (0 <= sigma <= g and 0 <= tau <= g):
        raise ValueError("block index out of range")
    m = _differential_block(g, sigma, tau, signs)
    return IntMatrix(m.rows, m.cols, [list(r) for r in m.entries])


@lru_cache(maxsize=None)
def block_cohomology_dims(g: int, sigma: int, tau: int, signs: str = "koszul") -> tuple[int, int]:
    """(dim of the rho=1 kernel, dim of the rho=0 cokernel) from exact ranks."""
    if not (0 <= sigma <= g and 0 <= tau <= g):
        raise ValueError("block index out of range")
    out_map = _differential_block(g, sigma, tau, signs)
    dim_rho1 = out_map.cols - out_map.rank()
    size = comb(g, sigma) * comb(g, tau)
    incoming = _differential_block(g, sigma - 1, tau - 1, signs).rank() if sigma and tau else 0
    return dim_rho1, size - incoming


def _binom(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def closed_form_block_dims(g: int, sigma: int, tau: int) -> tuple[int, int]:
    """Block dimensions predicted by hard Lefschetz."""
    b = lambda k: _binom(g, k)
    rho1 = 0 if sigma + tau <= g - 1 else b(sigma) * b(tau) - b(sigma + 1) * b(tau + 1)
    rho0 = b(sigma) * b(tau) - b(sigma - 1) * b(tau - 1) if sigma + tau <= g + 1 else 0
    return rho1, rho0


# ---------------------------------------------------------------------------
# Hilbert series of the cohomology


@dataclass
class GradedDimTable:
    """(p, q, w1, w2, n) -> dim H_{g,n} in that grading; zeros omitted."""

    genus: int
    entries: dict[tuple[int, int, int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        assert all(v > 0 for v in self.entries.values())

    def at(self, n: int) -> dict[tuple[int, int, int, int], int]:
        return {k[:4]: v for k, v in self.entries.items() if k[4] == n}

    def merge(self, other: "GradedDimTable") -> "GradedDimTable":
        assert self.genus == other.genus
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return GradedDimTable(self.genus, out)

    def sorted_entries(self):
        """(n, p, q, w1, w2, dim) rows in canonical order."""
        return sorted((k[4],) + k[:4] + (v,) for k, v in self.entries.items())

    def hodge_view(self) -> dict[tuple[int, int, int, int], int]:
        """Collapse (p, q) to i = p + q: (w1, w2, i, n) -> summed dimension."""
        out: dict = {}
        for (p, q, w1, w2, n), v in self.entries.items():
            key = (w1, w2, p + q, n)
            out[key] = out.get(key, 0) + v
        return out


def cohomology_hilbert(g: int, n: int, signs: str = "koszul") -> GradedDimTable:
    """Graded dimensions of H_{g,n} from rank-computed block dimensions."""
    if g < 0 or n < 0:
        raise ValueError("g and n must be nonnegative")
    entries: dict = defaultdict(int)
    for rho in (0, 1):
        for sigma in range(g + 1):
            for tau in range(g + 1):
                base = 2 * rho + sigma + tau
                if base > n:
                    continue
                dim = block_cohomology_dims(g, sigma, tau, signs)[1 - rho]
                if not dim:
                    continue
                budget = (n - base) // 2
                for a in range(budget + 1):
                    for b in range(budget - a + 1):
                        mult = count_compositions(a, g) * count_compositions(b, g)
                        if not mult:
                            continue
                        key = (sigma + tau + a + b, rho + a + b,
                               rho + sigma + 2 * a + b, rho + tau + a + 2 * b, n)
                        entries[key] += dim * mult
    return GradedDimTable(g, dict(entries))


def cohomology_hilbert_range(g: int, n_max: int, signs: str = "koszul") -> GradedDimTable:
    out = GradedDimTable(g)
    for n in range(n_max + 1):
        out = out.merge(cohomology_hilbert(g, n, signs))
    return out


def cohomology_hilbert_bruteforce(g: int, n: int, signs: str = "koszul") -> GradedDimTable:
    """Same table from the full tuple basis, without the block decomposition.

    Builds d on every graded piece of the level-n span from `differential` and
    takes dim ker - dim im directly.  Much slower; used to cross-check.
    """
    pieces: dict = defaultdict(list)
    for t in enumerate_gamma(g, n):
        pieces[t.grading].append(t)
    index = {k: {t: i for i, t in enumerate(ts)} for k, ts in pieces.items()}

    def d_rank(src_key):
        src = pieces.get(src_key, [])
        dst_key = (src_key[0] + 2, src_key[1] - 1, src_key[2], src_key[3])
        dst = index.get(dst_key, {})
        if not src or not dst:
            return 0
        m = [[0] * len(src) for _ in dst]
        for j, t in enumerate(src):
            for tgt, c in differential(t, signs).items():
                m[dst[tgt]][j] += c
        return bareiss_rank(m)

    entries = {}
    for key, ts in pieces.items():
        p, q, w1, w2 = key
        dim = len(ts) - d_rank(key) - d_rank((p - 2, q + 1, w1, w2))
        if dim:
            entries[key + (n,)] = dim
    return GradedDimTable(g, entries)
