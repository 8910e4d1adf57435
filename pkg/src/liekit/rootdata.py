"""Finite-type Cartan data, root systems, root strings and lattice utilities.

Conventions fixed here and used by every other module:

* Bourbaki node numbering for all series.
* Cartan matrix entries a_ij = <alpha_i^vee, alpha_j>, i.e. rows are indexed
  by coroots, so that d_i * a_ij is the symmetric positive-definite matrix
  ( alpha_i | alpha_j ) with short roots normalized to d = 1,
  ( alpha | alpha ) = 2 d_alpha.
* Roots are integer coefficient vectors in the simple-root basis, ordered by
  (height, lexicographic coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

SERIES_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanDatum:
    series: str
    rank: int
    a: tuple  # tuple of tuple of int, a_ij = <alpha_i^vee, alpha_j>
    d: tuple  # symmetrizers, d_i a_ij symmetric, min d_i = 1

    def sym(self, i, j):
        """( alpha_i | alpha_j ) = d_i a_ij."""
        return self.d[i] * self.a[i][j]

    @property
    def type_name(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Root:
    coeffs: tuple  # int coefficients in the simple-root basis

    @property
    def height(self):
        return sum(self.coeffs)

    def is_positive(self):
        return all(c >= 0 for c in self.coeffs) and any(c > 0 for c in self.coeffs)

    def __neg__(self):
        return Root(tuple(-c for c in self.coeffs))


def _edges(series, n):
    """Dynkin diagram as (i, j, a_ij, a_ji) with 0-based Bourbaki nodes."""
    if series == "A":
        return [(i, i + 1, -1, -1) for i in range(n - 1)]
    if series == "B":
        # nodes 1..n-1 long, node n short
        e = [(i, i + 1, -1, -1) for i in range(n - 2)]
        e.append((n - 2, n - 1, -1, -2))
        return e
    if series == "C":
        # nodes 1..n-1 short, node n long
        e = [(i, i + 1, -1, -1) for i in range(n - 2)]
        e.append((n - 2, n - 1, -2, -1))
        return e
    if series == "D":
        e = [(i, i + 1, -1, -1) for i in range(n - 3)]
        e.append((n - 3, n - 2, -1, -1))
        e.append((n - 3, n - 1, -1, -1))
        return e
    if series == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        e = [(chain[k], chain[k + 1], -1, -1) for k in range(len(chain) - 1)]
        e.append((1, 3, -1, -1))
        return e
    if series == "F":
        # nodes 1,2 long; nodes 3,4 short
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if series == "G":
        # node 1 short, node 2 long: a_12 = <alpha_1^vee, alpha_2> = -3
        return [(0, 1, -3, -1)]
    raise ValueError(f"unknown series {series!r}")


def build_cartan(series, rank):
    """Cartan matrix and symmetrizers for a finite Dynkin type."""
    series = series.upper()
    if series not in SERIES_RANKS or not SERIES_RANKS[series](rank):
        raise ValueError(f"invalid finite Dynkin type {series}{rank}")
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j, aij, aji) in _edges(series, n):
        a[i][j] = aij
        a[j][i] = aji
    # solve d_i a_ij = d_j a_ji over the connected diagram, normalize min = 1
    d = [0] * n
    d[0] = 1
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and a[i][j] != 0 and d[j] == 0:
                # d_j = d_i a_ij / a_ji
                val = Fraction(d[i] * a[i][j], a[j][i])
                d[j] = val
                todo.append(j)
    lcm_den = 1
    for v in d:
        lcm_den = lcm_den * v.denominator // _gcd(lcm_den, v.denominator)
    d = [v * lcm_den for v in d]
    g = 0
    for v in d:
        g = _gcd(g, int(v))
    d = tuple(int(v) // g for v in d)
    for i in range(n):
        for j in range(n):
            assert d[i] * a[i][j] == d[j] * a[j][i], "symmetrizer failure"
    return CartanDatum(series, rank, tuple(tuple(r) for r in a), d)


def _gcd(x, y):
    x, y = abs(x), abs(y)
    while y:
        x, y = y, x % y
    return x


class RootSystem:
    """Full root set, closed under simple reflections, with fast membership."""

    def __init__(self, cartan):
        self.cartan = cartan
        n = cartan.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        roots = set(simple)
        frontier = set(simple)
        while frontier:
            nxt = set()
            for beta in frontier:
                for i in range(n):
                    img = self._reflect(beta, i)
                    if img not in roots:
                        roots.add(img)
                        nxt.add(img)
            frontier = nxt
        self.positive = sorted((r for r in roots if sum(r) > 0),
                               key=lambda r: (sum(r), r))
        self.negative = [tuple(-c for c in r) for r in self.positive]
        self.roots = sorted(roots, key=lambda r: (sum(r), r))
        self._set = roots
        self._pos_index = {r: k for k, r in enumerate(self.positive)}

    def _reflect(self, beta, i):
        c = self.pairing_with_coroot(beta, i)
        out = list(beta)
        out[i] -= c
        return tuple(out)

    def pairing_with_coroot(self, beta, i):
        """<beta, alpha_i^vee> = sum_j beta_j a_ij."""
        a = self.cartan.a
        return sum(a[i][j] * beta[j] for j in range(self.cartan.rank))

    def simple_reflection(self, beta, i):
        return self._reflect(tuple(beta), i)

    def contains(self, v):
        return tuple(v) in self._set

    def sym_form(self, v, w):
        """(v | w) with (alpha_i | alpha_j) = d_i a_ij; args in root coords."""
        c = self.cartan
        return sum(c.sym(i, j) * v[i] * w[j]
                   for i in range(c.rank) for j in range(c.rank))

    def root_d(self, v):
        """Symmetrizer d_alpha = (alpha|alpha)/2 of a root (1 for short)."""
        val = self.sym_form(v, v)
        assert val % 2 == 0
        return val // 2

    def pos_index(self, v):
        return self._pos_index[tuple(v)]

    def reflect_in_root(self, alpha, beta):
        """s_alpha(beta) = beta - <beta, alpha^vee> alpha."""
        c = Fraction(self.sym_form(alpha, beta), self.root_d(alpha))
        assert c.denominator == 1
        return tuple(b - int(c) * a for a, b in zip(alpha, beta))

    def weyl_order(self):
        """|W| by orbit-stabilizer-free closure on root permutations."""
        n = self.cartan.rank
        idx = {r: k for k, r in enumerate(self.roots)}
        gens = []
        for i in range(n):
            gens.append(tuple(idx[self._reflect(r, i)] for r in self.roots))
        ident = tuple(range(len(self.roots)))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = tuple(s[x] for x in g)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return len(seen)


@lru_cache(maxsize=None)
def root_system(series, rank):
    return RootSystem(build_cartan(series, rank))


def parse_type(name):
    """'G2' -> ('G', 2)."""
    name = name.strip()
    if len(name) < 2 or not name[0].isalpha():
        raise ValueError(f"bad type name {name!r}")
    return name[0].upper(), int(name[1:])


def root_string(rs, alpha, beta):
    """(p, q): p = max r with beta - r*alpha a root, q = max s likewise up.

    beta must not be proportional to alpha.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if beta == alpha or beta == tuple(-c for c in alpha):
        raise ValueError("root string through +-alpha is undefined here")
    p = 0
    cur = tuple(b - a for a, b in zip(alpha, beta))
    while rs.contains(cur):
        p += 1
        cur = tuple(c - a for a, c in zip(alpha, cur))
    q = 0
    cur = tuple(b + a for a, b in zip(alpha, beta))
    while rs.contains(cur):
        q += 1
        cur = tuple(c + a for a, c in zip(alpha, cur))
    return p, q


# ---------------------------------------------------------------------------
# Smith normal form with recorded unimodular transforms

def smith_normal_form(mat):
    """Return (U, D, V) with U @ mat @ V = D diagonal, U, V unimodular.

    D's diagonal is the invariant-factor chain d1 | d2 | ... (nonnegative).
    """
    a = [list(map(int, row)) for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_op(i, j, f):  # row_i -= f * row_j
        a[i] = [x - f * y for x, y in zip(a[i], a[j])]
        u[i] = [x - f * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, f):  # col_i -= f * col_j
        for r in a:
            r[i] -= f * r[j]
        for r in v:
            r[i] -= f * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(nrows, ncols):
        while True:
            # pick the remaining entry of least nonzero magnitude as pivot
            piv = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    if a[i][j] != 0 and (piv is None
                                         or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            # reduce column t and row t modulo the pivot; restart if a smaller
            # remainder shows up (it becomes the new pivot)
            restart = False
            for i in range(t + 1, nrows):
                if a[i][t] % a[t][t] != 0:
                    row_op(i, t, a[i][t] // a[t][t])
                    restart = True
            for j in range(t + 1, ncols):
                if a[t][j] % a[t][t] != 0:
                    col_op(j, t, a[t][j] // a[t][t])
                    restart = True
            if restart:
                continue
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    row_op(i, t, a[i][t] // a[t][t])
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    col_op(j, t, a[t][j] // a[t][t])
            # the pivot must divide everything left, else fold a bad row in
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                row_op(t, bad, -1)  # row_t += row_bad
                continue
            break
        if all(a[i][j] == 0 for i in range(t, nrows) for j in range(t, ncols)):
            break
        t += 1
    n = min(nrows, ncols)
    for i in range(n):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return u, a, v


def invariant_factors(mat):
    _, d, _ = smith_normal_form(mat)
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]


@dataclass(frozen=True)
class LatticePair:
    """Weight lattice X (fundamental coords), coweight lattice Y, and Q <= X."""

    cartan: CartanDatum

    def pairing(self, coweight, weight):
        """<y, x> for y in Y (simple-coroot coords), x in X (fund coords)."""
        n = self.cartan.rank
        return sum(coweight[i] * weight[i] for i in range(n))

    def simple_root_in_X(self, j):
        """alpha_j in fundamental-weight coordinates: column j of the Cartan matrix."""
        return tuple(self.cartan.a[i][j] for i in range(self.cartan.rank))

    def q_basis(self):
        return [self.simple_root_in_X(j) for j in range(self.cartan.rank)]

    def in_root_lattice(self, weight):
        """Is the weight (fund coords) in Q?  Solve a @ x = weight over Z."""
        n = self.cartan.rank
        sol = _solve_integer(self.cartan.a, list(weight), n)
        return sol is not None

    def index_X_over_Q(self):
        facs = invariant_factors([list(r) for r in self.cartan.a])
        prod = 1
        for f in facs:
            if f == 0:
                raise ValueError("singular Cartan matrix")
            prod *= f
        return prod


def _solve_integer(a, rhs, n):
    """Solve a @ x = rhs for integer x, a being n x n integer; None if no solution."""
    u, d, v = smith_normal_form([list(r) for r in a])
    # a = u^-1 d v^-1, so x = v y with d y = u rhs
    ur = [sum(u[i][j] * rhs[j] for j in range(n)) for i in range(n)]
    y = []
    for i in range(n):
        di = d[i][i]
        if di == 0:
            if ur[i] != 0:
                return None
            y.append(0)
        else:
            if ur[i] % di != 0:
                return None
            y.append(ur[i] // di)
    return [sum(v[i][j] * y[j] for j in range(n)) for i in range(n)]


def lattice_index(cartan):
    """[X : Q] = product of the invariant factors of the Cartan matrix."""
    return LatticePair(cartan).index_X_over_Q()
