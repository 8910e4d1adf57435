"""The Chevalley group in its adjoint action on the integer Lie algebra.

Generators are exponentials of the nilpotent basis operators: E_X(t) is a
matrix polynomial in t with integer coefficient matrices, h_X(t) is diagonal
with entries t^{A_{XY}}, and n_X(t) = E_X(t) E_{TX}(t^{-1}) E_X(t).  All
group relations are verified two ways: as identities of matrices over the
Laurent-polynomial ring Q[t^{+-1}, s^{+-1}] (a complete proof), and at fresh
random sample points over Q or a prime field.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product as iproduct

from .exact import (LAURENT, QQ, LaurentPoly, PrimeField, sp_eq, sp_identity,
                    sp_mul, sp_mul_many)
from .liealg import LieAlgebraZ
from .rootdata import invariant_factors


class ChevalleyGroup:
    def __init__(self, alg: LieAlgebraZ):
        self.alg = alg
        self.cat = alg.cat
        self.dim = alg.dim
        self._exp_tables = {}

    # -- exponential tables --------------------------------------------------

    def exp_table(self, ix):
        """[I, ad u_X, (ad u_X)^2/2!, ...] as integer sparse matrices."""
        if ix in self._exp_tables:
            return self._exp_tables[ix]
        ad = self.alg.ad_matrix(ix)
        mats = [{i: {i: 1} for i in range(self.dim)}]
        cur = {i: {j: Fraction(v) for j, v in row.items()} for i, row in ad.items()}
        k = 1
        while cur:
            if k > self.dim + 2:
                raise ArithmeticError("generator is not nilpotent")
            intmat = {}
            for i, row in cur.items():
                r = {}
                for j, v in row.items():
                    if v.denominator != 1:
                        raise ArithmeticError(
                            f"non-integer exponential coefficient at power {k}")
                    if v:
                        r[j] = int(v)
                if r:
                    intmat[i] = r
            mats.append(intmat)
            k += 1
            nxt = {}
            for i, row in cur.items():
                acc = {}
                for l, v in row.items():
                    for j, w in ad.get(l, {}).items():
                        acc[j] = acc.get(j, 0) + v * w
                acc = {j: v / k for j, v in acc.items() if v}
                if acc:
                    nxt[i] = acc
            cur = nxt
        self._exp_tables[ix] = mats
        return mats

    # -- generators over an arbitrary domain ----------------------------------

    def E_index(self, ix, t, dom):
        out = {}
        tk = dom.one
        for k, mat in enumerate(self.exp_table(ix)):
            if k:
                tk = dom.mul(tk, t) if k > 1 else t
            for i, row in mat.items():
                r = out.setdefault(i, {})
                for j, v in row.items():
                    w = dom.mul(tk, dom.from_int(v)) if k else dom.from_int(v)
                    r[j] = dom.add(r[j], w) if j in r else w
        for i in list(out):
            out[i] = {j: v for j, v in out[i].items() if not dom.is_zero(v)}
            if not out[i]:
                del out[i]
        return out

    def E(self, x, t, dom):
        return self.E_index(self.cat.index(x), t, dom)

    def h_exponents(self, x):
        """Diagonal exponents of h_X: A_{XY} on u_Y, 0 on the Cartan part."""
        exps = [self.cat.A(x, y) for y in self.cat.objects]
        return exps + [0] * self.alg.m

    def h(self, x, t, dom):
        out = {}
        for i, e in enumerate(self.h_exponents(x)):
            out[i] = {i: dom.power(t, e) if e else dom.one}
        return out

    def conj_by_h(self, x, t, mat, dom):
        """h_X(t) M h_X(t)^{-1}: entrywise scaling by t^{A_i - A_j}."""
        exps = self.h_exponents(x)
        out = {}
        for i, row in mat.items():
            r = {}
            for j, v in row.items():
                e = exps[i] - exps[j]
                r[j] = dom.mul(dom.power(t, e), v) if e else v
            out[i] = r
        return out

    def n(self, x, t, dom):
        tinv = dom.inv(t)
        tx = self.cat.shift(x)
        return sp_mul_many(
            [self.E(x, t, dom), self.E(tx, tinv, dom), self.E(x, t, dom)], dom)

    def n_inv(self, x, t, dom):
        tinv = dom.inv(t)
        tx = self.cat.shift(x)
        mt, mtinv = dom.neg(t), dom.neg(tinv)
        return sp_mul_many(
            [self.E(x, mt, dom), self.E(tx, mtinv, dom), self.E(x, mt, dom)], dom)


# ---------------------------------------------------------------------------
# reflection / torus conjugation relations

def verify_conjugation_relations(alg, samples=2, seed=20240817):
    """Check the six conjugation identities on every ordered pair of objects.

    Symbolically over Laurent polynomials in (t, s), then at `samples` fresh
    random rational points.  Returns a report with the extracted signs
    eta_{XY} (asserted to be +-1 by construction of the check).
    """
    grp = ChevalleyGroup(alg)
    cat = alg.cat
    objs = cat.objects
    t = LaurentPoly.var_t()
    s = LaurentPoly.var_s()
    n_t = [grp.n(x, t, LAURENT) for x in objs]
    n_t_inv = [grp.n_inv(x, t, LAURENT) for x in objs]
    n_s = [grp.n(x, s, LAURENT) for x in objs]
    E_s = [grp.E_index(ix, s, LAURENT) for ix in range(len(objs))]
    h_s = [grp.h(x, s, LAURENT) for x in objs]
    eta = {}
    failures = []

    def n_of(obj, arg):
        arginv = LAURENT.inv(arg)
        tob = cat.shift(obj)
        e1 = grp.E(obj, arg, LAURENT)
        return sp_mul_many([e1, grp.E(tob, arginv, LAURENT), e1], LAURENT)

    for ix, x in enumerate(objs):
        for iy, y in enumerate(objs):
            w = cat.omega(x, y)
            A = cat.A(x, y)
            # (1) n_X(t) E_Y(s) n_X(t)^{-1} = E_{omega}(eta t^{-A} s)
            lhs = sp_mul_many([n_t[ix], E_s[iy], n_t_inv[ix]], LAURENT)
            got = None
            for e in (1, -1):
                arg = LaurentPoly({(-A, 1): Fraction(e)})
                if sp_eq(lhs, grp.E(w, arg, LAURENT), LAURENT):
                    got = e
                    break
            if got is None:
                failures.append(("n_E_conj", ix, iy))
            else:
                eta[(ix, iy)] = got
            # (2) h_X(t) E_Y(s) h_X(t)^{-1} = E_Y(t^A s)
            lhs = grp.conj_by_h(x, t, E_s[iy], LAURENT)
            rhs = grp.E_index(iy, LaurentPoly({(A, 1): Fraction(1)}), LAURENT)
            if not sp_eq(lhs, rhs, LAURENT):
                failures.append(("h_E_conj", ix, iy))
            # (3) n_X(t) n_Y(s) n_X(t)^{-1} = n_{omega}(eta t^{-A} s)
            if got is not None:
                lhs = sp_mul_many([n_t[ix], n_s[iy], n_t_inv[ix]], LAURENT)
                rhs = n_of(w, LaurentPoly({(-A, 1): Fraction(got)}))
                if not sp_eq(lhs, rhs, LAURENT):
                    failures.append(("n_n_conj", ix, iy))
            # (4) n_X(t) h_Y(s) n_X(t)^{-1} = h_{omega}(s)
            lhs = sp_mul_many([n_t[ix], h_s[iy], n_t_inv[ix]], LAURENT)
            if not sp_eq(lhs, grp.h(w, s, LAURENT), LAURENT):
                failures.append(("n_h_conj", ix, iy))
            # (5) torus elements commute
            lhs = grp.conj_by_h(x, t, h_s[iy], LAURENT)
            if not sp_eq(lhs, h_s[iy], LAURENT):
                failures.append(("h_h_conj", ix, iy))
            # (6) h_X(t) n_Y(s) h_X(t)^{-1} = n_Y(t^A s)
            lhs = grp.conj_by_h(x, t, n_s[iy], LAURENT)
            rhs = n_of(y, LaurentPoly({(A, 1): Fraction(1)}))
            if not sp_eq(lhs, rhs, LAURENT):
                failures.append(("h_n_conj", ix, iy))

    rng = random.Random(seed)
    points = []
    sample_failures = []
    for _ in range(samples):
        t0 = Fraction(rng.choice([v for v in range(-9, 10) if v]),
                      rng.randint(1, 9))
        s0 = Fraction(rng.choice([v for v in range(-9, 10) if v]),
                      rng.randint(1, 9))
        points.append((t0, s0))
        nt = [grp.n(x, t0, QQ) for x in objs]
        nti = [grp.n_inv(x, t0, QQ) for x in objs]
        ns = [grp.n(x, s0, QQ) for x in objs]
        es = [grp.E_index(ix, s0, QQ) for ix in range(len(objs))]
        for ix, x in enumerate(objs):
            for iy, y in enumerate(objs):
                e = eta.get((ix, iy))
                if e is None:
                    continue
                w = cat.omega(x, y)
                A = cat.A(x, y)
                lhs = sp_mul_many([nt[ix], es[iy], nti[ix]], QQ)
                rhs = grp.E(w, e * t0 ** (-A) * s0, QQ)
                if not sp_eq(lhs, rhs, QQ):
                    sample_failures.append(("n_E_conj", ix, iy, t0, s0))
                lhs = grp.conj_by_h(x, t0, ns[iy], QQ)
                rhs1 = grp.n(y, t0 ** A * s0, QQ)
                if not sp_eq(lhs, rhs1, QQ):
                    sample_failures.append(("h_n_conj", ix, iy, t0, s0))

    return {
        "ok": not failures and not sample_failures,
        "eta": eta,
        "eta_values_ok": all(v in (1, -1) for v in eta.values()),
        "failures": failures,
        "sample_failures": sample_failures,
        "pairs": len(objs) ** 2,
        "sample_points": points,
    }


# ---------------------------------------------------------------------------
# Steinberg relations

def commutator_constants(alg, x, y, grp=None):
    """Constants C_{i,j} with [E_X(t), E_Y(s)] = prod_{(i,j) lex} E_L(C t^i s^j).

    The commutator matrix is computed exactly over Laurent polynomials and
    the product factors are peeled off in lexicographic order; each constant
    is asserted integral and the final residual is asserted to be the
    identity, which proves the formula as a polynomial identity.
    """
    if grp is None:
        grp = ChevalleyGroup(alg)
    cat = alg.cat
    if x.pos_root == y.pos_root:
        raise ValueError("commutator formula needs independent roots")
    t = LaurentPoly.var_t()
    s = LaurentPoly.var_s()
    R = sp_mul_many([
        grp.E(x, t, LAURENT), grp.E(y, s, LAURENT),
        grp.E(x, -t, LAURENT), grp.E(y, -s, LAURENT)], LAURENT)
    cands = sorted((i, j) for i in range(1, 6) for j in range(1, 6)
                   if cat.chain_class(x, y, i, j) is not None)
    out = []
    for (i, j) in cands:
        lobj = cat.chain_object(x, y, i, j)
        il = cat.index(lobj)
        coef = {}
        for r, row in R.items():
            for c, v in row.items():
                val = v.coeff(i, j)
                if val:
                    coef.setdefault(r, {})[c] = val
        adl = alg.ad_matrix(il)
        # ratio against the first nonzero ad entry, then full proportionality
        C = Fraction(0)
        for r, row in adl.items():
            for c, v in row.items():
                C = Fraction(coef.get(r, {}).get(c, Fraction(0)), v)
                break
            break
        for r in set(adl) | set(coef):
            cols = set(adl.get(r, {})) | set(coef.get(r, {}))
            for c in cols:
                if coef.get(r, {}).get(c, Fraction(0)) != C * adl.get(r, {}).get(c, 0):
                    raise ArithmeticError(
                        f"commutator coefficient of t^{i}s^{j} is not "
                        f"proportional to a root operator")
        if C.denominator != 1:
            raise ArithmeticError("non-integer commutator constant")
        C = int(C)
        if C:
            mono = LaurentPoly({(i, j): Fraction(-C)})
            R = sp_mul(grp.E(lobj, mono, LAURENT), R, LAURENT)
            out.append(((i, j), il, C))
    if not sp_eq(R, sp_identity(alg.dim, LAURENT), LAURENT):
        raise ArithmeticError("commutator does not close on the chain roots")
    return out


def _steinberg_point_check(alg, grp, dom, t0, s0, const_cache):
    """All four Steinberg families at one (t0, s0) over `dom`."""
    cat = alg.cat
    fails = []
    for ix, x in enumerate(cat.objects):
        lhs = sp_mul(grp.E_index(ix, t0, dom), grp.E_index(ix, s0, dom), dom)
        if not sp_eq(lhs, grp.E_index(ix, dom.add(t0, s0), dom), dom):
            fails.append(("additive", ix))
        lhs = sp_mul(grp.h(x, t0, dom), grp.h(x, s0, dom), dom)
        if not sp_eq(lhs, grp.h(x, dom.mul(t0, s0), dom), dom):
            fails.append(("h_mult", ix))
        if not dom.is_zero(t0):
            lhs = sp_mul_many([grp.n(x, t0, dom), grp.E_index(ix, s0, dom),
                               grp.n_inv(x, t0, dom)], dom)
            arg = dom.mul(dom.power(t0, -2), s0)
            if not sp_eq(lhs, grp.E(cat.shift(x), arg, dom), dom):
                fails.append(("n_self", ix))
        for iy, y in enumerate(cat.objects):
            if y.pos_root == x.pos_root or (ix, iy) not in const_cache:
                continue
            lhs = sp_mul_many([
                grp.E_index(ix, t0, dom), grp.E_index(iy, s0, dom),
                grp.E_index(ix, dom.neg(t0), dom),
                grp.E_index(iy, dom.neg(s0), dom)], dom)
            rhs = sp_identity(alg.dim, dom)
            for (i, j), il, c in const_cache[(ix, iy)]:
                arg = dom.mul(dom.from_int(c),
                              dom.mul(dom.power(t0, i), dom.power(s0, j)))
                rhs = sp_mul(rhs, grp.E_index(il, arg, dom), dom)
            if not sp_eq(lhs, rhs, dom):
                fails.append(("commutator", ix, iy))
    return fails


def steinberg_report(alg, primes=(2, 3, 5, 7, 11, 13), samples=10,
                     seed=20240818):
    """Steinberg presentation relations over Q and small prime fields."""
    grp = ChevalleyGroup(alg)
    cat = alg.cat
    consts = {}
    for ix, x in enumerate(cat.objects):
        for iy, y in enumerate(cat.objects):
            if x.pos_root != y.pos_root:
                consts[(ix, iy)] = commutator_constants(alg, x, y, grp)
    all_integer = all(isinstance(c, int)
                      for lst in consts.values() for (_, _, c) in lst)

    rng = random.Random(seed)
    rational_failures = []
    points = []
    for _ in range(samples):
        t0 = Fraction(rng.choice([v for v in range(-9, 10) if v]), rng.randint(1, 9))
        s0 = Fraction(rng.choice([v for v in range(-9, 10) if v]), rng.randint(1, 9))
        points.append((t0, s0))
        rational_failures += _steinberg_point_check(alg, grp, QQ, t0, s0, consts)

    prime_failures = {}
    for p in primes:
        dom = PrimeField(p)
        units = dom.units()
        pairs = list(iproduct(units, units))
        if len(pairs) > 16:
            pairs = [(rng.choice(units), rng.choice(units)) for _ in range(16)]
        fails = []
        for t0, s0 in pairs:
            fails += _steinberg_point_check(alg, grp, dom, t0, s0, consts)
        prime_failures[p] = fails

    return {
        "ok": (not rational_failures and all_integer
               and not any(prime_failures.values())),
        "constants": consts,
        "constants_integer": all_integer,
        "rational_points": points,
        "rational_failures": rational_failures,
        "prime_failures": prime_failures,
    }


# ---------------------------------------------------------------------------
# the center of the simply connected form over F_p

def center_order_formula(alg, p):
    """prod over invariant factors d_k of the Cartan matrix of gcd(d_k, p-1)."""
    out = 1
    for f in invariant_factors(alg.cat.cartan.a):
        out *= math.gcd(f, p - 1)
    return out


def center_order_bruteforce(alg, p):
    """Count torus parameter tuples (t_1..t_m) in F_p^* with
    prod_i t_i^{a_ij} = 1 for every j — i.e. h acts trivially on every u_Y."""
    a = alg.cat.cartan.a
    m = alg.m
    units = list(range(1, p))
    count = 0
    for tup in iproduct(units, repeat=m):
        if all(
            math.prod(pow(tup[i], a[i][j] % (p - 1) if p > 2 else 0, p)
                      for i in range(m)) % p == 1
            for j in range(m)
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# automorphism utilities

def bracket_over(alg, a, b, dom):
    """Bilinear bracket of dict vectors with coefficients in `dom`."""
    out = {}
    for i, ca in a.items():
        row = alg._brackets[i]
        for j, cb in b.items():
            for k, v in row[j].items():
                w = dom.mul(dom.mul(ca, cb), dom.from_int(v))
                out[k] = dom.add(out[k], w) if k in out else w
    return {k: v for k, v in out.items() if not dom.is_zero(v)}


def preserves_bracket(alg, mat, dom):
    """Does the matrix act as a Lie algebra automorphism?"""
    n = alg.dim
    cols = [{} for _ in range(n)]
    for i, row in mat.items():
        for j, v in row.items():
            cols[j][i] = v
    for i in range(n):
        for j in range(i + 1, n):
            img = {}
            for k, v in alg._brackets[i][j].items():
                for r, w in cols[k].items():
                    z = dom.mul(dom.from_int(v), w)
                    img[r] = dom.add(img[r], z) if r in img else z
            img = {r: v for r, v in img.items() if not dom.is_zero(v)}
            if img != bracket_over(alg, cols[i], cols[j], dom):
                got = bracket_over(alg, cols[i], cols[j], dom)
                keys = set(img) | set(got)
                if any(not dom.eq(img.get(k, dom.zero), got.get(k, dom.zero))
                       for k in keys):
                    return False
    return True


def random_group_element(grp, dom, rng, length, scalars):
    """Product of `length` random generators with arguments from `scalars`."""
    cat = grp.cat
    mats = []
    for _ in range(length):
        x = rng.choice(cat.objects)
        t = rng.choice(scalars)
        kind = rng.randrange(3)
        if kind == 0:
            mats.append(grp.E(x, t, dom))
        elif kind == 1:
            mats.append(grp.h(x, t, dom))
        else:
            mats.append(grp.n(x, t, dom))
    return sp_mul_many(mats, dom)
