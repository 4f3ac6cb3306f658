"""Representations of Lie-Yamaguti algebras, actions, and semidirect products.

A representation of g on a space V is a pair (rho, mu): rho linear in one
g-slot, mu bilinear in two g-slots, both valued in endomorphisms of V, subject
to five compatibility equations (R1-R5 below).  The derived skew map

    D(x, y) = mu(y, x) - mu(x, y) + [rho(x), rho(y)] - rho([x, y])

is cached at construction.  An *action* additionally lands in the center of the
carrier algebra and kills its brackets, which is exactly what makes the
semidirect brackets on g (+) h satisfy the Lie-Yamaguti axioms.
"""

from .core import LYAlgebra, center
from .errors import AxiomsFailed, DimMismatch, NotAnAction
from .linalg import (Subspace, commutator, is_zero_mat, is_zero_vec, mat,
                     mat_add, mat_col, mat_mul, mat_scale, mat_sub, mat_vec,
                     mat_zero, vadd, vscale, vsub, vzero)
from .reports import Checker


class RepAction:
    """A pair (rho, mu) of an algebra ``acting`` on the carrier's space.

    ``rho`` is a list of dim(g) matrices; ``mu`` a dim(g) x dim(g) array of
    matrices, each dim(h) x dim(h).  The carrier is itself an algebra (often
    abelian); its brackets only matter for action checks and semidirect
    products.
    """

    def __init__(self, acting, carrier, rho, mu):
        self.acting = acting
        self.carrier = carrier
        n, m = acting.dim, carrier.dim
        if len(rho) != n or len(mu) != n or any(len(row) != n for row in mu):
            raise DimMismatch("rho needs %d matrices, mu a %dx%d array" % (n, n, n))
        self.rho = tuple(mat(r) for r in rho)
        self.mu = tuple(tuple(mat(mu[i][j]) for j in range(n)) for i in range(n))
        for a in self.rho:
            if len(a) != m or any(len(r) != m for r in a):
                raise DimMismatch("rho matrices must be %dx%d" % (m, m))
        for row in self.mu:
            for a in row:
                if len(a) != m or any(len(r) != m for r in a):
                    raise DimMismatch("mu matrices must be %dx%d" % (m, m))
        self.derived_D = derive_D(self)
        self.action_certified = False
        self._rep_report = None
        self._semidirect = None
        # zero-matrix flags for fast skipping in hot loops
        self._nz_rho = tuple(not is_zero_mat(a) for a in self.rho)
        self._nz_mu = tuple(tuple(not is_zero_mat(a) for a in row) for row in self.mu)
        self._nz_D = tuple(tuple(not is_zero_mat(a) for a in row) for row in self.derived_D)

    # bilinear/linear evaluation at arbitrary g-vectors ---------------------

    def rho_at(self, x):
        m = self.carrier.dim
        out = mat_zero(m, m)
        for i, c in enumerate(x):
            if c != 0 and self._nz_rho[i]:
                out = mat_add(out, mat_scale(c, self.rho[i]))
        return out

    def mu_at(self, x, y):
        m = self.carrier.dim
        out = mat_zero(m, m)
        for i, ci in enumerate(x):
            if ci == 0:
                continue
            for j, cj in enumerate(y):
                if cj != 0 and self._nz_mu[i][j]:
                    out = mat_add(out, mat_scale(ci * cj, self.mu[i][j]))
        return out

    def D_at(self, x, y):
        m = self.carrier.dim
        out = mat_zero(m, m)
        for i, ci in enumerate(x):
            if ci == 0:
                continue
            for j, cj in enumerate(y):
                if cj != 0 and self._nz_D[i][j]:
                    out = mat_add(out, mat_scale(ci * cj, self.derived_D[i][j]))
        return out

    # one-vector-slot helpers used by the axiom loops

    def _mu_v1(self, v, j):
        m = self.carrier.dim
        out = mat_zero(m, m)
        for s, c in enumerate(v):
            if c != 0 and self._nz_mu[s][j]:
                out = mat_add(out, mat_scale(c, self.mu[s][j]))
        return out

    def _mu_v2(self, i, v):
        m = self.carrier.dim
        out = mat_zero(m, m)
        for s, c in enumerate(v):
            if c != 0 and self._nz_mu[i][s]:
                out = mat_add(out, mat_scale(c, self.mu[i][s]))
        return out

    def _D_v1(self, v, j):
        m = self.carrier.dim
        out = mat_zero(m, m)
        for s, c in enumerate(v):
            if c != 0 and self._nz_D[s][j]:
                out = mat_add(out, mat_scale(c, self.derived_D[s][j]))
        return out

    def _D_v2(self, i, v):
        m = self.carrier.dim
        out = mat_zero(m, m)
        for s, c in enumerate(v):
            if c != 0 and self._nz_D[i][s]:
                out = mat_add(out, mat_scale(c, self.derived_D[i][s]))
        return out

    def ensure_representation(self):
        if self._rep_report is None:
            self._rep_report = check_representation(self)
        if not self._rep_report.passed:
            raise AxiomsFailed("(rho, mu) is not a representation", self._rep_report)
        return self._rep_report

    def ensure_action(self):
        if not self.action_certified:
            rep = check_action(self)
            if not rep.passed:
                raise NotAnAction("(rho, mu) is not an action", rep)
        return self

    def semidirect(self):
        """The semidirect algebra, built and axiom-checked once, then cached."""
        if self._semidirect is None:
            self._semidirect = semidirect_product(self)
        return self._semidirect

    def __repr__(self):
        return "RepAction(%s on %s)" % (self.acting.name, self.carrier.name)


def derive_D(r):
    """The skew bilinear map D(x,y) = mu(y,x) - mu(x,y) + [rho(x),rho(y)] - rho([x,y])."""
    g = r.acting
    n = g.dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            d = mat_sub(r.mu[j][i], r.mu[i][j])
            d = mat_add(d, commutator(r.rho[i], r.rho[j]))
            br = g.binary[i][j]
            for s, c in enumerate(br):
                if c != 0:
                    d = mat_sub(d, mat_scale(c, r.rho[s]))
            row.append(d)
        out.append(tuple(row))
    return tuple(out)


def check_representation(r, all_violations=False):
    """Verify the five representation equations on all basis tuples of g.

    R1: mu([x,y],z) - mu(x,z)rho(y) + mu(y,z)rho(x) = 0
    R2: mu(x,[y,z]) - rho(y)mu(x,z) + rho(z)mu(x,y) = 0
    R3: rho(<x,y,z>) = [D(x,y), rho(z)]
    R4: mu(z,w)mu(x,y) - mu(y,w)mu(x,z) - mu(x,<y,z,w>) + D(y,z)mu(x,w) = 0
    R5: mu(<x,y,z>,w) + mu(z,<x,y,w>) = [D(x,y), mu(z,w)]
    """
    g = r.acting
    n = g.dim
    ck = Checker("representation(%s on %s)" % (g.name, r.carrier.name), all_violations)
    rng = range(n)
    for i in rng:
        for j in rng:
            for k in rng:
                if ck.done:
                    break
                res = mat_sub(mat_add(r._mu_v1(g.binary[i][j], k),
                                      mat_mul(r.mu[j][k], r.rho[i])),
                              mat_mul(r.mu[i][k], r.rho[j]))
                if not is_zero_mat(res):
                    ck.record("R1", (i, j, k), res)
                res = mat_sub(mat_add(r._mu_v2(i, g.binary[j][k]),
                                      mat_mul(r.rho[k], r.mu[i][j])),
                              mat_mul(r.rho[j], r.mu[i][k]))
                if not is_zero_mat(res):
                    ck.record("R2", (i, j, k), res)
                res = mat_sub(r.rho_at(g.ternary[i][j][k]),
                              commutator(r.derived_D[i][j], r.rho[k]))
                if not is_zero_mat(res):
                    ck.record("R3", (i, j, k), res)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    if ck.done:
                        break
                    res = mat_sub(mat_mul(r.mu[k][l], r.mu[i][j]),
                                  mat_mul(r.mu[j][l], r.mu[i][k]))
                    res = mat_sub(res, r._mu_v2(i, g.ternary[j][k][l]))
                    res = mat_add(res, mat_mul(r.derived_D[j][k], r.mu[i][l]))
                    if not is_zero_mat(res):
                        ck.record("R4", (i, j, k, l), res)
                    res = mat_add(r._mu_v1(g.ternary[i][j][k], l),
                                  r._mu_v2(k, g.ternary[i][j][l]))
                    res = mat_sub(res, commutator(r.derived_D[i][j], r.mu[k][l]))
                    if not is_zero_mat(res):
                        ck.record("R5", (i, j, k, l), res)
    rep = ck.report()
    if r._rep_report is None or not r._rep_report.passed:
        r._rep_report = rep
    return rep


def check_lemma_identities(r, all_violations=False):
    """Derived identities that hold for every representation (regression tripwire).

    L1: D([x,y],z) + D([y,z],x) + D([z,x],y) = 0
    L2: D(<x,y,z>,w) + D(z,<x,y,w>) = [D(x,y), D(z,w)]
    L3: mu(<x,y,z>,w) = mu(x,w)mu(z,y) - mu(y,w)mu(z,x) - mu(z,w)D(x,y)
    """
    g = r.acting
    n = g.dim
    ck = Checker("lemma-identities(%s on %s)" % (g.name, r.carrier.name), all_violations)
    rng = range(n)
    for i in rng:
        for j in rng:
            for k in rng:
                if ck.done:
                    break
                res = mat_add(mat_add(r._D_v1(g.binary[i][j], k),
                                      r._D_v1(g.binary[j][k], i)),
                              r._D_v1(g.binary[k][i], j))
                if not is_zero_mat(res):
                    ck.record("L1", (i, j, k), res)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    if ck.done:
                        break
                    res = mat_add(r._D_v1(g.ternary[i][j][k], l),
                                  r._D_v2(k, g.ternary[i][j][l]))
                    res = mat_sub(res, commutator(r.derived_D[i][j], r.derived_D[k][l]))
                    if not is_zero_mat(res):
                        ck.record("L2", (i, j, k, l), res)
                    res = r._mu_v1(g.ternary[i][j][k], l)
                    res = mat_sub(res, mat_mul(r.mu[i][l], r.mu[k][j]))
                    res = mat_add(res, mat_mul(r.mu[j][l], r.mu[k][i]))
                    res = mat_add(res, mat_mul(r.mu[k][l], r.derived_D[i][j]))
                    if not is_zero_mat(res):
                        ck.record("L3", (i, j, k, l), res)
    return ck.report()


def adjoint_rep(A):
    """The adjoint representation of A on itself.

    rho(x)z = [x, z] and mu(x, y)z = <z, x, y>; the carrier is A with its own
    brackets, so this doubles as the adjoint *action* when those images are
    central.
    """
    A.ensure_verified()
    n = A.dim
    # matrix of z -> [e_i, z]: column s is [e_i, e_s]
    rho = []
    for i in range(n):
        cols = [A.binary[i][s] for s in range(n)]
        rho.append(tuple(tuple(cols[s][t] for s in range(n)) for t in range(n)))
    mu = []
    for i in range(n):
        row = []
        for j in range(n):
            cols = [A.ternary[s][i][j] for s in range(n)]
            row.append(tuple(tuple(cols[s][t] for s in range(n)) for t in range(n)))
        mu.append(row)
    return RepAction(A, A, rho, mu)


def check_action(r, all_violations=False):
    """Verify that a representation is an action on its carrier algebra.

    Requires: images of rho, mu (and the derived D) lie in the carrier's
    center, and all three annihilate the carrier's binary and ternary brackets.
    """
    rep = check_representation(r, all_violations)
    if not rep.passed:
        return rep
    g, h = r.acting, r.carrier
    h.ensure_verified()
    n, m = g.dim, h.dim
    C = center(h)
    ck = Checker("action(%s on %s)" % (g.name, h.name), all_violations)

    families = [("rho", [((i,), r.rho[i]) for i in range(n) if r._nz_rho[i]]),
                ("mu", [((i, j), r.mu[i][j]) for i in range(n) for j in range(n)
                        if r._nz_mu[i][j]]),
                ("D", [((i, j), r.derived_D[i][j]) for i in range(n) for j in range(n)
                       if r._nz_D[i][j]])]
    brackets2 = [((a, b), h.binary[a][b]) for a in range(m) for b in range(a + 1, m)
                 if h._nz2[a][b]]
    brackets3 = [((a, b, c), h.ternary[a][b][c])
                 for a in range(m) for b in range(m) for c in range(m)
                 if h._nz3[a][b][c]]
    for fam, mats in families:
        for args, M in mats:
            if ck.done:
                break
            for col in range(m):
                v = mat_col(M, col)
                if not is_zero_vec(v) and not C.contains(v):
                    ck.record(fam + "-image-central", args + (col,), v)
            for bargs, v in brackets2:
                w = mat_vec(M, v)
                if not is_zero_vec(w):
                    ck.record(fam + "-kills-binary", args + bargs, w)
            for bargs, v in brackets3:
                w = mat_vec(M, v)
                if not is_zero_vec(w):
                    ck.record(fam + "-kills-ternary", args + bargs, w)
    out = ck.report({"center_dim": C.dim})
    if out.passed:
        r.action_certified = True
    return out


def semidirect_product(r):
    """The Lie-Yamaguti algebra on g (+) h induced by a certified action.

    [x+u, y+v]   = [x,y]_g + rho(x)v - rho(y)u + [u,v]_h
    <x+u,y+v,z+w> = <x,y,z>_g + D(x,y)w + mu(y,z)u - mu(x,z)v + <u,v,w>_h
    """
    if not r.action_certified:
        raise NotAnAction("action not certified; run check_action first")
    g, h = r.acting, r.carrier
    n, m = g.dim, h.dim
    dim = n + m

    def pack(xg, xh):
        return tuple(xg) + tuple(xh)

    zg, zh = vzero(n), vzero(m)
    binary = [[pack(zg, zh)] * dim for _ in range(dim)]
    ternary = [[[pack(zg, zh)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            if i < n and j < n:
                binary[i][j] = pack(g.binary[i][j], zh)
            elif i < n:
                binary[i][j] = pack(zg, mat_col(r.rho[i], j - n))
            elif j < n:
                binary[i][j] = pack(zg, vscale(-1, mat_col(r.rho[j], i - n)))
            else:
                binary[i][j] = pack(zg, h.binary[i - n][j - n])
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                ig, jg, kg = i < n, j < n, k < n
                if ig and jg and kg:
                    ternary[i][j][k] = pack(g.ternary[i][j][k], zh)
                elif ig and jg:
                    ternary[i][j][k] = pack(zg, mat_col(r.derived_D[i][j], k - n))
                elif jg and kg:
                    ternary[i][j][k] = pack(zg, mat_col(r.mu[j][k], i - n))
                elif ig and kg:
                    ternary[i][j][k] = pack(zg, vscale(-1, mat_col(r.mu[i][k], j - n)))
                elif not ig and not jg and not kg:
                    ternary[i][j][k] = pack(zg, h.ternary[i - n][j - n][k - n])
                # mixed tuples with two carrier entries vanish
    S = LYAlgebra(dim, binary, ternary,
                  basis=["g:%s" % b for b in g.basis] + ["h:%s" % b for b in h.basis],
                  name="%s|x%s" % (g.name, h.name))
    S.ensure_verified()
    return S
