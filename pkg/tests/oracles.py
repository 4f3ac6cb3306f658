"""Independent brute-force implementations used to cross-check the library.

Nothing here touches the library's elimination, sparse-matrix, or coboundary
assembly code: ranks come from a plain dense Gaussian elimination, coboundary
matrices from direct column-by-column evaluation of the defining formulas, and
deformation coefficients from truncated polynomial expansion.
"""

from fractions import Fraction

Z = Fraction(0)


# ---------------------------------------------------------------------------
# dense elimination

def o_rank(rows):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    lead = 0
    for col in range(ncols):
        piv = next((r for r in range(lead, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        pv = rows[lead][col]
        rows[lead] = [x / pv for x in rows[lead]]
        for r in range(len(rows)):
            if r != lead and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[lead])]
        lead += 1
        if lead == len(rows):
            break
    return lead


def o_nullity(rows, ncols):
    return ncols - o_rank(rows)


def o_in_column_space(rows, b):
    """Whether b lies in the span of the matrix's columns (dense elimination)."""
    cols = list(zip(*rows)) if rows else []
    return o_rank(cols) == o_rank(cols + [tuple(b)])


# ---------------------------------------------------------------------------
# vector helpers (kept local on purpose)

def va(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vs(a, b):
    return tuple(x - y for x, y in zip(a, b))


def sc(c, a):
    return tuple(c * x for x in a)


def mv(m, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def col(m, j):
    return tuple(r[j] for r in m)


# ---------------------------------------------------------------------------
# the operator-induced structures, written straight from their closed forms

class OpOracle:
    """Direct-formula evaluation around a weight-1 operator.

    Works from the base action (rho, mu, D) and the matrix T only; every
    value below is computed on demand from the displayed closed forms.
    """

    def __init__(self, op):
        self.r = op.action
        self.g = self.r.acting
        self.h = self.r.carrier
        self.T = op.T
        self.n = self.g.dim
        self.m = self.h.dim
        self._memo = {}

    def t(self, u):
        return mv(self.T, u)

    def _cached(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    # descent brackets on the carrier (memoized per tuple)
    def br2(self, u, v):
        def val():
            r, h = self.r, self.h
            return va(vs(mv(r.rho_at(self.t(u)), v), mv(r.rho_at(self.t(v)), u)),
                      h.bracket2(u, v))
        return self._cached(("br2", u, v), val)

    def br3(self, u, v, w):
        def val():
            r, h = self.r, self.h
            out = mv(r.D_at(self.t(u), self.t(v)), w)
            out = va(out, mv(r.mu_at(self.t(v), self.t(w)), u))
            out = vs(out, mv(r.mu_at(self.t(u), self.t(w)), v))
            return va(out, h.bracket3(u, v, w))
        return self._cached(("br3", u, v, w), val)

    # the induced representation on the acting space (memoized per tuple)
    def rho(self, u, x):
        def val():
            r, g = self.r, self.g
            return va(g.bracket2(self.t(u), x), self.t(mv(r.rho_at(x), u)))
        return self._cached(("rho", u, x), val)

    def mu(self, u, v, x):
        def val():
            r, g = self.r, self.g
            inner = vs(mv(r.D_at(x, self.t(u)), v), mv(r.mu_at(x, self.t(v)), u))
            return vs(g.bracket3(x, self.t(u), self.t(v)), self.t(inner))
        return self._cached(("mu", u, v, x), val)

    def D(self, u, v, x):
        def val():
            r, g = self.r, self.g
            inner = vs(mv(r.mu_at(self.t(v), x), u), mv(r.mu_at(self.t(u), x), v))
            return vs(g.bracket3(self.t(u), self.t(v), x), self.t(inner))
        return self._cached(("D", u, v, x), val)

    def partial(self, x, y, v):
        r = self.r
        return vs(self.t(mv(r.D_at(x, y), v)), self.g.bracket3(x, y, self.t(v)))


# ---------------------------------------------------------------------------
# coboundary matrices by direct formula, columns = basis cochains

def pair_list(m):
    return [(i, j) for i in range(m) for j in range(i + 1, m)]


def partial_matrix(oc):
    """partial: wedge^2 g -> Hom(h, g), dense, pair columns i<j."""
    prs = pair_list(oc.n)
    rows = []
    eg = [tuple(Fraction(1) if s == i else Z for s in range(oc.n)) for i in range(oc.n)]
    for a in range(oc.m):
        for t in range(oc.n):
            rows.append(tuple(oc.partial(eg[i], eg[j],
                                         _unit(oc.m, a))[t] for (i, j) in prs))
    return rows


def _unit(n, i):
    return tuple(Fraction(1) if s == i else Z for s in range(n))


def delta1_eval(oc, f):
    """delta of a degree-1 cochain f (list of m value vectors) -> (fs, gs).

    fs is indexed by carrier pairs a<b, gs by (pair, plain index c).
    """
    m, n = oc.m, oc.n

    def fv(v):
        out = (Z,) * n
        for s, c in enumerate(v):
            if c != 0:
                out = va(out, sc(c, f[s]))
        return out

    eh = [_unit(m, a) for a in range(m)]
    fs, gs = [], []
    for (a, b) in pair_list(m):
        val = vs(oc.rho(eh[a], f[b]), oc.rho(eh[b], f[a]))
        fs.append(vs(val, fv(oc.br2(eh[a], eh[b]))))
        for c in range(m):
            val = oc.D(eh[a], eh[b], f[c])
            val = va(val, oc.mu(eh[b], eh[c], f[a]))
            val = vs(val, oc.mu(eh[a], eh[c], f[b]))
            gs.append(vs(val, fv(oc.br3(eh[a], eh[b], eh[c]))))
    return fs, gs


def delta2_eval(oc, f2, g2):
    """delta of a degree-2 pair given as dicts f2[(a,b)], g2[(a,b,c)] (a<b).

    Returns (fs, gs): fs indexed by ordered pair-tuples (t1, t2) of carrier
    pairs, gs by (t1, t2, plain c); formulas written out for n = 1:

      delta_I(f,g)(X1,X2)    = -( rho(x2)g(X1,y2) - rho(y2)g(X1,x2)
                                  - g(X1,[x2,y2]) ) + D(X1)f(X2) - f(X1 o X2)
      delta_II(f,g)(X1,X2,z) = -( mu(y2,z)g(X1,x2) - mu(x2,z)g(X1,y2) )
                               + D(X1)g(X2,z) - D(X2)g(X1,z) - g(X1 o X2, z)
                               - g(X2, <x1,y1,z>) + g(X1, <x2,y2,z>)
    """
    m, n = oc.m, oc.n
    eh = [_unit(m, a) for a in range(m)]
    prs = pair_list(m)

    def wexp(x, y):
        out = {}
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0 or i == j:
                    continue
                key, c = ((i, j), xi * yj) if i < j else ((j, i), -xi * yj)
                out[key] = out.get(key, Z) + c
        return out

    def f_at(wd):
        out = (Z,) * n
        for key, c in wd.items():
            out = va(out, sc(c, f2[key]))
        return out

    def g_at(wd, plain):
        out = (Z,) * n
        for key, c in wd.items():
            for s, cv in enumerate(plain):
                if cv != 0:
                    out = va(out, sc(c * cv, g2[key + (s,)]))
        return out

    def comp(p1, p2):
        (a1, b1), (a2, b2) = p1, p2
        d = wexp(oc.br3(eh[a1], eh[b1], eh[a2]), eh[b2])
        for key, c in wexp(eh[a2], oc.br3(eh[a1], eh[b1], eh[b2])).items():
            d[key] = d.get(key, Z) + c
        return d

    fs, gs = {}, {}
    for p1 in prs:
        w1 = {p1: Fraction(1)}
        a1, b1 = p1
        for p2 in prs:
            a2, b2 = p2
            head = vs(oc.rho(eh[a2], g_at(w1, eh[b2])),
                      oc.rho(eh[b2], g_at(w1, eh[a2])))
            head = vs(head, g_at(w1, oc.br2(eh[a2], eh[b2])))
            val = sc(Fraction(-1), head)
            val = va(val, oc.D(eh[a1], eh[b1], f_at({p2: Fraction(1)})))
            val = vs(val, f_at(comp(p1, p2)))
            fs[(p1, p2)] = val
            for c in range(m):
                head = vs(oc.mu(eh[b2], eh[c], g_at(w1, eh[a2])),
                          oc.mu(eh[a2], eh[c], g_at(w1, eh[b2])))
                val = sc(Fraction(-1), head)
                val = va(val, oc.D(eh[a1], eh[b1], g_at({p2: Fraction(1)}, eh[c])))
                val = vs(val, oc.D(eh[a2], eh[b2], g_at(w1, eh[c])))
                val = vs(val, g_at(comp(p1, p2), eh[c]))
                val = vs(val, g_at({p2: Fraction(1)}, oc.br3(eh[a1], eh[b1], eh[c])))
                val = va(val, g_at(w1, oc.br3(eh[a2], eh[b2], eh[c])))
                gs[(p1, p2, c)] = val
    return fs, gs


def delta1_matrix(oc):
    """Dense matrix of the degree-1 coboundary in the library's layout."""
    m, n = oc.m, oc.n
    prs = pair_list(m)
    ncols = m * n
    cols = []
    for a in range(m):
        for t in range(n):
            f = [(Z,) * n] * m
            f[a] = _unit(n, t)
            fs, gs = delta1_eval(oc, f)
            flat = []
            for v in fs + gs:
                flat.extend(v)
            cols.append(flat)
    nrows = len(cols[0])
    return [tuple(cols[c][r] for c in range(ncols)) for r in range(nrows)]


def delta2_matrix(oc):
    """Dense matrix of the degree-2 coboundary in the library's layout."""
    m, n = oc.m, oc.n
    prs = pair_list(m)
    M = len(prs)
    zero_f = {p: (Z,) * n for p in prs}
    zero_g = {p + (c,): (Z,) * n for p in prs for c in range(m)}
    cols = []
    for blk in range(M + M * m):
        for t in range(n):
            f2 = dict(zero_f)
            g2 = dict(zero_g)
            if blk < M:
                f2[prs[blk]] = _unit(n, t)
            else:
                q, c = divmod(blk - M, m)
                g2[prs[q] + (c,)] = _unit(n, t)
            fs, gs = delta2_eval(oc, f2, g2)
            flat = []
            for p1 in prs:
                for p2 in prs:
                    flat.extend(fs[(p1, p2)])
            for p1 in prs:
                for p2 in prs:
                    for cc in range(m):
                        flat.extend(gs[(p1, p2, cc)])
            cols.append(flat)
    nrows = len(cols[0])
    ncols = len(cols)
    return [tuple(cols[c][r] for c in range(ncols)) for r in range(nrows)]


# ---------------------------------------------------------------------------
# truncated polynomial expansion of the deformation equations

def _pmul_mv(mats, pvec):
    """Apply sum_i t^i M_i to a polynomial vector; truncates at len limit."""
    L = len(pvec)
    out = [None] * L
    for s in range(L):
        acc = None
        for i, M in enumerate(mats):
            if i > s:
                break
            term = mv(M, pvec[s - i])
            acc = term if acc is None else va(acc, term)
        out[s] = acc
    return out


def poly_binary_residual(r, Ts, u, v, L):
    """Coefficients t^0..t^(L-1) of the binary equation for T_t = sum t^i T_i."""
    g, h = r.acting, r.carrier
    n = g.dim
    zero = (Z,) * n
    zm = (Z,) * h.dim
    Tu = [mv(Ts[i], u) if i < len(Ts) else zero for i in range(L)]
    Tv = [mv(Ts[i], v) if i < len(Ts) else zero for i in range(L)]
    lhs = [zero] * L
    for i in range(L):
        for j in range(L - i):
            lhs[i + j] = va(lhs[i + j], g.bracket2(Tu[i], Tv[j]))
    inner = [zm] * L
    for j in range(L):
        inner[j] = va(inner[j], vs(mv(r.rho_at(Tu[j]), v), mv(r.rho_at(Tv[j]), u)))
    inner[0] = va(inner[0], h.bracket2(u, v))
    rhs = [zero] * L
    for i in range(min(L, len(Ts))):
        for j in range(L - i):
            rhs[i + j] = va(rhs[i + j], mv(Ts[i], inner[j]))
    return [vs(lhs[s], rhs[s]) for s in range(L)]


def poly_ternary_residual(r, Ts, u, v, w, L):
    """Coefficients t^0..t^(L-1) of the ternary equation."""
    g, h = r.acting, r.carrier
    n = g.dim
    zero = (Z,) * n
    zm = (Z,) * h.dim
    Tu = [mv(Ts[i], u) if i < len(Ts) else zero for i in range(L)]
    Tv = [mv(Ts[i], v) if i < len(Ts) else zero for i in range(L)]
    Tw = [mv(Ts[i], w) if i < len(Ts) else zero for i in range(L)]
    lhs = [zero] * L
    for i in range(L):
        for j in range(L - i):
            for k in range(L - i - j):
                lhs[i + j + k] = va(lhs[i + j + k], g.bracket3(Tu[i], Tv[j], Tw[k]))
    inner = [zm] * L
    for j in range(L):
        for k in range(L - j):
            term = mv(r.D_at(Tu[j], Tv[k]), w)
            term = va(term, mv(r.mu_at(Tv[j], Tw[k]), u))
            term = vs(term, mv(r.mu_at(Tu[j], Tw[k]), v))
            inner[j + k] = va(inner[j + k], term)
    inner[0] = va(inner[0], h.bracket3(u, v, w))
    rhs = [zero] * L
    for i in range(min(L, len(Ts))):
        for j in range(L - i):
            rhs[i + j] = va(rhs[i + j], mv(Ts[i], inner[j]))
    return [vs(lhs[s], rhs[s]) for s in range(L)]
