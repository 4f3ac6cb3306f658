"""Exact rational linear algebra.

Scalars are ``fractions.Fraction`` (always reduced, positive denominator).
Vectors are tuples of Fraction; matrices are tuples of row tuples.
There are no tolerances anywhere: equality means exact equality.
"""

from fractions import Fraction

from .errors import AmbientMismatch, DimMismatch, Inconsistent, NotInvertible

Q0 = Fraction(0)
Q1 = Fraction(1)


def frac(x):
    """Coerce int / "p/q" string / Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ValueError("not a rational: %r" % (x,))


def format_frac(q):
    """Serialize a Fraction as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


# ---------------------------------------------------------------------------
# vectors

def vzero(n):
    return (Q0,) * n


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def is_zero_vec(a):
    return all(x == 0 for x in a)


# ---------------------------------------------------------------------------
# matrices (tuple of row tuples)

def mat(rows):
    return tuple(tuple(frac(x) for x in row) for row in rows)


def mat_zero(r, c):
    return tuple((Q0,) * c for _ in range(r))


def mat_id(n):
    return tuple(tuple(Q1 if i == j else Q0 for j in range(n)) for i in range(n))


def mat_shape(m):
    return (len(m), len(m[0]) if m else 0)


def mat_vec(m, v):
    if m and len(m[0]) != len(v):
        raise DimMismatch("matrix cols %d != vector length %d" % (len(m[0]), len(v)))
    return tuple(sum((r[j] * v[j] for j in range(len(v)) if v[j] != 0), Q0) for r in m)


def mat_mul(a, b):
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    if ca != rb:
        raise DimMismatch("cannot multiply %dx%d by %dx%d" % (ra, ca, rb, cb))
    bt = transpose(b)
    return tuple(tuple(sum((row[k] * col[k] for k in range(ca) if row[k] != 0), Q0)
                       for col in bt) for row in a)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def transpose(m):
    return tuple(zip(*m)) if m else ()


def is_zero_mat(m):
    return all(x == 0 for row in m for x in row)


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_col(m, j):
    return tuple(row[j] for row in m)


# ---------------------------------------------------------------------------
# elimination

def rref(rows):
    """Reduced row echelon form. Returns (rows, pivot column list)."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = Q1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m), pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace_basis(rows):
    """Vectors spanning {v : rows . v = 0}; one per free column."""
    nc = len(rows[0]) if rows else 0
    if not rows:
        return [tuple(Q1 if i == j else Q0 for j in range(nc)) for i in range(nc)]
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for c in range(nc):
        if c in pivset:
            continue
        v = [Q0] * nc
        v[c] = Q1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][c]
        basis.append(tuple(v))
    return basis


def solve(rows, b):
    """Some x with rows . x = b; raises Inconsistent when there is none."""
    nr = len(rows)
    if len(b) != nr:
        raise DimMismatch("rhs length %d != %d rows" % (len(b), nr))
    nc = len(rows[0]) if nr else 0
    aug = [list(r) + [bv] for r, bv in zip(rows, b)]
    red, pivots = rref(aug)
    if nc in pivots:
        raise Inconsistent("rhs outside column space")
    x = [Q0] * nc
    for r, pc in enumerate(pivots):
        x[pc] = red[r][nc]
    return tuple(x)


def invert(m):
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimMismatch("inverse needs a square matrix")
    aug = [list(r) + list(mat_id(n)[i]) for i, r in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise NotInvertible("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


# ---------------------------------------------------------------------------
# subspaces

class Subspace:
    """A subspace of Q^n in canonical (reduced echelon) basis.

    Two equal subspaces always store bit-identical bases, whatever spanning
    set they were built from.
    """

    def __init__(self, ambient_dim, spanning=()):
        self.ambient_dim = ambient_dim
        for v in spanning:
            if len(v) != ambient_dim:
                raise AmbientMismatch("vector length %d in ambient %d" % (len(v), ambient_dim))
        if spanning:
            red, pivots = rref(tuple(tuple(frac(x) for x in v) for v in spanning))
            self.basis = tuple(red[i] for i in range(len(pivots)))
        else:
            self.basis = ()

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length %d in ambient %d" % (len(v), self.ambient_dim))
        if is_zero_vec(v):
            return True
        if not self.basis:
            return False
        return rank(self.basis + (tuple(v),)) == self.dim

    def intersect(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("ambients %d vs %d" % (self.ambient_dim, other.ambient_dim))
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim)
        # solutions of  sum a_i u_i - sum b_j w_j = 0  give the intersection
        cols = [tuple(v) for v in self.basis] + [vscale(Q0 - Q1, v) for v in other.basis]
        stacked = transpose(cols)  # ambient x (k+l)
        vectors = []
        for coeffs in nullspace_basis(stacked):
            v = vzero(self.ambient_dim)
            for a, u in zip(coeffs[:self.dim], self.basis):
                if a != 0:
                    v = vadd(v, vscale(a, u))
            vectors.append(v)
        return Subspace(self.ambient_dim, vectors)

    def sum(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("ambients %d vs %d" % (self.ambient_dim, other.ambient_dim))
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)
