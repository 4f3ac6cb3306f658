import random
from fractions import Fraction as F

import pytest

from lyalg.errors import Inconsistent, NotInvertible
from lyalg.linalg import (Subspace, frac, format_frac, invert, mat, mat_id,
                          mat_mul, mat_vec, nullspace_basis, rank, rref, solve)
from oracles import o_rank

POOL = [F(-2), F(-1), F(0), F(0), F(1), F(2), F(1, 3)]


def rmat(rng, r, c):
    return tuple(tuple(rng.choice(POOL) for _ in range(c)) for _ in range(r))


def test_frac_roundtrip():
    assert frac("3/4") == F(3, 4)
    assert frac(5) == F(5)
    assert format_frac(F(-7, 2)) == "-7/2"
    assert format_frac(F(4, 2)) == "2"
    with pytest.raises(ValueError):
        frac(object())


def test_rref_idempotent_and_rank():
    m = mat([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    red, pivots = rref(m)
    assert rank(m) == 2 == len(pivots)
    again, _ = rref(red)
    assert again == red


def test_rank_matches_oracle_random():
    rng = random.Random(101)
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = rmat(rng, r, c)
        assert rank(m) == o_rank(m)


def test_nullspace_vectors_annihilate():
    rng = random.Random(202)
    for _ in range(25):
        m = rmat(rng, rng.randint(1, 5), rng.randint(1, 6))
        ns = nullspace_basis(m)
        assert len(ns) == len(m[0]) - rank(m)
        for v in ns:
            assert all(x == 0 for x in mat_vec(m, v))


def test_solve_and_inconsistent():
    rng = random.Random(303)
    for _ in range(25):
        m = rmat(rng, rng.randint(1, 5), rng.randint(1, 5))
        x0 = tuple(rng.choice(POOL) for _ in range(len(m[0])))
        b = mat_vec(m, x0)
        x = solve(m, b)
        assert mat_vec(m, x) == b
    with pytest.raises(Inconsistent):
        solve(mat([[1, 0], [2, 0]]), (F(1), F(3)))


def test_invert():
    m = mat([[2, 1], [1, 1]])
    assert mat_mul(m, invert(m)) == mat_id(2)
    with pytest.raises(NotInvertible):
        invert(mat([[1, 2], [2, 4]]))


def test_subspace_membership_and_lattice():
    u = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    w = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    assert u.contains((F(2), F(-3), F(0)))
    assert not u.contains((F(0), F(0), F(1)))
    meet = u.intersect(w)
    join = u.sum(w)
    assert meet.dim == 1 and join.dim == 3
    assert meet.contains((F(0), F(1), F(0)))


def test_subspace_dimension_formula_random():
    rng = random.Random(404)
    for _ in range(20):
        n = rng.randint(2, 5)
        u = Subspace(n, [tuple(rng.choice(POOL) for _ in range(n))
                         for _ in range(rng.randint(1, n))])
        w = Subspace(n, [tuple(rng.choice(POOL) for _ in range(n))
                         for _ in range(rng.randint(1, n))])
        assert u.dim + w.dim == u.sum(w).dim + u.intersect(w).dim


def test_subspace_canonical_equality():
    a = Subspace(2, [(1, 1), (2, 2)])
    b = Subspace(2, [(3, 3)])
    assert a == b and hash(a) == hash(b) and a.dim == 1
