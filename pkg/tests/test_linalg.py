import random
from fractions import Fraction

from mutperm.linalg import (Inconsistent, Matrix, SpanReducer, in_span,
                            kernel_basis, rref, solve)


def dense_rank(rows, ncols):
    """Independent rank oracle: dense Gaussian elimination, first nonzero
    pivot, no reduced form."""
    a = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def random_matrix(rng, nrows, ncols, density=0.6):
    rows = [{j: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
             for j in range(ncols) if rng.random() < density}
            for _ in range(nrows)]
    return Matrix(rows, ncols)


def test_rref_rank_against_dense_oracle():
    rng = random.Random(1)
    for _ in range(60):
        m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        _, rank = rref(m)
        assert rank == dense_rank(m.rows, m.ncols)


def test_rref_idempotent_and_deterministic():
    rng = random.Random(2)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        ech, rank = rref(m)
        again, rank2 = rref(ech)
        assert again == ech and rank2 == rank
        assert rref(m)[0] == ech


def test_kernel_vectors_annihilate_and_rank_nullity():
    rng = random.Random(3)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 7))
        _, rank = rref(m)
        kern = kernel_basis(m)
        assert rank + len(kern) == m.ncols
        for v in kern:
            assert not m.mul_vec(v)


def test_solve_plugs_back_or_certifies():
    rng = random.Random(4)
    for _ in range(60):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        rhs = {i: Fraction(rng.randint(-3, 3)) for i in range(m.nrows)
               if rng.random() < 0.7}
        res = solve(m, rhs)
        if isinstance(res, Inconsistent):
            # certificate: a left combination of rows that is zero but
            # pairs nonzero with the right-hand side
            cert = res.certificate
            combo = {}
            for i, c in cert.items():
                for j, v in m.rows[i].items():
                    combo[j] = combo.get(j, Fraction(0)) + c * v
            assert not any(combo.values())
            assert sum(c * rhs.get(i, 0) for i, c in cert.items()) != 0
        else:
            assert m.mul_vec(res) == {i: c for i, c in rhs.items() if c}


def test_in_span_reconstructs():
    rng = random.Random(5)
    for _ in range(30):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        coeffs = [Fraction(rng.randint(-2, 2)) for _ in range(m.nrows)]
        v = {}
        for c, row in zip(coeffs, m.rows):
            for j, x in row.items():
                v[j] = v.get(j, Fraction(0)) + c * x
        ok, coords = in_span(m.rows, v, m.ncols)
        assert ok
        rebuilt = {}
        for j, c in (coords or {}).items():
            for k, x in m.rows[j].items():
                rebuilt[k] = rebuilt.get(k, Fraction(0)) + c * x
        assert {k: c for k, c in rebuilt.items() if c} == \
               {k: c for k, c in v.items() if c}


def test_in_span_rejects_outside_vector():
    rows = [{0: Fraction(1), 1: Fraction(1)}]
    ok, coords = in_span(rows, {0: Fraction(1)}, 2)
    assert not ok and coords is None


def test_span_reducer_matches_rref_rank():
    rng = random.Random(6)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        red = SpanReducer()
        for row in m.rows:
            red.insert(row)
        assert red.dim == rref(m)[1]
        for row in m.rows:
            assert red.contains(row)


def test_span_reducer_membership():
    red = SpanReducer()
    red.insert({0: Fraction(1), 1: Fraction(2)})
    red.insert({1: Fraction(1), 2: Fraction(1)})
    assert red.contains({0: Fraction(2), 1: Fraction(5), 2: Fraction(1)})
    assert not red.contains({2: Fraction(1), 3: Fraction(1)})
    assert not red.insert({0: Fraction(3), 1: Fraction(6)})


def test_transpose_involution():
    rng = random.Random(7)
    m = random_matrix(rng, 4, 6)
    assert m.transpose().transpose() == m
